#include "leantopo/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>
#include <type_traits>

#include <json.hpp>

#include "leantopo/spatial_index.hpp"
#include "leantopo/tangent_estimation.hpp"

namespace leantopo {

namespace {

constexpr double kBeta = std::numbers::pi / 5.0;

double theory_rho() {
    const double c = std::cos(2.0 * kBeta);
    return (1.0 / 26.0) * c / (1.0 + c);
}

class StageClock {
  public:
    explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}

    template <typename F>
    auto run(const std::string& stage, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            if constexpr (std::is_void_v<decltype(f())>) {
                f();
                record(stage, t0);
            } else {
                auto r = f();
                record(stage, t0);
                return r;
            }
        } catch (const Error& e) {
            record(stage, t0);
            throw Error(e.code(),
                        "stage '" + stage + "': " + e.what());
        }
    }

  private:
    void record(const std::string& stage,
                std::chrono::steady_clock::time_point t0) {
        const std::chrono::duration<double> dt =
            std::chrono::steady_clock::now() - t0;
        out_.push_back({stage, dt.count()});
    }

    std::vector<StageTiming>& out_;
};

}  // namespace

double PipelineConfig::beta() const { return kBeta; }

double PipelineConfig::c_beta() const {
    if (mode == PipelineMode::Theory) return leantopo::c_beta(kBeta);
    return practical_c_beta.value_or(0.5);
}

double PipelineConfig::rho() const {
    if (mode == PipelineMode::Theory) return theory_rho();
    return practical_rho.value_or(0.5);
}

std::pair<double, double> PipelineConfig::levels() const {
    if (mode == PipelineMode::Theory) {
        const double r = theory_rho();
        return {2.0 * r, 12.0 * r};
    }
    const double r = practical_r.value_or(0.7);
    return {r, r};
}

void PipelineConfig::validate() const {
    if (mode == PipelineMode::Theory &&
        (practical_c_beta || practical_rho || practical_r))
        throw Error(ErrorCode::BadInput,
                    "theory mode derives every constant; overrides are only "
                    "accepted in practical mode");
    if (max_homology_dim < 0)
        throw Error(ErrorCode::OutOfRange, "max homology dimension must be >= 0");
    if (min_pair_distance && *min_pair_distance < 0)
        throw Error(ErrorCode::OutOfRange, "min pair distance must be >= 0");
    if (mode == PipelineMode::Practical) {
        if (c_beta() <= 0)
            throw Error(ErrorCode::OutOfRange, "c_beta must be > 0");
        if (rho() <= 0)
            throw Error(ErrorCode::OutOfRange, "decimation ratio must be > 0");
        if (levels().first <= 0)
            throw Error(ErrorCode::OutOfRange, "complex level must be > 0");
    }
}

InferenceReport lean_topo(const PointCloud& cloud, const PipelineConfig& config,
                          PipelineArtifacts* artifacts,
                          const std::vector<std::vector<double>>* supplied_normals) {
    config.validate();
    if (cloud.empty())
        throw Error(ErrorCode::EmptyCloud, "pipeline needs a nonempty cloud");

    InferenceReport rep;
    rep.config = config;
    rep.echo_beta = config.beta();
    rep.echo_c_beta = config.c_beta();
    rep.echo_rho = config.rho();
    rep.echo_delta = config.delta();
    std::tie(rep.echo_alpha_lo, rep.echo_alpha_hi) = config.levels();
    rep.input_size = cloud.size();
    rep.duplicates_removed = cloud.duplicates_removed();

    StageClock clock(rep.timings);

    const SpatialIndex index(cloud);

    auto normals = clock.run("normals", [&] {
        if (supplied_normals) return normals_from_rows(cloud, *supplied_normals);
        return estimate_all_normals(cloud, index);
    });
    rep.normals_supplied = supplied_normals != nullptr;
    rep.normals_estimated = supplied_normals ? 0 : normals.size();

    const std::optional<double> cb_override =
        config.mode == PipelineMode::Practical
            ? std::optional<double>(config.c_beta())
            : std::nullopt;
    auto lean = clock.run("lean-set", [&] {
        return build_lean_set(cloud, normals, index, config.beta(),
                              cb_override);
    });
    rep.lean_size = lean.size();

    if (config.min_pair_distance) {
        lean = clock.run("noise-filter", [&] {
            return noise_filter(lean, *config.min_pair_distance);
        });
    }
    rep.lean_size_after_filter = lean.size();
    if (lean.empty())
        throw Error(ErrorCode::EmptyLeanSet,
                    "no admissible pairs survive; the sample may be too "
                    "sparse or the noise filter too aggressive");

    auto reduced = clock.run("reduce-lean-set", [&] {
        return reduce_lean_set(lean, cloud);
    });
    rep.reduced_lean_size = reduced.size();

    const LeanSet& lnfs_source = config.use_full_lean_set ? lean : reduced;
    auto lnfs_of = clock.run("lnfs", [&] {
        LeanFeatureSize lnfs(lnfs_source, cloud.ambient_dim(),
                             cloud.intrinsic_dim());
        std::vector<double> v(cloud.size());
        for (std::size_t i = 0; i < cloud.size(); ++i)
            v[i] = lnfs(cloud.point(i));
        return v;
    });

    auto sample = clock.run("sparsify", [&] {
        return lean_sparsify(cloud, lnfs_of, config.rho());
    });
    rep.sparsified_size = sample.retained.size();

    rep.uniformity = clock.run("uniformity-check", [&] {
        return verify_uniformity(sample, cloud, lnfs_of);
    });

    FilteredCliqueComplex complex;
    if (config.sparsify_only) {
        if (artifacts) {
            artifacts->normals = std::move(normals);
            artifacts->lean = std::move(lean);
            artifacts->reduced = std::move(reduced);
            artifacts->sample = std::move(sample);
        }
        return rep;
    }

    complex = clock.run("complex", [&] {
        const auto [lo, hi] = config.levels();
        return build_two_scale_complex(sample, cloud, lo, hi,
                                       config.max_homology_dim + 1,
                                       config.simplex_cap);
    });
    rep.simplex_count = complex.simplices.size();

    clock.run("homology", [&] {
        auto result = persistent_image_rank(complex, config.max_homology_dim);
        rep.betti_lo = result.betti_lo;
        rep.betti_hi = result.betti_hi;
        rep.barcode = std::move(result.barcode);
        // At a single level the two-scale image rank and the Betti numbers
        // of that level coincide; report the image rank either way.
        rep.betti_estimate = std::move(result.image_rank);
    });

    if (artifacts) {
        artifacts->normals = std::move(normals);
        artifacts->lean = std::move(lean);
        artifacts->reduced = std::move(reduced);
        artifacts->sample = std::move(sample);
        artifacts->complex = std::move(complex);
    }
    return rep;
}

double h_scaled_diagnostic(std::span<const double> x, const PointCloud& cloud,
                           const LeanSet& lean) {
    if (cloud.empty())
        throw Error(ErrorCode::EmptyCloud, "diagnostic needs a nonempty cloud");
    if (lean.empty())
        throw Error(ErrorCode::EmptyLeanSet, "diagnostic needs a lean set");
    double dp = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < cloud.size(); ++i)
        dp = std::min(dp, cloud.distance_to(i, x));
    double dl = std::numeric_limits<double>::max();
    for (const auto& lp : lean.points)
        dl = std::min(dl, euclidean_distance(x, lp.midpoint));
    if (dp == 0.0 && dl == 0.0) return 0.0;
    return dp / (dp + dl);
}

std::string InferenceReport::to_json() const {
    nlohmann::json j;
    j["input"] = {{"points", input_size},
                  {"duplicates_removed", duplicates_removed}};
    j["config"] = {
        {"mode",
         config.mode == PipelineMode::Theory ? "theory" : "practical"},
        {"beta", echo_beta},
        {"c_beta", echo_c_beta},
        {"rho", echo_rho},
        {"delta", echo_delta},
        {"alpha_lo", echo_alpha_lo},
        {"alpha_hi", echo_alpha_hi},
        {"max_homology_dim", config.max_homology_dim},
        {"use_full_lean_set", config.use_full_lean_set},
        {"seed", config.seed},
        {"subspace_error_metric", subspace_error_metric},
    };
    if (config.min_pair_distance)
        j["config"]["min_pair_distance"] = *config.min_pair_distance;
    j["stages"] = {
        {"normals_estimated", normals_estimated},
        {"normals_supplied", normals_supplied},
        {"lean_size", lean_size},
        {"lean_size_after_filter", lean_size_after_filter},
        {"reduced_lean_size", reduced_lean_size},
        {"sparsified_size", sparsified_size},
        {"simplex_count", simplex_count},
    };
    j["uniformity"] = {
        {"pass", uniformity.pass()},
        {"sparsity_ok", uniformity.sparsity_ok},
        {"coverage_ok", uniformity.coverage_ok},
        {"coverage_factor", uniformity.coverage_factor},
        {"sparsity_violations", uniformity.sparsity_violations.size()},
        {"coverage_violations", uniformity.coverage_violations.size()},
    };
    j["betti"] = betti_estimate;
    j["betti_lo"] = betti_lo;
    j["betti_hi"] = betti_hi;
    nlohmann::json timings = nlohmann::json::array();
    for (const auto& t : this->timings)
        timings.push_back({{"stage", t.stage}, {"seconds", t.seconds}});
    j["timings"] = timings;
    return j.dump(2);
}

}  // namespace leantopo
