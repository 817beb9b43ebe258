#ifndef LEANTOPO_PIPELINE_HPP
#define LEANTOPO_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "leantopo/adaptive_complex.hpp"
#include "leantopo/homology_z2.hpp"
#include "leantopo/lean_set.hpp"
#include "leantopo/sparsifier.hpp"

namespace leantopo {

enum class PipelineMode { Theory, Practical };

/**
 * Full pipeline configuration. Theory mode is parameter-free: every
 * constant is derived from beta = pi/5 and overrides are rejected.
 * Practical mode reproduces the published experimental constants
 * (c_beta = 0.5, decimation ratio 0.5, single complex level r = 0.7) and
 * records every override in the report.
 */
struct PipelineConfig {
    PipelineMode mode = PipelineMode::Theory;
    int max_homology_dim = 1;
    std::optional<double> min_pair_distance;  // lean-pair noise filter
    std::uint64_t seed = 0;                   // echoed for reproducibility

    // Practical-mode knobs (must stay unset in theory mode).
    std::optional<double> practical_c_beta;  // default 0.5
    std::optional<double> practical_rho;     // default 0.5
    std::optional<double> practical_r;       // default 0.7

    // Validation flag: evaluate lnfs against the full lean set instead of
    // the reduced one.
    bool use_full_lean_set = false;

    // Stop after the uniformity check (no complex, no homology).
    bool sparsify_only = false;

    std::size_t simplex_cap = kDefaultSimplexCap;

    double beta() const;    // pi/5 in both modes
    double c_beta() const;  // tan(beta/2)/3 vs 0.5
    double rho() const;     // (1/26) cos(2b)/(1+cos(2b)) vs 0.5
    double delta() const { return 1.2 * rho(); }  // derived, never user-set
    // Complex levels: (2 rho, 12 rho) in theory mode; (r, r) in practical.
    std::pair<double, double> levels() const;

    void validate() const;
};

struct StageTiming {
    std::string stage;
    double seconds;
};

struct InferenceReport {
    std::size_t input_size = 0;
    std::size_t duplicates_removed = 0;
    std::size_t normals_estimated = 0;
    bool normals_supplied = false;
    std::size_t lean_size = 0;
    std::size_t lean_size_after_filter = 0;
    std::size_t reduced_lean_size = 0;
    std::size_t sparsified_size = 0;
    std::vector<std::size_t> betti_estimate;  // per dimension 0..max dim
    std::vector<std::size_t> betti_lo, betti_hi;
    UniformityReport uniformity;
    std::vector<StageTiming> timings;
    std::vector<Interval> barcode;
    std::size_t simplex_count = 0;

    // Config echo (the report is re-runnable from these).
    PipelineConfig config;
    double echo_beta = 0, echo_c_beta = 0, echo_rho = 0, echo_delta = 0;
    double echo_alpha_lo = 0, echo_alpha_hi = 0;
    std::string subspace_error_metric = "largest-principal-angle";

    std::string to_json() const;
};

struct PipelineArtifacts {
    std::vector<TangentEstimate> normals;
    LeanSet lean;
    LeanSet reduced;
    SparseSample sample;
    FilteredCliqueComplex complex;
};

// Runs normals -> lean set -> reduction -> lnfs -> sparsify -> complex ->
// homology. Errors carry the failing stage name and a remediation hint.
// When supplied_normals is given (one row per point, see normals_from_rows)
// the estimation stage is skipped and those bases are used instead; this is
// the intended path for noisy inputs, where the caller knows the normals
// from the acquisition process or an analytic model.
InferenceReport lean_topo(
    const PointCloud& cloud, const PipelineConfig& config,
    PipelineArtifacts* artifacts = nullptr,
    const std::vector<std::vector<double>>* supplied_normals = nullptr);

// Scaled distance diagnostic d(x,P) / (d(x,P) + d(x,L)) in [0,1].
double h_scaled_diagnostic(std::span<const double> x, const PointCloud& cloud,
                           const LeanSet& lean);

}  // namespace leantopo

#endif
