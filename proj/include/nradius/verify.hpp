#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nradius/catalog.hpp"
#include "nradius/params.hpp"
#include "nradius/types.hpp"

namespace nradius {

enum class EnsembleKind {
    GinibreComplex,
    Hermitian,
    Psd,
    Normal,
    NilpotentSqZero,
    NonnegEntrywise,
    Unitary,
};

std::string ensemble_kind_name(EnsembleKind k);
EnsembleKind ensemble_kind_from_name(const std::string& name);

/// Deterministic matrix family: identical spec -> identical sequence.
/// Randomness comes from mt19937_64 plus Box-Muller, so the stream is
/// fully specified independent of the standard library.
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::GinibreComplex;
    int dim = 2;  // 1..16
    int count = 1;
    std::uint64_t seed = 0;
};

std::vector<ComplexMatrix> generate(const EnsembleSpec& spec);

/// Parameter axes crossed per bound (each bound uses only the axes it
/// needs, with its domain constraints filtered).
struct ParamGrid {
    std::vector<Complex> alphas;
    std::vector<double> betas;
    std::vector<double> mus;
    std::vector<double> lambdas;
    std::vector<double> rs;
    std::vector<double> ss;
    std::vector<int> ns;
    std::vector<std::pair<double, double>> pqs;
};

/// The default sweep grid:
/// beta {0, 0.5, 1, 5}, mu/lambda {0, 0.25, 0.5, 1}, alpha {2, 3, 1+i, 0.5},
/// r/s {1, 1.5, 2}, n {2, 3}, (p,q) {(2,2), (3,1.5)}.
ParamGrid default_param_grid();

/// Reduced grid for quick runs.
ParamGrid quick_param_grid();

/// Grid points valid for one bound (cross product of needed axes, domain
/// constraints applied, first-seen order).
std::vector<BoundParams> grid_points_for(const BoundDescriptor& d, const ParamGrid& grid);

struct TrialRecord {
    std::string bound_id;
    int trial = 0;
    int dim = 0;  // ensemble block dimension
    BoundParams params;
    double omega_power = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool holds = false;
    bool error = false;
    std::string error_msg;
};

struct ReportSummary {
    int violations = 0;
    int errors = 0;
    double min_slack = 0.0;
    double mean_slack = 0.0;
};

struct VerificationReport {
    EnsembleSpec spec;
    ParamGrid grid;
    std::vector<TrialRecord> records;
    ReportSummary summary;
};

/// Run `count` trials per bound. Trial t uses the bound's grid point
/// (grid_offset + t) mod #points; its matrices come from an independent
/// substream keyed by (spec.seed, bound id, t), so every record is
/// reproducible in isolation. Evaluation errors are recorded, not thrown.
VerificationReport run_trials(const std::vector<std::string>& bound_ids, const EnsembleSpec& spec,
                              const ParamGrid& grid, int count, int grid_offset = 0);

struct TightnessRow {
    std::string bound_id;
    int count = 0;
    double q25 = 0.0, median = 0.0, q75 = 0.0, max = 0.0;
    double min_slack = 0.0;
};

/// Per-bound quantiles of omega_power / bound (bound / omega_power for
/// lower bounds), sorted by descending median tightness.
std::vector<TightnessRow> tightness_stats(const VerificationReport& report);

enum class ReportFormat { Json, Csv };

/// Serialize the report. JSON floats carry 17 significant digits; the CSV
/// header is exactly "bound_id,trial,dim,omega_power,bound,slack,holds".
std::string render_report(const VerificationReport& report, ReportFormat format);
void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path);

/// Parse back a JSON report (used for round-trip checks).
VerificationReport parse_report_json(const std::string& text);

}  // namespace nradius
