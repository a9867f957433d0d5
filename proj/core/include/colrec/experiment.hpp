#ifndef COLREC_EXPERIMENT_HPP
#define COLREC_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colrec/data.hpp"
#include "colrec/estimator.hpp"
#include "colrec/evaluation.hpp"

namespace colrec {

/// Known methods, in the order they sort in the output.
inline constexpr const char* kMethodActive = "altmin_active";
inline constexpr const char* kMethodRandom = "altmin_random";
inline constexpr const char* kMethodScaledPca = "scaledpca";

struct SyntheticSource {
    int n = 50;
    int r = 6;
    double sigma_z = 0.1;
    EntryDistribution x0_dist = EntryDistribution::kCauchy;
};

struct CsvSource {
    std::string path;
    int r = 6;
    bool has_header = false;
    /// Empty: ground truth by rank-r eigenvectors of the zero-filled data.
    /// Otherwise: path of a fully observed CSV holding the true factor.
    std::string ground_truth_csv;
    /// Optional missingness filter applied before streaming (fraction of
    /// allowed missing entries per row/column); disabled when <= 0.
    double max_missing_fraction = 0.0;
};

struct ExperimentSpec {
    std::optional<SyntheticSource> synthetic;
    std::optional<CsvSource> csv;
    SamplingBudget budget;
    int m_init = 100;
    int t_total = 0;
    std::vector<std::string> methods;
    int replications = 1;
    std::uint64_t base_seed = 0;
    int eval_every = 10;
    double ridge_lambda = 0.05;
    bool practical_mode = true;
    bool allow_s2_overlap = false;
    /// Record real wall-clock times. Off by default so reruns of the same
    /// spec produce byte-identical CSVs.
    bool wall_clock = false;

    void validate() const;
};

/// Fixed inputs shared by every method within one replication.
struct ReplicationData {
    PartialMatrix y;          // values + evaluation mask (all entries for synthetic)
    SubspaceEstimate u_true;  // ground-truth column space
};

/// Materializes the data one replication sees (synthetic draw or CSV load).
ReplicationData prepare_replication(const ExperimentSpec& spec, int replication);

struct MethodRunResult {
    std::vector<MetricsRecord> records;
    ObservationMask mask;  // everything this method observed
    SubspaceEstimate final_estimate;
};

/// Runs one (method, replication) job: initialization on m_init columns,
/// then streaming with evaluation checkpoints every eval_every columns
/// (always including t = m_init and t = t_total).
MethodRunResult run_single_method(const ExperimentSpec& spec, const std::string& method,
                                  int replication, const ReplicationData& data);

/// Runs every (method, replication) job and returns the records sorted by
/// (method, replication, t).
std::vector<MetricsRecord> run_experiment(const ExperimentSpec& spec);

/// run_experiment plus CSV output to `out_path`.
void run_experiment_to_csv(const ExperimentSpec& spec, const std::string& out_path);

void write_metrics_csv(const std::vector<MetricsRecord>& records, const std::string& out_path);
std::vector<MetricsRecord> read_metrics_csv(const std::string& path);

struct SummaryRow {
    std::string method;
    int t = 0;
    double sin_theta_mean = 0.0;
    double sin_theta_se = 0.0;
    double rel_error_mean = 0.0;
    double rel_error_se = 0.0;
    int replications = 0;
};

/// Per (method, t) means and standard errors across replications.
std::vector<SummaryRow> summarize(const std::vector<MetricsRecord>& records);
void summarize_csv(const std::string& results_path, const std::string& out_path);

}  // namespace colrec

#endif
