#ifndef COLREC_DATA_HPP
#define COLREC_DATA_HPP

#include <string>
#include <utility>
#include <vector>

#include "colrec/rng.hpp"
#include "colrec/types.hpp"

namespace colrec {

enum class EntryDistribution { kCauchy, kGaussian };

/// Ground truth for simulation: columns are X0 w + z with w ~ N(0, I_r)
/// and z ~ N(0, sigma_z^2 I_N).
struct GroundTruthModel {
    DenseMatrix x0;
    double sigma_z = 0.0;
};

/// Draws X0 with i.i.d. entries from the named distribution, redrawing
/// (up to 5 times) if the sample is numerically rank deficient.
GroundTruthModel gen_ground_truth(int n, int r, EntryDistribution dist,
                                  double sigma_z, RngStream& rng);

struct GeneratedColumn {
    std::vector<double> y;  // N values
    std::vector<double> w;  // r factor values, kept for test oracles
};
GeneratedColumn gen_column(const GroundTruthModel& model, RngStream& rng);

/// Reads a rectangular CSV; empty cells or a literal NaN token mark missing
/// entries. Ragged rows and non-numeric cells raise CsvError with the
/// offending line number.
PartialMatrix read_partial_csv(const std::string& path, bool has_header = false);

/// Inverse of read_partial_csv: missing entries become empty cells. Values
/// survive a round trip exactly.
void write_partial_csv(const PartialMatrix& y, const std::string& path);

struct FilterResult {
    PartialMatrix filtered;
    std::vector<int> kept_rows;
    std::vector<int> kept_cols;
};

/// Repeatedly drops rows, then columns, whose missing fraction exceeds the
/// threshold, until no change (fixed point). Throws when nothing survives.
FilterResult filter_by_missingness(const PartialMatrix& y, double max_missing_fraction);

}  // namespace colrec

#endif
