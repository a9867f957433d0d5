#ifndef COLREC_TYPES_HPP
#define COLREC_TYPES_HPP

#include <cstdint>
#include <vector>

#include "colrec/errors.hpp"

namespace colrec {

/// Dense real matrix, row-major storage. Entries are kept finite; masked
/// storage of partially observed data lives in PartialMatrix instead.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols, double fill = 0.0);
    DenseMatrix(int rows, int cols, std::vector<double> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    /// Throws ContractViolation if any entry is NaN or infinite.
    void require_finite(const char* label = "matrix") const;

private:
    int rows_;
    int cols_;
    std::vector<double> data_;
};

/// Strictly increasing subset of row indices drawn from a universe [0, N).
class IndexSet {
public:
    IndexSet() : universe_(0) {}
    /// `indices` may arrive in any order; duplicates or out-of-range values throw.
    IndexSet(std::vector<int> indices, int universe);

    int size() const { return static_cast<int>(indices_.size()); }
    int universe() const { return universe_; }
    int operator[](int i) const { return indices_[i]; }
    const std::vector<int>& indices() const { return indices_; }
    bool contains(int idx) const;

    std::vector<int> complement() const;

    bool operator==(const IndexSet& other) const {
        return universe_ == other.universe_ && indices_ == other.indices_;
    }

private:
    std::vector<int> indices_;
    int universe_;
};

/// Set of observed (row, col) positions of an N x M matrix, stored per column
/// as sorted row lists so per-column counts and membership are cheap.
class ObservationMask {
public:
    ObservationMask() : rows_(0) {}
    ObservationMask(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(col_rows_.size()); }

    void add(int row, int col);
    void add_column(int col, const IndexSet& rows);
    bool observed(int row, int col) const;

    /// Number of observed entries in one column; O(1).
    int column_count(int col) const { return static_cast<int>(col_rows_[col].size()); }
    long total_count() const { return total_; }

    /// Sorted observed row indices of one column.
    const std::vector<int>& column_rows(int col) const { return col_rows_[col]; }

    /// Union with another mask of the same shape.
    void merge(const ObservationMask& other);

    /// Appends `extra` empty columns on the right.
    void grow_cols(int extra);

private:
    int rows_;
    long total_ = 0;
    std::vector<std::vector<int>> col_rows_;
};

/// Dense values plus the mask of which entries are actually observed.
/// Unobserved positions in `values` are storage only; estimators must go
/// through `at` (throws) or `projected` (explicit zero fill).
class PartialMatrix {
public:
    PartialMatrix() {}
    PartialMatrix(DenseMatrix values, ObservationMask mask);

    int rows() const { return values_.rows(); }
    int cols() const { return values_.cols(); }

    const DenseMatrix& values() const { return values_; }
    const ObservationMask& mask() const { return mask_; }

    /// Observed entry accessor; throws ContractViolation on unobserved positions.
    double at(int i, int j) const;

    /// P_Omega: dense copy with unobserved entries set to 0.
    DenseMatrix projected() const;

    void set(int i, int j, double value);

private:
    DenseMatrix values_;
    ObservationMask mask_;
};

/// N x r matrix with orthonormal columns; validated on construction.
class SubspaceEstimate {
public:
    static constexpr double kDefaultTolerance = 1e-10;

    SubspaceEstimate() {}
    explicit SubspaceEstimate(DenseMatrix basis, double tolerance = kDefaultTolerance);

    int rows() const { return basis_.rows(); }
    int rank() const { return basis_.cols(); }
    const DenseMatrix& basis() const { return basis_; }
    double tolerance() const { return tolerance_; }

private:
    DenseMatrix basis_;
    double tolerance_ = kDefaultTolerance;
};

}  // namespace colrec

#endif
