#include "colrec/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "colrec/linalg.hpp"

namespace colrec {

DenseMatrix::DenseMatrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) {
        throw ContractViolation("matrix dimensions must be non-negative");
    }
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows < 0 || cols < 0) {
        throw ContractViolation("matrix dimensions must be non-negative");
    }
    if (data_.size() != static_cast<size_t>(rows) * cols) {
        throw ContractViolation("entry count does not match rows * cols");
    }
}

void DenseMatrix::require_finite(const char* label) const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw ContractViolation(std::string(label) + " contains a non-finite entry");
        }
    }
}

IndexSet::IndexSet(std::vector<int> indices, int universe)
    : indices_(std::move(indices)), universe_(universe) {
    std::sort(indices_.begin(), indices_.end());
    for (size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0 || indices_[i] >= universe_) {
            throw ContractViolation("index " + std::to_string(indices_[i]) +
                                    " outside universe [0, " + std::to_string(universe_) + ")");
        }
        if (i > 0 && indices_[i] == indices_[i - 1]) {
            throw ContractViolation("duplicate index " + std::to_string(indices_[i]));
        }
    }
}

bool IndexSet::contains(int idx) const {
    return std::binary_search(indices_.begin(), indices_.end(), idx);
}

std::vector<int> IndexSet::complement() const {
    std::vector<int> out;
    out.reserve(universe_ - size());
    size_t pos = 0;
    for (int i = 0; i < universe_; ++i) {
        if (pos < indices_.size() && indices_[pos] == i) {
            ++pos;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

ObservationMask::ObservationMask(int rows, int cols) : rows_(rows), col_rows_(cols) {
    if (rows < 0 || cols < 0) {
        throw ContractViolation("mask dimensions must be non-negative");
    }
}

void ObservationMask::add(int row, int col) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols()) {
        throw ContractViolation("mask entry (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") out of range");
    }
    auto& rows = col_rows_[col];
    auto it = std::lower_bound(rows.begin(), rows.end(), row);
    if (it != rows.end() && *it == row) {
        throw ContractViolation("duplicate mask entry (" + std::to_string(row) + ", " +
                                std::to_string(col) + ")");
    }
    rows.insert(it, row);
    ++total_;
}

void ObservationMask::add_column(int col, const IndexSet& rows) {
    for (int r : rows.indices()) add(r, col);
}

bool ObservationMask::observed(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols()) return false;
    const auto& rows = col_rows_[col];
    return std::binary_search(rows.begin(), rows.end(), row);
}

void ObservationMask::merge(const ObservationMask& other) {
    if (other.rows() != rows_ || other.cols() != cols()) {
        throw ContractViolation("mask shapes differ in merge");
    }
    for (int c = 0; c < cols(); ++c) {
        for (int r : other.col_rows_[c]) {
            if (!observed(r, c)) add(r, c);
        }
    }
}

void ObservationMask::grow_cols(int extra) {
    if (extra < 0) throw ContractViolation("cannot shrink a mask");
    col_rows_.resize(col_rows_.size() + extra);
}

PartialMatrix::PartialMatrix(DenseMatrix values, ObservationMask mask)
    : values_(std::move(values)), mask_(std::move(mask)) {
    if (values_.rows() != mask_.rows() || values_.cols() != mask_.cols()) {
        throw ContractViolation("values and mask shapes differ");
    }
    values_.require_finite("partial matrix values");
}

double PartialMatrix::at(int i, int j) const {
    if (!mask_.observed(i, j)) {
        throw ContractViolation("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") is not observed");
    }
    return values_(i, j);
}

DenseMatrix PartialMatrix::projected() const {
    DenseMatrix out(rows(), cols(), 0.0);
    for (int c = 0; c < cols(); ++c) {
        for (int r : mask_.column_rows(c)) out(r, c) = values_(r, c);
    }
    return out;
}

void PartialMatrix::set(int i, int j, double value) {
    if (!std::isfinite(value)) throw ContractViolation("non-finite value");
    if (!mask_.observed(i, j)) mask_.add(i, j);
    values_(i, j) = value;
}

SubspaceEstimate::SubspaceEstimate(DenseMatrix basis, double tolerance)
    : basis_(std::move(basis)), tolerance_(tolerance) {
    if (basis_.cols() > basis_.rows()) {
        throw ContractViolation("subspace rank exceeds ambient dimension");
    }
    const double defect = orthonormality_defect(basis_);
    if (defect > tolerance_) {
        throw ContractViolation("basis is not orthonormal: defect " + std::to_string(defect));
    }
}

}  // namespace colrec
