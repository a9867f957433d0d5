#ifndef COLREC_EIGEN_INTEROP_HPP
#define COLREC_EIGEN_INTEROP_HPP

#include <Eigen/Dense>

#include "colrec/types.hpp"

namespace colrec {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Map<const RowMajorMatrix> as_eigen(const DenseMatrix& m) {
    return Eigen::Map<const RowMajorMatrix>(m.data().data(), m.rows(), m.cols());
}

template <typename Derived>
DenseMatrix from_eigen(const Eigen::MatrixBase<Derived>& e) {
    DenseMatrix out(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    for (int i = 0; i < e.rows(); ++i) {
        for (int j = 0; j < e.cols(); ++j) out(i, j) = e(i, j);
    }
    return out;
}

}  // namespace colrec

#endif
