#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "core/correlators.hpp"
#include "core/errors.hpp"

namespace xyq {

/// Complex skew-symmetric matrix of even dimension; only the strict upper
/// triangle is stored, the rest follows by antisymmetry.
class SkewMatrix {
public:
    explicit SkewMatrix(int dim);

    int dim() const { return dim_; }

    /// Mutable access to the stored entry, requires i < j.
    std::complex<double>& at(int i, int j);

    /// Signed entry for any index pair (zero diagonal, antisymmetric).
    std::complex<double> entry(int i, int j) const;

    Eigen::MatrixXcd to_dense() const;

private:
    int dim_;
    std::vector<std::complex<double>> upper_;  // row-major strict upper
};

/// Pfaffian via Parlett-Reid elimination with partial pivoting, O(dim^3).
std::complex<double> pfaffian(const SkewMatrix& m);

/// Same on a dense skew-symmetric matrix (consumed as workspace).
std::complex<double> pfaffian(Eigen::MatrixXcd m);

struct SpinCorrelators {
    double sx, sy, sz;
};

/// Spin correlation functions <S^a_l S^a_{l+r}> assembled from the Wick
/// contractions as Pfaffians over the ordered Majorana operator strings.
/// The imaginary residue of each Pfaffian must stay below 1e-8.
SpinCorrelators spin_correlators(const ContractionSet& cs, int r);

}  // namespace xyq
