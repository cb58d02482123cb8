#include "core/pfaffian.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace xyq {

namespace {

using cd = std::complex<double>;

constexpr double imag_tol = 1e-8;

}  // namespace

SkewMatrix::SkewMatrix(int dim) : dim_(dim) {
    if (dim <= 0 || dim % 2 != 0)
        throw usage_error("skew matrix dimension must be even and positive");
    upper_.assign(static_cast<std::size_t>(dim) * (dim - 1) / 2, cd(0.0, 0.0));
}

cd& SkewMatrix::at(int i, int j) {
    if (i < 0 || j >= dim_ || i >= j)
        throw usage_error("SkewMatrix::at requires 0 <= i < j < dim");
    // Offset of row i within the packed strict upper triangle.
    const std::size_t row_start =
        static_cast<std::size_t>(i) * dim_ - static_cast<std::size_t>(i) * (i + 1) / 2;
    return upper_[row_start + static_cast<std::size_t>(j - i - 1)];
}

cd SkewMatrix::entry(int i, int j) const {
    if (i == j) return cd(0.0, 0.0);
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    const std::size_t row_start =
        static_cast<std::size_t>(i) * dim_ - static_cast<std::size_t>(i) * (i + 1) / 2;
    const cd v = upper_[row_start + static_cast<std::size_t>(j - i - 1)];
    return flip ? -v : v;
}

Eigen::MatrixXcd SkewMatrix::to_dense() const {
    Eigen::MatrixXcd m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = entry(i, j);
    return m;
}

std::complex<double> pfaffian(const SkewMatrix& m) {
    return pfaffian(m.to_dense());
}

std::complex<double> pfaffian(Eigen::MatrixXcd m) {
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw usage_error("pfaffian requires a square matrix");
    if (n == 0) return cd(1.0, 0.0);
    if (n % 2 != 0) throw usage_error("pfaffian requires even dimension");

    cd result(1.0, 0.0);
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        // Pivot: largest entry in column k below the diagonal.
        Eigen::Index kp = k + 1;
        for (Eigen::Index i = k + 2; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(kp, k))) kp = i;
        if (kp != k + 1) {
            m.row(k + 1).swap(m.row(kp));
            m.col(k + 1).swap(m.col(kp));
            result = -result;
        }
        const cd pivot = m(k + 1, k);
        if (pivot == cd(0.0, 0.0)) return cd(0.0, 0.0);
        result *= -pivot;  // pf uses the (k, k+1) entry, which is -m(k+1, k)

        if (k + 2 < n) {
            // Rank-two update eliminating row/column k and k+1.
            const auto tau = (m.col(k).segment(k + 2, n - k - 2) / pivot).eval();
            const auto col1 = m.col(k + 1).segment(k + 2, n - k - 2).eval();
            for (Eigen::Index i = 0; i < n - k - 2; ++i)
                for (Eigen::Index j = 0; j < n - k - 2; ++j)
                    m(k + 2 + i, k + 2 + j) +=
                        tau(i) * col1(j) - tau(j) * col1(i);
        }
    }
    return result;
}

namespace {

enum class OpKind { A, B };  // A = b^dag + b, B = b^dag - b

struct WickOp {
    OpKind kind;
    int site;
};

cd contraction(const ContractionSet& cs, const WickOp& left,
               const WickOp& right) {
    const int sep = right.site - left.site;  // lists are site-ordered
    if (left.kind == OpKind::B && right.kind == OpKind::A) return cs.f(sep);
    if (left.kind == OpKind::A && right.kind == OpKind::B) return cs.p(sep);
    if (left.kind == OpKind::A && right.kind == OpKind::A) return cs.q(sep);
    return cs.g(sep);
}

cd wick_pfaffian(const ContractionSet& cs, const std::vector<WickOp>& ops) {
    const int n = static_cast<int>(ops.size());
    SkewMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m.at(i, j) = contraction(cs, ops[i], ops[j]);
    return pfaffian(m);
}

double real_checked(const cd& v, const char* what) {
    if (std::abs(v.imag()) > imag_tol)
        throw numeric_error(std::string(what) +
                            ": imaginary residue above tolerance");
    return v.real();
}

}  // namespace

SpinCorrelators spin_correlators(const ContractionSet& cs, int r) {
    if (r < 1) throw usage_error("separation must be >= 1");
    if (r > cs.r_max())
        throw usage_error("separation exceeds the contraction range");

    // S^x: (B_l, A_{l+1}, B_{l+1}, ..., A_{m-1}, B_{m-1}, A_m).
    std::vector<WickOp> xs;
    xs.push_back({OpKind::B, 0});
    for (int k = 1; k < r; ++k) {
        xs.push_back({OpKind::A, k});
        xs.push_back({OpKind::B, k});
    }
    xs.push_back({OpKind::A, r});

    // S^y: (A_l, B_{l+1}, A_{l+1}, ..., B_{m-1}, A_{m-1}, B_m).
    std::vector<WickOp> ys;
    ys.push_back({OpKind::A, 0});
    for (int k = 1; k < r; ++k) {
        ys.push_back({OpKind::B, k});
        ys.push_back({OpKind::A, k});
    }
    ys.push_back({OpKind::B, r});

    // S^z: (A_l, B_l, A_m, B_m).
    const std::vector<WickOp> zs = {
        {OpKind::A, 0}, {OpKind::B, 0}, {OpKind::A, r}, {OpKind::B, r}};

    const double ysign = r % 2 == 0 ? 1.0 : -1.0;  // (-1)^r
    SpinCorrelators out{};
    out.sx = real_checked(wick_pfaffian(cs, xs), "S^x") / 4.0;
    out.sy = ysign * real_checked(wick_pfaffian(cs, ys), "S^y") / 4.0;
    out.sz = real_checked(wick_pfaffian(cs, zs), "S^z") / 4.0;
    return out;
}

}  // namespace xyq
