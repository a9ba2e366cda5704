#include "hodgestar/hodge_theory.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <limits>
#include <stdexcept>

namespace hodgestar {

RationalMatrix to_rational(const Eigen::MatrixXi& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

RationalVector to_rational(const Eigen::VectorXd& v) {
    RationalVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
    return out;
}

Eigen::MatrixXd to_double_matrix(const RationalMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

Eigen::VectorXd to_double_vector(const RationalVector& v) {
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_double(v(i));
    return out;
}

std::vector<int> betti_via_harmonic(const SimplicialComplex& complex) {
    std::vector<int> betti;
    for (int k = 0; k <= complex.dimension(); ++k) {
        RationalMatrix lap = to_rational(complex.hodge_laplacian_matrix(k));
        betti.push_back(complex.cell_count(k) - matrix_rank(std::move(lap)));
    }
    return betti;
}

FloatingBetti betti_via_harmonic_floating(const SimplicialComplex& complex,
                                          double zero_tol, double min_gap) {
    FloatingBetti result;
    result.worst_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= complex.dimension(); ++k) {
        Eigen::MatrixXd lap = complex.hodge_laplacian_matrix(k).cast<double>();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
        const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
        int zeros = 0;
        while (zeros < ev.size() && ev(zeros) < zero_tol) ++zeros;
        result.betti.push_back(zeros);
        if (zeros > 0 && zeros < ev.size()) {
            double largest_dropped = std::max(std::abs(ev(zeros - 1)), 1e-300);
            double gap = ev(zeros) / largest_dropped;
            result.worst_gap = std::min(result.worst_gap, gap);
            if (gap < min_gap) result.gap_ok = false;
        }
    }
    return result;
}

std::vector<int> betti_via_rank(const SimplicialComplex& complex) {
    std::vector<int> betti;
    for (int k = 0; k <= complex.dimension(); ++k) {
        int cycles = complex.cell_count(k) -
                     matrix_rank(to_rational(complex.boundary_matrix(k)));
        int boundaries = matrix_rank(to_rational(complex.boundary_matrix(k + 1)));
        betti.push_back(cycles - boundaries);
    }
    return betti;
}

namespace {

// Minimum-norm least squares projection of c onto the column span of m,
// with one refinement pass to tighten the residual.
Eigen::VectorXd project_onto_columns(const Eigen::MatrixXd& m, const Eigen::VectorXd& c) {
    if (m.cols() == 0 || m.rows() == 0) return Eigen::VectorXd::Zero(c.size());
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
    Eigen::VectorXd x = cod.solve(c);
    x += cod.solve(c - m * x);
    return m * x;
}

RationalVector project_onto_columns_exact(const RationalMatrix& m, const RationalVector& c) {
    if (m.cols() == 0 || m.rows() == 0) {
        RationalVector zero(c.size());
        zero.setConstant(Rational(0));
        return zero;
    }
    RationalVector x = least_squares<Rational>(m, c);
    return m * x;
}

}  // namespace

HodgeDecomposition hodge_decompose(const SimplicialComplex& complex, int degree,
                                   const Eigen::VectorXd& c) {
    if (c.size() != complex.cell_count(degree))
        throw std::invalid_argument("cochain length does not match cell count");
    Eigen::MatrixXd d_down = complex.coboundary_matrix(degree - 1).cast<double>();
    Eigen::MatrixXd d_up_t = complex.coboundary_matrix(degree).transpose().cast<double>();
    HodgeDecomposition out;
    out.exact = project_onto_columns(d_down, c);
    out.coexact = project_onto_columns(d_up_t, c);
    out.harmonic = c - out.exact - out.coexact;
    return out;
}

RationalHodgeDecomposition hodge_decompose_exact(const SimplicialComplex& complex,
                                                 int degree, const RationalVector& c) {
    if (c.size() != complex.cell_count(degree))
        throw std::invalid_argument("cochain length does not match cell count");
    RationalMatrix d_down = to_rational(complex.coboundary_matrix(degree - 1));
    RationalMatrix d_up_t =
        to_rational(Eigen::MatrixXi(complex.coboundary_matrix(degree).transpose()));
    RationalHodgeDecomposition out;
    out.exact = project_onto_columns_exact(d_down, c);
    out.coexact = project_onto_columns_exact(d_up_t, c);
    out.harmonic = c - out.exact - out.coexact;
    return out;
}

Eigen::VectorXd harmonic_representative(const SimplicialComplex& complex, int degree,
                                        const Eigen::VectorXd& c, double closed_tol) {
    if (c.size() != complex.cell_count(degree))
        throw std::invalid_argument("cochain length does not match cell count");
    Eigen::MatrixXd d_up = complex.coboundary_matrix(degree).cast<double>();
    double dc = d_up.rows() > 0 ? (d_up * c).template lpNorm<Eigen::Infinity>() : 0.0;
    double scale = std::max(1.0, c.size() > 0 ? c.lpNorm<Eigen::Infinity>() : 0.0);
    if (dc > closed_tol * scale)
        throw std::invalid_argument("cochain is not closed");
    Eigen::MatrixXd d_down = complex.coboundary_matrix(degree - 1).cast<double>();
    return c - project_onto_columns(d_down, c);
}

RationalMatrix homology_cycle_basis(const SimplicialComplex& complex, int k) {
    RationalMatrix cycles = kernel_basis(to_rational(complex.boundary_matrix(k)));
    RationalMatrix boundaries = to_rational(complex.boundary_matrix(k + 1));
    const Eigen::Index nb = boundaries.cols();
    RationalMatrix aug(cycles.rows(), nb + cycles.cols());
    aug.leftCols(nb) = boundaries;
    aug.rightCols(cycles.cols()) = cycles;
    std::vector<int> pivots;
    row_reduce(aug, &pivots);
    std::vector<Eigen::Index> keep;
    for (int p : pivots)
        if (p >= nb) keep.push_back(p - nb);
    RationalMatrix basis(cycles.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) basis.col(static_cast<Eigen::Index>(j)) = cycles.col(keep[j]);
    return basis;
}

namespace {

RationalMatrix diagonal_matrix(const RationalVector& w, bool invert) {
    RationalMatrix m(w.size(), w.size());
    m.setConstant(Rational(0));
    for (Eigen::Index i = 0; i < w.size(); ++i)
        m(i, i) = invert ? Rational(1) / w(i) : w(i);
    return m;
}

RationalVector weight_or_ones(const SimplicialComplex& complex, int j,
                              const std::vector<RationalVector>& weights) {
    const int count = complex.cell_count(j);
    if (j >= 0 && j < static_cast<int>(weights.size()) && weights[static_cast<std::size_t>(j)].size() > 0) {
        const RationalVector& w = weights[static_cast<std::size_t>(j)];
        if (w.size() != count)
            throw std::invalid_argument("weight vector length does not match cell count");
        for (Eigen::Index i = 0; i < w.size(); ++i)
            if (!(w(i) > 0)) throw std::invalid_argument("weights must be positive");
        return w;
    }
    RationalVector ones(count);
    ones.setConstant(Rational(1));
    return ones;
}

}  // namespace

RationalMatrix weighted_hodge_laplacian(const SimplicialComplex& complex, int k,
                                        const std::vector<RationalVector>& weights) {
    RationalVector w_down = weight_or_ones(complex, k - 1, weights);
    RationalVector w_here = weight_or_ones(complex, k, weights);
    RationalVector w_up = weight_or_ones(complex, k + 1, weights);
    RationalMatrix d_down = to_rational(complex.coboundary_matrix(k - 1));
    RationalMatrix d_here = to_rational(complex.coboundary_matrix(k));
    RationalMatrix lap =
        d_down * diagonal_matrix(w_down, true) * d_down.transpose() *
            diagonal_matrix(w_here, false) +
        diagonal_matrix(w_here, true) * d_here.transpose() *
            diagonal_matrix(w_up, false) * d_here;
    return lap;
}

int weighted_harmonic_dimension(const SimplicialComplex& complex, int k,
                                const std::vector<RationalVector>& weights) {
    return complex.cell_count(k) -
           matrix_rank(weighted_hodge_laplacian(complex, k, weights));
}

}  // namespace hodgestar
