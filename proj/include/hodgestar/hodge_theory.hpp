#pragma once

#include <Eigen/Core>

#include <vector>

#include "hodgestar/rational_linalg.hpp"
#include "hodgestar/simplicial.hpp"

namespace hodgestar {

RationalMatrix to_rational(const Eigen::MatrixXi& m);
RationalVector to_rational(const Eigen::VectorXd& v);
Eigen::MatrixXd to_double_matrix(const RationalMatrix& m);
Eigen::VectorXd to_double_vector(const RationalVector& v);

// b_k = dim ker Delta_k, computed exactly as n_k - rank(Delta_k) over the
// rationals. One entry per dimension 0..dim(complex).
std::vector<int> betti_via_harmonic(const SimplicialComplex& complex);

// Floating route: eigenvalues of Delta_k below zero_tol count as zero.
// gap_ok certifies the spectrum separates cleanly: every retained eigenvalue
// exceeds every discarded one by at least min_gap.
struct FloatingBetti {
    std::vector<int> betti;
    bool gap_ok = true;
    double worst_gap = 0.0;  // min over k of smallest-kept / largest-dropped
};
FloatingBetti betti_via_harmonic_floating(const SimplicialComplex& complex,
                                          double zero_tol = 1e-8,
                                          double min_gap = 1e4);

// Independent route: b_k = dim ker boundary_k - rank boundary_{k+1}.
std::vector<int> betti_via_rank(const SimplicialComplex& complex);

// c = exact + coexact + harmonic with exact in im(d_{k-1}), coexact in
// im(d_k^T), harmonic in ker Delta_k; the three parts are orthogonal.
struct HodgeDecomposition {
    Eigen::VectorXd exact;
    Eigen::VectorXd coexact;
    Eigen::VectorXd harmonic;
};
HodgeDecomposition hodge_decompose(const SimplicialComplex& complex, int degree,
                                   const Eigen::VectorXd& c);

struct RationalHodgeDecomposition {
    RationalVector exact;
    RationalVector coexact;
    RationalVector harmonic;
};
RationalHodgeDecomposition hodge_decompose_exact(const SimplicialComplex& complex,
                                                 int degree, const RationalVector& c);

// For a closed cochain returns c - d x, the harmonic member of its
// cohomology class. Throws std::invalid_argument when |d c| exceeds
// closed_tol * max(1, |c|). Periods over cycles are unchanged because
// cycles annihilate coboundaries.
Eigen::VectorXd harmonic_representative(const SimplicialComplex& complex, int degree,
                                        const Eigen::VectorXd& c,
                                        double closed_tol = 1e-10);

// Columns are k-cycles spanning homology: a kernel basis of boundary_k
// reduced modulo im boundary_{k+1}, exact.
RationalMatrix homology_cycle_basis(const SimplicialComplex& complex, int k);

// Laplacian for diagonal positive inner products W_j on j-cochains
// (weights[j] holds the diagonal):
//   Delta_k = d_{k-1} W_{k-1}^{-1} d_{k-1}^T W_k + W_k^{-1} d_k^T W_{k+1} d_k.
// Its kernel dimension is the Betti number for every positive choice.
RationalMatrix weighted_hodge_laplacian(const SimplicialComplex& complex, int k,
                                        const std::vector<RationalVector>& weights);
int weighted_harmonic_dimension(const SimplicialComplex& complex, int k,
                                const std::vector<RationalVector>& weights);

}  // namespace hodgestar
