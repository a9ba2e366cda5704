#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hodgestar {

// Simplices are stored as strictly ascending vertex tuples; the orientation
// of every stored simplex is the ascending one. Boundary signs come from the
// position of the omitted vertex: the i-th face of [v0..vk] carries (-1)^i.
using Simplex = std::vector<int>;

class SimplicialComplex {
public:
    // Builds the full face closure of the given top cells.
    static SimplicialComplex from_top_cells(const std::vector<Simplex>& top);

    int dimension() const { return static_cast<int>(cells_.size()) - 1; }

    // Cells of dimension k, sorted lexicographically; empty past dimension().
    const std::vector<Simplex>& cells(int k) const;
    int cell_count(int k) const;

    // Index of a k-simplex within cells(k); the tuple must be ascending.
    int cell_index(const Simplex& s) const;

    // Rows index (k-1)-cells, columns index k-cells. Zero-row matrix for k=0.
    Eigen::MatrixXi boundary_matrix(int k) const;

    // d_k = transpose of boundary_{k+1}; rows index (k+1)-cells.
    Eigen::MatrixXi coboundary_matrix(int k) const;

    // Delta_k = d_{k-1} d_{k-1}^T + d_k^T d_k acting on k-cochains.
    Eigen::MatrixXi hodge_laplacian_matrix(int k) const;

    long long euler_characteristic() const;

private:
    std::vector<std::vector<Simplex>> cells_;
    std::vector<std::map<Simplex, int>> index_;
};

// File format: first non-comment line "simplices", then one top cell per
// line as whitespace-separated vertex labels. '#' starts a comment.
SimplicialComplex load_complex(std::istream& in);
SimplicialComplex load_complex_file(const std::string& path);

// A k-cochain as a dense coefficient vector over cells(k).
struct Cochain {
    int degree = 0;
    Eigen::VectorXd values;
};

// File format: first non-comment line "degree k", then one line per cell:
// the ascending vertex tuple followed by the coefficient. Cells not listed
// get coefficient zero.
Cochain load_cochain(std::istream& in, const SimplicialComplex& complex);
Cochain load_cochain_file(const std::string& path, const SimplicialComplex& complex);

}  // namespace hodgestar
