#include "hodgestar/simplicial.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hodgestar/rational.hpp"

namespace hodgestar {

namespace {

const std::vector<Simplex> kNoCells;

}  // namespace

SimplicialComplex SimplicialComplex::from_top_cells(const std::vector<Simplex>& top) {
    std::set<Simplex> faces;
    // Enumerate all nonempty subsets of each top cell.
    for (const Simplex& cell : top) {
        const std::size_t k = cell.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(cell[i]);
            faces.insert(std::move(face));
        }
    }
    SimplicialComplex complex;
    for (const Simplex& face : faces) {
        const int dim = static_cast<int>(face.size()) - 1;
        if (dim >= static_cast<int>(complex.cells_.size()))
            complex.cells_.resize(static_cast<std::size_t>(dim) + 1);
        complex.cells_[static_cast<std::size_t>(dim)].push_back(face);
    }
    complex.index_.resize(complex.cells_.size());
    for (std::size_t k = 0; k < complex.cells_.size(); ++k)
        for (std::size_t i = 0; i < complex.cells_[k].size(); ++i)
            complex.index_[k][complex.cells_[k][i]] = static_cast<int>(i);
    return complex;
}

const std::vector<Simplex>& SimplicialComplex::cells(int k) const {
    if (k < 0 || k >= static_cast<int>(cells_.size())) return kNoCells;
    return cells_[static_cast<std::size_t>(k)];
}

int SimplicialComplex::cell_count(int k) const {
    return static_cast<int>(cells(k).size());
}

int SimplicialComplex::cell_index(const Simplex& s) const {
    const int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k >= static_cast<int>(index_.size())) return -1;
    auto it = index_[static_cast<std::size_t>(k)].find(s);
    return it == index_[static_cast<std::size_t>(k)].end() ? -1 : it->second;
}

Eigen::MatrixXi SimplicialComplex::boundary_matrix(int k) const {
    const int rows = cell_count(k - 1);
    const int cols = cell_count(k);
    Eigen::MatrixXi bnd = Eigen::MatrixXi::Zero(rows, cols);
    if (k <= 0) return bnd;
    for (int j = 0; j < cols; ++j) {
        const Simplex& s = cells(k)[static_cast<std::size_t>(j)];
        for (std::size_t omit = 0; omit < s.size(); ++omit) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != omit) face.push_back(s[i]);
            const int row = cell_index(face);
            bnd(row, j) = (omit % 2 == 0) ? 1 : -1;
        }
    }
    return bnd;
}

Eigen::MatrixXi SimplicialComplex::coboundary_matrix(int k) const {
    return boundary_matrix(k + 1).transpose();
}

Eigen::MatrixXi SimplicialComplex::hodge_laplacian_matrix(int k) const {
    const int nk = cell_count(k);
    Eigen::MatrixXi lap = Eigen::MatrixXi::Zero(nk, nk);
    if (k > 0) {
        Eigen::MatrixXi down = boundary_matrix(k);
        lap += (down.transpose() * down).eval();
    }
    Eigen::MatrixXi up = boundary_matrix(k + 1);
    lap += (up * up.transpose()).eval();
    return lap;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cell_count(k));
    return chi;
}

namespace {

// Strips comments, returns the next nonempty line; false at end of input.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);
        return true;
    }
    return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

SimplicialComplex load_complex(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno) || line != "simplices")
        fail(lineno, "expected header 'simplices'");
    std::vector<Simplex> top;
    while (next_content_line(in, line, lineno)) {
        std::istringstream row(line);
        Simplex cell;
        int v;
        while (row >> v) cell.push_back(v);
        if (!row.eof()) fail(lineno, "vertex labels must be integers");
        if (cell.empty()) fail(lineno, "empty simplex");
        Simplex sorted = cell;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(lineno, "repeated vertex in simplex");
        top.push_back(std::move(sorted));
    }
    if (top.empty()) fail(lineno, "no simplices listed");
    return SimplicialComplex::from_top_cells(top);
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_complex(in);
}

Cochain load_cochain(std::istream& in, const SimplicialComplex& complex) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno))
        fail(lineno, "expected header 'degree k'");
    std::istringstream header(line);
    std::string keyword;
    int degree = -1;
    header >> keyword >> degree;
    if (keyword != "degree" || header.fail() || degree < 0)
        fail(lineno, "expected header 'degree k'");
    Cochain c;
    c.degree = degree;
    c.values = Eigen::VectorXd::Zero(complex.cell_count(degree));
    while (next_content_line(in, line, lineno)) {
        std::istringstream row(line);
        std::vector<std::string> fields;
        std::string f;
        while (row >> f) fields.push_back(f);
        if (fields.size() != static_cast<std::size_t>(degree) + 2)
            fail(lineno, "expected " + std::to_string(degree + 1) +
                             " vertex labels and a coefficient");
        Simplex s;
        for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
            try {
                s.push_back(std::stoi(fields[i]));
            } catch (const std::exception&) {
                fail(lineno, "vertex labels must be integers");
            }
        }
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(lineno, "vertex tuple must be strictly ascending");
        const int idx = complex.cell_index(s);
        if (idx < 0) fail(lineno, "simplex not present in the complex");
        try {
            c.values(idx) = to_double(parse_rational(fields.back()));
        } catch (const ParseError&) {
            fail(lineno, "bad coefficient '" + fields.back() + "'");
        }
    }
    return c;
}

Cochain load_cochain_file(const std::string& path, const SimplicialComplex& complex) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_cochain(in, complex);
}

}  // namespace hodgestar
