#include "hodgestar/metric.hpp"

namespace hodgestar {

Metric Metric::euclidean(int n, int orientation) {
    Metric g;
    g.n = n;
    g.signature.assign(static_cast<std::size_t>(n), +1);
    g.orientation = orientation;
    return g;
}

Metric Metric::minkowski(int orientation) {
    Metric g;
    g.n = 4;
    g.signature = {+1, -1, -1, -1};
    g.orientation = orientation;
    return g;
}

Metric Metric::from_signature(const std::string& text, int orientation) {
    if (text.empty()) throw ParseError("empty signature string");
    if (orientation != +1 && orientation != -1)
        throw std::invalid_argument("orientation must be +1 or -1");
    Metric g;
    g.n = static_cast<int>(text.size());
    g.orientation = orientation;
    for (char c : text) {
        if (c == '+')
            g.signature.push_back(+1);
        else if (c == '-')
            g.signature.push_back(-1);
        else
            throw ParseError(std::string("signature may contain only '+'/'-', got '") + c + "'");
    }
    return g;
}

int Metric::det_sign() const {
    int s = 1;
    for (int v : signature) s *= v;
    return s;
}

int Metric::blade_sign(std::uint32_t bits) const {
    int s = 1;
    for (std::uint32_t rest = bits; rest != 0; rest &= rest - 1)
        s *= signature[static_cast<std::size_t>(std::countr_zero(rest))];
    return s;
}

std::string Metric::signature_string() const {
    std::string s;
    for (int v : signature) s.push_back(v > 0 ? '+' : '-');
    return s;
}

int epsilon(const std::vector<int>& indices, int n) {
    if (static_cast<int>(indices.size()) != n)
        throw std::invalid_argument("epsilon needs exactly n indices");
    for (int i : indices)
        if (i < 1 || i > n) throw std::invalid_argument("epsilon index outside 1..n");
    int inversions = 0;
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            if (indices[a] == indices[b]) return 0;
            if (indices[a] > indices[b]) ++inversions;
        }
    return (inversions & 1) ? -1 : +1;
}

namespace {

void require_dimension(const Multivector& a, const Metric& g) {
    if (a.dimension() != g.n)
        throw std::invalid_argument("metric dimension does not match multivector");
    if (static_cast<int>(g.signature.size()) != g.n)
        throw std::invalid_argument("metric signature has wrong length");
}

}  // namespace

Multivector raise(const Multivector& a, const Metric& g) {
    require_dimension(a, g);
    Multivector out(a.dimension());
    for (const auto& [bits, c] : a.terms())
        out.add_term(bits, g.blade_sign(bits) < 0 ? Rational(-c) : c);
    return out;
}

Multivector lower(const Multivector& a, const Metric& g) { return raise(a, g); }

Multivector hodge_star(const Multivector& a, const Metric& g) {
    require_dimension(a, g);
    const int n = g.n;
    Multivector out(n);
    for (const auto& [bits, c] : a.terms()) {
        int sign = g.orientation * g.blade_sign(bits) * complement_sign(bits, n);
        out.add_term(full_mask(n) & ~bits, sign < 0 ? Rational(-c) : c);
    }
    return out;
}

int double_star_sign(int k, const Metric& g) {
    int s = g.det_sign();
    if ((k * (g.n - k)) % 2 != 0) s = -s;
    return s;
}

Rational pairing(const Multivector& a, const Multivector& b, const Metric& g) {
    require_dimension(a, g);
    require_dimension(b, g);
    return wedge(a, b).coefficient(Blade{full_mask(g.n)});
}

Multivector minkowski_dual(const Multivector& a) {
    if (a.dimension() != 4)
        throw std::invalid_argument("minkowski_dual is defined for dimension 4");
    if (!a.is_zero() && a.homogeneous_grade() != Grade{2})
        throw std::invalid_argument("minkowski_dual is defined for grade 2");
    Multivector out(4);
    for (const auto& [bits, c] : a.terms()) {
        std::uint32_t target = full_mask(4) & ~bits;
        // Component rule with the target pair written first; for grade 2 the
        // two-past-two shuffle makes sg(ijkl) = sg(klij), so this coincides
        // with the Euclidean complement of the same component array.
        int sign = merge_sign(target, bits);
        out.add_term(target, sign < 0 ? Rational(-c) : c);
    }
    return out;
}

}  // namespace hodgestar
