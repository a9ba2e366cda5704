#include "hodgestar/multivector.hpp"

#include <cctype>
#include <sstream>

namespace hodgestar {

Multivector::Multivector(int dimension) : n_(dimension) {
    if (dimension < 0 || dimension > 30)
        throw std::invalid_argument("multivector dimension out of range");
}

Multivector Multivector::scalar(int n, const Rational& value) {
    Multivector m(n);
    m.add_term(0, value);
    return m;
}

Multivector Multivector::blade(int n, std::initializer_list<int> indices,
                               const Rational& coefficient) {
    std::vector<int> axes;
    for (int i : indices) axes.push_back(i - 1);
    Multivector m(n);
    m.add_term(Blade::from_axes(axes, n).bits, coefficient);
    return m;
}

std::optional<Grade> Multivector::homogeneous_grade() const {
    std::optional<Grade> g;
    for (const auto& [bits, c] : terms_) {
        int k = std::popcount(bits);
        if (g && *g != k) return std::nullopt;
        g = k;
    }
    return g ? g : std::optional<Grade>(0);
}

Rational Multivector::coefficient(const Blade& b) const {
    auto it = terms_.find(b.bits);
    return it == terms_.end() ? Rational(0) : it->second;
}

Multivector Multivector::grade_part(Grade k) const {
    Multivector out(n_);
    for (const auto& [bits, c] : terms_)
        if (std::popcount(bits) == k) out.add_term(bits, c);
    return out;
}

void Multivector::add_term(std::uint32_t bits, const Rational& coefficient) {
    if ((bits & ~full_mask(n_)) != 0)
        throw std::invalid_argument("blade index exceeds dimension");
    auto [it, inserted] = terms_.try_emplace(bits, coefficient);
    if (!inserted) it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

namespace {

void require_same_dimension(const Multivector& a, const Multivector& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("multivector dimensions differ");
}

}  // namespace

Multivector operator+(const Multivector& a, const Multivector& b) {
    require_same_dimension(a, b);
    Multivector out = a;
    for (const auto& [bits, c] : b.terms()) out.add_term(bits, c);
    return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
    require_same_dimension(a, b);
    Multivector out = a;
    for (const auto& [bits, c] : b.terms()) out.add_term(bits, -c);
    return out;
}

Multivector operator-(const Multivector& a) { return Rational(-1) * a; }

Multivector operator*(const Rational& c, const Multivector& a) {
    Multivector out(a.dimension());
    if (c == 0) return out;
    for (const auto& [bits, v] : a.terms()) out.add_term(bits, c * v);
    return out;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    require_same_dimension(a, b);
    Multivector out(a.dimension());
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            if ((ba & bb) != 0) continue;
            Rational c = ca * cb;
            if (merge_sign(ba, bb) < 0) c = -c;
            out.add_term(ba | bb, c);
        }
    }
    return out;
}

Multivector complement(const Multivector& a) {
    const int n = a.dimension();
    Multivector out(n);
    for (const auto& [bits, c] : a.terms()) {
        int sign = complement_sign(bits, n);
        out.add_term(full_mask(n) & ~bits, sign < 0 ? Rational(-c) : c);
    }
    return out;
}

Multivector inverse_complement(const Multivector& a) {
    const int n = a.dimension();
    Multivector out(n);
    for (const auto& [bits, c] : a.terms()) {
        int k = std::popcount(bits);
        // |(|X) = (-1)^{g(n-g)} X on grade g, so the inverse on grade k is
        // (-1)^{k(n-k)} times the complement.
        int sign = complement_sign(bits, n);
        if ((k * (n - k)) % 2 != 0) sign = -sign;
        out.add_term(full_mask(n) & ~bits, sign < 0 ? Rational(-c) : c);
    }
    return out;
}

Multivector regressive_product(const Multivector& a, const Multivector& b) {
    require_same_dimension(a, b);
    return inverse_complement(wedge(complement(a), complement(b)));
}

Multivector interior_product(const Multivector& a, const Multivector& b) {
    require_same_dimension(a, b);
    const int n = a.dimension();
    const Multivector cb = complement(b);
    // Per grade pair (k on the left, n-l on the right): progressive while the
    // grades still fit, regressive (which applies the unit reduction) once
    // they fill or exceed the frame. Equal input grades land on grade 0.
    Multivector out(n);
    for (int k = 0; k <= n; ++k) {
        Multivector ak = a.grade_part(k);
        if (ak.is_zero()) continue;
        for (int l = 0; l <= n; ++l) {
            Multivector cbl = cb.grade_part(n - l);
            if (cbl.is_zero()) continue;
            Multivector part =
                k < l ? wedge(ak, cbl) : regressive_product(ak, cbl);
            out = out + part;
        }
    }
    return out;
}

Multivector cross_product(const Multivector& u, const Multivector& v) {
    require_same_dimension(u, v);
    if (u.dimension() != 3)
        throw std::invalid_argument("cross product requires dimension 3");
    if (u.homogeneous_grade() != Grade{1} || v.homogeneous_grade() != Grade{1})
        throw std::invalid_argument("cross product requires grade-1 inputs");
    return complement(wedge(u, v));
}

// ---------------------------------------------------------------------------
// Grammar: sum of terms; term = [rational '*']? blade | rational;
// blade = 'e' digits ('^' 'e' digits)*.

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_space() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_space();
        return i >= s.size();
    }
    char peek() {
        skip_space();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(i) + " in '" + s + "'");
    }
};

std::string read_number(Cursor& c) {
    c.skip_space();
    std::size_t start = c.i;
    while (c.i < c.s.size()) {
        char ch = c.s[c.i];
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '.') {
            ++c.i;
        } else if ((ch == 'e' || ch == 'E') && c.i + 1 < c.s.size() &&
                   (std::isdigit(static_cast<unsigned char>(c.s[c.i + 1])) ||
                    ((c.s[c.i + 1] == '+' || c.s[c.i + 1] == '-') && c.i + 2 < c.s.size() &&
                     std::isdigit(static_cast<unsigned char>(c.s[c.i + 2]))))) {
            // Exponent part of a scientific literal, not a frame label.
            c.i += 2;
        } else {
            break;
        }
    }
    if (c.i == start) c.fail("expected number");
    return c.s.substr(start, c.i - start);
}

int read_frame_index(Cursor& c, int n) {
    c.skip_space();
    if (c.peek() != 'e') c.fail("expected frame label e<k>");
    ++c.i;
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected digits after 'e'");
    int idx = std::stoi(c.s.substr(start, c.i - start));
    if (idx < 1 || idx > n)
        c.fail("frame index e" + std::to_string(idx) + " outside 1.." + std::to_string(n));
    return idx;
}

}  // namespace

Multivector parse_multivector(const std::string& text, int dimension) {
    Multivector out(dimension);
    Cursor c{text};
    if (c.done()) throw ParseError("empty multivector expression");
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : +1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        first = false;

        Rational coeff(sign);
        bool saw_number = false;
        ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            coeff *= parse_rational(read_number(c));
            saw_number = true;
            if (c.peek() == '*') ++c.i;
        }
        std::uint32_t bits = 0;
        if (c.peek() == 'e') {
            while (true) {
                int idx = read_frame_index(c, dimension);
                std::uint32_t bit = std::uint32_t{1} << (idx - 1);
                if (bits & bit) c.fail("repeated index e" + std::to_string(idx));
                bits |= bit;
                if (c.peek() == '^') {
                    ++c.i;
                    continue;
                }
                break;
            }
        } else if (!saw_number) {
            c.fail("expected coefficient or blade");
        }
        out.add_term(bits, coeff);
    }
    return out;
}

std::string to_string(const Multivector& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [bits, c] : a.terms()) {
        Rational v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        Blade b{bits};
        if (bits == 0) {
            os << to_string(v);
        } else {
            if (v != 1) os << to_string(v) << "*";
            bool inner_first = true;
            for (int idx : b.indices()) {
                if (!inner_first) os << "^";
                os << "e" << idx;
                inner_first = false;
            }
        }
    }
    return os.str();
}

}  // namespace hodgestar
