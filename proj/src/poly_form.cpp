#include "hodgestar/poly_form.hpp"

#include <cctype>
#include <sstream>

namespace hodgestar {

PolyForm::PolyForm(const Metric& g) : g_(g) {
    if (static_cast<int>(g.signature.size()) != g.n)
        throw std::invalid_argument("metric signature has wrong length");
}

std::optional<Grade> PolyForm::homogeneous_grade() const {
    std::optional<Grade> g;
    for (const auto& [bits, p] : terms_) {
        int k = std::popcount(bits);
        if (g && *g != k) return std::nullopt;
        g = k;
    }
    return g ? g : std::optional<Grade>(0);
}

void PolyForm::add_term(std::uint32_t bits, const Polynomial& coefficient) {
    if ((bits & ~full_mask(g_.n)) != 0)
        throw std::invalid_argument("blade axis exceeds chart dimension");
    if (coefficient.nvars() != g_.n)
        throw std::invalid_argument("coefficient variable count does not match chart");
    auto it = terms_.find(bits);
    if (it == terms_.end()) {
        if (!coefficient.is_zero()) terms_.emplace(bits, coefficient);
        return;
    }
    it->second = it->second + coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

void PolyForm::add_term(std::uint32_t bits, const Rational& coefficient) {
    add_term(bits, Polynomial::constant(g_.n, coefficient));
}

Polynomial PolyForm::coefficient(std::uint32_t bits) const {
    auto it = terms_.find(bits);
    return it == terms_.end() ? Polynomial::zero(g_.n) : it->second;
}

PolyForm PolyForm::grade_part(Grade k) const {
    PolyForm out(g_);
    for (const auto& [bits, p] : terms_)
        if (std::popcount(bits) == k) out.add_term(bits, p);
    return out;
}

Rational PolyForm::coefficient_l1() const {
    Rational s(0);
    for (const auto& [bits, p] : terms_) s += p.coefficient_l1();
    return s;
}

namespace {

void require_same_chart(const PolyForm& a, const PolyForm& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("chart dimensions differ");
}

}  // namespace

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
    require_same_chart(a, b);
    PolyForm out = a;
    for (const auto& [bits, p] : b.terms()) out.add_term(bits, p);
    return out;
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) {
    require_same_chart(a, b);
    PolyForm out = a;
    for (const auto& [bits, p] : b.terms()) out.add_term(bits, -p);
    return out;
}

PolyForm operator-(const PolyForm& a) { return Rational(-1) * a; }

PolyForm operator*(const Rational& c, const PolyForm& a) {
    PolyForm out(a.metric());
    if (c == 0) return out;
    for (const auto& [bits, p] : a.terms()) out.add_term(bits, c * p);
    return out;
}

PolyForm operator*(const Polynomial& p, const PolyForm& a) {
    PolyForm out(a.metric());
    for (const auto& [bits, q] : a.terms()) out.add_term(bits, p * q);
    return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    require_same_chart(a, b);
    PolyForm out(a.metric());
    for (const auto& [ba, pa] : a.terms())
        for (const auto& [bb, pb] : b.terms()) {
            if ((ba & bb) != 0) continue;
            Polynomial p = pa * pb;
            out.add_term(ba | bb, merge_sign(ba, bb) < 0 ? -p : p);
        }
    return out;
}

PolyForm d(const PolyForm& a) {
    const int n = a.dimension();
    PolyForm out(a.metric());
    for (const auto& [bits, p] : a.terms()) {
        for (int axis = 0; axis < n; ++axis) {
            std::uint32_t bit = std::uint32_t{1} << axis;
            if (bits & bit) continue;
            Polynomial dp = p.derivative(axis);
            if (dp.is_zero()) continue;
            out.add_term(bit | bits, merge_sign(bit, bits) < 0 ? -dp : dp);
        }
    }
    return out;
}

PolyForm hodge_star(const PolyForm& a) {
    const Metric& g = a.metric();
    PolyForm out(g);
    for (const auto& [bits, p] : a.terms()) {
        int sign = g.orientation * g.blade_sign(bits) * complement_sign(bits, g.n);
        out.add_term(full_mask(g.n) & ~bits, sign < 0 ? -p : p);
    }
    return out;
}

namespace {

int codifferential_sign(int n, int p) {
    return (n * (p + 1) + 1) % 2 == 0 ? +1 : -1;
}

}  // namespace

PolyForm codifferential(const PolyForm& a) {
    const int n = a.dimension();
    PolyForm out(a.metric());
    for (int p = 0; p <= n; ++p) {
        PolyForm part = a.grade_part(p);
        if (part.is_zero()) continue;
        PolyForm sds = hodge_star(d(hodge_star(part)));
        out = out + (codifferential_sign(n, p) < 0 ? -sds : sds);
    }
    return out;
}

PolyForm hodge_laplacian(const PolyForm& a) {
    return d(codifferential(a)) + codifferential(d(a));
}

Polynomial beltrami_laplace(const Polynomial& f, const Metric& g) {
    if (f.nvars() != g.n)
        throw std::invalid_argument("polynomial variable count does not match metric");
    Polynomial out(g.n);
    for (int axis = 0; axis < g.n; ++axis) {
        Polynomial second = f.derivative(axis).derivative(axis);
        // Inverse diagonal entries equal the entries themselves for +-1.
        out = out + (g.signature[static_cast<std::size_t>(axis)] < 0 ? -second : second);
    }
    return out;
}

HarmonicResidual is_harmonic_hodge(const PolyForm& a) {
    return HarmonicResidual{d(a), d(hodge_star(a))};
}

// ---------------------------------------------------------------------------
// Grammar

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
    bool at(const char* word) {
        skip_space();
        return s.compare(i, std::char_traits<char>::length(word), word) == 0;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(i) + " in '" + s + "'");
    }
};

std::uint32_t read_form_blade(Cursor& c, int n) {
    std::uint32_t bits = 0;
    int previous = -1;
    while (true) {
        if (!c.at("dx")) c.fail("expected differential dx<k>");
        c.i += 2;
        std::size_t start = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == start) c.fail("expected digits after 'dx'");
        int axis = std::stoi(c.s.substr(start, c.i - start));
        if (axis >= n)
            c.fail("differential dx" + std::to_string(axis) + " outside dx0..dx" +
                   std::to_string(n - 1));
        if (axis <= previous)
            c.fail("blade indices must be strictly ascending at dx" + std::to_string(axis));
        previous = axis;
        bits |= std::uint32_t{1} << axis;
        if (c.peek() == '^') {
            ++c.i;
            continue;
        }
        return bits;
    }
}

}  // namespace

PolyForm parse_poly_form(const std::string& text, const Metric& g) {
    Cursor c{text};
    if (c.done()) throw ParseError("empty form expression");

    // Optional "name =" prefix.
    {
        std::size_t save = c.i;
        c.skip_space();
        std::size_t start = c.i;
        while (c.i < c.s.size() &&
               (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
            ++c.i;
        if (c.i > start && c.peek() == '=')
            ++c.i;
        else
            c.i = save;
    }

    PolyForm out(g);
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

        Polynomial coeff = Polynomial::constant(g.n, Rational(sign));
        bool saw_part = false;
        if (c.peek() == '(') {
            ++c.i;
            std::size_t close = c.s.find(')', c.i);
            if (close == std::string::npos) c.fail("missing ')'");
            coeff = coeff * parse_polynomial(c.s.substr(c.i, close - c.i), g.n);
            c.i = close + 1;
            saw_part = true;
            if (c.peek() == '*') ++c.i;
        }
        std::uint32_t bits = 0;
        if (c.at("dx")) {
            bits = read_form_blade(c, g.n);
        } else if (!saw_part) {
            c.fail("expected '(polynomial)' or differential");
        }
        out.add_term(bits, coeff);
    }
    return out;
}

std::string to_string(const PolyForm& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [bits, p] : a.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(p) << ")";
        if (bits != 0) {
            os << "*";
            bool inner_first = true;
            for (int axis : Blade{bits}.axes()) {
                if (!inner_first) os << "^";
                os << "dx" << axis;
                inner_first = false;
            }
        }
    }
    return os.str();
}

}  // namespace hodgestar
