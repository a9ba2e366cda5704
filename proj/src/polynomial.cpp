#include "hodgestar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hodgestar {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > 30) throw std::invalid_argument("nvars out of range");
}

Polynomial Polynomial::constant(int nvars, const Rational& value) {
    Polynomial p(nvars);
    p.add_term(std::vector<unsigned>(static_cast<std::size_t>(nvars), 0), value);
    return p;
}

Polynomial Polynomial::variable(int nvars, int axis) {
    if (axis < 0 || axis >= nvars) throw std::invalid_argument("variable axis out of range");
    std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(axis)] = 1;
    Polynomial p(nvars);
    p.add_term(e, Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first ==
                                      std::vector<unsigned>(static_cast<std::size_t>(nvars_), 0));
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return d;
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(std::vector<unsigned>(static_cast<std::size_t>(nvars_), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const std::vector<unsigned>& exponents, const Rational& coefficient) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("exponent vector has wrong length");
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::derivative(int axis) const {
    if (axis < 0 || axis >= nvars_) throw std::invalid_argument("axis out of range");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        unsigned k = e[static_cast<std::size_t>(axis)];
        if (k == 0) continue;
        std::vector<unsigned> d = e;
        d[static_cast<std::size_t>(axis)] = k - 1;
        out.add_term(d, Rational(static_cast<long>(k)) * c);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("point dimension mismatch");
    Rational value(0);
    for (const auto& [e, c] : terms_) {
        Rational monomial = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) monomial *= point[i];
        value += monomial;
    }
    return value;
}

Rational Polynomial::coefficient_l1() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += abs(c);
    return s;
}

namespace {

void require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable counts differ");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a, b);
    Polynomial out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a, b);
    Polynomial out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
    return out;
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a, b);
    Polynomial out(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<unsigned> e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    Polynomial out(a.nvars());
    if (c == 0) return out;
    for (const auto& [e, v] : a.terms()) out.add_term(e, c * v);
    return out;
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
            c.i += 2;
        } else {
            break;
        }
    }
    if (c.i == start) c.fail("expected number");
    return c.s.substr(start, c.i - start);
}

unsigned read_uint(Cursor& c, const char* what) {
    c.skip_space();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) c.fail(std::string("expected ") + what);
    return static_cast<unsigned>(std::stoul(c.s.substr(start, c.i - start)));
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
    Polynomial out(nvars);
    Cursor c{text};
    if (c.done()) throw ParseError("empty polynomial expression");
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
        std::vector<unsigned> exponents(static_cast<std::size_t>(nvars), 0);
        bool saw_factor = false;
        while (true) {
            ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
                coeff *= parse_rational(read_number(c));
                saw_factor = true;
            } else if (ch == 'x') {
                ++c.i;
                unsigned axis = read_uint(c, "variable index after 'x'");
                if (static_cast<int>(axis) >= nvars)
                    c.fail("variable x" + std::to_string(axis) + " outside x0..x" +
                           std::to_string(nvars - 1));
                unsigned power = 1;
                if (c.peek() == '^') {
                    ++c.i;
                    power = read_uint(c, "exponent after '^'");
                }
                exponents[axis] += power;
                saw_factor = true;
            } else {
                c.fail("expected factor");
            }
            if (c.peek() == '*') {
                ++c.i;
                continue;
            }
            break;
        }
        if (!saw_factor) c.fail("empty term");
        Polynomial term(nvars);
        term.add_term(exponents, coeff);
        out = out + term;
    }
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Reverse map order puts higher exponent vectors first and the constant
    // term last, which reads naturally and stays deterministic.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational v = it->second;
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
        const std::vector<unsigned>& e = it->first;
        bool monomial_empty = true;
        std::ostringstream mono;
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (e[a] == 0) continue;
            if (!monomial_empty) mono << "*";
            mono << "x" << a;
            if (e[a] > 1) mono << "^" << e[a];
            monomial_empty = false;
        }
        if (monomial_empty) {
            os << to_string(v);
        } else {
            if (v != 1) os << to_string(v) << "*";
            os << mono.str();
        }
    }
    return os.str();
}

}  // namespace hodgestar
