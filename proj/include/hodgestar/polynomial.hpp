#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodgestar/rational.hpp"

namespace hodgestar {

// Sparse polynomial in variables x0..x{n-1} with exact rational coefficients.
// Keys are exponent vectors; zero coefficients are never stored.
class Polynomial {
   public:
    explicit Polynomial(int nvars);

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& value);
    static Polynomial variable(int nvars, int axis);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;
    Rational constant_value() const;  // coefficient of the empty monomial

    void add_term(const std::vector<unsigned>& exponents, const Rational& coefficient);
    const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }

    Polynomial derivative(int axis) const;
    // Exact value at a rational point; point.size() must equal nvars().
    Rational evaluate(const std::vector<Rational>& point) const;
    // Sum of absolute values of the coefficients; an exact size measure used
    // by residual reports.
    Rational coefficient_l1() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    int nvars_;
    std::map<std::vector<unsigned>, Rational> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);

// Grammar: "3/2*x0^2*x1 - x3"; '*' between factors, '^' for exponents,
// whitespace insignificant.
Polynomial parse_polynomial(const std::string& text, int nvars);
std::string to_string(const Polynomial& p);

}  // namespace hodgestar
