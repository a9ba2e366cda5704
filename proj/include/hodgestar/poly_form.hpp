#pragma once

#include <map>
#include <string>

#include "hodgestar/blade.hpp"
#include "hodgestar/metric.hpp"
#include "hodgestar/polynomial.hpp"

namespace hodgestar {

// Differential form on a global flat chart x0..x{n-1} with polynomial
// coefficients and a constant diagonal metric. Blade keys use the same
// canonical ascending convention as Multivector; dx_a pairs with axis a.
class PolyForm {
   public:
    explicit PolyForm(const Metric& g);

    const Metric& metric() const { return g_; }
    int dimension() const { return g_.n; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<Grade> homogeneous_grade() const;

    void add_term(std::uint32_t bits, const Polynomial& coefficient);
    void add_term(std::uint32_t bits, const Rational& coefficient);
    const std::map<std::uint32_t, Polynomial, BladeOrder>& terms() const { return terms_; }
    Polynomial coefficient(std::uint32_t bits) const;
    PolyForm grade_part(Grade k) const;

    // Exact size measure: sum of coefficient_l1 over all blades.
    Rational coefficient_l1() const;

    friend bool operator==(const PolyForm&, const PolyForm&) = default;

   private:
    Metric g_;
    std::map<std::uint32_t, Polynomial, BladeOrder> terms_;
};

PolyForm operator+(const PolyForm& a, const PolyForm& b);
PolyForm operator-(const PolyForm& a, const PolyForm& b);
PolyForm operator-(const PolyForm& a);
PolyForm operator*(const Rational& c, const PolyForm& a);
PolyForm operator*(const Polynomial& p, const PolyForm& a);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

// Exterior derivative; exact on polynomial coefficients, so d(d(P)) == 0 is
// an identity here, not a numerical statement.
PolyForm d(const PolyForm& a);

// Star applied bladewise with the form's metric.
PolyForm hodge_star(const PolyForm& a);

// Codifferential with the one fixed sign convention of this library:
//   delta = (-1)^{n(p+1)+1} star d star   on p-forms.
// Consequences, tested across the suite: delta(delta(P)) == 0; on Euclidean
// charts the scalar Hodge Laplacian is -sum d^2/dx_a^2, and on Euclidean R^3
// 1-forms delta is -div of the component vector.
PolyForm codifferential(const PolyForm& a);

// d(delta(P)) + delta(d(P)) with the convention above; grade preserving.
PolyForm hodge_laplacian(const PolyForm& a);

// sum_a g^{aa} d^2 f/dx_a^2 for the constant diagonal metric.
Polynomial beltrami_laplace(const Polynomial& f, const Metric& g);

struct HarmonicResidual {
    PolyForm d_p;       // first condition: dP = 0
    PolyForm d_star_p;  // second condition: d(star P) = 0
    bool harmonic() const { return d_p.is_zero() && d_star_p.is_zero(); }
};

HarmonicResidual is_harmonic_hodge(const PolyForm& a);

// Grammar: optional "name =" prefix, then terms like
// "(x1)*dx0^dx1 + (2)*dx2^dx3"; a parenthesized polynomial alone is a grade-0
// term. Non-ascending blade labels are rejected, not reordered.
PolyForm parse_poly_form(const std::string& text, const Metric& g);
std::string to_string(const PolyForm& a);

}  // namespace hodgestar
