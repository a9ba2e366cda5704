#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>

#include "hodgestar/blade.hpp"
#include "hodgestar/rational.hpp"

namespace hodgestar {

using Grade = int;

// Element of the exterior algebra over an n-dimensional frame e1..en with
// exact rational coefficients. Terms are kept on canonical ascending blades;
// zero coefficients are never stored.
class Multivector {
   public:
    explicit Multivector(int dimension);

    static Multivector zero(int n) { return Multivector(n); }
    static Multivector scalar(int n, const Rational& value);
    // Frame labels are 1-based: blade(3, {1, 3}) is [e1 e3].
    static Multivector blade(int n, std::initializer_list<int> indices,
                             const Rational& coefficient = Rational(1));

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    // Grade if all terms share one (a zero multivector has every grade).
    std::optional<Grade> homogeneous_grade() const;
    Rational coefficient(const Blade& b) const;
    Multivector grade_part(Grade k) const;

    const std::map<std::uint32_t, Rational, BladeOrder>& terms() const { return terms_; }
    void add_term(std::uint32_t bits, const Rational& coefficient);

    friend bool operator==(const Multivector&, const Multivector&) = default;

   private:
    int n_;
    std::map<std::uint32_t, Rational, BladeOrder> terms_;
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
Multivector operator*(const Rational& c, const Multivector& a);

// Progressive (exterior) product. Never reduces grade: a grade-n result stays
// a multiple of the volume blade.
Multivector wedge(const Multivector& a, const Multivector& b);

// Frame-relative complement |A: on a blade with index set I it is
// sg(I, I^c) e_{I^c}, extended linearly; [A |A] recovers the unit volume on
// unit blades. Metric-aware duals live in the metric module, not here.
Multivector complement(const Multivector& a);

// Inverse of the complement; on grade k it differs from the complement by the
// involution sign (-1)^{k(n-k)}.
Multivector inverse_complement(const Multivector& a);

// [A |B] with the unit convention [e1..en] = 1 applied: equal grades yield a
// grade-0 result (the Euclidean inner product on grade 1).
Multivector interior_product(const Multivector& a, const Multivector& b);

// complement^{-1}(wedge(complement(A), complement(B))); nonzero only when
// grade(A) + grade(B) >= n on each term pair. The unit-convention reduction
// rule lives here and in interior_product only.
Multivector regressive_product(const Multivector& a, const Multivector& b);

// n = 3, grade-1 inputs only: complement(wedge(u, v)).
Multivector cross_product(const Multivector& u, const Multivector& v);

// Grammar: terms like "3/2*e1^e3 - e2^e4 + 2"; whitespace insignificant;
// repeated indices within a blade are rejected.
Multivector parse_multivector(const std::string& text, int dimension);
std::string to_string(const Multivector& a);

}  // namespace hodgestar
