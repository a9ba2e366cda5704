#pragma once

#include <string>
#include <vector>

#include "hodgestar/multivector.hpp"

namespace hodgestar {

// Constant diagonal metric with entries +1/-1 and an explicit frame
// orientation (+1/-1). sqrt|det g| = 1 for every such metric, so the volume
// factor of the star operator reduces to the orientation sign.
struct Metric {
    int n = 0;
    std::vector<int> signature;  // one +1/-1 per axis position
    int orientation = +1;

    static Metric euclidean(int n, int orientation = +1);
    // diag(+1,-1,-1,-1): position 0 (the x0 axis) is timelike. Imaginary time
    // coordinates are not used anywhere in this library.
    static Metric minkowski(int orientation = +1);
    // "+---" etc.; anything but '+'/'-' is rejected.
    static Metric from_signature(const std::string& text, int orientation = +1);

    int det_sign() const;
    // Product of the signature entries over the axes of a blade: the factor
    // that raising (equivalently lowering) applies to its coefficient.
    int blade_sign(std::uint32_t bits) const;
    std::string signature_string() const;

    friend bool operator==(const Metric&, const Metric&) = default;
};

// Totally antisymmetric symbol on 1-based indices: the permutation sign of
// (indices) relative to (1..n), 0 on any repetition. Out-of-range indices are
// rejected.
int epsilon(const std::vector<int>& indices, int n);

struct EpsilonSymbol {
    int n;
    int operator()(const std::vector<int>& indices) const { return epsilon(indices, n); }
};

// Index raising for diagonal +-1 metrics; self-inverse and equal to lowering.
Multivector raise(const Multivector& a, const Metric& g);
Multivector lower(const Multivector& a, const Metric& g);

// Star of a blade with axis set I: orientation * (prod of signature over I) *
// sg(I, I^c) e_{I^c}, extended linearly; ascending-tuple summation absorbs the
// 1/p! of the component formula. For the Euclidean metric with positive
// orientation this is exactly the frame complement.
Multivector hodge_star(const Multivector& a, const Metric& g);

// sign(det g) * (-1)^{k(n-k)}: the double-star factor on grade k.
int double_star_sign(int k, const Metric& g);

// Coefficient of the volume blade in wedge(a, b); zero unless the grades sum
// to n. No metric factors enter; g supplies only the frame dimension.
Rational pairing(const Multivector& a, const Multivector& b, const Metric& g);

// The special-relativistic dual of a 2-blade in n = 4: component swap
// f*_{ij} = sg(ijkl) f_{kl} with no metric factor anywhere; involutive.
Multivector minkowski_dual(const Multivector& a);

}  // namespace hodgestar
