#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hodgestar {

// Exact rational scalar. All algebraic kernels in this library are exact;
// doubles appear only in the floating paths of the simplicial module.
using Rational = mpq_class;

// Thrown by every text-grammar front end; the message carries enough position
// information for the CLI to report it under the parse-error exit code.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

Rational make_rational(long num, long den = 1);

// Accepts "-3", "3/2", "0.25", "1e-3", "2.5e2". Every accepted form is
// converted exactly; no rounding happens here.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

}  // namespace hodgestar
