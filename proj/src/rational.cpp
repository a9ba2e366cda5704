#include "hodgestar/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace hodgestar {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty number");

    int sign = 1;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    s = s.substr(pos);
    if (s.empty()) throw ParseError("number without digits: '" + text + "'");

    // Fraction form p/q.
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction: '" + text + "'");
        // Base 10 always: the default base detection would read a leading
        // zero (as in "0.25" -> digits "025") as octal.
        Rational q{mpz_class(num, 10), mpz_class(den, 10)};
        if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
        q.canonicalize();
        return sign < 0 ? Rational(-q) : q;
    }

    // Decimal / scientific form; converted exactly via powers of ten.
    std::string mantissa = s;
    long exponent10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        mantissa = s.substr(0, e);
        std::string exp = s.substr(e + 1);
        bool exp_neg = false;
        if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
            exp_neg = exp[0] == '-';
            exp = exp.substr(1);
        }
        if (!all_digits(exp) || exp.size() > 6)
            throw ParseError("malformed exponent: '" + text + "'");
        exponent10 = std::strtol(exp.c_str(), nullptr, 10);
        if (exp_neg) exponent10 = -exponent10;
    }
    std::string digits = mantissa;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent10 -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (!all_digits(digits)) throw ParseError("malformed number: '" + text + "'");

    Rational q{mpz_class(digits, 10)};
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent10)));
    if (exponent10 >= 0)
        q *= Rational(pow10);
    else
        q /= Rational(pow10);
    q.canonicalize();
    return sign < 0 ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hodgestar
