#pragma once

// Exact rational scalars and their text forms.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace theta6 {

using Scalar = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace detail

/// Parses "num/den", an integer, or a finite decimal with optional exponent
/// ("-1.25e-3") into an exact rational.
inline Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) throw ParseError("empty number");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        std::string_view digits = num;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
        if (!detail::all_digits(digits) || !detail::all_digits(den))
            throw ParseError("malformed rational '" + s + "'");
        if (num[0] == '+') num.erase(0, 1);
        mpz_class d(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        Scalar q(mpz_class(num, 10), d);
        q.canonicalize();
        return q;
    }

    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') {
        negative = s[i] == '-';
        ++i;
    }
    std::string int_part, frac_part;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_part += s[i++];
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_part += s[i++];
    }
    if (int_part.empty() && frac_part.empty()) throw ParseError("malformed number '" + s + "'");
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        std::string exp_text;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) exp_text += s[i++];
        std::string_view rest(s.data() + i, s.size() - i);
        if (!detail::all_digits(rest) || rest.size() > 6)
            throw ParseError("malformed exponent in '" + s + "'");
        exp_text += rest;
        exponent = std::stol(exp_text);
        i = s.size();
    }
    if (i != s.size()) throw ParseError("malformed number '" + s + "'");

    mpz_class mantissa(int_part + frac_part, 10);
    exponent -= static_cast<long>(frac_part.size());
    Scalar q;
    if (exponent >= 0)
        q = Scalar(mantissa * detail::pow10(static_cast<unsigned long>(exponent)));
    else
        q = Scalar(mantissa, detail::pow10(static_cast<unsigned long>(-exponent)));
    q.canonicalize();
    return negative ? Scalar(-q) : q;
}

/// Canonical text form: "n" for integers, "n/d" otherwise. Inverse of parse_scalar.
inline std::string to_string(const Scalar& q) { return q.get_str(); }

/// floor(sqrt(3) * 10^digits) / 10^digits, computed with an integer square root.
inline Scalar sqrt3_approx(unsigned digits) {
    mpz_class scaled = 3 * detail::pow10(2ul * digits);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Scalar q(root, detail::pow10(digits));
    q.canonicalize();
    return q;
}

inline double to_double(const Scalar& q) { return q.get_d(); }

inline Scalar abs(const Scalar& q) { return q < 0 ? Scalar(-q) : q; }

}  // namespace theta6
