#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "liebialg/errors.hpp"

namespace liebialg {

/// Exact scalar type: arbitrary-precision rational, always in canonical
/// reduced form with positive denominator (GMP keeps arithmetic results
/// canonical as long as the inputs are).
using Rational = boost::multiprecision::mpq_rational;

/// Parse "p/q" or "p" into a canonical rational.  Accepts an optional
/// leading sign and arbitrary-precision integers.
inline Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        if (denominator(q) == 0) throw bad_params("zero denominator in '" + text + "'");
        // String construction bypasses canonicalization; normalize explicitly.
        mpq_canonicalize(q.backend().data());
        return q;
    } catch (const std::exception&) {
        throw bad_params("cannot parse rational '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace liebialg
