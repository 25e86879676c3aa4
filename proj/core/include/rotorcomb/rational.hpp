#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rotorcomb {

/// Exact arbitrary-precision rational. All recursion and weight arithmetic
/// runs on these; floating point appears only in Monte Carlo tolerances and
/// rendering.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace rotorcomb
