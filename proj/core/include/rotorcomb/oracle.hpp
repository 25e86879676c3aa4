#pragma once

#include <cstdint>
#include <utility>

#include "rotorcomb/shape.hpp"

namespace rotorcomb {

/// Closed forms for the aggregation odometer on the comb and on the
/// half-line, used as the independent check of the simulation engine.
namespace oracle {

/// e(y) = 2y + 1.
constexpr std::int64_t weight_e(std::int64_t y) { return 2 * y + 1; }

/// f(y) = y(y + 1).
constexpr std::int64_t weight_f(std::int64_t y) { return y * (y + 1); }

/// The inward-rotor frontier r(x): 0 for x in {0,1};
/// (x^2-7x+10)/18 when x = 2 mod 3; (x^2-x+6)/6 otherwise.
/// Throws std::logic_error if the selected branch is non-integral
/// (cannot happen for valid x).
std::int64_t r_of_x(std::int64_t x);

/// Half-line odometer template: f(h-y)+e(r-y) for 1<=y<=r, f(h-y) for
/// r<y<=h, 0 otherwise. Requires 0 <= r <= h.
std::int64_t u_tilde(std::int64_t h, std::int64_t r, std::int64_t y);

/// Shifted comb odometer u'(x,y): the tooth template for y>0 and
/// 2f(h(x)) + 2e(r(x)) - 2 - [x==2] on the backbone.
std::int64_t u_prime(std::int64_t x, std::int64_t y);

/// The full comb odometer u_m(x,y) = u'(m-|x|, |y|), zero outside B_m.
/// Exact for all m >= 3; for m <= 2 the aggregation differs at a few
/// vertices and must be simulated instead.
std::int64_t u_m(std::int64_t m, std::int64_t x, std::int64_t y);

/// Cluster extent and frontier of the half-line process after n particles:
/// h = max{k : k(k+1)/2 <= n}, r = n - h(h+1)/2.
std::pair<std::int64_t, std::int64_t> halfline_h_r(std::int64_t n);

}  // namespace oracle
}  // namespace rotorcomb
