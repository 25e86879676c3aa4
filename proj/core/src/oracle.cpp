#include "rotorcomb/oracle.hpp"

#include <stdexcept>

namespace rotorcomb::oracle {

std::int64_t r_of_x(std::int64_t x) {
    if (x < 0) throw std::invalid_argument("r_of_x: x must be non-negative");
    if (x <= 1) return 0;
    if (x % 3 == 2) {
        const std::int64_t num = x * x - 7 * x + 10;
        if (num % 18 != 0) throw std::logic_error("r_of_x: non-integral branch value");
        return num / 18;
    }
    const std::int64_t num = x * x - x + 6;
    if (num % 6 != 0) throw std::logic_error("r_of_x: non-integral branch value");
    return num / 6;
}

std::int64_t u_tilde(std::int64_t h, std::int64_t r, std::int64_t y) {
    if (r < 0 || r > h) throw std::domain_error("u_tilde: requires 0 <= r <= h");
    if (y >= 1 && y <= r) return weight_f(h - y) + weight_e(r - y);
    if (y > r && y <= h) return weight_f(h - y);
    return 0;
}

std::int64_t u_prime(std::int64_t x, std::int64_t y) {
    const std::int64_t h = h_cluster(x);
    const std::int64_t r = r_of_x(x);
    if (y > 0) return u_tilde(h, r, y);
    return 2 * weight_f(h) + 2 * weight_e(r) - 2 - (x == 2 ? 1 : 0);
}

std::int64_t u_m(std::int64_t m, std::int64_t x, std::int64_t y) {
    const std::int64_t ax = x < 0 ? -x : x;
    const std::int64_t ay = y < 0 ? -y : y;
    if (ax > m || ay > h_cluster(m - ax)) return 0;
    return u_prime(m - ax, ay);
}

std::pair<std::int64_t, std::int64_t> halfline_h_r(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("halfline_h_r: n must be positive");
    std::int64_t k = 0;
    while ((k + 1) * (k + 2) / 2 <= n) ++k;
    return {k, n - k * (k + 1) / 2};
}

}  // namespace rotorcomb::oracle
