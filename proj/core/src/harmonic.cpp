#include "rotorcomb/harmonic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rotorcomb {

void WeightSystem::set(const VertexC2& v, Rational value) {
    if (value == 0)
        psi_.erase(v);
    else
        psi_[v] = std::move(value);
}

Rational WeightSystem::psi(const VertexC2& v) const {
    auto it = psi_.find(v);
    return it == psi_.end() ? Rational(0) : it->second;
}

Rational WeightSystem::laplacian(const VertexC2& v) const {
    Rational sum = 0;
    for (const auto& w : neighbors(v)) sum += psi(w) - psi(v);
    return sum / degree(v);
}

Rational WeightSystem::rotor_weight(const VertexC2& x, std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("rotor_weight: k must be non-negative");
    const int d = degree(x);
    Rational w = -Rational(static_cast<long>(k / d)) * d * laplacian(x);
    for (std::int64_t j = 1; j <= k % d; ++j)
        w += psi(x) - psi(neighbor_at(x, j % d));
    return w;
}

bool weight_invariance_check(const std::vector<VertexC2>& trace, const WeightSystem& psi,
                             const ParticleConfig& initial_particles) {
    EngineState s;
    s.rotors = RotorConfig(RotorConfig::Fallback::FirstNeighbor);
    s.particles = initial_particles;

    Rational wp = 0;
    for (const auto& [v, c] : s.particles.support()) wp += Rational(static_cast<long>(c)) * psi.psi(v);
    Rational wr = 0;
    const Rational invariant = wp + wr;

    for (const auto& x : trace) {
        const std::int64_t k = s.odometer_at(x) + 1;
        s.topple(x, ToppleMode::Virtual);
        const VertexC2 target = neighbor_at(x, k % degree(x));
        if (step(x, s.rotors.at(x)) != target) return false;  // rotor bookkeeping broke
        wp += psi.psi(target) - psi.psi(x);
        wr += psi.psi(x) - psi.psi(target);
        if (wp + wr != invariant) return false;
    }

    // independent recomputation of both weights from the final state
    Rational wp2 = 0;
    for (const auto& [v, c] : s.particles.support()) wp2 += Rational(static_cast<long>(c)) * psi.psi(v);
    Rational wr2 = 0;
    for (const auto& [v, k] : s.odometer) wr2 += psi.rotor_weight(v, k);
    return wp2 == wp && wr2 == wr && wp2 + wr2 == invariant;
}

RotorConfig add_particle_Ex(RotorConfig rotors, const VertexC2& x, const ClusterShape& B) {
    const auto boundary = B.inner_boundary();
    if (!B.contains(x) || boundary.contains(x))
        throw std::domain_error("add_particle_Ex: start vertex must be interior");
    VertexC2 p = x;
    while (!boundary.contains(p)) {
        const Direction next = rotor_successor(p, rotors.at(p));
        rotors.set(p, next);
        p = step(p, next);
    }
    return rotors;
}

Rational BoundaryMeasure::exit_weight(const VertexC2& v) const {
    auto it = std::lower_bound(exits.begin(), exits.end(), v,
                               [](const auto& a, const VertexC2& b) { return a.first < b; });
    if (it == exits.end() || it->first != v)
        throw std::out_of_range("no such boundary vertex");
    return it->second;
}

Rational BoundaryMeasure::nu(const VertexC2& v) const {
    if (total == 0) throw std::domain_error("empty measure");
    return exit_weight(v) / total;
}

RotorHarmonicResult harmonic_by_rotor(const ClusterShape& B, std::int64_t cap) {
    if (cap < 1) throw std::domain_error("harmonic_by_rotor: cap must be positive");
    const auto boundary = B.inner_boundary();
    const VertexC2 origin{0, 0};
    if (boundary.contains(origin))
        throw std::domain_error("harmonic_by_rotor: origin lies on the boundary");

    std::unordered_map<VertexC2, std::int64_t, VertexHash> advance;
    std::map<VertexC2, std::int64_t> exits;
    std::int64_t misaligned = 0;  // interior rotors not at a full turn

    RotorHarmonicResult res;
    for (std::int64_t n = 1; n <= cap; ++n) {
        VertexC2 p = origin;
        while (!boundary.contains(p)) {
            auto& k = advance[p];
            if (k % degree(p) == 0) ++misaligned;
            ++k;
            if (k % degree(p) == 0) --misaligned;
            p = step(p, advance_rotor(p, initial_rotor(p), k));
        }
        ++exits[p];
        if (misaligned == 0) {
            res.exact = true;
            res.particles = n;
            break;
        }
        res.particles = n;
    }

    res.measure.total = Rational(static_cast<long>(res.particles));
    for (const auto& [v, c] : exits)
        res.measure.exits.emplace_back(v, Rational(static_cast<long>(c)));
    return res;
}

namespace {

RationalSeq solve_recursion(const Profile& h, std::int64_t m, Rational e0, Rational e1) {
    RationalSeq seq;
    seq.values.reserve(static_cast<std::size_t>(m + 1));
    seq.values.push_back(std::move(e0));
    if (m >= 1) seq.values.push_back(std::move(e1));
    for (std::int64_t x = 1; x < m; ++x) {
        const std::int64_t hn = h(x + 1);
        if (hn == 0)
            throw std::domain_error("degenerate profile: h vanishes at interior x=" +
                                    std::to_string(x + 1));
        Rational next = (2 * seq.values[static_cast<std::size_t>(x)] * Rational(static_cast<long>(h(x) + 1)) -
                         seq.values[static_cast<std::size_t>(x - 1)] * Rational(static_cast<long>(h(x - 1)))) /
                        Rational(static_cast<long>(hn));
        seq.values.push_back(std::move(next));
    }
    return seq;
}

}  // namespace

Rational RationalSeq::normalized(std::int64_t x) const {
    if (x < 1) throw std::domain_error("normalized sequence needs x >= 1");
    return e(x) / Rational(static_cast<long>(x));
}

RecursionResult harmonic_by_recursion(const Profile& h, std::int64_t m,
                                      std::optional<std::pair<Rational, Rational>> seeds) {
    if (m < 1) throw std::invalid_argument("harmonic_by_recursion: m must be positive");
    if (h(0) != 0)
        throw std::domain_error("degenerate profile: boundary derivation needs h(0) = 0");
    Rational e0 = 1, e1 = 1;
    if (seeds) {
        e0 = seeds->first;
        e1 = seeds->second;
    } else if (h(1) != 1) {
        throw std::domain_error(
            "harmonic_by_recursion: default seeds e(0)=e(1)=1 require h(1)=1");
    }

    RecursionResult res;
    res.seq = solve_recursion(h, m, std::move(e0), std::move(e1));

    ClusterShape shape(m, h);
    res.measure.total = 0;
    for (const auto& z : shape.inner_boundary()) {
        const std::int64_t ax = z.x < 0 ? -z.x : z.x;
        const Rational& w = res.seq.e(m - ax);
        res.measure.exits.emplace_back(z, w);
        res.measure.total += w;
    }
    std::sort(res.measure.exits.begin(), res.measure.exits.end());
    return res;
}

BoundaryMeasure harmonic_by_montecarlo(const ClusterShape& B, std::int64_t samples,
                                       std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("harmonic_by_montecarlo: samples >= 1");
    const auto boundary = B.inner_boundary();
    const VertexC2 origin{0, 0};
    if (boundary.contains(origin))
        throw std::domain_error("harmonic_by_montecarlo: origin lies on the boundary");

    // dense membership for speed
    const std::int64_t m = B.m();
    std::int64_t hmax = 0;
    for (std::int64_t x = 0; x <= m; ++x) hmax = std::max(hmax, B.profile()(x));
    const std::int64_t H = 2 * hmax + 3;
    const auto index = [&](std::int64_t x, std::int64_t y) {
        return static_cast<std::size_t>((x + m + 1) * H + (y + hmax + 1));
    };
    std::vector<std::uint8_t> cell(static_cast<std::size_t>((2 * m + 3) * H), 0);
    for (const auto& v : B.vertices()) cell[index(v.x, v.y)] = 1;  // 1 = interior
    for (const auto& v : boundary) cell[index(v.x, v.y)] = 2;      // 2 = absorbing

    std::mt19937_64 rng(seed);
    std::map<VertexC2, std::int64_t> hits;
    for (std::int64_t i = 0; i < samples; ++i) {
        std::int64_t x = 0, y = 0;
        while (cell[index(x, y)] != 2) {
            if (y == 0) {
                switch (rng() & 3) {  // degree 4: unbiased two-bit draw
                    case 0: ++x; break;
                    case 1: --y; break;
                    case 2: --x; break;
                    default: ++y; break;
                }
            } else {
                y += (rng() & 1) ? 1 : -1;
            }
        }
        ++hits[{x, y}];
    }

    BoundaryMeasure out;
    out.total = Rational(static_cast<long>(samples));
    for (const auto& [v, c] : hits) out.exits.emplace_back(v, Rational(static_cast<long>(c)));
    return out;
}

std::map<VertexC2, Rational> dirichlet_odometer(const RationalSeq& e, const Profile& h,
                                                std::int64_t m) {
    std::map<VertexC2, Rational> out;
    for (std::int64_t x = 0; x <= m; ++x) {
        const std::int64_t hx = h(x);
        for (std::int64_t y = 0; y <= hx; ++y)
            out[{x, y}] = e.e(x) * Rational(static_cast<long>(hx - y));
    }
    return out;
}

std::array<Rational, 3> matrix_recursion_step(std::int64_t k,
                                              const std::array<Rational, 3>& prev) {
    if (k < 1) throw std::invalid_argument("matrix_recursion_step: k must be positive");
    const auto R = [](std::int64_t v) { return Rational(static_cast<long>(v)); };
    const std::int64_t k2 = k * k;

    // B_k is lower triangular with nonzero diagonal for k >= 1.
    std::array<Rational, 3> cur;
    // row 1: (3k^2-2k) e1' - (6k^2+2) e2' = -(3k^2+2k) e0
    cur[0] = (R(3 * k2 - 2 * k) * prev[1] - R(6 * k2 + 2) * prev[2]) / R(-(3 * k2 + 2 * k));
    // row 2: 3k^2 e2' = (6k^2+4k+2) e0 - (3k^2+4k+1) e1
    cur[1] = (R(6 * k2 + 4 * k + 2) * cur[0] - R(3 * k2) * prev[2]) / R(3 * k2 + 4 * k + 1);
    // row 3: 0 = (3k^2+2k) e0 - (6k^2+8k+4) e1 + (3k^2+6k+3) e2
    cur[2] = (R(6 * k2 + 8 * k + 4) * cur[1] - R(3 * k2 + 2 * k) * cur[0]) / R(3 * k2 + 6 * k + 3);
    return cur;
}

RationalSeq cluster_e_sequence(std::int64_t X) {
    if (X < 1) throw std::invalid_argument("cluster_e_sequence: X must be positive");
    return solve_recursion(Profile::cluster(), X, 1, 1);
}

CBracket estimate_c(std::int64_t X) {
    if (X < 21) throw std::invalid_argument("estimate_c: requires X >= 21");
    const RationalSeq seq = cluster_e_sequence(X);
    const Rational half(1, 2);
    Rational prev = seq.normalized(9);
    for (std::int64_t x = 10; x <= X; ++x) {
        const Rational cur = seq.normalized(x);
        if (!(cur < prev))
            throw std::logic_error("estimate_c: monotone decrease violated at x=" +
                                   std::to_string(x));
        if (x >= 20 && !(cur < half))
            throw std::logic_error("estimate_c: e(x)/x >= 1/2 at x=" + std::to_string(x));
        prev = cur;
    }

    CBracket out;
    out.upper = seq.normalized(X);
    // Plateau tail estimate: the remaining decrease beyond X is bounded by
    // X times the last 3-step decrement, assuming the observed at-least-
    // quadratic decay of the decrements continues.
    Rational tail = Rational(static_cast<long>(X)) * (seq.normalized(X - 3) - out.upper);
    out.lower = out.upper - tail;
    if (out.lower < 0) out.lower = 0;
    return out;
}

Rational monotone_bound_factor(std::int64_t x) {
    if (x < 9) throw std::domain_error("monotone_bound_factor: induction starts at x = 9");
    const auto R = [](std::int64_t v) { return Rational(static_cast<long>(v)); };
    switch (x % 3) {
        case 0: return R(x * x + 2 * x) / R(x * x + 2 * x + 1);
        case 1: return R(x * x + 3 * x) / R(x * x + 3 * x + 2);
        default: {
            const std::int64_t num = x * x * x * x + 7 * x * x * x + 17 * x * x + 17 * x;
            return R(num) / R(num + 6);
        }
    }
}

bool verify_monotone_bounds(std::int64_t X) {
    if (X < 9) throw std::invalid_argument("verify_monotone_bounds: requires X >= 9");
    const RationalSeq seq = cluster_e_sequence(X + 1);
    for (std::int64_t x = 1; x < 9; ++x)
        if (!(seq.normalized(x + 1) < seq.normalized(x))) return false;
    for (std::int64_t x = 9; x <= X; ++x)
        if (!(seq.normalized(x + 1) < monotone_bound_factor(x) * seq.normalized(x)))
            return false;
    return true;
}

}  // namespace rotorcomb
