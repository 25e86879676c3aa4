#include "rotorcomb/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "rotorcomb/shape.hpp"

namespace rotorcomb {

void EngineState::topple(const VertexC2& x, ToppleMode mode) {
    if (sinks.contains(x)) throw std::domain_error("cannot topple a sink");
    if (mode == ToppleMode::Legal && particles.at(x) <= 0)
        throw std::domain_error("illegal toppling: no particle at vertex");
    const Direction next = rotor_successor(x, rotors.at(x));
    rotors.set(x, next);
    particles.add(x, -1);
    particles.add(step(x, next), +1);
    ++odometer[x];
}

void EngineState::apply(const OdometerMap& u) {
    for (const auto& [x, k] : u) {
        if (k < 0) throw std::invalid_argument("apply: negative toppling count");
        if (k == 0) continue;
        if (sinks.contains(x)) throw std::domain_error("apply: u touches a sink");
        const int d = degree(x);
        const std::int64_t full_turns = k / d;
        const std::int64_t rem = k % d;
        if (full_turns > 0)
            for (const auto& w : neighbors(x)) particles.add(w, full_turns);
        Direction dir = rotors.at(x);
        for (std::int64_t j = 0; j < rem; ++j) {
            dir = rotor_successor(x, dir);
            particles.add(step(x, dir), +1);
        }
        rotors.set(x, dir);
        particles.add(x, -k);
        odometer[x] += k;
    }
}

WalkResult rotor_walk(EngineState& s, VertexC2 start,
                      const std::function<bool(const VertexC2&)>& stop,
                      std::int64_t step_budget) {
    VertexC2 p = start;
    std::int64_t steps = 0;
    while (!stop(p)) {
        if (steps >= step_budget)
            throw budget_exceeded("rotor_walk: step budget exhausted");
        s.topple(p, ToppleMode::Legal);
        p = step(p, s.rotors.at(p));
        ++steps;
    }
    return {p, steps};
}

namespace {

// Dense scratch grid for aggregation. Intermediate clusters R_k are nested,
// so everything stays inside B_m for the smallest m with |B_m| >= n.
class DenseGrid {
  public:
    DenseGrid(std::int64_t xmax, std::int64_t ymax)
        : xmax_(xmax), ymax_(ymax), height_(2 * ymax + 3),
          odometer_((2 * xmax + 3) * height_, 0),
          in_cluster_((2 * xmax + 3) * height_, 0) {}

    std::size_t index(std::int64_t x, std::int64_t y) const {
        return static_cast<std::size_t>((x + xmax_ + 1) * height_ + (y + ymax_ + 1));
    }

    std::int64_t xmax_, ymax_, height_;
    std::vector<std::int64_t> odometer_;
    std::vector<std::uint8_t> in_cluster_;
};

}  // namespace

AggregateResult aggregate(std::int64_t n, std::int64_t step_budget) {
    if (n < 1) throw std::invalid_argument("aggregate: n must be positive");

    std::int64_t m_bound = 0;
    while (cardinality_Bm(m_bound) < n) ++m_bound;
    DenseGrid g(m_bound, h_cluster(m_bound));

    AggregateResult res;
    res.settle_order.reserve(static_cast<std::size_t>(n));
    g.in_cluster_[g.index(0, 0)] = 1;
    res.settle_order.push_back({0, 0});

    std::int64_t total_steps = 0;
    for (std::int64_t particle = 1; particle < n; ++particle) {
        std::int64_t x = 0, y = 0;
        while (g.in_cluster_[g.index(x, y)]) {
            if (total_steps >= step_budget)
                throw budget_exceeded("aggregate: step budget exhausted");
            ++total_steps;
            const std::int64_t k = ++g.odometer_[g.index(x, y)];
            if (y == 0) {
                // rho_0 advanced k steps in the order E,S,W,N
                switch ((x >= 0 ? k : k + 2) & 3) {
                    case 1: --y; break;  // South
                    case 2: --x; break;  // West
                    case 3: ++y; break;  // North
                    default: ++x; break; // East
                }
            } else if (y > 0) {
                y += (k & 1) ? -1 : +1;  // outward rotor flips inward first
            } else {
                y += (k & 1) ? +1 : -1;
            }
        }
        g.in_cluster_[g.index(x, y)] = 1;
        res.settle_order.push_back({x, y});
    }

    for (std::int64_t x = -g.xmax_; x <= g.xmax_; ++x)
        for (std::int64_t y = -g.ymax_; y <= g.ymax_; ++y) {
            const auto idx = g.index(x, y);
            const VertexC2 v{x, y};
            if (g.in_cluster_[idx]) {
                res.cluster.insert(v);
                res.state.particles.add(v, 1);
            }
            if (g.odometer_[idx] > 0) {
                res.state.odometer[v] = g.odometer_[idx];
                res.state.rotors.set(
                    v, advance_rotor(v, initial_rotor(v), g.odometer_[idx]));
            }
        }
    return res;
}

HalflineResult halfline_process(std::int64_t n, const HalflineObserver& observe) {
    if (n < 1) throw std::invalid_argument("halfline_process: n must be positive");
    HalflineResult res;
    std::vector<std::int64_t>& odo = res.odometer;
    odo.assign(2, 0);  // index by vertex, grows with the cluster
    std::int64_t extent = 1;
    res.stops.push_back(1);  // first particle settles at 1 immediately

    const auto frontier = [&] {
        std::int64_t r = 0;
        while (r < extent && (odo[static_cast<std::size_t>(r + 1)] & 1)) ++r;
        return r;
    };
    if (observe) observe(1, extent, frontier(), odo);

    for (std::int64_t particle = 2; particle <= n; ++particle) {
        std::int64_t p = 1;
        while (p != 0 && p <= extent) {
            const std::int64_t k = ++odo[static_cast<std::size_t>(p)];
            p += (k & 1) ? -1 : +1;  // initial rotor points outward
        }
        res.stops.push_back(p);
        if (p != 0) {
            extent = std::max(extent, p);
            if (static_cast<std::size_t>(extent + 1) >= odo.size())
                odo.resize(static_cast<std::size_t>(extent + 2), 0);
        }
        if (observe) observe(particle, extent, frontier(), odo);
    }
    res.h = extent;
    res.r = frontier();
    odo.resize(static_cast<std::size_t>(extent + 1));
    return res;
}

bool is_acyclic(const RotorConfig& rotors, const std::set<VertexC2>& region) {
    enum class Color : std::uint8_t { White, Gray, Black };
    std::unordered_map<VertexC2, Color, VertexHash> color;
    for (const auto& v : region) color[v] = Color::White;
    for (const auto& start : region) {
        if (color[start] != Color::White) continue;
        // follow the unique outgoing arrow; remember the path to blacken it
        std::vector<VertexC2> path;
        VertexC2 v = start;
        while (true) {
            auto it = color.find(v);
            if (it == color.end() || it->second == Color::Black) break;
            if (it->second == Color::Gray) return false;
            it->second = Color::Gray;
            path.push_back(v);
            v = step(v, rotors.at(v));
        }
        for (const auto& w : path) color[w] = Color::Black;
    }
    return true;
}

OdometerVerdict verify_odometer(const OdometerMap& u_star, std::int64_t n,
                                const std::optional<std::set<VertexC2>>& a_star) {
    if (n < 1) throw std::invalid_argument("verify_odometer: n must be positive");

    EngineState s;
    s.particles.add({0, 0}, n);
    s.apply(u_star);

    std::set<VertexC2> support;
    if (a_star) {
        support = *a_star;
    } else {
        for (const auto& [v, k] : u_star)
            if (k > 0) support.insert(v);
    }

    OdometerVerdict verdict;
    verdict.support_finite = true;
    verdict.particles_at_most_one = true;
    for (const auto& [v, c] : s.particles.support())
        if (c > 1) verdict.particles_at_most_one = false;
    verdict.ones_on_support = true;
    for (const auto& v : support)
        if (s.particles.at(v) != 1) verdict.ones_on_support = false;
    verdict.acyclic_on_support = is_acyclic(s.rotors, support);
    return verdict;
}

}  // namespace rotorcomb
