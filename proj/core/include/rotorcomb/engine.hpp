#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rotorcomb/geometry.hpp"

namespace rotorcomb {

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rotor configuration: explicit assignments over a finite set of touched
/// vertices, everything else resolving to a fallback rule. The comb is
/// infinite, so untouched vertices are never materialized.
class RotorConfig {
  public:
    enum class Fallback {
        CombInitial,    // rho_0 of the aggregation process
        FirstNeighbor,  // first vertex of the clockwise order (rotor-weight setup)
    };

    explicit RotorConfig(Fallback fb = Fallback::CombInitial) : fallback_(fb) {}

    Direction at(const VertexC2& v) const {
        if (auto it = assigned_.find(v); it != assigned_.end()) return it->second;
        return fallback_direction(v);
    }

    Direction fallback_direction(const VertexC2& v) const {
        if (fallback_ == Fallback::CombInitial) return initial_rotor(v);
        return on_backbone(v) ? Direction::East : Direction::South;
    }

    void set(const VertexC2& v, Direction d) {
        if (!direction_exists(v, d))
            throw std::invalid_argument("rotor must point to a neighbour");
        assigned_[v] = d;
    }

    Fallback fallback() const { return fallback_; }
    const auto& assigned() const { return assigned_; }

    bool operator==(const RotorConfig& other) const = default;

  private:
    std::unordered_map<VertexC2, Direction, VertexHash> assigned_;
    Fallback fallback_;
};

/// Particle counts with finite support. Counts may go negative only when
/// toppling in Virtual mode (holes).
class ParticleConfig {
  public:
    std::int64_t at(const VertexC2& v) const {
        auto it = counts_.find(v);
        return it == counts_.end() ? 0 : it->second;
    }

    void add(const VertexC2& v, std::int64_t delta) {
        auto it = counts_.try_emplace(v, 0).first;
        it->second += delta;
        if (it->second == 0) counts_.erase(it);
    }

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [v, c] : counts_) t += c;
        return t;
    }

    const auto& support() const { return counts_; }

    bool operator==(const ParticleConfig& other) const = default;

  private:
    std::unordered_map<VertexC2, std::int64_t, VertexHash> counts_;
};

enum class ToppleMode { Legal, Virtual };

using OdometerMap = std::unordered_map<VertexC2, std::int64_t, VertexHash>;

/// Full rotor-router state: rotors, particles, odometer tally and sinks.
/// Single-writer; copy explicitly to branch.
struct EngineState {
    RotorConfig rotors;
    ParticleConfig particles;
    OdometerMap odometer;
    std::unordered_set<VertexC2, VertexHash> sinks;

    std::int64_t odometer_at(const VertexC2& v) const {
        auto it = odometer.find(v);
        return it == odometer.end() ? 0 : it->second;
    }

    /// One application of the toppling operator at x: advance the rotor one
    /// clockwise step, then move one particle along it. Legal mode requires
    /// a particle at x; Virtual mode may leave a hole.
    void topple(const VertexC2& x, ToppleMode mode);

    /// F^u: topple each vertex x exactly u(x) times, in Virtual mode. Bulk
    /// arithmetic per vertex; by the abelian property the result matches any
    /// sequential order of the same multiset.
    void apply(const OdometerMap& u);
};

inline constexpr std::int64_t kDefaultStepBudget = 10'000'000'000LL;

/// Walk one particle by repeated Legal toppling of its current position
/// until it first occupies a vertex satisfying `stop`. Returns the stop
/// vertex and the number of steps taken.
struct WalkResult {
    VertexC2 stop_vertex;
    std::int64_t steps;
};
WalkResult rotor_walk(EngineState& s, VertexC2 start,
                      const std::function<bool(const VertexC2&)>& stop,
                      std::int64_t step_budget = kDefaultStepBudget);

struct AggregateResult {
    std::set<VertexC2> cluster;
    EngineState state;
    std::vector<VertexC2> settle_order;  // settle_order[0] is the origin
};

/// Rotor-router aggregation of n particles from the origin, rotors
/// persisting between particles. Returns the cluster R_n, the final state
/// and the deterministic settle order.
AggregateResult aggregate(std::int64_t n, std::int64_t step_budget = kDefaultStepBudget);

struct HalflineResult {
    std::int64_t h;                    // cluster extent: R_n = {1..h}
    std::int64_t r;                    // rotors 1..r point inwards
    std::vector<std::int64_t> odometer;  // odometer[y] for y = 0..h
    std::vector<std::int64_t> stops;     // stop vertex of each particle (0 = sink)
};

/// The modified aggregation on N_0 with sink {0} and initial rotors
/// pointing outwards: each particle starts at 1 and stops on reaching the
/// sink or on exiting the previous cluster. The optional observer fires
/// after every settled particle with the running (n, h, r) and the
/// odometer-so-far, for per-step law checks in a single pass.
using HalflineObserver = std::function<void(
    std::int64_t n, std::int64_t h, std::int64_t r, const std::vector<std::int64_t>&)>;
HalflineResult halfline_process(std::int64_t n, const HalflineObserver& observe = {});

/// True iff following rotor arrows inside `region` never closes a directed
/// cycle.
bool is_acyclic(const RotorConfig& rotors, const std::set<VertexC2>& region);

struct OdometerVerdict {
    bool particles_at_most_one = false;  // (a) sigma* <= 1
    bool support_finite = false;         // (b) A* finite
    bool ones_on_support = false;        // (c) sigma* = 1 on A*
    bool acyclic_on_support = false;     // (d) rho* acyclic on A*

    bool certified() const {
        return particles_at_most_one && support_finite && ones_on_support &&
               acyclic_on_support;
    }
};

/// Check the four odometer-characterization conditions for a candidate
/// odometer u*: compute F^{u*}(rho_0, n*delta_o) in Virtual mode and test
/// sigma* <= 1, A* finite, sigma* = 1 on A* and acyclicity of rho* on A*.
/// By default A* = {x : u*(x) > 0}; a different verification set may be
/// passed explicitly.
OdometerVerdict verify_odometer(const OdometerMap& u_star, std::int64_t n,
                                const std::optional<std::set<VertexC2>>& a_star = {});

}  // namespace rotorcomb
