#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rotorcomb/engine.hpp"
#include "rotorcomb/rational.hpp"
#include "rotorcomb/shape.hpp"

namespace rotorcomb {

/// A rational weight function psi with finite support (0 elsewhere),
/// together with the derived rotor weights w(x,k). Rotor weights follow
/// the first-neighbour rotor convention: the k-th toppling of x sends the
/// particle to the (k mod d(x))-th neighbour of the clockwise order.
class WeightSystem {
  public:
    void set(const VertexC2& v, Rational value);
    Rational psi(const VertexC2& v) const;

    /// (1/d) * sum over neighbours of (psi(y) - psi(x)).
    Rational laplacian(const VertexC2& v) const;

    /// w(x,k) = sum_{j=1..k} (psi(x) - psi(x_{j mod d})), evaluated with
    /// full turns collapsed to -d*laplacian per period.
    Rational rotor_weight(const VertexC2& x, std::int64_t k) const;

  private:
    std::map<VertexC2, Rational> psi_;
};

/// Replay a toppling trace from the first-neighbour rotor configuration
/// and the given particle configuration (Virtual mode), checking after
/// every prefix that W_P + W_R equals its initial value in exact rational
/// arithmetic. The final weights are additionally recomputed from scratch.
bool weight_invariance_check(const std::vector<VertexC2>& trace, const WeightSystem& psi,
                             const ParticleConfig& initial_particles);

/// The particle addition operator E_x on a finite shape with absorbing
/// inner boundary: add a particle at interior x, route it to the boundary,
/// return the resulting rotor configuration.
RotorConfig add_particle_Ex(RotorConfig rotors, const VertexC2& x, const ClusterShape& B);

/// Exit counts on an inner boundary with their normalization.
struct BoundaryMeasure {
    std::vector<std::pair<VertexC2, Rational>> exits;  // sorted by vertex
    Rational total;

    Rational nu(const VertexC2& v) const;
    Rational exit_weight(const VertexC2& v) const;
};

struct RotorHarmonicResult {
    BoundaryMeasure measure;
    bool exact = false;        // rotors returned to rho_0 on the interior
    std::int64_t particles = 0;
};

/// Release particles one at a time from the origin, each absorbed on the
/// inner boundary of B, until the interior rotors have made only full
/// turns (exact harmonic measure) or `cap` particles have been routed.
RotorHarmonicResult harmonic_by_rotor(const ClusterShape& B,
                                      std::int64_t cap = 10'000'000);

struct RationalSeq {
    std::vector<Rational> values;  // e(0..X)

    const Rational& e(std::int64_t x) const { return values.at(static_cast<std::size_t>(x)); }
    /// e(x)/x for x >= 1.
    Rational normalized(std::int64_t x) const;
    std::int64_t max_x() const { return static_cast<std::int64_t>(values.size()) - 1; }
};

struct RecursionResult {
    RationalSeq seq;
    BoundaryMeasure measure;
};

/// Solve the boundary exit recursion
///   e(x+1)h(x+1) + e(x-1)h(x-1) - 2e(x)(h(x)+1) = 0,  0 < x < m,
/// in exact rationals and normalize over the concrete boundary of B_m.
/// Default seeds e(0)=e(1)=1 require h(1)=1; otherwise pass both seeds.
RecursionResult harmonic_by_recursion(
    const Profile& h, std::int64_t m,
    std::optional<std::pair<Rational, Rational>> seeds = {});

/// Empirical hitting distribution of the inner boundary for independent
/// simple random walks from the origin. Bit-reproducible for a fixed seed.
BoundaryMeasure harmonic_by_montecarlo(const ClusterShape& B, std::int64_t samples,
                                       std::uint64_t seed);

/// The Dirichlet solution on the teeth in shifted coordinates
/// (0 <= x <= m, 0 <= y <= h(x)): u(x,y) = e(x) * (h(x) - y).
std::map<VertexC2, Rational> dirichlet_odometer(const RationalSeq& e, const Profile& h,
                                                std::int64_t m);

/// One step of the mod-3 matrix recursion A_k e(k-1) = B_k e(k), solved
/// through the lower-triangular structure of B_k.
std::array<Rational, 3> matrix_recursion_step(std::int64_t k,
                                              const std::array<Rational, 3>& prev);

/// e(0..X) for the cluster profile, seeds e(0)=e(1)=1.
RationalSeq cluster_e_sequence(std::int64_t X);

struct CBracket {
    Rational lower;
    Rational upper;
};

/// Bracket the growth constant c = lim e(x)/x for the cluster profile:
/// the normalized sequence is decreasing, so e(X)/X is an upper bound; the
/// lower edge subtracts a plateau-based tail estimate. Requires X >= 21.
/// Also asserts e(x)/x < 1/2 on [20, X] and monotone decrease on [9, X].
CBracket estimate_c(std::int64_t X);

/// The congruence-selected bound factor of the monotone-decrease
/// induction for x >= 9.
Rational monotone_bound_factor(std::int64_t x);

/// Check e(x+1)/(x+1) < f~_{x mod 3}(x) * e(x)/x for 9 <= x <= X, plus
/// plain strict decrease on the base range below 9.
bool verify_monotone_bounds(std::int64_t X);

}  // namespace rotorcomb
