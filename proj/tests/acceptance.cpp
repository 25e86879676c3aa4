// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Everything here is checked in exact arithmetic except the Monte Carlo
// criterion, which uses a frozen seed and per-vertex 3-sigma tolerances.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <vector>

#include "rotorcomb/engine.hpp"
#include "rotorcomb/harmonic.hpp"
#include "rotorcomb/oracle.hpp"
#include "rotorcomb/shape.hpp"

using namespace rotorcomb;

namespace {

int failures = 0;

void report(int idx, const char* title, bool ok) {
    std::printf("criterion %2d (%s): %s\n", idx, title, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
}

// aggregate(|B_m|) for m = 0..25, computed once and shared by criteria 1, 3, 4.
std::map<std::int64_t, AggregateResult> agg_cache;

const AggregateResult& agg(std::int64_t m) {
    auto it = agg_cache.find(m);
    if (it == agg_cache.end()) it = agg_cache.emplace(m, aggregate(cardinality_Bm(m))).first;
    return it->second;
}

bool shape_theorem() {
    for (std::int64_t m = 0; m <= 25; ++m) {
        ClusterShape B(m, Profile::cluster());
        const auto verts = B.vertices();
        if (agg(m).cluster != std::set<VertexC2>(verts.begin(), verts.end())) return false;
    }
    return true;
}

bool cardinality_formula() {
    if (cardinality_Bm(0) != 1 || cardinality_Bm(1) != 5 || cardinality_Bm(2) != 15)
        return false;
    for (std::int64_t m = 0; m <= 60; ++m) {
        std::int64_t count = 0;
        for (std::int64_t x = -m; x <= m; ++x)
            count += 2 * h_cluster(m - (x < 0 ? -x : x)) + 1;
        if (cardinality_Bm(m) != count) return false;
    }
    return true;
}

bool figure_regression() {
    // the printed 15-particle cluster, odometer value by cell
    const auto& res = agg(2);
    const std::map<VertexC2, std::int64_t> expected = {
        {{0, 0}, 23}, {{-1, 0}, 6}, {{1, 0}, 4},  {{0, 1}, 6},  {{0, -1}, 6},
        {{0, 2}, 2},  {{0, -2}, 2}, {{0, 3}, 0},  {{0, -3}, 0}, {{-1, 1}, 1},
        {{-1, -1}, 0}, {{1, 1}, 0}, {{1, -1}, 0}, {{-2, 0}, 0}, {{2, 0}, 0}};
    for (const auto& [v, u] : expected)
        if (res.state.odometer_at(v) != u) return false;
    if (res.state.odometer.size() != 8) return false;  // no toppling elsewhere
    return res.state.rotors.at({0, 0}) == Direction::North &&
           res.state.rotors.at({-1, 0}) == Direction::East;
}

bool odometer_certification() {
    for (std::int64_t m = 3; m <= 40; ++m) {
        ClusterShape B(m, Profile::cluster());
        OdometerMap u;
        for (const auto& v : B.vertices())
            if (const auto k = oracle::u_m(m, v.x, v.y); k > 0) u[v] = k;
        if (!verify_odometer(u, cardinality_Bm(m)).certified()) return false;
    }
    for (std::int64_t m = 3; m <= 25; ++m) {
        ClusterShape B(m, Profile::cluster());
        const auto& sim = agg(m).state.odometer;
        std::int64_t positive = 0;
        for (const auto& v : B.vertices()) {
            const std::int64_t expect = oracle::u_m(m, v.x, v.y);
            auto it = sim.find(v);
            if ((it == sim.end() ? 0 : it->second) != expect) return false;
            if (expect > 0) ++positive;
        }
        if (static_cast<std::int64_t>(sim.size()) != positive) return false;
    }
    return true;
}

bool halfline_law() {
    bool ok = true;
    halfline_process(10000, [&](std::int64_t n, std::int64_t h, std::int64_t r,
                                const std::vector<std::int64_t>& odo) {
        const auto [eh, er] = oracle::halfline_h_r(n);
        if (h != eh || r != er) ok = false;
        if (!ok) return;
        for (std::int64_t y = 0; y <= h; ++y)
            if (odo[static_cast<std::size_t>(y)] != oracle::u_tilde(h, r, y)) {
                ok = false;
                return;
            }
    });
    return ok;
}

bool weight_invariance() {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 1000; ++trial) {
        // random comb region: a backbone segment with random tooth stubs
        const std::int64_t half = 2 + static_cast<std::int64_t>(rng() % 15);
        std::vector<VertexC2> region;
        for (std::int64_t x = -half; x <= half; ++x) {
            region.push_back({x, 0});
            const std::int64_t t = static_cast<std::int64_t>(rng() % 16);
            for (std::int64_t y = 1; y <= t; ++y) {
                region.push_back({x, y});
                region.push_back({x, -y});
            }
            if (region.size() > 950) break;
        }
        WeightSystem psi;
        for (const auto& v : region)
            psi.set(v, make_rational(static_cast<std::int64_t>(rng() % 41) - 20,
                                     static_cast<std::int64_t>(rng() % 12) + 1));
        ParticleConfig particles;
        for (int i = 0; i < 4; ++i)
            particles.add(region[rng() % region.size()],
                          static_cast<std::int64_t>(rng() % 3));
        std::vector<VertexC2> trace;
        const std::size_t len = 20 + rng() % 180;
        for (std::size_t i = 0; i < len; ++i) trace.push_back(region[rng() % region.size()]);
        if (!weight_invariance_check(trace, psi, particles)) return false;
    }
    return true;
}

bool uniform_square_measure() {
    for (std::int64_t m = 1; m <= 6; ++m) {
        const auto rec = harmonic_by_recursion(Profile::square(), m);
        for (const auto& e : rec.seq.values)
            if (e != 1) return false;
    }
    // exact rotor runs on the two desk-sized shapes
    for (std::int64_t m : {2, 3}) {
        ClusterShape B(m, Profile::square());
        const auto rot = harmonic_by_rotor(B);
        if (!rot.exact) return false;
        const auto nb = static_cast<long>(B.inner_boundary().size());
        if (static_cast<long>(rot.measure.exits.size()) != nb) return false;
        for (const auto& [v, e] : rot.measure.exits)
            if (rot.measure.nu(v) != Rational(1) / Rational(nb)) return false;
    }
    // Monte Carlo vs uniform, per-vertex 3-sigma, frozen seed
    ClusterShape B(4, Profile::square());
    const std::int64_t samples = 1000000;
    const auto mc = harmonic_by_montecarlo(B, samples, 20260826);
    const auto boundary = B.inner_boundary();
    const double p = 1.0 / static_cast<double>(boundary.size());
    const double tol = 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(samples));
    if (mc.exits.size() > boundary.size()) return false;
    for (const auto& v : boundary) {
        double hat = 0;
        for (const auto& [w, e] : mc.exits)
            if (w == v) hat = to_double(e) / static_cast<double>(samples);
        if (std::abs(hat - p) > tol) return false;
    }
    return true;
}

bool cluster_measure() {
    const std::int64_t X = 3000;
    const auto seq = cluster_e_sequence(X);
    if (seq.e(0) != 1 || seq.e(1) != 1 || seq.e(2) != make_rational(4, 3)) return false;

    std::array<Rational, 3> v{seq.e(0), seq.e(1), seq.e(2)};
    for (std::int64_t k = 1; k <= 500; ++k) {
        v = matrix_recursion_step(k, v);
        if (v[0] != seq.e(3 * k) || v[1] != seq.e(3 * k + 1) || v[2] != seq.e(3 * k + 2))
            return false;
    }

    Rational prev = seq.normalized(9);
    for (std::int64_t x = 10; x <= X; ++x) {
        const Rational cur = seq.normalized(x);
        if (!(cur < prev)) return false;
        prev = cur;
    }
    if (!(seq.normalized(20) < make_rational(1, 2))) return false;

    const auto br = estimate_c(X);
    return br.lower > 0 && br.lower <= br.upper && br.upper < make_rational(1, 2) &&
           br.upper - br.lower < make_rational(1, 1000);
}

bool monotone_bounds() { return verify_monotone_bounds(1000); }

bool abelianness() {
    std::mt19937_64 rng(0xab311a4);
    for (int trial = 0; trial < 200; ++trial) {
        // random 50-vertex comb region
        std::vector<VertexC2> region;
        region.push_back({0, 0});
        std::int64_t x = 0;
        while (region.size() < 50) {
            region.push_back({++x, 0});
            const std::int64_t t = rng() % 5;
            for (std::int64_t y = 1; y <= t && region.size() < 50; ++y)
                region.push_back({x, (rng() & 1) ? y : -y});
        }

        OdometerMap u;
        std::vector<VertexC2> schedule;
        for (const auto& v : region) {
            const std::int64_t k = static_cast<std::int64_t>(rng() % 8);
            if (k > 0) u[v] = k;
            for (std::int64_t i = 0; i < k; ++i) schedule.push_back(v);
        }

        EngineState a;
        for (int i = 0; i < 3; ++i)
            a.particles.add(region[rng() % region.size()], 1 + static_cast<std::int64_t>(rng() % 2));
        EngineState b = a;
        EngineState c = a;

        a.apply(u);  // bulk order
        std::shuffle(schedule.begin(), schedule.end(), rng);
        for (const auto& w : schedule) b.topple(w, ToppleMode::Virtual);
        std::shuffle(schedule.begin(), schedule.end(), rng);
        for (const auto& w : schedule) c.topple(w, ToppleMode::Virtual);

        if (!(a.particles == b.particles && b.particles == c.particles)) return false;
        for (const auto& w : region)
            if (a.rotors.at(w) != b.rotors.at(w) || b.rotors.at(w) != c.rotors.at(w))
                return false;
        if (!(a.odometer == b.odometer && b.odometer == c.odometer)) return false;
    }
    return true;
}

}  // namespace

int main() {
    report(1, "shape theorem, exact cluster for m <= 25", shape_theorem());
    report(2, "cardinality closed form vs enumeration, m <= 60", cardinality_formula());
    report(3, "15-particle odometer and rotor regression", figure_regression());
    report(4, "odometer certification and closed form, m <= 40", odometer_certification());
    report(5, "half-line law for every n <= 10^4", halfline_law());
    report(6, "weight invariance on 1000 random traces", weight_invariance());
    report(7, "uniform harmonic measure for the square profile", uniform_square_measure());
    report(8, "cluster harmonic measure and growth-constant bracket", cluster_measure());
    report(9, "monotone-decrease induction bounds up to x = 1000", monotone_bounds());
    report(10, "schedule independence over 200 random multisets", abelianness());
    return failures == 0 ? 0 : 1;
}
