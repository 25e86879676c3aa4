#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "render.hpp"
#include "rotorcomb/engine.hpp"
#include "rotorcomb/harmonic.hpp"
#include "rotorcomb/oracle.hpp"
#include "rotorcomb/shape.hpp"
#include "rotorcomb/snapshot.hpp"

using namespace rotorcomb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Global {
    std::string output_dir = ".";
    bool quiet = false;

    std::ostream& out() const {
        static std::ostringstream sink;
        if (quiet) {
            sink.str({});
            return sink;
        }
        return std::cout;
    }

    void write_file(const std::string& name, const std::string& content) const {
        std::filesystem::create_directories(output_dir);
        const auto path = std::filesystem::path(output_dir) / name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << content;
        out() << "wrote " << path.string() << "\n";
    }
};

std::string measure_svg(const BoundaryMeasure& m) {
    // boundary cells shaded by their exit mass
    std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    double numax = 0;
    for (const auto& [v, e] : m.exits) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
        numax = std::max(numax, to_double(e / m.total));
    }
    const int cell = 14;
    const std::int64_t w = (xmax - xmin + 3) * cell, h = (ymax - ymin + 3) * cell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& [v, e] : m.exits) {
        const double nu = to_double(e / m.total);
        const int shade = 255 - static_cast<int>(220 * nu / numax);
        out << "<rect x=\"" << (v.x - xmin + 1) * cell << "\" y=\"" << (ymax - v.y + 1) * cell
            << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"rgb(" << shade
            << ',' << shade << ",255)\" stroke=\"#444444\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string measure_to_json(const BoundaryMeasure& m) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& [v, e] : m.exits) {
        const Rational nu = e / m.total;
        if (!first) out << ",";
        first = false;
        out << "{\"x\":" << v.x << ",\"y\":" << v.y << ",\"e\":\"" << e.get_str()
            << "\",\"nu\":\"" << nu.get_str() << "\"}";
    }
    out << "]";
    return out.str();
}

int cmd_aggregate(const Global& g, std::int64_t n, std::int64_t m, bool check_shape,
                  bool check_odometer, const std::string& format,
                  const std::string& snapshot_path, std::int64_t budget) {
    if ((n < 0) == (m < 0)) {
        std::cerr << "aggregate: give exactly one of --n / --m\n";
        return kExitUsage;
    }
    if (n < 0) n = cardinality_Bm(m);
    const auto res = aggregate(n, budget);
    g.out() << "aggregated n=" << n << " particles, cluster size " << res.cluster.size()
            << "\n";

    std::vector<VertexC2> cells(res.cluster.begin(), res.cluster.end());
    if (format == "csv") {
        g.write_file("cluster.csv", vertices_to_csv(cells));
        g.write_file("odometer.csv", odometer_to_csv(res.state.odometer));
    } else if (format == "json") {
        g.write_file("cluster.json", vertices_to_json(cells));
        g.write_file("state.json", state_to_json(res.state));
    } else if (format == "svg") {
        g.write_file("aggregate.svg", render_svg(res.state, res.cluster));
    } else {
        std::cerr << "aggregate: unknown format " << format << "\n";
        return kExitUsage;
    }
    if (!snapshot_path.empty()) g.write_file(snapshot_path, state_to_json(res.state));

    int rc = kExitOk;
    if (check_shape) {
        if (m < 0) {
            std::cerr << "aggregate: --check-shape needs --m\n";
            return kExitUsage;
        }
        ClusterShape B(m, Profile::cluster());
        const auto verts = B.vertices();
        const std::set<VertexC2> want(verts.begin(), verts.end());
        if (res.cluster != want) {
            rc = kExitVerifyFail;
            for (const auto& v : res.cluster)
                if (!want.contains(v))
                    std::cerr << "unexpected cell (" << v.x << ',' << v.y << ")\n";
            for (const auto& v : want)
                if (!res.cluster.contains(v))
                    std::cerr << "missing cell (" << v.x << ',' << v.y << ")\n";
        } else {
            g.out() << "shape check: cluster equals the predicted region for m=" << m << "\n";
        }
    }
    if (check_odometer) {
        if (m < 0) {
            std::cerr << "aggregate: --check-odometer needs --m\n";
            return kExitUsage;
        }
        if (m < 3) {
            g.out() << "odometer check: closed form only covers m >= 3, skipped\n";
        } else {
            bool ok = true;
            for (const auto& v : res.cluster) {
                const auto want = oracle::u_m(m, v.x, v.y);
                if (res.state.odometer_at(v) != want) {
                    std::cerr << "odometer mismatch at (" << v.x << ',' << v.y
                              << "): got " << res.state.odometer_at(v) << ", expected "
                              << want << "\n";
                    ok = false;
                }
            }
            if (!ok) rc = kExitVerifyFail;
            else g.out() << "odometer check: matches the closed form for m=" << m << "\n";
        }
    }
    return rc;
}

int cmd_halfline(const Global& g, std::int64_t n, bool check) {
    bool ok = true;
    HalflineResult res;
    if (check) {
        res = halfline_process(n, [&](std::int64_t k, std::int64_t h, std::int64_t r,
                                      const std::vector<std::int64_t>& odo) {
            const auto [eh, er] = oracle::halfline_h_r(k);
            if (h != eh || r != er) ok = false;
            if (!ok) return;
            for (std::int64_t y = 0; y <= h; ++y)
                if (odo[static_cast<std::size_t>(y)] != oracle::u_tilde(h, r, y)) ok = false;
        });
    } else {
        res = halfline_process(n);
    }
    g.out() << "half-line after n=" << n << ": extent h=" << res.h << ", frontier r=" << res.r
            << "\n";
    std::ostringstream csv;
    csv << "y,u\n";
    for (std::size_t y = 0; y < res.odometer.size(); ++y)
        csv << y << ',' << res.odometer[y] << '\n';
    g.write_file("halfline.csv", csv.str());
    if (check) {
        g.out() << (ok ? "law check: every prefix matches the closed form\n"
                       : "law check: FAILED\n");
        if (!ok) return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_verify(const Global& g, std::int64_t m_min, std::int64_t m_max) {
    if (m_min > m_max) {
        std::cerr << "verify: empty range\n";
        return kExitUsage;
    }
    bool all_ok = true;
    for (std::int64_t m = m_min; m <= m_max; ++m) {
        if (m < 3) {
            g.out() << "m=" << m << ": closed form out of scope, skipped\n";
            continue;
        }
        ClusterShape B(m, Profile::cluster());
        OdometerMap u;
        for (const auto& v : B.vertices())
            if (const auto k = oracle::u_m(m, v.x, v.y); k > 0) u[v] = k;
        const auto verdict = verify_odometer(u, cardinality_Bm(m));
        const auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
        g.out() << "m=" << m << ": (a) particles<=1 " << mark(verdict.particles_at_most_one)
                << "  (b) finite support " << mark(verdict.support_finite)
                << "  (c) ones on support " << mark(verdict.ones_on_support)
                << "  (d) acyclic " << mark(verdict.acyclic_on_support) << "\n";
        if (!verdict.certified()) all_ok = false;
    }
    return all_ok ? kExitOk : kExitVerifyFail;
}

BoundaryMeasure run_method(const std::string& method, const ClusterShape& B,
                           const Profile& profile, std::int64_t m, std::int64_t samples,
                           std::uint64_t seed, std::int64_t cap, const Global& g) {
    if (method == "rotor") {
        const auto res = harmonic_by_rotor(B, cap);
        g.out() << "rotor: " << res.particles << " particles, "
                << (res.exact ? "exact (full turns)" : "approximate (cap reached)") << "\n";
        return res.measure;
    }
    if (method == "recursion") return harmonic_by_recursion(profile, m).measure;
    if (method == "montecarlo") return harmonic_by_montecarlo(B, samples, seed);
    throw CLI::ValidationError("harmonic", "unknown method: " + method);
}

int cmd_harmonic(const Global& g, const std::string& profile_spec, std::int64_t m,
                 const std::string& method, std::int64_t samples, std::uint64_t seed,
                 std::int64_t cap, const std::string& emit, const std::string& compare,
                 bool do_estimate_c, std::int64_t max_x) {
    if (do_estimate_c) {
        const auto br = estimate_c(max_x);
        g.out() << "growth-constant bracket at X=" << max_x << ":\n"
                << "  lower = " << br.lower.get_str() << " ~ " << to_double(br.lower) << "\n"
                << "  upper = " << br.upper.get_str() << " ~ " << to_double(br.upper) << "\n"
                << "  width ~ " << to_double(br.upper - br.lower) << "\n";
        return kExitOk;
    }
    const Profile profile = Profile::parse(profile_spec);
    if (m < 1) {
        std::cerr << "harmonic: --m must be positive\n";
        return kExitUsage;
    }
    ClusterShape B(m, profile);

    if (!compare.empty()) {
        const auto comma = compare.find(',');
        if (comma == std::string::npos) {
            std::cerr << "harmonic: --compare wants method_a,method_b\n";
            return kExitUsage;
        }
        const std::string ma = compare.substr(0, comma), mb = compare.substr(comma + 1);
        const auto meas_a = run_method(ma, B, profile, m, samples, seed, cap, g);
        const auto meas_b = run_method(mb, B, profile, m, samples, seed, cap, g);
        const bool statistical = ma == "montecarlo" || mb == "montecarlo";
        const double ns = static_cast<double>(samples);

        double maxdisc = 0;
        bool ok = true;
        for (const auto& [v, e] : meas_a.exits) {
            const double pa = to_double(meas_a.nu(v));
            double pb = 0;
            try {
                pb = to_double(meas_b.nu(v));
            } catch (const std::out_of_range&) {
            }
            maxdisc = std::max(maxdisc, std::abs(pa - pb));
            if (statistical) {
                const double p = ma == "montecarlo" ? pb : pa;  // exact side as reference
                if (std::abs(pa - pb) > 3 * std::sqrt(p * (1 - p) / ns) + 1e-12) ok = false;
            } else if (meas_a.nu(v) != meas_b.nu(v)) {
                ok = false;
            }
        }
        if (meas_a.exits.size() < meas_b.exits.size() && !statistical) ok = false;
        g.out() << "compare " << ma << " vs " << mb << ": max |nu_a - nu_b| = " << maxdisc
                << (ok ? " (within tolerance)" : " (BEYOND tolerance)") << "\n";
        return ok ? kExitOk : kExitVerifyFail;
    }

    const auto meas = run_method(method, B, profile, m, samples, seed, cap, g);
    if (emit == "csv") g.write_file("measure.csv", measure_to_csv(meas));
    else if (emit == "json") g.write_file("measure.json", measure_to_json(meas));
    else if (emit == "svg") g.write_file("measure.svg", measure_svg(meas));
    else {
        std::cerr << "harmonic: unknown emit format " << emit << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_render(const Global& g, const std::string& input, const std::string& output) {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        std::cerr << "render: cannot open " << input << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const EngineState state = state_from_json(buf.str());
    std::set<VertexC2> cluster;
    for (const auto& [v, c] : state.particles.support())
        if (c > 0) cluster.insert(v);
    g.write_file(output, render_svg(state, cluster));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotor-router walks, aggregation and harmonic measure on the comb"};
    app.require_subcommand(1);

    Global g;
    app.add_option("--output-dir", g.output_dir, "directory for emitted artifacts");
    app.add_flag("--quiet", g.quiet, "suppress progress output");

    auto* agg = app.add_subcommand("aggregate", "grow a rotor-router cluster from the origin");
    std::int64_t agg_n = -1, agg_m = -1, budget = kDefaultStepBudget;
    bool check_shape = false, check_odometer = false;
    std::string agg_format = "csv", snapshot_path;
    agg->add_option("--n", agg_n, "number of particles");
    agg->add_option("--m", agg_m, "target radius; n = |B_m|");
    agg->add_flag("--check-shape", check_shape, "compare the cluster to the predicted region");
    agg->add_flag("--check-odometer", check_odometer, "compare against the closed form (m >= 3)");
    agg->add_option("--format", agg_format, "csv, json or svg")->default_str("csv");
    agg->add_option("--snapshot", snapshot_path, "also dump the engine state as JSON");
    agg->add_option("--budget", budget, "toppling step budget");

    auto* half = app.add_subcommand("halfline", "run the half-line aggregation");
    std::int64_t half_n = 100;
    bool half_check = false;
    half->add_option("--n", half_n, "number of particles")->required();
    half->add_flag("--check", half_check, "verify every prefix against the closed form");

    auto* ver = app.add_subcommand("verify", "certify the closed-form odometer per radius");
    std::int64_t m_min = 3, m_max = 12;
    ver->add_option("--m-min", m_min, "first radius");
    ver->add_option("--m-max", m_max, "last radius");

    auto* harm = app.add_subcommand("harmonic", "boundary exit measures");
    std::string profile_spec = "cluster", method = "recursion", emit = "csv", compare;
    std::int64_t harm_m = 3, samples = 1000000, cap = 10000000, max_x = 3000;
    std::uint64_t seed = 1;
    bool do_estimate_c = false;
    harm->add_option("--profile", profile_spec, "cluster, square or file:<path>");
    harm->add_option("--m", harm_m, "shape radius");
    harm->add_option("--method", method, "rotor, recursion or montecarlo");
    harm->add_option("--samples", samples, "random-walk sample count");
    harm->add_option("--seed", seed, "random-walk seed");
    harm->add_option("--cap", cap, "particle cap for the rotor method");
    harm->add_option("--emit", emit, "csv, json or svg");
    harm->add_option("--compare", compare, "run two methods (a,b) and compare");
    harm->add_flag("--estimate-c", do_estimate_c, "bracket the growth constant instead");
    harm->add_option("--max-x", max_x, "sequence length for --estimate-c");

    auto* rend = app.add_subcommand("render", "draw an engine-state snapshot as SVG");
    std::string render_in, render_out = "render.svg";
    rend->add_option("--input", render_in, "snapshot JSON")->required();
    rend->add_option("--output", render_out, "output SVG name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (agg->parsed())
            return cmd_aggregate(g, agg_n, agg_m, check_shape, check_odometer, agg_format,
                                 snapshot_path, budget);
        if (half->parsed()) return cmd_halfline(g, half_n, half_check);
        if (ver->parsed()) return cmd_verify(g, m_min, m_max);
        if (harm->parsed())
            return cmd_harmonic(g, profile_spec, harm_m, method, samples, seed, cap, emit,
                                compare, do_estimate_c, max_x);
        if (rend->parsed()) return cmd_render(g, render_in, render_out);
    } catch (const budget_exceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
