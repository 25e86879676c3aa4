#include "rotorcomb/snapshot.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace rotorcomb {

namespace {

using nlohmann::json;

template <typename Map>
std::vector<std::pair<typename Map::key_type, typename Map::mapped_type>> sorted_entries(
    const Map& m) {
    std::vector<std::pair<typename Map::key_type, typename Map::mapped_type>> out(m.begin(),
                                                                                  m.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

std::string state_to_json(const EngineState& s) {
    json j;
    j["version"] = kSnapshotVersion;
    j["rotor_fallback"] =
        s.rotors.fallback() == RotorConfig::Fallback::CombInitial ? "comb" : "first";

    json rotors = json::array();
    for (const auto& [v, d] : sorted_entries(s.rotors.assigned()))
        rotors.push_back({v.x, v.y, std::string(1, direction_char(d))});
    j["rotors"] = std::move(rotors);

    json particles = json::array();
    for (const auto& [v, c] : sorted_entries(s.particles.support()))
        particles.push_back({v.x, v.y, c});
    j["particles"] = std::move(particles);

    json odometer = json::array();
    for (const auto& [v, u] : sorted_entries(s.odometer)) odometer.push_back({v.x, v.y, u});
    j["odometer"] = std::move(odometer);

    json sinks = json::array();
    std::vector<VertexC2> sk(s.sinks.begin(), s.sinks.end());
    std::sort(sk.begin(), sk.end());
    for (const auto& v : sk) sinks.push_back({v.x, v.y});
    j["sinks"] = std::move(sinks);

    return j.dump(2);
}

EngineState state_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    if (!j.contains("version") || j["version"].get<int>() != kSnapshotVersion)
        throw std::runtime_error("unsupported snapshot version");

    EngineState s;
    const std::string fb = j.value("rotor_fallback", "comb");
    s.rotors = RotorConfig(fb == "first" ? RotorConfig::Fallback::FirstNeighbor
                                         : RotorConfig::Fallback::CombInitial);
    for (const auto& r : j.at("rotors")) {
        const VertexC2 v{r.at(0).get<std::int64_t>(), r.at(1).get<std::int64_t>()};
        s.rotors.set(v, direction_from_char(r.at(2).get<std::string>().at(0)));
    }
    for (const auto& p : j.at("particles"))
        s.particles.add({p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>()},
                        p.at(2).get<std::int64_t>());
    for (const auto& o : j.at("odometer"))
        s.odometer[{o.at(0).get<std::int64_t>(), o.at(1).get<std::int64_t>()}] =
            o.at(2).get<std::int64_t>();
    for (const auto& v : j.at("sinks"))
        s.sinks.insert({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
    return s;
}

std::string vertices_to_csv(const std::vector<VertexC2>& vs) {
    std::vector<VertexC2> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "x,y\n";
    for (const auto& v : sorted) out << v.x << ',' << v.y << '\n';
    return out.str();
}

std::string odometer_to_csv(const OdometerMap& u) {
    std::ostringstream out;
    out << "x,y,u\n";
    for (const auto& [v, k] : sorted_entries(u)) out << v.x << ',' << v.y << ',' << k << '\n';
    return out.str();
}

std::string measure_to_csv(const BoundaryMeasure& m) {
    std::ostringstream out;
    out << "x,y,e,nu_num,nu_den\n";
    for (const auto& [v, e] : m.exits) {
        const Rational nu = e / m.total;
        out << v.x << ',' << v.y << ',' << e.get_str() << ',' << nu.get_num().get_str()
            << ',' << nu.get_den().get_str() << '\n';
    }
    return out.str();
}

std::string vertices_to_json(const std::vector<VertexC2>& vs) {
    std::vector<VertexC2> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : sorted) arr.push_back({v.x, v.y});
    return arr.dump();
}

}  // namespace rotorcomb
