#include "rotorcomb/shape.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rotorcomb {

std::int64_t h_cluster(std::int64_t x) { return (x + 1) * (x + 1) / 3; }

std::int64_t cardinality_Bm(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("cardinality_Bm: m must be non-negative");
    return (4 * m * m * m + 12 * m * m + 24 * m + 5 + 2 * ((m + 2) % 3)) / 9;
}

Profile Profile::cluster() { return Profile("cluster", h_cluster); }

Profile Profile::square() {
    return Profile("square", [](std::int64_t x) { return x * x; });
}

Profile Profile::table(std::vector<std::int64_t> heights, std::string name) {
    for (auto h : heights)
        if (h < 0) throw std::invalid_argument("profile heights must be non-negative");
    return Profile(std::move(name), [hs = std::move(heights)](std::int64_t x) {
        if (x < 0 || static_cast<std::size_t>(x) >= hs.size())
            throw std::out_of_range("profile table has no entry for x=" + std::to_string(x));
        return hs[static_cast<std::size_t>(x)];
    });
}

Profile Profile::parse(const std::string& spec) {
    if (spec == "cluster") return cluster();
    if (spec == "square") return square();
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open profile file: " + path);
        std::vector<std::int64_t> heights;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::int64_t a = 0, b = 0;
            char comma = 0;
            if (ls >> a && ls >> comma && comma == ',' && ls >> b) {
                if (a != static_cast<std::int64_t>(heights.size()))
                    throw std::runtime_error("profile rows must be consecutive from x=0");
                heights.push_back(b);
            } else {
                heights.push_back(a);
            }
        }
        return table(std::move(heights), "file:" + path);
    }
    throw std::invalid_argument("unknown profile: " + spec);
}

ClusterShape::ClusterShape(std::int64_t m, Profile h) : m_(m), h_(std::move(h)) {
    if (m < 0) throw std::invalid_argument("ClusterShape: m must be non-negative");
}

bool ClusterShape::contains(const VertexC2& v) const {
    const std::int64_t ax = v.x < 0 ? -v.x : v.x;
    const std::int64_t ay = v.y < 0 ? -v.y : v.y;
    return ax <= m_ && ay <= h_(m_ - ax);
}

std::vector<VertexC2> ClusterShape::vertices() const {
    std::vector<VertexC2> out;
    for (std::int64_t x = -m_; x <= m_; ++x) {
        const std::int64_t hh = h_(m_ - (x < 0 ? -x : x));
        for (std::int64_t y = -hh; y <= hh; ++y) out.push_back({x, y});
    }
    return out;
}

std::set<VertexC2> ClusterShape::inner_boundary() const {
    std::set<VertexC2> out;
    for (const auto& v : vertices())
        for (const auto& w : neighbors(v))
            if (!contains(w)) {
                out.insert(v);
                break;
            }
    return out;
}

std::int64_t ClusterShape::size() const {
    std::int64_t n = 1 + 2 * h_(m_);  // x = 0 column
    for (std::int64_t x = 1; x <= m_; ++x) n += 2 * (1 + 2 * h_(m_ - x));
    return n;
}

}  // namespace rotorcomb
