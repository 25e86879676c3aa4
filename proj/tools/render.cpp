#include "render.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace rotorcomb {

namespace {

constexpr int kCell = 28;

struct Box {
    std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

Box bounds(const EngineState& state, const std::set<VertexC2>& cluster) {
    Box b;
    bool first = true;
    const auto grow = [&](const VertexC2& v) {
        if (first) {
            b = {v.x, v.x, v.y, v.y};
            first = false;
            return;
        }
        b.xmin = std::min(b.xmin, v.x);
        b.xmax = std::max(b.xmax, v.x);
        b.ymin = std::min(b.ymin, v.y);
        b.ymax = std::max(b.ymax, v.y);
    };
    for (const auto& v : cluster) grow(v);
    for (const auto& [v, k] : state.odometer) grow(v);
    return b;
}

}  // namespace

std::string render_svg(const EngineState& state, const std::set<VertexC2>& cluster,
                       bool labels) {
    const Box b = bounds(state, cluster);
    const std::int64_t w = (b.xmax - b.xmin + 3) * kCell;
    const std::int64_t h = (b.ymax - b.ymin + 3) * kCell;
    // screen position of the cell centre; y axis flipped
    const auto cx = [&](std::int64_t x) { return (x - b.xmin + 1) * kCell + kCell / 2; };
    const auto cy = [&](std::int64_t y) { return (b.ymax - y + 1) * kCell + kCell / 2; };

    std::int64_t umax = 1;
    for (const auto& [v, k] : state.odometer) umax = std::max(umax, k);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // dotted grid over the whole frame
    for (std::int64_t x = b.xmin - 1; x <= b.xmax + 1; ++x)
        for (std::int64_t y = b.ymin - 1; y <= b.ymax + 1; ++y)
            out << "<circle cx=\"" << cx(x) << "\" cy=\"" << cy(y)
                << "\" r=\"1\" fill=\"#bbbbbb\"/>\n";

    // cluster cells shaded by odometer value
    for (const auto& v : cluster) {
        const std::int64_t u = state.odometer_at(v);
        const int shade = 255 - static_cast<int>(160 * u / umax);
        out << "<rect x=\"" << cx(v.x) - kCell / 2 + 1 << "\" y=\"" << cy(v.y) - kCell / 2 + 1
            << "\" width=\"" << kCell - 2 << "\" height=\"" << kCell - 2 << "\" fill=\"rgb("
            << shade << ',' << shade << ",255)\" stroke=\"#333333\"/>\n";
    }

    // rotor arrows
    for (const auto& v : cluster) {
        const Direction d = state.rotors.at(v);
        std::int64_t dx = 0, dy = 0;
        switch (d) {
            case Direction::East: dx = 1; break;
            case Direction::West: dx = -1; break;
            case Direction::North: dy = 1; break;
            case Direction::South: dy = -1; break;
        }
        const std::int64_t x0 = cx(v.x), y0 = cy(v.y);
        const std::int64_t x1 = x0 + dx * (kCell / 2 - 4), y1 = y0 - dy * (kCell / 2 - 4);
        out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
            << "\" stroke=\"#cc2222\" stroke-width=\"2\"/>\n"
            << "<circle cx=\"" << x1 << "\" cy=\"" << y1 << "\" r=\"2\" fill=\"#cc2222\"/>\n";
    }

    if (labels)
        for (const auto& v : cluster)
            out << "<text x=\"" << cx(v.x) - kCell / 2 + 3 << "\" y=\"" << cy(v.y) - kCell / 2 + 9
                << "\" font-size=\"8\" font-family=\"monospace\" fill=\"#222222\">"
                << state.odometer_at(v) << "</text>\n";

    out << "</svg>\n";
    return out.str();
}

}  // namespace rotorcomb
