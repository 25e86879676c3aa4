#include "rotorcomb/geometry.hpp"

namespace rotorcomb {

Direction direction_from_char(char c) {
    switch (c) {
        case 'E': return Direction::East;
        case 'S': return Direction::South;
        case 'W': return Direction::West;
        case 'N': return Direction::North;
    }
    throw std::invalid_argument(std::string("not a direction: ") + c);
}

std::vector<VertexC2> neighbors(const VertexC2& v) {
    std::vector<VertexC2> out;
    out.reserve(degree(v));
    for (Direction d : kClockwise)
        if (direction_exists(v, d)) out.push_back(step(v, d));
    return out;
}

Direction rotor_successor(const VertexC2& v, Direction d) {
    if (!direction_exists(v, d))
        throw std::invalid_argument("rotor does not point to a neighbour");
    auto i = static_cast<std::uint8_t>(d);
    for (int tries = 0; tries < 4; ++tries) {
        i = static_cast<std::uint8_t>((i + 1) % 4);
        auto next = static_cast<Direction>(i);
        if (direction_exists(v, next)) return next;
    }
    return d;  // unreachable
}

Direction advance_rotor(const VertexC2& v, Direction d, std::int64_t k) {
    const int deg = degree(v);
    k %= deg;
    if (k < 0) k += deg;
    for (std::int64_t i = 0; i < k; ++i) d = rotor_successor(v, d);
    return d;
}

int direction_index(const VertexC2& v, Direction d) {
    if (!direction_exists(v, d))
        throw std::invalid_argument("direction is not an edge of the vertex");
    int idx = 0;
    for (Direction c : kClockwise) {
        if (c == d) return idx;
        if (direction_exists(v, c)) ++idx;
    }
    return idx;
}

VertexC2 neighbor_at(const VertexC2& v, std::int64_t i) {
    const int deg = degree(v);
    i %= deg;
    if (i < 0) i += deg;
    std::int64_t idx = 0;
    for (Direction c : kClockwise) {
        if (!direction_exists(v, c)) continue;
        if (idx == i) return step(v, c);
        ++idx;
    }
    throw std::logic_error("neighbor_at: bad index");
}

}  // namespace rotorcomb
