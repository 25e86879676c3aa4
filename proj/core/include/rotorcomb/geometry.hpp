#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rotorcomb {

/// A vertex of the two-dimensional comb, in the standard embedding into
/// the square lattice. Vertices on the x-axis (the backbone) have degree 4,
/// all others (the teeth) have degree 2.
struct VertexC2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const VertexC2&, const VertexC2&) = default;
    friend auto operator<=>(const VertexC2&, const VertexC2&) = default;
};

struct VertexHash {
    std::size_t operator()(const VertexC2& v) const noexcept {
        // pack both coordinates, then mix
        std::uint64_t h = static_cast<std::uint64_t>(v.x) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(v.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// Outgoing directions, listed in clockwise order.
enum class Direction : std::uint8_t { East = 0, South = 1, West = 2, North = 3 };

constexpr std::array<Direction, 4> kClockwise = {Direction::East, Direction::South,
                                                 Direction::West, Direction::North};

constexpr char direction_char(Direction d) {
    switch (d) {
        case Direction::East: return 'E';
        case Direction::South: return 'S';
        case Direction::West: return 'W';
        case Direction::North: return 'N';
    }
    return '?';
}

Direction direction_from_char(char c);

constexpr VertexC2 step(const VertexC2& v, Direction d) {
    switch (d) {
        case Direction::East: return {v.x + 1, v.y};
        case Direction::South: return {v.x, v.y - 1};
        case Direction::West: return {v.x - 1, v.y};
        case Direction::North: return {v.x, v.y + 1};
    }
    return v;
}

constexpr bool on_backbone(const VertexC2& v) { return v.y == 0; }

constexpr int degree(const VertexC2& v) { return on_backbone(v) ? 4 : 2; }

/// True iff following d from v stays on the comb.
constexpr bool direction_exists(const VertexC2& v, Direction d) {
    if (on_backbone(v)) return true;
    return d == Direction::South || d == Direction::North;
}

/// Neighbours of v in clockwise order (East, South, West, North restricted
/// to existing edges). Backbone vertices get all four, teeth get South then
/// North.
std::vector<VertexC2> neighbors(const VertexC2& v);

/// The next existing-neighbour direction strictly after d in clockwise
/// order, cyclically. Throws std::invalid_argument if d is not an edge of v.
Direction rotor_successor(const VertexC2& v, Direction d);

/// Direction d advanced k clockwise steps at v.
Direction advance_rotor(const VertexC2& v, Direction d, std::int64_t k);

/// The initial rotor configuration: teeth point away from the backbone,
/// backbone rotors point East for x >= 0 and West for x < 0.
constexpr Direction initial_rotor(const VertexC2& v) {
    if (v.y > 0) return Direction::North;
    if (v.y < 0) return Direction::South;
    return v.x >= 0 ? Direction::East : Direction::West;
}

/// Index of d in the clockwise neighbour order of v (0-based).
int direction_index(const VertexC2& v, Direction d);

/// The i-th neighbour of v in its clockwise order (i taken mod degree).
VertexC2 neighbor_at(const VertexC2& v, std::int64_t i);

}  // namespace rotorcomb
