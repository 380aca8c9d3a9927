#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace condlab {

struct Coord {
    long x = 0;
    long y = 0;
    friend bool operator==(const Coord&, const Coord&) = default;
    Coord operator+(const Coord& o) const { return {x + o.x, y + o.y}; }
    Coord operator-(const Coord& o) const { return {x - o.x, y - o.y}; }
};

enum class EdgeDir : std::uint8_t { horizontal, vertical };

// Canonical edge representation: base point plus direction.
// horizontal: {(x,y),(x+1,y)}; vertical: {(x,y),(x,y+1)}.
struct Edge {
    EdgeDir dir = EdgeDir::horizontal;
    long x = 0;
    long y = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Builds the canonical edge for an unordered nearest-neighbor pair.
inline Edge make_edge(const Coord& u, const Coord& v) {
    const long dx = v.x - u.x;
    const long dy = v.y - u.y;
    if (dx == 1 && dy == 0) return {EdgeDir::horizontal, u.x, u.y};
    if (dx == -1 && dy == 0) return {EdgeDir::horizontal, v.x, v.y};
    if (dx == 0 && dy == 1) return {EdgeDir::vertical, u.x, u.y};
    if (dx == 0 && dy == -1) return {EdgeDir::vertical, v.x, v.y};
    throw std::invalid_argument("make_edge: points are not nearest neighbors");
}

inline long floor_mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        std::uint64_t h = static_cast<std::uint64_t>(e.x) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(e.y) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h = h * 2 + (e.dir == EdgeDir::vertical ? 1 : 0);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace condlab
