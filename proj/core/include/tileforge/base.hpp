#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace tileforge {

enum class Dir : uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr std::array<Dir, 4> all_dirs{Dir::N, Dir::E, Dir::S, Dir::W};

inline constexpr Dir opposite(Dir d) {
  switch (d) {
    case Dir::N: return Dir::S;
    case Dir::E: return Dir::W;
    case Dir::S: return Dir::N;
    case Dir::W: return Dir::E;
  }
  return Dir::N;
}

inline constexpr const char* dir_name(Dir d) {
  switch (d) {
    case Dir::N: return "north";
    case Dir::E: return "east";
    case Dir::S: return "south";
    case Dir::W: return "west";
  }
  return "?";
}

struct Coord {
  int64_t x = 0;
  int64_t y = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
  Coord step(Dir d) const {
    switch (d) {
      case Dir::N: return {x, y + 1};
      case Dir::E: return {x + 1, y};
      case Dir::S: return {x, y - 1};
      case Dir::W: return {x - 1, y};
    }
    return *this;
  }
};

// (y,x) lexicographic; the canonical frontier/snapshot order.
inline bool yx_less(const Coord& a, const Coord& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

inline uint64_t pack_coord(const Coord& c) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(c.x)) << 32) |
         static_cast<uint64_t>(static_cast<uint32_t>(c.y));
}

struct CoordHash {
  size_t operator()(const Coord& c) const {
    uint64_t v = pack_coord(c);
    v ^= v >> 33;
    v *= 0xff51afd7ed558ccdULL;
    v ^= v >> 33;
    v *= 0xc4ceb9fe1a85ec53ULL;
    v ^= v >> 33;
    return static_cast<size_t>(v);
  }
};

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tileforge
