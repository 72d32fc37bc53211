#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "tileforge/base.hpp"
#include "tileforge/tiles.hpp"

namespace tileforge {

// Sparse placement of tile types on the integer lattice. An assembly proper
// is non-empty and connected; Assembly itself is the raw container plus
// queries, so partial/in-construction states can be represented too.
class Assembly {
 public:
  Assembly() = default;

  bool empty() const { return tiles_.empty(); }
  size_t size() const { return tiles_.size(); }

  bool occupied(const Coord& c) const { return tiles_.count(c) != 0; }
  TypeId at(const Coord& c) const {
    auto it = tiles_.find(c);
    return it == tiles_.end() ? kNoType : it->second;
  }
  void place(const Coord& c, TypeId t);

  const std::unordered_map<Coord, TypeId, CoordHash>& tiles() const {
    return tiles_;
  }

  // Sorted by (y,x); the canonical iteration/serialization order.
  std::vector<std::pair<Coord, TypeId>> sorted_tiles() const;

  bool connected() const;

  // sub-assembly: every tile of *this appears identically in other.
  bool subset_of(const Assembly& other) const;
  bool same_as(const Assembly& other) const;

  void bounds(Coord& lo, Coord& hi) const;  // requires non-empty

  // Canonical string key (not translation-invariant; positions matter).
  std::string canonical_key(const Tileset& ts) const;

  friend bool operator==(const Assembly& a, const Assembly& b) {
    return a.tiles_ == b.tiles_;
  }

 private:
  std::unordered_map<Coord, TypeId, CoordHash> tiles_;
};

// Snapshot file: version header line, then `x<TAB>y<TAB>tile-name` per tile,
// sorted by (y,x).
void write_snapshot(std::ostream& os, const Assembly& a, const Tileset& ts);
Assembly read_snapshot(std::istream& is, const Tileset& ts);

}  // namespace tileforge
