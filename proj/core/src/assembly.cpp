#include "tileforge/assembly.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace tileforge {

void Assembly::place(const Coord& c, TypeId t) {
  auto [it, fresh] = tiles_.emplace(c, t);
  if (!fresh) throw Error("location already occupied");
}

std::vector<std::pair<Coord, TypeId>> Assembly::sorted_tiles() const {
  std::vector<std::pair<Coord, TypeId>> v(tiles_.begin(), tiles_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return yx_less(a.first, b.first);
  });
  return v;
}

bool Assembly::connected() const {
  if (tiles_.empty()) return false;
  std::unordered_map<Coord, bool, CoordHash> seen;
  std::deque<Coord> q{tiles_.begin()->first};
  seen[q.front()] = true;
  size_t n = 0;
  while (!q.empty()) {
    Coord c = q.front();
    q.pop_front();
    ++n;
    for (Dir d : all_dirs) {
      Coord m = c.step(d);
      if (tiles_.count(m) && !seen[m]) {
        seen[m] = true;
        q.push_back(m);
      }
    }
  }
  return n == tiles_.size();
}

bool Assembly::subset_of(const Assembly& other) const {
  if (size() > other.size()) return false;
  for (const auto& [c, t] : tiles_)
    if (other.at(c) != t) return false;
  return true;
}

bool Assembly::same_as(const Assembly& other) const {
  return size() == other.size() && subset_of(other);
}

void Assembly::bounds(Coord& lo, Coord& hi) const {
  if (tiles_.empty()) throw Error("bounds of empty assembly");
  lo = hi = tiles_.begin()->first;
  for (const auto& [c, _] : tiles_) {
    lo.x = std::min(lo.x, c.x);
    lo.y = std::min(lo.y, c.y);
    hi.x = std::max(hi.x, c.x);
    hi.y = std::max(hi.y, c.y);
  }
}

std::string Assembly::canonical_key(const Tileset& ts) const {
  std::ostringstream os;
  for (const auto& [c, t] : sorted_tiles())
    os << c.x << ',' << c.y << ',' << ts[t].name << ';';
  return os.str();
}

static constexpr const char* kSnapshotHeader = "tileforge-snapshot-v1";

void write_snapshot(std::ostream& os, const Assembly& a, const Tileset& ts) {
  os << kSnapshotHeader << '\n';
  for (const auto& [c, t] : a.sorted_tiles())
    os << c.x << '\t' << c.y << '\t' << ts[t].name << '\n';
}

Assembly read_snapshot(std::istream& is, const Tileset& ts) {
  std::string line;
  if (!std::getline(is, line) || line != kSnapshotHeader)
    throw Error("snapshot: unknown format version");
  Assembly a;
  size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    int64_t x, y;
    std::string name;
    if (!(ls >> x >> y >> name))
      throw Error("snapshot: bad line " + std::to_string(lineno));
    auto id = ts.find(name);
    if (!id) throw Error("snapshot: unknown tile type " + name);
    a.place({x, y}, *id);
  }
  return a;
}

}  // namespace tileforge
