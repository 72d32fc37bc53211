#include "tileforge/tiles.hpp"

#include <algorithm>
#include <set>

namespace tileforge {

TypeId Tileset::add(TileType t) {
  if (by_name_.count(t.name))
    throw Error("duplicate tile type name: " + t.name);
  for (auto& g : t.glues) g = normalize_glue(std::move(g));
  TypeId id = static_cast<TypeId>(types_.size());
  by_name_.emplace(t.name, id);
  types_.push_back(std::move(t));
  return id;
}

TypeId Tileset::add_unique(TileType t) {
  auto it = by_name_.find(t.name);
  if (it != by_name_.end()) return it->second;
  return add(std::move(t));
}

std::optional<TypeId> Tileset::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const TileType* Tileset::find_type(const std::string& name) const {
  auto id = find(name);
  return id ? &types_[*id] : nullptr;
}

static std::vector<std::string> labels_on(const Tileset& ts, Dir a, Dir b) {
  std::set<std::string> s;
  for (const auto& t : ts.types()) {
    for (Dir d : {a, b}) {
      const Glue& g = t.glue(d);
      if (!g.is_null()) s.insert(g.label);
    }
  }
  return {s.begin(), s.end()};
}

std::vector<std::string> Tileset::vertical_labels() const {
  return labels_on(*this, Dir::N, Dir::S);
}

std::vector<std::string> Tileset::horizontal_labels() const {
  return labels_on(*this, Dir::E, Dir::W);
}

}  // namespace tileforge
