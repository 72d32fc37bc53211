#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tileforge/base.hpp"
#include "tileforge/glue.hpp"

namespace tileforge {

using TypeId = int32_t;
inline constexpr TypeId kNoType = -1;

struct TileType {
  std::string name;
  std::string color = "gray";
  std::array<Glue, 4> glues{};  // indexed by Dir

  const Glue& glue(Dir d) const { return glues[static_cast<size_t>(d)]; }
  Glue& glue(Dir d) { return glues[static_cast<size_t>(d)]; }
};

// Immutable-after-build set of tile types with name lookup.
class Tileset {
 public:
  Tileset() = default;

  TypeId add(TileType t);
  // Adds t unless an identical type with the same name already exists.
  TypeId add_unique(TileType t);

  size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }
  const TileType& operator[](TypeId id) const { return types_[id]; }
  const std::vector<TileType>& types() const { return types_; }

  std::optional<TypeId> find(const std::string& name) const;
  const TileType* find_type(const std::string& name) const;

  // All distinct glue labels appearing on N/S sides (vertical) or E/W sides
  // (horizontal), excluding the null glue.
  std::vector<std::string> vertical_labels() const;
  std::vector<std::string> horizontal_labels() const;

 private:
  std::vector<TileType> types_;
  std::unordered_map<std::string, TypeId> by_name_;
};

}  // namespace tileforge
