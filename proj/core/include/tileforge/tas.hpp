#pragma once

#include <iosfwd>
#include <string>

#include "tileforge/assembly.hpp"
#include "tileforge/tiles.hpp"

namespace tileforge {

// Tile-assembly system: tileset + seed assembly + temperature.
struct TAS {
  std::string name = "tas";
  Tileset tileset;
  Assembly seed;
  int temperature = 2;

  const TileType& type_at(const Coord& c) const {
    return tileset[seed.at(c)];
  }
};

// Validates the TAS invariants (seed non-empty, connected, tau-stable, all
// seed types present in the tileset). Throws Error with a description.
void validate_tas(const TAS& tas);

// JSON document with fields {format, name, temperature, tiles, seed}.
// Tiles: [{name, color, north:{label,strength}, east, south, west}].
// Seed: [{x, y, tile}]. Strength-0 glues are normalized to the null glue.
TAS load_tas(std::istream& is, const std::string& where = "<stream>");
TAS load_tas_file(const std::string& path);
void save_tas(std::ostream& os, const TAS& tas);
void save_tas_file(const std::string& path, const TAS& tas);

}  // namespace tileforge
