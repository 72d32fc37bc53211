#include "tileforge/tas.hpp"

#include <fstream>
#include <json.hpp>

#include "tileforge/stability.hpp"

namespace tileforge {

using json = nlohmann::json;

static constexpr const char* kTasFormat = "tileforge-tas-v1";

void validate_tas(const TAS& tas) {
  if (tas.temperature < 1) throw Error("temperature must be >= 1");
  if (tas.seed.empty()) throw Error("seed assembly is empty");
  if (!tas.seed.connected()) throw Error("seed assembly is not connected");
  for (const auto& [c, t] : tas.seed.tiles()) {
    if (t < 0 || static_cast<size_t>(t) >= tas.tileset.size())
      throw Error("seed references a tile id outside the tileset");
  }
  if (!is_tau_stable(tas.seed, tas.tileset, tas.temperature))
    throw Error("seed assembly is not tau-stable");
}

static Glue glue_from_json(const json& j, const std::string& ctx) {
  if (!j.is_object() || !j.contains("label") || !j.contains("strength"))
    throw Error(ctx + ": glue needs {label, strength}");
  int s = j.at("strength").get<int>();
  if (s < 0 || s > 2) throw Error(ctx + ": strength must be in {0,1,2}");
  Glue g{j.at("label").get<std::string>(), s};
  if (s >= 1 && g.label.empty())
    throw Error(ctx + ": non-null glue needs a non-empty label");
  return normalize_glue(std::move(g));
}

TAS load_tas(std::istream& is, const std::string& where) {
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw Error(where + ": JSON parse error: " + e.what());
  }
  if (j.value("format", "") != kTasFormat)
    throw Error(where + ": unknown or missing format (want " +
                std::string(kTasFormat) + ")");
  TAS tas;
  tas.name = j.value("name", "tas");
  if (!j.contains("temperature"))
    throw Error(where + ": missing temperature");
  tas.temperature = j.at("temperature").get<int>();
  if (!j.contains("tiles") || !j.at("tiles").is_array() ||
      j.at("tiles").empty())
    throw Error(where + ": missing or empty tiles array");
  static const char* dir_field[4] = {"north", "east", "south", "west"};
  for (const auto& tj : j.at("tiles")) {
    TileType t;
    if (!tj.contains("name")) throw Error(where + ": tile without name");
    t.name = tj.at("name").get<std::string>();
    t.color = tj.value("color", "gray");
    for (Dir d : all_dirs) {
      const char* f = dir_field[static_cast<int>(d)];
      if (!tj.contains(f))
        throw Error(where + ": tile " + t.name + " missing side " + f);
      t.glue(d) = glue_from_json(tj.at(f), where + ": tile " + t.name);
    }
    tas.tileset.add(std::move(t));
  }
  if (!j.contains("seed") || !j.at("seed").is_array() || j.at("seed").empty())
    throw Error(where + ": missing or empty seed array");
  for (const auto& sj : j.at("seed")) {
    int64_t x = sj.at("x").get<int64_t>();
    int64_t y = sj.at("y").get<int64_t>();
    std::string name = sj.at("tile").get<std::string>();
    auto id = tas.tileset.find(name);
    if (!id) throw Error(where + ": seed references unknown tile " + name);
    tas.seed.place({x, y}, *id);
  }
  validate_tas(tas);
  return tas;
}

TAS load_tas_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  return load_tas(f, path);
}

static json glue_to_json(const Glue& g) {
  return json{{"label", g.label}, {"strength", g.strength}};
}

void save_tas(std::ostream& os, const TAS& tas) {
  json tiles = json::array();
  for (const auto& t : tas.tileset.types()) {
    tiles.push_back(json{{"name", t.name},
                         {"color", t.color},
                         {"north", glue_to_json(t.glue(Dir::N))},
                         {"east", glue_to_json(t.glue(Dir::E))},
                         {"south", glue_to_json(t.glue(Dir::S))},
                         {"west", glue_to_json(t.glue(Dir::W))}});
  }
  json seed = json::array();
  for (const auto& [c, t] : tas.seed.sorted_tiles())
    seed.push_back(
        json{{"x", c.x}, {"y", c.y}, {"tile", tas.tileset[t].name}});
  json j{{"format", kTasFormat},
         {"name", tas.name},
         {"temperature", tas.temperature},
         {"tiles", std::move(tiles)},
         {"seed", std::move(seed)}};
  os << j.dump(1, '\t') << '\n';
}

void save_tas_file(const std::string& path, const TAS& tas) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open " + path + " for writing");
  save_tas(f, tas);
}

}  // namespace tileforge
