#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "tileforge/stability.hpp"
#include "tileforge/tas.hpp"

namespace tileforge {

// (direction, glue) -> tile types presenting a matching glue on that side.
// The frontier is maintained incrementally from this index.
class TypeIndex {
 public:
  explicit TypeIndex(const Tileset& ts);

  // Types whose glue on side `side` equals g.
  const std::vector<TypeId>& candidates(Dir side, const Glue& g) const;
  // Total binding strength of type t at location c in assembly a.
  int binding_strength(const Assembly& a, const Tileset& ts, const Coord& c,
                       TypeId t) const;
  int name_rank(TypeId t) const { return name_rank_[t]; }

 private:
  struct KeyHash {
    size_t operator()(const std::pair<int, std::string>& k) const {
      return std::hash<std::string>()(k.second) * 4 + k.first;
    }
  };
  std::unordered_map<std::pair<int, std::string>, std::vector<TypeId>, KeyHash>
      by_side_glue_;
  std::vector<TypeId> empty_;
  std::vector<int> name_rank_;
};

struct FrontierSite {
  Coord loc;
  std::vector<TypeId> types;  // sorted by tile name
};

enum class RunStatus { Terminal, BudgetExhausted };

struct RunResult {
  Assembly assembly;
  RunStatus status = RunStatus::Terminal;
  uint64_t attachments = 0;
};

// Observer invoked after every attachment.
using AttachHook = std::function<void(const Assembly&, const Coord&, TypeId)>;

// One simulation run. The frontier is kept canonically sorted by (y,x) and
// within a site by tile name, so a seeded pick sequence replays exactly.
class Simulation {
 public:
  Simulation(const TAS& tas, uint64_t rng_seed = 0);
  ~Simulation();
  Simulation(Simulation&&) noexcept;
  Simulation& operator=(Simulation&&) noexcept;

  const Assembly& assembly() const;
  const TAS& tas() const;

  bool frontier_empty() const;
  size_t frontier_site_count() const;
  std::vector<FrontierSite> frontier_sites() const;

  // Attaches one frontier element chosen by the seeded rng. Returns false
  // when the frontier is empty (terminal).
  bool attach_step();
  // Attaches the given pick if it is currently attachable.
  bool attach_explicit(const Coord& c, TypeId t);

  RunResult run_to_terminal(uint64_t max_tiles);

  void set_hook(AttachHook h);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Stateless wrappers per the module contract.
std::vector<FrontierSite> frontier(const Assembly& a, const TAS& tas);
Assembly attach_step(const Assembly& a, const TAS& tas, uint64_t rng_seed);
RunResult run_to_terminal(const TAS& tas, uint64_t max_tiles,
                          uint64_t rng_seed);

// All producible assemblies with at most `max_total_tiles` tiles, canonically
// deduplicated. Throws Error when the produced set would exceed `set_cap`.
std::vector<Assembly> enumerate_producible(const TAS& tas,
                                           size_t max_total_tiles,
                                           size_t set_cap = 200000);

}  // namespace tileforge
