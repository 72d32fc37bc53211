#include "tileforge/sim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>

namespace tileforge {

TypeIndex::TypeIndex(const Tileset& ts) {
  std::vector<std::pair<std::string, TypeId>> names;
  names.reserve(ts.size());
  for (size_t i = 0; i < ts.size(); ++i)
    names.push_back({ts[static_cast<TypeId>(i)].name, static_cast<TypeId>(i)});
  std::sort(names.begin(), names.end());
  name_rank_.resize(ts.size());
  for (size_t r = 0; r < names.size(); ++r) name_rank_[names[r].second] = r;

  for (size_t i = 0; i < ts.size(); ++i) {
    const TileType& t = ts[static_cast<TypeId>(i)];
    for (Dir d : all_dirs) {
      const Glue& g = t.glue(d);
      if (g.is_null()) continue;
      auto key = std::make_pair(
          static_cast<int>(d),
          g.label + '\x1f' + static_cast<char>('0' + g.strength));
      by_side_glue_[key].push_back(static_cast<TypeId>(i));
    }
  }
}

const std::vector<TypeId>& TypeIndex::candidates(Dir side,
                                                 const Glue& g) const {
  if (g.is_null()) return empty_;
  auto key = std::make_pair(
      static_cast<int>(side),
      g.label + '\x1f' + static_cast<char>('0' + g.strength));
  auto it = by_side_glue_.find(key);
  return it == by_side_glue_.end() ? empty_ : it->second;
}

int TypeIndex::binding_strength(const Assembly& a, const Tileset& ts,
                                const Coord& c, TypeId t) const {
  int sum = 0;
  for (Dir d : all_dirs) {
    TypeId u = a.at(c.step(d));
    if (u == kNoType) continue;
    const Glue& g = ts[t].glue(d);
    const Glue& h = ts[u].glue(opposite(d));
    if (glues_bind(g, h)) sum += g.strength;
  }
  return sum;
}

namespace {

// Candidate types at empty cell c with binding strength >= tau, sorted by
// tile name.
std::vector<TypeId> site_types(const Assembly& a, const Tileset& ts,
                               const TypeIndex& idx, const Coord& c, int tau) {
  std::vector<TypeId> cand;
  for (Dir d : all_dirs) {
    TypeId u = a.at(c.step(d));
    if (u == kNoType) continue;
    const Glue& h = ts[u].glue(opposite(d));
    for (TypeId t : idx.candidates(d, h)) cand.push_back(t);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<TypeId> out;
  for (TypeId t : cand)
    if (idx.binding_strength(a, ts, c, t) >= tau) out.push_back(t);
  std::sort(out.begin(), out.end(), [&](TypeId x, TypeId y) {
    return idx.name_rank(x) < idx.name_rank(y);
  });
  return out;
}

struct YXKey {
  int64_t y, x;
  friend bool operator<(const YXKey& a, const YXKey& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
  friend bool operator==(const YXKey&, const YXKey&) = default;
};

using FrontierTree =
    __gnu_pbds::tree<YXKey, std::vector<TypeId>, std::less<YXKey>,
                     __gnu_pbds::rb_tree_tag,
                     __gnu_pbds::tree_order_statistics_node_update>;

}  // namespace

struct Simulation::Impl {
  const TAS& tas;
  TypeIndex index;
  Assembly asm_;
  FrontierTree frontier;
  std::mt19937_64 rng;
  AttachHook hook;

  Impl(const TAS& t, uint64_t seed)
      : tas(t), index(t.tileset), asm_(t.seed), rng(seed) {
    for (const auto& [c, _] : asm_.tiles())
      for (Dir d : all_dirs) refresh_site(c.step(d));
  }

  void refresh_site(const Coord& c) {
    if (asm_.occupied(c)) return;
    auto types = site_types(asm_, tas.tileset, index, c, tas.temperature);
    YXKey k{c.y, c.x};
    if (types.empty())
      frontier.erase(k);
    else
      frontier[k] = std::move(types);
  }

  void place(const Coord& c, TypeId t) {
    asm_.place(c, t);
    frontier.erase(YXKey{c.y, c.x});
    for (Dir d : all_dirs) refresh_site(c.step(d));
    if (hook) hook(asm_, c, t);
  }

  bool attach_step() {
    if (frontier.empty()) return false;
    size_t i = static_cast<size_t>(rng() % frontier.size());
    auto it = frontier.find_by_order(i);
    const auto& types = it->second;
    TypeId t =
        types[types.size() == 1 ? 0
                                : static_cast<size_t>(rng() % types.size())];
    place({it->first.x, it->first.y}, t);
    return true;
  }
};

Simulation::Simulation(const TAS& tas, uint64_t rng_seed)
    : impl_(std::make_unique<Impl>(tas, rng_seed)) {}
Simulation::~Simulation() = default;
Simulation::Simulation(Simulation&&) noexcept = default;
Simulation& Simulation::operator=(Simulation&&) noexcept = default;

const Assembly& Simulation::assembly() const { return impl_->asm_; }
const TAS& Simulation::tas() const { return impl_->tas; }
bool Simulation::frontier_empty() const { return impl_->frontier.empty(); }
size_t Simulation::frontier_site_count() const {
  return impl_->frontier.size();
}

std::vector<FrontierSite> Simulation::frontier_sites() const {
  std::vector<FrontierSite> out;
  for (const auto& [k, v] : impl_->frontier)
    out.push_back({Coord{k.x, k.y}, v});
  return out;
}

bool Simulation::attach_step() { return impl_->attach_step(); }

bool Simulation::attach_explicit(const Coord& c, TypeId t) {
  auto it = impl_->frontier.find(YXKey{c.y, c.x});
  if (it == impl_->frontier.end()) return false;
  if (std::find(it->second.begin(), it->second.end(), t) == it->second.end())
    return false;
  impl_->place(c, t);
  return true;
}

RunResult Simulation::run_to_terminal(uint64_t max_tiles) {
  RunResult r;
  uint64_t placed = 0;
  while (impl_->asm_.size() < max_tiles) {
    if (!impl_->attach_step()) {
      r.assembly = impl_->asm_;
      r.status = RunStatus::Terminal;
      r.attachments = placed;
      return r;
    }
    ++placed;
  }
  r.assembly = impl_->asm_;
  r.status =
      impl_->frontier.empty() ? RunStatus::Terminal : RunStatus::BudgetExhausted;
  r.attachments = placed;
  return r;
}

void Simulation::set_hook(AttachHook h) { impl_->hook = std::move(h); }

std::vector<FrontierSite> frontier(const Assembly& a, const TAS& tas) {
  if (a.empty()) throw Error("frontier of empty assembly");
  TypeIndex idx(tas.tileset);
  std::unordered_map<Coord, char, CoordHash> seen;
  std::vector<FrontierSite> out;
  for (const auto& [c, _] : a.tiles()) {
    for (Dir d : all_dirs) {
      Coord m = c.step(d);
      if (a.occupied(m) || seen.count(m)) continue;
      seen[m] = 1;
      auto types = site_types(a, tas.tileset, idx, m, tas.temperature);
      if (!types.empty()) out.push_back({m, std::move(types)});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return yx_less(x.loc, y.loc);
  });
  return out;
}

Assembly attach_step(const Assembly& a, const TAS& tas, uint64_t rng_seed) {
  auto sites = frontier(a, tas);
  if (sites.empty()) throw Error("attach_step: frontier is empty (terminal)");
  std::mt19937_64 rng(rng_seed);
  const auto& site = sites[static_cast<size_t>(rng() % sites.size())];
  TypeId t = site.types[site.types.size() == 1
                            ? 0
                            : static_cast<size_t>(rng() % site.types.size())];
  Assembly b = a;
  b.place(site.loc, t);
  return b;
}

RunResult run_to_terminal(const TAS& tas, uint64_t max_tiles,
                          uint64_t rng_seed) {
  if (max_tiles < tas.seed.size())
    throw Error("run_to_terminal: max_tiles smaller than the seed");
  Simulation sim(tas, rng_seed);
  return sim.run_to_terminal(max_tiles);
}

std::vector<Assembly> enumerate_producible(const TAS& tas,
                                           size_t max_total_tiles,
                                           size_t set_cap) {
  std::vector<Assembly> out;
  std::unordered_map<std::string, char> seen;
  std::deque<Assembly> q;
  if (tas.seed.size() > max_total_tiles) return out;
  q.push_back(tas.seed);
  seen[tas.seed.canonical_key(tas.tileset)] = 1;
  TypeIndex idx(tas.tileset);
  while (!q.empty()) {
    Assembly a = std::move(q.front());
    q.pop_front();
    out.push_back(a);
    if (out.size() > set_cap)
      throw Error("enumerate_producible: set cap exceeded");
    if (a.size() >= max_total_tiles) continue;
    std::unordered_map<Coord, char, CoordHash> seen_site;
    for (const auto& [c, _] : a.tiles()) {
      for (Dir d : all_dirs) {
        Coord m = c.step(d);
        if (a.occupied(m) || seen_site.count(m)) continue;
        seen_site[m] = 1;
        for (TypeId t :
             site_types(a, tas.tileset, idx, m, tas.temperature)) {
          Assembly b = a;
          b.place(m, t);
          auto key = b.canonical_key(tas.tileset);
          if (!seen.count(key)) {
            seen[key] = 1;
            q.push_back(std::move(b));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace tileforge
