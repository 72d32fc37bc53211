#pragma once

// Hand-built test systems shared by the unit and acceptance suites.

#include <tileforge/tas.hpp>

namespace tileforge::fixtures {

inline TileType tile(std::string name, Glue n, Glue e, Glue s, Glue w,
                     std::string color = "gray") {
  TileType t;
  t.name = std::move(name);
  t.color = std::move(color);
  t.glue(Dir::N) = std::move(n);
  t.glue(Dir::E) = std::move(e);
  t.glue(Dir::S) = std::move(s);
  t.glue(Dir::W) = std::move(w);
  return t;
}

inline const Glue kNull{"", 0};

// Directed strength-2 chain: seed plus three tiles growing east.
inline TAS make_chain() {
  TAS tas;
  tas.name = "chain4";
  tas.temperature = 2;
  tas.tileset.add(tile("c0", kNull, {"e0·>", 2}, kNull, kNull, "red"));
  tas.tileset.add(
      tile("c1", kNull, {"e1·>", 2}, kNull, {"e0·>", 2}, "orange"));
  tas.tileset.add(
      tile("c2", kNull, {"e2·>", 2}, kNull, {"e1·>", 2}, "yellow"));
  tas.tileset.add(tile("c3", kNull, kNull, kNull, {"e2·>", 2}, "green"));
  tas.seed.place({0, 0}, *tas.tileset.find("c0"));
  return tas;
}

// Cooperative L: two strength-2 arms plus three cooperative fill tiles.
inline TAS make_coop_L() {
  TAS tas;
  tas.name = "coopL8";
  tas.temperature = 2;
  auto add = [&](TileType t) { tas.tileset.add(std::move(t)); };
  add(tile("s", {"n0·∧", 2}, {"e0·>", 2}, kNull, kNull, "red"));
  add(tile("a1", {"p·∧", 1}, {"e1·>", 2}, kNull,
           {"e0·>", 2}, "orange"));
  add(tile("a2", {"q·∧", 1}, kNull, kNull, {"e1·>", 2},
           "orange"));
  add(tile("b1", {"n1·∧", 2}, {"r·>", 1}, {"n0·∧", 2},
           kNull, "blue"));
  add(tile("b2", kNull, {"r2·>", 1}, {"n1·∧", 2}, kNull,
           "blue"));
  add(tile("f11", {"p2·∧", 1}, {"f·>", 1}, {"p·∧", 1},
           {"r·>", 1}, "gray"));
  add(tile("f21", kNull, kNull, {"q·∧", 1}, {"f·>", 1},
           "gray"));
  add(tile("f12", kNull, kNull, {"p2·∧", 1}, {"r2·>", 1},
           "gray"));
  tas.seed.place({0, 0}, *tas.tileset.find("s"));
  return tas;
}

// Zig-zag 2-bit binary counter. Rows alternate increment (right-to-left)
// and copy (left-to-right); halts on carry overflow. MSB at x=0.
inline TAS make_zigzag_counter() {
  TAS tas;
  tas.name = "zigzag-counter";
  tas.temperature = 2;
  auto add = [&](TileType t) { tas.tileset.add(std::move(t)); };
  auto v = [](int b) { return Glue{"v" + std::to_string(b) + "·∧", 1}; };
  auto R = [](int b) { return Glue{"R" + std::to_string(b) + "·∧", 2}; };
  auto L = [](int b) { return Glue{"L" + std::to_string(b) + "·∧", 2}; };
  auto carry = [](int c) { return Glue{"c" + std::to_string(c) + "·<", 1}; };
  const Glue go{"go·>", 1};
  const Glue sd{"sd·>", 2};

  add(tile("seedM", v(0), sd, kNull, kNull, "red"));
  add(tile("seedR", R(0), kNull, kNull, sd, "red"));
  for (int b : {0, 1}) {
    // increment start: reads bit b via the right-end strength-2 glue
    add(tile("incR" + std::to_string(b), v(1 - b), kNull, R(b), carry(b),
             "yellow"));
    // copy start at the left end
    add(tile("cpyL" + std::to_string(b), v(b), go, L(b), kNull, "cyan"));
    for (int c : {0, 1}) {
      int r = b ^ c, k = b & c;
      // increment end at the left: emits L-glue unless the carry overflows
      add(tile("incL" + std::to_string(b) + std::to_string(c),
               k ? kNull : L(r), carry(c), v(b), kNull,
               k ? "black" : "yellow"));
      (void)r;
    }
    // copy end at the right
    add(tile("cpyR" + std::to_string(b), R(b), kNull, v(b), go, "cyan"));
  }
  tas.seed.place({0, 0}, *tas.tileset.find("seedM"));
  tas.seed.place({1, 0}, *tas.tileset.find("seedR"));
  return tas;
}

}  // namespace tileforge::fixtures
