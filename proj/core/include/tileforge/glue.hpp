#pragma once

#include <cstdint>
#include <string>

#include "tileforge/base.hpp"

namespace tileforge {

// A glue is a label plus a strength in {0,1,2}. There is exactly one
// strength-0 glue after normalization: the null glue with the empty label.
struct Glue {
  std::string label;
  int strength = 0;

  bool is_null() const { return strength == 0; }
  friend bool operator==(const Glue&, const Glue&) = default;
};

inline const Glue& null_glue() {
  static const Glue g{"", 0};
  return g;
}

// Two abutting glues bind iff equal label, equal strength, strength > 0.
inline bool glues_bind(const Glue& a, const Glue& b) {
  return a.strength > 0 && a.strength == b.strength && a.label == b.label;
}

// Abutting non-null glues that do not bind are a mismatch.
inline bool glues_mismatch(const Glue& a, const Glue& b) {
  return !a.is_null() && !b.is_null() && !glues_bind(a, b);
}

// Normalizes any strength-0 glue to the canonical null glue.
Glue normalize_glue(Glue g);

}  // namespace tileforge
