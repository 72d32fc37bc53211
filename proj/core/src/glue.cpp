#include "tileforge/glue.hpp"

namespace tileforge {

Glue normalize_glue(Glue g) {
  if (g.strength <= 0) return null_glue();
  return g;
}

}  // namespace tileforge
