#include "bttb/matrix.hpp"

namespace bttb {

const char* to_string(KernelKind kind) noexcept {
  return kind == KernelKind::gravity ? "gravity" : "magnetic";
}

const char* to_string(ApplyMode mode) noexcept {
  return mode == ApplyMode::forward ? "forward" : "transpose";
}

}  // namespace bttb
