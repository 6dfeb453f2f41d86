#pragma once

#include <span>
#include <vector>

#include "bttb/bccb_transform.hpp"
#include "bttb/matrix.hpp"

namespace bttb {

/// Diagnostics of one apply() call.
struct ApplyStats {
  /// max |Im| / max |Re| over the inverse-transformed embeddings.
  double imaginary_residue = 0.0;
};

/// Forward (G x, |x| = n) or transpose (G^T x, |x| = m) product through the
/// BCCB embedding of each layer. Never forms G.
std::vector<double> apply(const TransformStack& stack, std::span<const double> x, ApplyMode mode,
                          ApplyStats* stats = nullptr);

/// ||a - b||_2 / ||a||_2; 0 when both vanish, +inf when only a does.
double relative_error(std::span<const double> a, std::span<const double> b);

}  // namespace bttb
