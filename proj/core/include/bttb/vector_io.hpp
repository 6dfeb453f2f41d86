#pragma once

#include <span>
#include <string>
#include <vector>

namespace bttb {

/// Model and data vectors on disk. `.bin` files are raw little-endian f64;
/// anything else is text with one value per line.
std::vector<double> read_vector(const std::string& path);
void write_vector(const std::string& path, std::span<const double> values);

}  // namespace bttb
