#include "bttb/vector_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <stdexcept>

namespace bttb {

namespace {

bool is_binary(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".bin") == 0;
}

}  // namespace

std::vector<double> read_vector(const std::string& path) {
  std::vector<double> out;
  if (is_binary(path)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::array<unsigned char, 8> b;
    while (in.read(reinterpret_cast<char*>(b.data()), b.size())) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < 8; ++i) bits |= std::uint64_t(b[i]) << (8 * i);
      out.push_back(std::bit_cast<double>(bits));
    }
    if (in.gcount() != 0) throw std::runtime_error(path + ": size is not a multiple of 8 bytes");
    return out;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  double v = 0.0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::runtime_error(path + ": malformed number after entry " +
                                          std::to_string(out.size()));
  return out;
}

void write_vector(const std::string& path, std::span<const double> values) {
  if (is_binary(path)) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (double v : values) {
      const auto bits = std::bit_cast<std::uint64_t>(v);
      std::array<unsigned char, 8> b;
      for (std::size_t i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
      out.write(reinterpret_cast<const char*>(b.data()), b.size());
    }
    if (!out) throw std::runtime_error("write failed: " + path);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (double v : values) out << v << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace bttb
