#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bttb/dense_assembly.hpp"
#include "bttb/geometry.hpp"
#include "bttb/kernels.hpp"

namespace bttb {

inline constexpr std::int64_t kProblemCount = 12;
inline constexpr int kBenchSchemaVersion = 1;

struct SizeRow {
  std::int64_t problem = 0;
  std::int64_t sx = 0, sy = 0, nz = 0;
  std::int64_t nx = 0, ny = 0;
  std::int64_t m = 0, n = 0;
};

/// Dimensions of the scaled problems 1..kProblemCount at the given padding.
std::vector<SizeRow> sizes_table(double padding);
void write_sizes_csv(std::ostream& out, std::span<const SizeRow> rows);

enum class BenchPath { dense, transform };
enum class BenchPhase { build, forward, transpose };

struct BenchRecord {
  std::int64_t problem = 0;
  double padding = 0.0;
  KernelKind kind = KernelKind::gravity;
  BenchPath path = BenchPath::dense;
  BenchPhase phase = BenchPhase::build;
  int trials = 0;
  std::optional<double> mean_seconds;    // empty when the phase was skipped
  std::optional<double> mean_rel_error;  // transform products only, vs dense
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";  // "ok" or "skipped-memory-guard"
};

struct BenchOptions {
  std::vector<std::int64_t> problems{1};
  double padding = 0.0;
  int trials = 100;
  KernelParams params = KernelParams::gravity();
  std::uint64_t seed = 1;
  std::uint64_t memory_guard = kDefaultMemoryGuard;
};

/// Times dense and transform builds and products on the scaled problems.
/// Each timed phase is preceded by one untimed warm-up run.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

const char* to_string(BenchPath path) noexcept;
const char* to_string(BenchPhase phase) noexcept;

/// Uniform [0, 1) entries from the top 53 bits of each draw.
std::vector<double> uniform_vector(std::size_t size, std::mt19937_64& gen);

/// Station data d = G m through the transform path. Throws DimensionError
/// naming n = n_x n_y n_z when the model length is wrong.
std::vector<double> simulate(const GridSpec& grid, const KernelParams& params,
                             std::span<const double> model);

}  // namespace bttb
