#include "bttb/harness.hpp"

#include <chrono>
#include <iomanip>
#include <limits>
#include <ostream>

#include "bttb/bccb_transform.hpp"
#include "bttb/error.hpp"
#include "bttb/fast_apply.hpp"

namespace bttb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double time_once(F&& f) {
  const auto t0 = Clock::now();
  f();
  return seconds_since(t0);
}

}  // namespace

std::vector<SizeRow> sizes_table(double padding) {
  std::vector<SizeRow> rows;
  for (std::int64_t k = 1; k <= kProblemCount; ++k) {
    const GridSpec g = scaled_problem(k, padding);
    rows.push_back({k, g.sx, g.sy, g.nz, g.nx(), g.ny(), g.m(), g.n()});
  }
  return rows;
}

void write_sizes_csv(std::ostream& out, std::span<const SizeRow> rows) {
  out << "problem,sx,sy,nz,nx,ny,m,n\n";
  for (const SizeRow& r : rows)
    out << r.problem << ',' << r.sx << ',' << r.sy << ',' << r.nz << ',' << r.nx << ',' << r.ny
        << ',' << r.m << ',' << r.n << '\n';
}

const char* to_string(BenchPath path) noexcept {
  return path == BenchPath::dense ? "dense" : "transform";
}

const char* to_string(BenchPhase phase) noexcept {
  switch (phase) {
    case BenchPhase::build: return "build";
    case BenchPhase::forward: return "forward";
    case BenchPhase::transpose: return "transpose";
  }
  return "?";
}

std::vector<double> uniform_vector(std::size_t size, std::mt19937_64& gen) {
  std::vector<double> v(size);
  for (double& x : v) x = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return v;
}

std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
  if (opt.trials < 1) throw ValidationError("trials", "need at least one trial");
  for (std::int64_t k : opt.problems)
    if (k < 1 || k > kProblemCount)
      throw ValidationError("problems", "unknown problem index " + std::to_string(k));

  std::vector<BenchRecord> out;
  for (std::int64_t k : opt.problems) {
    const GridSpec grid = scaled_problem(k, opt.padding);
    auto record = [&](BenchPath path, BenchPhase phase, int trials) {
      BenchRecord r;
      r.problem = k;
      r.padding = opt.padding;
      r.kind = opt.params.kind;
      r.path = path;
      r.phase = phase;
      r.trials = trials;
      r.m = grid.m();
      r.n = grid.n();
      r.seed = opt.seed;
      return r;
    };

    std::mt19937_64 gen(opt.seed + std::uint64_t(k));
    std::vector<std::vector<double>> us, vs;
    for (int t = 0; t < opt.trials; ++t) {
      us.push_back(uniform_vector(std::size_t(grid.n()), gen));
      vs.push_back(uniform_vector(std::size_t(grid.m()), gen));
    }

    const bool dense_fits = dense_bytes(grid) <= opt.memory_guard;
    std::vector<std::vector<double>> ref_fwd, ref_tr;
    if (dense_fits) {
      { const DenseSensitivity warm = assemble_dense(grid, opt.params, opt.memory_guard); }
      DenseSensitivity g;
      BenchRecord b = record(BenchPath::dense, BenchPhase::build, 1);
      b.mean_seconds = time_once([&] { g = assemble_dense(grid, opt.params, opt.memory_guard); });
      out.push_back(b);

      for (ApplyMode mode : {ApplyMode::forward, ApplyMode::transpose}) {
        const bool fwd = mode == ApplyMode::forward;
        auto& inputs = fwd ? us : vs;
        auto& refs = fwd ? ref_fwd : ref_tr;
        (void)dense_apply(g, inputs[0], mode);
        double total = 0.0;
        for (const auto& in : inputs) {
          std::vector<double> res;
          total += time_once([&] { res = dense_apply(g, in, mode); });
          refs.push_back(std::move(res));
        }
        BenchRecord r = record(BenchPath::dense, fwd ? BenchPhase::forward : BenchPhase::transpose,
                               opt.trials);
        r.mean_seconds = total / opt.trials;
        out.push_back(r);
      }
    } else {
      for (BenchPhase ph : {BenchPhase::build, BenchPhase::forward, BenchPhase::transpose}) {
        BenchRecord r = record(BenchPath::dense, ph, 0);
        r.status = "skipped-memory-guard";
        out.push_back(r);
      }
    }

    { const TransformStack warm = build_transform_stack(grid, opt.params); }
    TransformStack stack;
    BenchRecord b = record(BenchPath::transform, BenchPhase::build, 1);
    b.mean_seconds = time_once([&] { stack = build_transform_stack(grid, opt.params); });
    out.push_back(b);

    for (ApplyMode mode : {ApplyMode::forward, ApplyMode::transpose}) {
      const bool fwd = mode == ApplyMode::forward;
      auto& inputs = fwd ? us : vs;
      auto& refs = fwd ? ref_fwd : ref_tr;
      (void)apply(stack, inputs[0], mode);
      double total = 0.0, err = 0.0;
      for (std::size_t t = 0; t < inputs.size(); ++t) {
        std::vector<double> res;
        total += time_once([&] { res = apply(stack, inputs[t], mode); });
        if (dense_fits) err += relative_error(refs[t], res);
      }
      BenchRecord r = record(BenchPath::transform,
                             fwd ? BenchPhase::forward : BenchPhase::transpose, opt.trials);
      r.mean_seconds = total / opt.trials;
      if (dense_fits) r.mean_rel_error = err / opt.trials;
      out.push_back(r);
    }
  }
  return out;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "schema,problem,padding,kernel,path,phase,trials,mean_seconds,mean_rel_error,m,n,seed,"
         "status\n";
  const auto old_precision = out.precision();
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const BenchRecord& r : records) {
    out << kBenchSchemaVersion << ',' << r.problem << ',' << r.padding << ',' << to_string(r.kind)
        << ',' << to_string(r.path) << ',' << to_string(r.phase) << ',' << r.trials << ',';
    if (r.mean_seconds) out << *r.mean_seconds;
    out << ',';
    if (r.mean_rel_error) out << *r.mean_rel_error;
    out << ',' << r.m << ',' << r.n << ',' << r.seed << ',' << r.status << '\n';
  }
  out.precision(old_precision);
}

std::vector<double> simulate(const GridSpec& grid, const KernelParams& params,
                             std::span<const double> model) {
  validate(grid);
  if (model.size() != std::size_t(grid.n()))
    throw DimensionError("model has " + std::to_string(model.size()) + " entries, expected n = " +
                         std::to_string(grid.n()) + " = n_x*n_y*n_z = " +
                         std::to_string(grid.nx()) + "*" + std::to_string(grid.ny()) + "*" +
                         std::to_string(grid.nz));
  const TransformStack stack = build_transform_stack(grid, params);
  return apply(stack, model, ApplyMode::forward);
}

}  // namespace bttb
