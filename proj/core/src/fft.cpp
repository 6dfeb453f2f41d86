#include "bttb/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <new>
#include <stdexcept>
#include <utility>

namespace bttb {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

PlanRigor g_rigor = PlanRigor::measure;

std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Fft2d>>& plan_cache() {
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Fft2d>> cache;
  return cache;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

ComplexBuffer::ComplexBuffer(std::size_t size) : size_(size) {
  if (size == 0) return;
  auto* raw = reinterpret_cast<cplx*>(fftw_alloc_complex(size));
  if (!raw) throw std::bad_alloc();
  data_.reset(raw);
  zero();
}

void ComplexBuffer::zero() noexcept {
  for (std::size_t i = 0; i < size_; ++i) data_[i] = cplx(0.0, 0.0);
}

void ComplexBuffer::Free::operator()(cplx* p) const noexcept { fftw_free(p); }

Fft2d::Fft2d(std::size_t rows, std::size_t cols, PlanRigor rigor) : rows_(rows), cols_(cols) {
  // Planned on scratch storage, executed on other aligned buffers through
  // fftw_execute_dft.
  ComplexBuffer scratch(rows * cols);
  const unsigned flags = rigor == PlanRigor::measure ? FFTW_MEASURE : FFTW_ESTIMATE;
  const int r = static_cast<int>(rows);
  const int c = static_cast<int>(cols);
  forward_plan_ = fftw_plan_dft_2d(r, c, as_fftw(scratch.data()), as_fftw(scratch.data()),
                                   FFTW_FORWARD, flags);
  backward_plan_ = fftw_plan_dft_2d(r, c, as_fftw(scratch.data()), as_fftw(scratch.data()),
                                    FFTW_BACKWARD, flags);
  if (!forward_plan_ || !backward_plan_) throw std::runtime_error("FFTW planning failed");
}

Fft2d::~Fft2d() {
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

void Fft2d::forward(cplx* data) const noexcept {
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(data), as_fftw(data));
}

void Fft2d::inverse(cplx* data) const noexcept {
  fftw_execute_dft(static_cast<fftw_plan>(backward_plan_), as_fftw(data), as_fftw(data));
  const double scale = 1.0 / static_cast<double>(rows_ * cols_);
  for (std::size_t i = 0; i < rows_ * cols_; ++i) data[i] *= scale;
}

const Fft2d& fft_plan(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("fft_plan: empty shape");
  std::lock_guard lock(planner_mutex());
  auto& cache = plan_cache();
  auto it = cache.find({rows, cols});
  if (it == cache.end())
    it = cache.emplace(std::pair{rows, cols}, std::unique_ptr<Fft2d>(new Fft2d(rows, cols, g_rigor)))
             .first;
  return *it->second;
}

void set_plan_rigor(PlanRigor rigor) {
  std::lock_guard lock(planner_mutex());
  g_rigor = rigor;
}

std::size_t cached_plan_count() {
  std::lock_guard lock(planner_mutex());
  return plan_cache().size();
}

}  // namespace bttb
