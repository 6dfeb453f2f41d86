#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace bttb {

using cplx = std::complex<double>;

/// SIMD-aligned complex scratch array (FFTW allocator). Move-only.
class ComplexBuffer {
 public:
  ComplexBuffer() = default;
  explicit ComplexBuffer(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  cplx* data() noexcept { return data_.get(); }
  const cplx* data() const noexcept { return data_.get(); }
  std::span<cplx> span() noexcept { return {data_.get(), size_}; }
  cplx& operator[](std::size_t i) noexcept { return data_[i]; }
  const cplx& operator[](std::size_t i) const noexcept { return data_[i]; }
  void zero() noexcept;

 private:
  struct Free {
    void operator()(cplx* p) const noexcept;
  };
  std::unique_ptr<cplx[], Free> data_;
  std::size_t size_ = 0;
};

enum class PlanRigor { estimate, measure };

/// In-place 2-D DFT of a row-major rows x cols array. The forward transform
/// is unnormalized; the inverse carries 1 / (rows cols), so
/// inverse(forward(X)) == X up to rounding.
class Fft2d {
 public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// `data` must come from a ComplexBuffer of at least rows * cols entries.
  void forward(cplx* data) const noexcept;
  void inverse(cplx* data) const noexcept;

  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;
  ~Fft2d();

 private:
  friend const Fft2d& fft_plan(std::size_t rows, std::size_t cols);
  Fft2d(std::size_t rows, std::size_t cols, PlanRigor rigor);

  std::size_t rows_;
  std::size_t cols_;
  void* forward_plan_;
  void* backward_plan_;
};

/// Plans are created on first request for a shape and kept for the process
/// lifetime. Safe to call concurrently.
const Fft2d& fft_plan(std::size_t rows, std::size_t cols);

/// Planner effort for plans created after the call (default: measure).
void set_plan_rigor(PlanRigor rigor);

/// Number of distinct shapes planned so far.
std::size_t cached_plan_count();

}  // namespace bttb
