#include "bttb/bccb_transform.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "bttb/error.hpp"

namespace bttb {

std::vector<double> circulant_extension_column(std::span<const double> c,
                                               std::span<const double> r) {
  if (c.empty() || r.empty()) throw ValidationError("c", "defining vectors must be non-empty");
  if (c[0] != r[0]) throw ValidationError("c", "c[0] must equal r[0]");
  std::vector<double> col(c.begin(), c.end());
  col.reserve(c.size() + r.size() - 1);
  for (std::size_t p = r.size() - 1; p >= 1; --p) col.push_back(r[p]);
  return col;
}

Matrix<double> transpose_layout(const Matrix<double>& t) {
  const std::size_t rows = t.rows();
  const std::size_t cols = t.cols();
  if (rows == 0 || cols == 0) throw ValidationError("T", "matrix must be non-empty");
  Matrix<double> out(rows, cols);
  for (std::size_t a = 0; a < rows; ++a) {
    const std::size_t src_a = a == 0 ? 0 : rows - a;
    for (std::size_t b = 0; b < cols; ++b) {
      const std::size_t src_b = b == 0 ? 0 : cols - b;
      out(a, b) = t(src_a, src_b);
    }
  }
  return out;
}

Matrix<double> assemble_tcirc(const GridSpec& grid, const LayerResponse& response) {
  const std::size_t rows = std::size_t(grid.sx + grid.nx() - 1);
  const std::size_t cols = std::size_t(grid.sy + grid.ny() - 1);
  Matrix<double> t(rows, cols);
  std::size_t col = 0;
  auto append = [&](std::int64_t dy) {
    const ToeplitzPair tp = response.defining_vectors(dy);
    const std::vector<double> ext = circulant_extension_column(tp.c, tp.r);
    for (std::size_t a = 0; a < rows; ++a) t(a, col) = ext[a];
    ++col;
  };
  // Block columns j = p_yL+1 .. p_yL+s_y of the first block column (below
  // the diagonal), which sit at y-offset 1 - j.
  for (std::int64_t j = grid.pyl + 1; j <= grid.pyl + grid.sy; ++j) append(1 - j);
  // First block row q = s_y+p_yR down to 2, y-offset q - 1.
  for (std::int64_t q = grid.sy + grid.pyr; q >= 2; --q) append(q - 1);
  // Remaining first-block-column entries j = 1 .. p_yL; empty without left padding.
  for (std::int64_t j = 1; j <= grid.pyl; ++j) append(1 - j);
  if (col != cols) throw std::logic_error("T^circ column count mismatch");
  return t;
}

Matrix<cplx> fft2(const Matrix<double>& t) {
  const Fft2d& plan = fft_plan(t.rows(), t.cols());
  ComplexBuffer buf(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) buf[i] = cplx(t.data()[i], 0.0);
  plan.forward(buf.data());
  Matrix<cplx> out(t.rows(), t.cols());
  std::memcpy(static_cast<void*>(out.data()), buf.data(), t.size() * sizeof(cplx));
  return out;
}

TransformStack build_transform_stack(const GridSpec& grid, const KernelParams& params) {
  validate(grid);
  TransformStack stack;
  stack.grid = grid;
  stack.kind = params.kind;
  stack.forward.reserve(std::size_t(grid.nz));
  stack.transpose.reserve(std::size_t(grid.nz));
  const LayerTables tables = prepare_tables(grid, params.kind);
  for (std::size_t layer = 0; layer < std::size_t(grid.nz); ++layer) {
    const LayerResponse resp = LayerResponse::evaluate(grid, params, tables, layer);
    const Matrix<double> tcirc = assemble_tcirc(grid, resp);
    stack.forward.push_back(fft2(tcirc));
    stack.transpose.push_back(fft2(transpose_layout(tcirc)));
  }
  return stack;
}

// ---- persistence ----------------------------------------------------------

namespace {

constexpr std::array<char, 4> kMagic{'B', 'T', 'T', 'B'};

template <typename U>
void put_le(std::ostream& out, U v) {
  std::array<unsigned char, sizeof(U)> bytes;
  for (std::size_t i = 0; i < sizeof(U); ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <typename U>
U get_le(std::istream& in) {
  std::array<unsigned char, sizeof(U)> bytes;
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!in) throw std::runtime_error("transform stack: unexpected end of file");
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= U(bytes[i]) << (8 * i);
  return v;
}

void put_i64(std::ostream& out, std::int64_t v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }
void put_f64(std::ostream& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }
std::int64_t get_i64(std::istream& in) { return std::bit_cast<std::int64_t>(get_le<std::uint64_t>(in)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_le<std::uint64_t>(in)); }

void put_layer(std::ostream& out, const Matrix<cplx>& a) {
  for (const cplx& v : a.values()) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
}

Matrix<cplx> get_layer(std::istream& in, std::size_t rows, std::size_t cols) {
  Matrix<cplx> a(rows, cols);
  for (cplx& v : a.values()) {
    const double re = get_f64(in);
    const double im = get_f64(in);
    v = cplx(re, im);
  }
  return a;
}

}  // namespace

void save_stack(const TransformStack& stack, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kStackFormatVersion);
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(stack.kind));
  const GridSpec& g = stack.grid;
  for (std::int64_t v : {g.sx, g.sy, g.nz, g.pxl, g.pxr, g.pyl, g.pyr}) put_i64(out, v);
  put_f64(out, g.dx);
  put_f64(out, g.dy);
  for (double z : g.z_blocks) put_f64(out, z);
  put_i64(out, std::int64_t(stack.forward.size()));
  put_i64(out, std::int64_t(stack.rows()));
  put_i64(out, std::int64_t(stack.cols()));
  for (const auto& a : stack.forward) put_layer(out, a);
  for (const auto& a : stack.transpose) put_layer(out, a);
  if (!out) throw std::runtime_error("transform stack: write failed");
}

TransformStack load_stack(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("transform stack: bad magic");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kStackFormatVersion)
    throw std::runtime_error("transform stack: unsupported version " + std::to_string(version));
  const auto kind = get_le<std::uint8_t>(in);
  if (kind > 1) throw std::runtime_error("transform stack: unknown kernel kind");

  GridSpec g;
  g.sx = get_i64(in);
  g.sy = get_i64(in);
  g.nz = get_i64(in);
  g.pxl = get_i64(in);
  g.pxr = get_i64(in);
  g.pyl = get_i64(in);
  g.pyr = get_i64(in);
  g.dx = get_f64(in);
  g.dy = get_f64(in);
  if (g.nz < 1 || g.nz > (std::int64_t{1} << 32))
    throw std::runtime_error("transform stack: corrupt layer count");
  g.z_blocks.resize(std::size_t(g.nz + 1));
  for (double& z : g.z_blocks) z = get_f64(in);
  validate(g);

  TransformStack stack;
  stack.grid = g;
  stack.kind = static_cast<KernelKind>(kind);
  const std::int64_t layers = get_i64(in);
  const std::int64_t rows = get_i64(in);
  const std::int64_t cols = get_i64(in);
  if (layers != g.nz || rows != std::int64_t(stack.rows()) || cols != std::int64_t(stack.cols()))
    throw std::runtime_error("transform stack: header inconsistent with grid");
  for (std::int64_t r = 0; r < layers; ++r)
    stack.forward.push_back(get_layer(in, std::size_t(rows), std::size_t(cols)));
  for (std::int64_t r = 0; r < layers; ++r)
    stack.transpose.push_back(get_layer(in, std::size_t(rows), std::size_t(cols)));
  return stack;
}

void save_stack(const TransformStack& stack, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_stack(stack, out);
}

TransformStack load_stack(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_stack(in);
}

}  // namespace bttb
