#include "bttb/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "bttb/error.hpp"

namespace bttb {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::string* find(const Config& cfg, const std::string& key) {
  auto it = cfg.find(key);
  return it == cfg.end() ? nullptr : &it->second;
}

std::int64_t get_int(const Config& cfg, const std::string& key, const std::int64_t* fallback) {
  const std::string* v = find(cfg, key);
  if (!v) {
    if (!fallback) throw ValidationError(key, "missing required key");
    return *fallback;
  }
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size())
    throw ValidationError(key, "expected an integer, got '" + *v + "'");
  return out;
}

double to_real(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (trim(text.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(key, "expected a number, got '" + text + "'");
}

double get_real(const Config& cfg, const std::string& key, double fallback) {
  const std::string* v = find(cfg, key);
  return v ? to_real(*v, key) : fallback;
}

}  // namespace

Config parse_config(std::istream& in) {
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError("line " + std::to_string(lineno), "expected key = value");
    cfg[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return cfg;
}

Config read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return parse_config(in);
}

std::vector<double> parse_real_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_real(trim(item), field));
  return out;
}

GridSpec grid_from_config(const Config& cfg) {
  constexpr std::int64_t zero = 0;
  const std::string* z = find(cfg, "zblocks");
  if (!z) throw ValidationError("zblocks", "missing required key");
  return make_grid(get_int(cfg, "sx", nullptr), get_int(cfg, "sy", nullptr),
                   get_int(cfg, "nz", nullptr), get_int(cfg, "pxl", &zero),
                   get_int(cfg, "pxr", &zero), get_int(cfg, "pyl", &zero),
                   get_int(cfg, "pyr", &zero), get_real(cfg, "dx", 1.0), get_real(cfg, "dy", 1.0),
                   parse_real_list(*z, "zblocks"));
}

KernelParams kernel_from_config(const Config& cfg) {
  const std::string* kind = find(cfg, "kernel");
  const double scale = get_real(cfg, "gamma-scale", 1.0);
  if (!kind || *kind == "gravity")
    return KernelParams::gravity(get_real(cfg, "gamma", kGravitationalConstant), scale);
  if (*kind == "magnetic")
    return KernelParams::magnetic(get_real(cfg, "D", 0.0), get_real(cfg, "I", 90.0),
                                  get_real(cfg, "F", 50000.0), scale);
  throw ValidationError("kernel", "expected gravity or magnetic, got '" + *kind + "'");
}

}  // namespace bttb
