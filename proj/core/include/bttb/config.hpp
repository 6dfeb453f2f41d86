#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "bttb/geometry.hpp"
#include "bttb/kernels.hpp"

namespace bttb {

/// Flat `key = value` configuration. `#` starts a comment; blank lines are
/// ignored; later keys override earlier ones.
using Config = std::map<std::string, std::string>;

Config parse_config(std::istream& in);
Config read_config(const std::string& path);

/// Comma separated list of reals, e.g. "0,1,2.5".
std::vector<double> parse_real_list(const std::string& text, const std::string& field);

/// Grid from keys sx sy nz pxl pxr pyl pyr dx dy zblocks. Paddings default to
/// 0 and spacings to 1; sx, sy, nz and zblocks are required.
GridSpec grid_from_config(const Config& cfg);

/// Kernel from keys kernel (gravity|magnetic), gamma, gamma-scale, D, I, F.
KernelParams kernel_from_config(const Config& cfg);

}  // namespace bttb
