#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>

#include "ccp/errors.hpp"
#include "ccp/instance.hpp"

namespace ccp {
namespace detail {

inline std::array<int, 3> cell_rgb(const ColorMatrix& T, std::size_t i,
                                   std::size_t j) {
  auto idx = T.color_index(i, j);
  if (!idx) return {255, 255, 255};
  switch (T.palette().name(*idx)) {
    case 'A':
      return {0, 127, 255};
    case 'B':
      return {245, 245, 220};
    case 'C':
      return {0, 255, 255};
    default: {
      // Letters outside the standard palette get a deterministic gray.
      int v = 32 + ((T.palette().name(*idx) - 'A') * 8) % 192;
      return {v, v, v};
    }
  }
}

}  // namespace detail

// Plain-text PPM (P3) image of a realization, one pixel per cell scaled up
// by an integer factor. Output is a pure function of the input, so renders
// are byte-stable.
inline std::string render_ppm(const ColorMatrix& T, int scale = 1) {
  if (scale < 1) throw ArgumentError("render_ppm: scale must be >= 1");
  const std::size_t w = T.size() * static_cast<std::size_t>(scale);
  std::ostringstream out;
  out << "P3\n" << w << " " << w << "\n255\n";
  for (std::size_t i = 0; i < T.size(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < T.size(); ++j) {
      auto [r, g, b] = detail::cell_rgb(T, i, j);
      for (int s = 0; s < scale; ++s) {
        if (!row.empty()) row.push_back(' ');
        row += std::to_string(r);
        row.push_back(' ');
        row += std::to_string(g);
        row.push_back(' ');
        row += std::to_string(b);
      }
    }
    row.push_back('\n');
    for (int s = 0; s < scale; ++s) out << row;
  }
  return out.str();
}

}  // namespace ccp
