// Copyright 2026 The Extrap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extrap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "extrap/errors.hpp"

namespace extrap {
namespace {

constexpr const char* kModule = "grid";

int round_half_up(double x) { return static_cast<int>(std::floor(x + 0.5)); }

int clamp_index(int i, int n) { return std::clamp(i, 0, n - 1); }

// Catmull-Rom weight (a = -0.5) for a tap at distance d >= 0 from the sample.
double catmull_rom(double d) {
  constexpr double a = -0.5;
  if (d <= 1.0) {
    return ((a + 2.0) * d - (a + 3.0)) * d * d + 1.0;
  }
  if (d < 2.0) {
    return ((a * d - 5.0 * a) * d + 8.0 * a) * d - 4.0 * a;
  }
  return 0.0;
}

// Per-axis resampling plan: for each output index, the four clamped source
// taps and their kernel weights (nearest uses a single tap).
struct AxisTaps {
  std::vector<int> index;      // flattened taps, 4 per output pixel
  std::vector<double> weight;  // matching weights
};

AxisTaps bicubic_taps(int in_size, int out_size) {
  AxisTaps taps;
  taps.index.resize(static_cast<std::size_t>(out_size) * 4);
  taps.weight.resize(static_cast<std::size_t>(out_size) * 4);
  const double scale = static_cast<double>(in_size) / out_size;
  for (int i = 0; i < out_size; ++i) {
    const double x = (i + 0.5) * scale - 0.5;
    const int x0 = static_cast<int>(std::floor(x));
    for (int k = 0; k < 4; ++k) {
      const int tap = x0 - 1 + k;
      taps.index[static_cast<std::size_t>(i) * 4 + k] =
          clamp_index(tap, in_size);
      taps.weight[static_cast<std::size_t>(i) * 4 + k] =
          catmull_rom(std::abs(x - tap));
    }
  }
  return taps;
}

std::vector<int> nearest_taps(int in_size, int out_size) {
  std::vector<int> taps(out_size);
  const double scale = static_cast<double>(in_size) / out_size;
  for (int i = 0; i < out_size; ++i) {
    taps[i] = clamp_index(static_cast<int>((i + 0.5) * scale), in_size);
  }
  return taps;
}

}  // namespace

Grid Grid::zeros(int height, int width, int channels) {
  return filled(height, width, channels, 0.0);
}

Grid Grid::filled(int height, int width, int channels, double value) {
  Grid grid;
  grid.height = height;
  grid.width = width;
  grid.channels = channels;
  validate_shape_only:
  if (height < 1 || width < 1 || channels < 1) {
    throw InvalidInput(kModule, "grid dims must be positive, got " +
                                    std::to_string(height) + "x" +
                                    std::to_string(width) + "x" +
                                    std::to_string(channels));
  }
  grid.data.assign(static_cast<std::size_t>(height) * width * channels, value);
  return grid;
}

void validate(const Grid& grid, const char* module_name) {
  if (grid.height < 1 || grid.width < 1 || grid.channels < 1) {
    throw InvalidInput(module_name,
                       "grid dims must be positive, got " +
                           std::to_string(grid.height) + "x" +
                           std::to_string(grid.width) + "x" +
                           std::to_string(grid.channels));
  }
  const std::size_t expected = static_cast<std::size_t>(grid.height) *
                               grid.width * grid.channels;
  if (grid.data.size() != expected) {
    throw InvalidInput(module_name,
                       "grid data length " + std::to_string(grid.data.size()) +
                           " does not match dims (" + std::to_string(expected) +
                           " expected)");
  }
}

CropRegion center_crop(int frame_height, int frame_width, double ratio) {
  if (frame_height < 1 || frame_width < 1) {
    throw InvalidInput(kModule, "degenerate frame " +
                                    std::to_string(frame_height) + "x" +
                                    std::to_string(frame_width));
  }
  if (!(ratio > 0.0) || ratio > 1.0) {
    throw InvalidInput(kModule,
                       "crop ratio must be in (0, 1], got " +
                           std::to_string(ratio));
  }
  const int crop_h = round_half_up(ratio * frame_height);
  const int crop_w = round_half_up(ratio * frame_width);
  if (crop_h < 1 || crop_w < 1) {
    throw InvalidInput(kModule, "crop ratio rounds to an empty region");
  }
  CropRegion region;
  region.height = crop_h;
  region.width = crop_w;
  region.top = (frame_height - crop_h) / 2;
  region.left = (frame_width - crop_w) / 2;
  return region;
}

Grid zero_pad(const Grid& grid, const CropRegion& region, int out_height,
              int out_width) {
  validate(grid, kModule);
  if (!region.within_frame(out_height, out_width)) {
    throw InvalidInput(kModule, "pad region out of bounds");
  }
  if (grid.height != region.height || grid.width != region.width) {
    throw InvalidInput(kModule, "grid dims do not match pad region");
  }
  Grid out = Grid::zeros(out_height, out_width, grid.channels);
  for (int r = 0; r < grid.height; ++r) {
    const double* src = &grid.data[static_cast<std::size_t>(r) * grid.width *
                                   grid.channels];
    double* dst = &out.at(region.top + r, region.left, 0);
    std::copy(src, src + static_cast<std::size_t>(grid.width) * grid.channels,
              dst);
  }
  return out;
}

Grid crop(const Grid& grid, const CropRegion& region) {
  validate(grid, kModule);
  if (!region.within_frame(grid.height, grid.width)) {
    throw InvalidInput(kModule, "crop region out of bounds");
  }
  Grid out = Grid::zeros(region.height, region.width, grid.channels);
  for (int r = 0; r < region.height; ++r) {
    const double* src = &grid.at(region.top + r, region.left, 0);
    double* dst =
        &out.data[static_cast<std::size_t>(r) * region.width * grid.channels];
    std::copy(src,
              src + static_cast<std::size_t>(region.width) * grid.channels,
              dst);
  }
  return out;
}

Grid resample(const Grid& grid, int out_height, int out_width,
              ResampleMode mode) {
  validate(grid, kModule);
  if (out_height < 1 || out_width < 1) {
    throw InvalidInput(kModule, "resample target dims must be positive");
  }
  Grid out = Grid::zeros(out_height, out_width, grid.channels);
  if (mode == ResampleMode::kNearest) {
    const std::vector<int> rows = nearest_taps(grid.height, out_height);
    const std::vector<int> cols = nearest_taps(grid.width, out_width);
    for (int r = 0; r < out_height; ++r) {
      for (int c = 0; c < out_width; ++c) {
        for (int ch = 0; ch < grid.channels; ++ch) {
          out.at(r, c, ch) = grid.at(rows[r], cols[c], ch);
        }
      }
    }
    return out;
  }

  // Separable bicubic: rows of `grid` filtered horizontally into `mid`,
  // then vertically into `out`.
  const AxisTaps col_taps = bicubic_taps(grid.width, out_width);
  const AxisTaps row_taps = bicubic_taps(grid.height, out_height);
  Grid mid = Grid::zeros(grid.height, out_width, grid.channels);
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < out_width; ++c) {
      for (int ch = 0; ch < grid.channels; ++ch) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
          acc += col_taps.weight[static_cast<std::size_t>(c) * 4 + k] *
                 grid.at(r, col_taps.index[static_cast<std::size_t>(c) * 4 + k],
                         ch);
        }
        mid.at(r, c, ch) = acc;
      }
    }
  }
  for (int r = 0; r < out_height; ++r) {
    for (int c = 0; c < out_width; ++c) {
      for (int ch = 0; ch < grid.channels; ++ch) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
          acc += row_taps.weight[static_cast<std::size_t>(r) * 4 + k] *
                 mid.at(row_taps.index[static_cast<std::size_t>(r) * 4 + k], c,
                        ch);
        }
        out.at(r, c, ch) = acc;
      }
    }
  }
  return out;
}

Grid concat_channels(std::span<const Grid> grids) {
  if (grids.empty()) {
    throw InvalidInput(kModule, "nothing to concatenate");
  }
  int total_channels = 0;
  for (const Grid& g : grids) {
    validate(g, kModule);
    if (g.height != grids[0].height || g.width != grids[0].width) {
      throw InvalidInput(kModule,
                         "channel concat requires identical spatial dims");
    }
    total_channels += g.channels;
  }
  Grid out = Grid::zeros(grids[0].height, grids[0].width, total_channels);
  for (int r = 0; r < out.height; ++r) {
    for (int c = 0; c < out.width; ++c) {
      int ch_base = 0;
      for (const Grid& g : grids) {
        for (int ch = 0; ch < g.channels; ++ch) {
          out.at(r, c, ch_base + ch) = g.at(r, c, ch);
        }
        ch_base += g.channels;
      }
    }
  }
  return out;
}

}  // namespace extrap
