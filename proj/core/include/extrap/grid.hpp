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

#ifndef EXTRAP_GRID_HPP_
#define EXTRAP_GRID_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace extrap {

// Dense H x W x C grid of 64-bit reals, row-major with interleaved channels.
// All numeric stages of the pipeline run in double precision so that
// finite-difference gradient checks stay meaningful; file formats may
// downcast to float32 on write.
struct Grid {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<double> data;

  static Grid zeros(int height, int width, int channels = 1);
  static Grid filled(int height, int width, int channels, double value);

  double& at(int row, int col, int channel = 0) {
    return data[(static_cast<std::size_t>(row) * width + col) * channels +
                channel];
  }
  double at(int row, int col, int channel = 0) const {
    return data[(static_cast<std::size_t>(row) * width + col) * channels +
                channel];
  }

  std::size_t size() const { return data.size(); }
  bool same_shape(const Grid& other) const {
    return height == other.height && width == other.width &&
           channels == other.channels;
  }
};

// Throws InvalidInput when dims are non-positive or data length disagrees.
void validate(const Grid& grid, const char* module_name = "grid");

// Axis-aligned rectangle locating one frame inside another, in pixel units.
struct CropRegion {
  int top = 0;
  int left = 0;
  int height = 0;
  int width = 0;

  int bottom() const { return top + height; }
  int right() const { return left + width; }
  bool contains(int row, int col) const {
    return row >= top && row < bottom() && col >= left && col < right();
  }
  bool within_frame(int frame_height, int frame_width) const {
    return top >= 0 && left >= 0 && height > 0 && width > 0 &&
           bottom() <= frame_height && right() <= frame_width;
  }
  bool operator==(const CropRegion&) const = default;
};

// Centered crop of size round(ratio * frame), rounding half up; when the
// leftover border is odd the extra pixel goes to the bottom/right side.
CropRegion center_crop(int frame_height, int frame_width, double ratio);

// Places `grid` at `region` inside an out_height x out_width frame of zeros.
// Grid dims must equal the region dims and the region must fit the frame.
Grid zero_pad(const Grid& grid, const CropRegion& region, int out_height,
              int out_width);

// Extracts the sub-grid covered by `region`.
Grid crop(const Grid& grid, const CropRegion& region);

enum class ResampleMode {
  kNearest,  // picks the source pixel under the output sample, no blending
  kBicubic,  // Catmull-Rom kernel (a = -0.5), edge-clamped taps
};

// Resamples to out_height x out_width using pixel-center alignment
// (source coordinate of output pixel i is (i + 0.5) * in/out - 0.5).
Grid resample(const Grid& grid, int out_height, int out_width,
              ResampleMode mode);

// Stacks grids of identical spatial dims along the channel axis.
Grid concat_channels(std::span<const Grid> grids);

}  // namespace extrap

#endif  // EXTRAP_GRID_HPP_
