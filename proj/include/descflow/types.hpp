#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace descflow {

// Base error for the library; subcommands surface these verbatim.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PixelCoord {
  int x = 0;
  int y = 0;
};

inline bool operator==(PixelCoord a, PixelCoord b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(PixelCoord a, PixelCoord b) { return !(a == b); }

struct PointF {
  double x = 0.0;
  double y = 0.0;
};

// Row-major luminance grid, values in [0,1].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  double at(int x, int y) const { return data[static_cast<size_t>(y) * width + x]; }
  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
};

// Per-pixel displacement with validity mask.
struct FlowField {
  int width = 0;
  int height = 0;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<uint8_t> valid;

  FlowField() = default;
  FlowField(int w, int h)
      : width(w),
        height(h),
        u(static_cast<size_t>(w) * h, 0.0),
        v(static_cast<size_t>(w) * h, 0.0),
        valid(static_cast<size_t>(w) * h, 0) {}

  size_t idx(int x, int y) const { return static_cast<size_t>(y) * width + x; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

// Per-pixel descriptor vectors, contiguous per pixel.
struct DescriptorField {
  int width = 0;
  int height = 0;
  int dim = 0;
  std::vector<double> data;

  DescriptorField() = default;
  DescriptorField(int w, int h, int d)
      : width(w), height(h), dim(d), data(static_cast<size_t>(w) * h * d, 0.0) {}

  const double* at(int x, int y) const {
    return data.data() + (static_cast<size_t>(y) * width + x) * dim;
  }
  double* at(int x, int y) { return data.data() + (static_cast<size_t>(y) * width + x) * dim; }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

// Square luminance window; values may leave [0,1] after normalization.
struct Patch {
  int size = 0;
  std::vector<double> data;

  Patch() = default;
  explicit Patch(int s) : size(s), data(static_cast<size_t>(s) * s, 0.0) {}

  double at(int x, int y) const { return data[static_cast<size_t>(y) * size + x]; }
  double& at(int x, int y) { return data[static_cast<size_t>(y) * size + x]; }
};

}  // namespace descflow
