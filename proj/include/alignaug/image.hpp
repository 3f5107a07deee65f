#pragma once

#include <cstddef>
#include <vector>

namespace alignaug {

// Grayscale image, row-major, intensities in [0, 1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<double> pixels;

  static Image zeros(int h, int w);

  double& at(int row, int col) {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
  double at(int row, int col) const {
    return pixels[static_cast<std::size_t>(row) * width + col];
  }
  bool empty() const { return height <= 0 || width <= 0; }
  std::size_t size() const { return pixels.size(); }
};

// Bilinear sample at continuous pixel coordinates (px along width, py along
// height), zero padding outside the lattice. Nested lerp form: sampling a
// locally-constant patch reproduces the constant exactly.
double bilinear_sample(const Image& img, double px, double py);

// Sum of squared intensity differences. Throws data_error on shape mismatch.
double ssd(const Image& a, const Image& b);

}  // namespace alignaug
