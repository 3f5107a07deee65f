#include "alignaug/image.hpp"

#include <cmath>

#include "alignaug/errors.hpp"

namespace alignaug {

Image Image::zeros(int h, int w) {
  Image img;
  img.height = h;
  img.width = w;
  img.pixels.assign(static_cast<std::size_t>(h) * w, 0.0);
  return img;
}

double bilinear_sample(const Image& img, double px, double py) {
  const int j0 = static_cast<int>(std::floor(px));
  const int i0 = static_cast<int>(std::floor(py));
  const double fx = px - j0;
  const double fy = py - i0;

  auto tap = [&](int i, int j) -> double {
    if (i < 0 || i >= img.height || j < 0 || j >= img.width) return 0.0;
    return img.pixels[static_cast<std::size_t>(i) * img.width + j];
  };

  const double a = tap(i0, j0);
  const double b = tap(i0, j0 + 1);
  const double c = tap(i0 + 1, j0);
  const double d = tap(i0 + 1, j0 + 1);
  const double top = a + fx * (b - a);
  const double bottom = c + fx * (d - c);
  return top + fy * (bottom - top);
}

double ssd(const Image& a, const Image& b) {
  if (a.height != b.height || a.width != b.width)
    throw data_error("ssd: image shapes differ");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double diff = a.pixels[i] - b.pixels[i];
    acc += diff * diff;
  }
  return acc;
}

}  // namespace alignaug
