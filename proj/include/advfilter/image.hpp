#ifndef ADVFILTER_IMAGE_HPP
#define ADVFILTER_IMAGE_HPP

#include <cstddef>
#include <vector>

#include "advfilter/common.hpp"

namespace advfilter {

// H x W x C pixel tensor in planar layout: all of channel 0, then channel 1, ...
// with rows contiguous inside a channel. Pixel values are reals in [0, 255];
// arithmetic may leave the range, clip_to_range() re-establishes it.
struct Image {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<double> data;

    Image() = default;
    Image(int h, int w, int c, double fill = 0.0)
        : height(h), width(w), channels(c),
          data(static_cast<std::size_t>(h) * w * c, fill) {}

    double& at(int c, int y, int x) {
        return data[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    double at(int c, int y, int x) const {
        return data[(static_cast<std::size_t>(c) * height + y) * width + x];
    }

    const double* plane(int c) const {
        return data.data() + static_cast<std::size_t>(c) * height * width;
    }
    double* plane(int c) {
        return data.data() + static_cast<std::size_t>(c) * height * width;
    }

    std::size_t size() const { return data.size(); }
    bool same_shape(const Image& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
};

// Shares the pixel grid of its source image; values are unconstrained in sign
// and magnitude.
using Perturbation = Image;

// BT.601 luma: 0.299 R + 0.587 G + 0.114 B. Requires channels == 3.
Image to_grayscale(const Image& x);

// Clamp every value into [0, 255].
Image clip_to_range(const Image& x);

// x + delta, elementwise, without clipping.
Image add(const Image& x, const Perturbation& delta);

// clip_to_range(x + delta) - x: the perturbation the model actually sees.
Perturbation effective_perturbation(const Image& x, const Perturbation& delta);

double l2_norm(const Perturbation& delta);

// 10 log10(n I_max^2 / ||delta||^2) in dB, n = height*width*channels.
// A zero perturbation yields +infinity.
double psnr(const Perturbation& delta, double i_max = 255.0);

}  // namespace advfilter

#endif
