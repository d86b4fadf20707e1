#include "sknn/conv.hpp"

#include <stdexcept>
#include <string>

namespace sknn {

namespace {

std::size_t out_extent(std::size_t in, std::size_t k, std::size_t stride, std::size_t pad,
                       const char* axis) {
    const std::size_t padded = in + 2 * pad;
    if (padded < k) {
        throw std::invalid_argument(std::string("conv geometry: kernel exceeds padded input along ") + axis);
    }
    if ((padded - k) % stride != 0) {
        throw std::invalid_argument(std::string("conv geometry: non-integer output extent along ") + axis +
                                    " (in=" + std::to_string(in) + ", k=" + std::to_string(k) +
                                    ", stride=" + std::to_string(stride) + ", pad=" + std::to_string(pad) + ")");
    }
    return (padded - k) / stride + 1;
}

void check_input(const Tensor& input, const ConvGeometry& g) {
    if (input.rank() != 3 || input.extent(1) != g.in_h || input.extent(2) != g.in_w ||
        input.extent(3) != g.in_channels) {
        throw std::invalid_argument("conv input " + shape_str(input.shape()) + " does not match geometry (" +
                                    std::to_string(g.in_h) + "x" + std::to_string(g.in_w) + "x" +
                                    std::to_string(g.in_channels) + ")");
    }
}

}  // namespace

std::size_t ConvGeometry::out_h() const { return out_extent(in_h, kh, stride, pad, "h"); }
std::size_t ConvGeometry::out_w() const { return out_extent(in_w, kw, stride, pad, "w"); }

void ConvGeometry::validate() const {
    if (in_h == 0 || in_w == 0 || in_channels == 0 || kh == 0 || kw == 0 || out_channels == 0 || stride == 0) {
        throw std::invalid_argument("conv geometry: all extents and the stride must be >= 1");
    }
    (void)out_h();
    (void)out_w();
}

Tensor conv_direct(const Tensor& input, const Tensor& kernel, const ConvGeometry& g) {
    g.validate();
    check_input(input, g);
    if (kernel.rank() != 4 || kernel.extent(1) != g.in_channels || kernel.extent(2) != g.kh ||
        kernel.extent(3) != g.kw || kernel.extent(4) != g.out_channels) {
        throw std::invalid_argument("conv kernel " + shape_str(kernel.shape()) + " does not match geometry");
    }
    const std::size_t h2 = g.out_h(), w2 = g.out_w();
    Tensor out({h2, w2, g.out_channels});
    for (std::size_t s = 0; s < g.out_channels; ++s) {
        for (std::size_t y = 0; y < w2; ++y) {
            for (std::size_t x = 0; x < h2; ++x) {
                double acc = 0.0;
                for (std::size_t j = 0; j < g.kw; ++j) {
                    const std::size_t iy = y * g.stride + j;  // padded coordinate
                    if (iy < g.pad || iy >= g.pad + g.in_w) continue;
                    for (std::size_t i = 0; i < g.kh; ++i) {
                        const std::size_t ix = x * g.stride + i;
                        if (ix < g.pad || ix >= g.pad + g.in_h) continue;
                        for (std::size_t c = 0; c < g.in_channels; ++c) {
                            acc += kernel.at(c, i, j, s) * input.at(ix - g.pad, iy - g.pad, c);
                        }
                    }
                }
                out.at(x, y, s) = acc;
            }
        }
    }
    return out;
}

Tensor im2col(const Tensor& input, const ConvGeometry& g) {
    g.validate();
    check_input(input, g);
    const std::size_t h2 = g.out_h(), w2 = g.out_w();
    const std::size_t rows = h2 * w2;
    const std::size_t cols = g.in_channels * g.kh * g.kw;
    Tensor out({rows, cols});
    for (std::size_t j = 0; j < g.kw; ++j) {
        for (std::size_t i = 0; i < g.kh; ++i) {
            for (std::size_t c = 0; c < g.in_channels; ++c) {
                const std::size_t col = c + g.in_channels * (i + g.kh * j);
                for (std::size_t y = 0; y < w2; ++y) {
                    const std::size_t iy = y * g.stride + j;
                    const bool y_ok = iy >= g.pad && iy < g.pad + g.in_w;
                    for (std::size_t x = 0; x < h2; ++x) {
                        const std::size_t ix = x * g.stride + i;
                        double v = 0.0;
                        if (y_ok && ix >= g.pad && ix < g.pad + g.in_h) {
                            v = input.at(ix - g.pad, iy - g.pad, c);
                        }
                        out.at(x + h2 * y, col) = v;
                    }
                }
            }
        }
    }
    return out;
}

Tensor col2im(const Tensor& grad_cols, const ConvGeometry& g) {
    g.validate();
    const std::size_t h2 = g.out_h(), w2 = g.out_w();
    const std::size_t rows = h2 * w2;
    const std::size_t cols = g.in_channels * g.kh * g.kw;
    if (grad_cols.rank() != 2 || grad_cols.rows() != rows || grad_cols.cols() != cols) {
        throw std::invalid_argument("col2im: gradient " + shape_str(grad_cols.shape()) + " does not match (" +
                                    std::to_string(rows) + "x" + std::to_string(cols) + ")");
    }
    Tensor out({g.in_h, g.in_w, g.in_channels});
    for (std::size_t j = 0; j < g.kw; ++j) {
        for (std::size_t i = 0; i < g.kh; ++i) {
            for (std::size_t c = 0; c < g.in_channels; ++c) {
                const std::size_t col = c + g.in_channels * (i + g.kh * j);
                for (std::size_t y = 0; y < w2; ++y) {
                    const std::size_t iy = y * g.stride + j;
                    if (iy < g.pad || iy >= g.pad + g.in_w) continue;
                    for (std::size_t x = 0; x < h2; ++x) {
                        const std::size_t ix = x * g.stride + i;
                        if (ix < g.pad || ix >= g.pad + g.in_h) continue;
                        out.at(ix - g.pad, iy - g.pad, c) += grad_cols.at(x + h2 * y, col);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace sknn
