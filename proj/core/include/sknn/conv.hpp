#ifndef SKNN_CONV_HPP
#define SKNN_CONV_HPP

#include <cstddef>

#include "sknn/tensor.hpp"

namespace sknn {

/**
 * Geometry of one convolution: input h1 x w1 x d2 (channel-last), kernel
 * tensor d2 x h x w x d1, output h2 x w2 x d1 with
 *
 *   h2 = (h1 + 2*pad - h)/stride + 1   (and w2 likewise).
 *
 * Non-integer output extents are rejected, never truncated.
 */
struct ConvGeometry {
    std::size_t in_h = 0, in_w = 0;   // h1, w1
    std::size_t in_channels = 0;      // d2
    std::size_t kh = 0, kw = 0;       // h, w
    std::size_t out_channels = 0;     // d1
    std::size_t stride = 1;
    std::size_t pad = 0;

    std::size_t out_h() const;
    std::size_t out_w() const;
    void validate() const;

    std::size_t kernel_weight_count() const { return in_channels * kh * kw * out_channels; }
};

/**
 * Reference convolution by the direct triple sum
 *   out(x,y,s) = sum over (i,j,c) of kernel(c,i,j,s) * input(x*stride+i-pad, y*stride+j-pad, c)
 * (0-based; positions outside the input contribute zero). This is the
 * oracle the matrix-multiplication path is checked against.
 */
Tensor conv_direct(const Tensor& input, const Tensor& kernel, const ConvGeometry& g);

/**
 * Lowers the input into an (h2*w2) x (d2*h*w) matrix. Row (x,y) is
 * x + h2*y; column (c,i,j) is c + d2*i + d2*h*j (0-based), matching
 * mat_n's row order of the kernel tensor, so that
 *   mat_3(conv_direct(input, kernel)) = im2col(input) * mat_4(kernel).
 */
Tensor im2col(const Tensor& input, const ConvGeometry& g);

/**
 * Adjoint of im2col: scatter-adds column-space gradients back to input
 * positions, so <im2col(x), c> = <x, col2im(c)> for all x and c.
 */
Tensor col2im(const Tensor& grad_cols, const ConvGeometry& g);

}  // namespace sknn

#endif  // SKNN_CONV_HPP
