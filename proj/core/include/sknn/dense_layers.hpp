#ifndef SKNN_DENSE_LAYERS_HPP
#define SKNN_DENSE_LAYERS_HPP

#include <cstdint>

#include "sknn/conv.hpp"
#include "sknn/layer_grads.hpp"
#include "sknn/tensor.hpp"

namespace sknn {

/// Classic affine layer a = W h + b. Parameter order: [W, b].
struct DenseFcParams {
    Tensor weight;  // d1 x d2
    Tensor bias;    // d1

    static DenseFcParams glorot(std::size_t d1, std::size_t d2, std::uint64_t seed);
    std::size_t weight_count() const { return weight.size(); }
};

Tensor dense_fc_forward(const DenseFcParams& p, const Tensor& h_in);
LayerGrads dense_fc_backward(const DenseFcParams& p, const Tensor& h_in, const Tensor& g);

/**
 * Convolution evaluated as im2col(input) * mat_4(kernel), with an optional
 * per-output-channel bias. Parameter order: [kernel, (bias)].
 */
struct DenseConvParams {
    ConvGeometry geometry;
    Tensor kernel;  // d2 x h x w x d1
    bool has_bias = false;
    Tensor bias;  // d1 when present

    static DenseConvParams glorot(const ConvGeometry& g, std::uint64_t seed, bool with_bias);
    std::size_t weight_count() const { return kernel.size(); }
};

Tensor dense_conv_forward(const DenseConvParams& p, const Tensor& input);
LayerGrads dense_conv_backward(const DenseConvParams& p, const Tensor& input, const Tensor& grad_out);

/// Glorot-uniform limit sqrt(6 / (fan_in + fan_out)).
double glorot_limit(std::size_t fan_in, std::size_t fan_out);

}  // namespace sknn

#endif  // SKNN_DENSE_LAYERS_HPP
