#ifndef SKNN_LAYER_GRADS_HPP
#define SKNN_LAYER_GRADS_HPP

#include <vector>

#include "sknn/tensor.hpp"

namespace sknn {

/**
 * Result of one backward pass. `param_grads` mirrors the layer's trainable
 * tensors in the layer's documented parameter order; `input_grad` has the
 * layer input's shape.
 */
struct LayerGrads {
    std::vector<Tensor> param_grads;
    Tensor input_grad;
};

}  // namespace sknn

#endif  // SKNN_LAYER_GRADS_HPP
