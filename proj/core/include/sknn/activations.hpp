#ifndef SKNN_ACTIVATIONS_HPP
#define SKNN_ACTIVATIONS_HPP

#include <cstddef>
#include <utility>

#include "sknn/tensor.hpp"

namespace sknn {

/// Elementwise max(0, x). The subgradient at 0 is taken as 0.
Tensor relu_forward(const Tensor& in);
Tensor relu_backward(const Tensor& in, const Tensor& grad_out);

/**
 * Non-overlapping max pooling with a square window and stride equal to the
 * window. The window must divide both spatial extents. The gradient is
 * routed to the first maximum in scan order (rows fastest).
 */
Tensor maxpool_forward(const Tensor& in, std::size_t window);
Tensor maxpool_backward(const Tensor& in, const Tensor& grad_out, std::size_t window);

/**
 * Softmax cross-entropy with max-subtraction for stability.
 * Returns (loss, d loss / d logits); the gradient is softmax - onehot.
 */
std::pair<double, Tensor> softmax_xent(const Tensor& logits, std::size_t label);

/// Index of the largest logit (ties: lowest index).
std::size_t argmax(const Tensor& logits);

}  // namespace sknn

#endif  // SKNN_ACTIVATIONS_HPP
