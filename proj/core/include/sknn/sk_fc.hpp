#ifndef SKNN_SK_FC_HPP
#define SKNN_SK_FC_HPP

#include <cstdint>
#include <vector>

#include "sknn/layer_grads.hpp"
#include "sknn/sign_matrix.hpp"
#include "sknn/tensor.hpp"

namespace sknn {

/**
 * Sketch-parametrized fully connected layer. Instead of a d1 x d2 weight
 * matrix it stores ell pairs of one-sided sketches plus their frozen sign
 * matrices:
 *
 *   S1_i in R^(k x d2) with U1_i in R^(k x d1)   (row-side sketch)
 *   S2_i in R^(d1 x k) with U2_i in R^(k x d2)   (column-side sketch)
 *
 * and a bias b in R^d1. The forward pass averages the 2*ell unbiased
 * reconstructions:
 *
 *   a = (1/2ell) * sum_i U1_i^T S1_i h  +  (1/2ell) * sum_i S2_i U2_i h  +  b
 *
 * Trainable parameters: the S tensors and b. The sign matrices are
 * seed-derived constants, cached densely for speed but never treated as
 * parameters. Trainable count is ell*k*(d1+d2) + d1.
 *
 * Parameter order (for grads and optimizers): S1_1..S1_ell, S2_1..S2_ell, b.
 */
struct SkFcParams {
    std::size_t d1 = 0, d2 = 0;
    std::size_t k = 0, ell = 0;
    std::vector<Tensor> s1;       // ell tensors, k x d2
    std::vector<Tensor> s2;       // ell tensors, d1 x k
    std::vector<SignMatrix> u1;   // ell descriptors, k x d1
    std::vector<SignMatrix> u2;   // ell descriptors, k x d2
    std::vector<Tensor> u1_dense; // cached materializations
    std::vector<Tensor> u2_dense;
    Tensor bias;                  // d1

    std::size_t weight_count() const { return ell * k * (d1 + d2); }
    std::size_t param_count() const { return weight_count() + d1; }

    /// Rebuilds the dense sign-matrix cache from the descriptors.
    void refresh_sign_cache();
};

/**
 * Random initialization for training from scratch. Sign-matrix seeds come
 * from sub_seed(seed, 2i) / sub_seed(seed, 2i+1); S entries are uniform in
 * +-glorot_limit(d2, d1) * sqrt(2*ell). The sqrt(2*ell) factor makes the
 * variance of the averaged forward output equal a Glorot-initialized dense
 * layer's (the 1/sqrt(k) scale of the sign matrices already cancels k).
 */
SkFcParams sk_fc_init(std::size_t d1, std::size_t d2, std::size_t k, std::size_t ell, std::uint64_t seed);

/// SK-FC parameters that reproduce a dense layer in expectation:
/// S1_i = U1_i W, S2_i = W U2_i^T.
SkFcParams sketch_from_dense_fc(const Tensor& w, const Tensor& b, std::size_t k, std::size_t ell,
                                std::uint64_t seed);

/// Cost O(ell*k*(d1+d2)) multiply-adds; never forms a d1 x d2 matrix.
Tensor sk_fc_forward(const SkFcParams& p, const Tensor& h_in);

/**
 * Closed-form gradients:
 *   dS1_i = U1_i g h^T / 2ell
 *   dS2_i = g (U2_i h)^T / 2ell
 *   dh    = sum_i (S1_i^T U1_i g + U2_i^T S2_i^T g) / 2ell
 *   db    = g
 */
LayerGrads sk_fc_backward(const SkFcParams& p, const Tensor& h_in, const Tensor& g);

}  // namespace sknn

#endif  // SKNN_SK_FC_HPP
