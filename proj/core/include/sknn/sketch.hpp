#ifndef SKNN_SKETCH_HPP
#define SKNN_SKETCH_HPP

#include "sknn/sign_matrix.hpp"
#include "sknn/tensor.hpp"

namespace sknn {

/**
 * The mode-n sketch of a tensor: data = t x_n U for a scaled sign matrix U.
 * Keeps the sign-matrix descriptor next to the compressed data so the
 * estimators can be formed later without storing U densely.
 */
struct Sketch {
    std::size_t mode = 0;  // 1-based
    SignMatrix matrix;
    Tensor data;
};

/// data = mode_n_product(t, materialize(sm), mode); extent d_n shrinks to k.
Sketch sketch(const Tensor& t, const SignMatrix& sm, std::size_t mode);

/**
 * Matrix-product estimators built from one-sided sketches of W. Given
 * S1 = U1 W (mode-1 sketch) or S2 = W U2^T (mode-2 sketch), the chains
 *
 *   estimate_left  = U1^T S1 M     (d1 x k)(k x d2)(d2 x d3)
 *   estimate_right = S2 U2 M       (d1 x k)(k x d2)(d2 x d3)
 *
 * are unbiased estimators of W M over the randomness of the sign matrix.
 */
Tensor estimate_left(const Tensor& s1, const Tensor& u1, const Tensor& m);
Tensor estimate_right(const Tensor& s2, const Tensor& u2, const Tensor& m);

Tensor estimate_left(const Sketch& s1, const SignMatrix& u1, const Tensor& m);
Tensor estimate_right(const Sketch& s2, const SignMatrix& u2, const Tensor& m);

}  // namespace sknn

#endif  // SKNN_SKETCH_HPP
