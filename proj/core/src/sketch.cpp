#include "sknn/sketch.hpp"

#include <stdexcept>

namespace sknn {

Sketch sketch(const Tensor& t, const SignMatrix& sm, std::size_t mode) {
    if (sm.d != t.extent(mode)) {
        throw std::invalid_argument("sketch: sign matrix cols " + std::to_string(sm.d) +
                                    " != extent of mode " + std::to_string(mode) + " in " +
                                    shape_str(t.shape()));
    }
    Sketch s;
    s.mode = mode;
    s.matrix = sm;
    s.data = mode_n_product(t, materialize(sm), mode);
    return s;
}

Tensor estimate_left(const Tensor& s1, const Tensor& u1, const Tensor& m) {
    // U1^T (S1 M): keeps the intermediate at k x d3.
    return matmul(transpose(u1), matmul(s1, m));
}

Tensor estimate_right(const Tensor& s2, const Tensor& u2, const Tensor& m) {
    return matmul(s2, matmul(u2, m));
}

Tensor estimate_left(const Sketch& s1, const SignMatrix& u1, const Tensor& m) {
    return estimate_left(s1.data, materialize(u1), m);
}

Tensor estimate_right(const Sketch& s2, const SignMatrix& u2, const Tensor& m) {
    return estimate_right(s2.data, materialize(u2), m);
}

}  // namespace sknn
