#include "sknn/activations.hpp"

#include <cmath>
#include <stdexcept>

namespace sknn {

Tensor relu_forward(const Tensor& in) {
    Tensor out = in;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] < 0.0) out[i] = 0.0;
    return out;
}

Tensor relu_backward(const Tensor& in, const Tensor& grad_out) {
    if (!in.same_shape(grad_out)) {
        throw std::invalid_argument("relu_backward shape mismatch: " + shape_str(in.shape()) + " vs " +
                                    shape_str(grad_out.shape()));
    }
    Tensor out = grad_out;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (in[i] <= 0.0) out[i] = 0.0;
    return out;
}

namespace {

void check_pool(const Tensor& in, std::size_t window) {
    if (in.rank() != 3) {
        throw std::invalid_argument("maxpool expects an h x w x c input, got " + shape_str(in.shape()));
    }
    if (window == 0 || in.extent(1) % window != 0 || in.extent(2) % window != 0) {
        throw std::invalid_argument("maxpool window " + std::to_string(window) +
                                    " does not divide spatial extents of " + shape_str(in.shape()));
    }
}

}  // namespace

Tensor maxpool_forward(const Tensor& in, std::size_t window) {
    check_pool(in, window);
    const std::size_t h = in.extent(1), w = in.extent(2), ch = in.extent(3);
    Tensor out({h / window, w / window, ch});
    for (std::size_t c = 0; c < ch; ++c) {
        for (std::size_t oy = 0; oy < w / window; ++oy) {
            for (std::size_t ox = 0; ox < h / window; ++ox) {
                double best = in.at(ox * window, oy * window, c);
                for (std::size_t j = 0; j < window; ++j)
                    for (std::size_t i = 0; i < window; ++i) {
                        const double v = in.at(ox * window + i, oy * window + j, c);
                        if (v > best) best = v;
                    }
                out.at(ox, oy, c) = best;
            }
        }
    }
    return out;
}

Tensor maxpool_backward(const Tensor& in, const Tensor& grad_out, std::size_t window) {
    check_pool(in, window);
    const std::size_t h = in.extent(1), w = in.extent(2), ch = in.extent(3);
    if (grad_out.rank() != 3 || grad_out.extent(1) != h / window || grad_out.extent(2) != w / window ||
        grad_out.extent(3) != ch) {
        throw std::invalid_argument("maxpool_backward gradient " + shape_str(grad_out.shape()) +
                                    " does not match pooled shape");
    }
    Tensor gin({h, w, ch});
    for (std::size_t c = 0; c < ch; ++c) {
        for (std::size_t oy = 0; oy < w / window; ++oy) {
            for (std::size_t ox = 0; ox < h / window; ++ox) {
                // first argmax in scan order, rows fastest
                std::size_t bi = 0, bj = 0;
                double best = in.at(ox * window, oy * window, c);
                for (std::size_t j = 0; j < window; ++j)
                    for (std::size_t i = 0; i < window; ++i) {
                        const double v = in.at(ox * window + i, oy * window + j, c);
                        if (v > best) {
                            best = v;
                            bi = i;
                            bj = j;
                        }
                    }
                gin.at(ox * window + bi, oy * window + bj, c) += grad_out.at(ox, oy, c);
            }
        }
    }
    return gin;
}

std::pair<double, Tensor> softmax_xent(const Tensor& logits, std::size_t label) {
    if (logits.rank() != 1 || label >= logits.size()) {
        throw std::invalid_argument("softmax_xent: bad logits " + shape_str(logits.shape()) + " or label " +
                                    std::to_string(label));
    }
    const std::size_t n = logits.size();
    double mx = logits[0];
    for (std::size_t i = 1; i < n; ++i) mx = std::max(mx, logits[i]);
    Tensor p({n});
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = std::exp(logits[i] - mx);
        z += p[i];
    }
    const double loss = std::log(z) - (logits[label] - mx);
    for (std::size_t i = 0; i < n; ++i) p[i] /= z;
    p[label] -= 1.0;
    return {loss, p};
}

std::size_t argmax(const Tensor& logits) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < logits.size(); ++i)
        if (logits[i] > logits[best]) best = i;
    return best;
}

}  // namespace sknn
