#include "sknn/dense_layers.hpp"

#include <cmath>
#include <stdexcept>

#include "sknn/rng.hpp"

namespace sknn {

double glorot_limit(std::size_t fan_in, std::size_t fan_out) {
    return std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
}

DenseFcParams DenseFcParams::glorot(std::size_t d1, std::size_t d2, std::uint64_t seed) {
    DenseFcParams p;
    p.weight = Tensor({d1, d2});
    p.bias = Tensor({d1});
    const double lim = glorot_limit(d2, d1);
    for (std::size_t i = 0; i < p.weight.size(); ++i) p.weight[i] = lim * uniform_pm1(seed, i);
    return p;
}

Tensor dense_fc_forward(const DenseFcParams& p, const Tensor& h_in) {
    if (h_in.rank() != 1 || h_in.size() != p.weight.cols()) {
        throw std::invalid_argument("dense_fc_forward: input " + shape_str(h_in.shape()) +
                                    " does not match weight " + shape_str(p.weight.shape()));
    }
    Tensor a = matvec(p.weight, h_in);
    a += p.bias;
    return a;
}

LayerGrads dense_fc_backward(const DenseFcParams& p, const Tensor& h_in, const Tensor& g) {
    if (g.rank() != 1 || g.size() != p.weight.rows()) {
        throw std::invalid_argument("dense_fc_backward: gradient " + shape_str(g.shape()) +
                                    " does not match weight " + shape_str(p.weight.shape()));
    }
    LayerGrads out;
    out.param_grads.push_back(outer(g, h_in));   // dW
    out.param_grads.push_back(g);                // db
    out.input_grad = matvec_t(p.weight, g);
    return out;
}

DenseConvParams DenseConvParams::glorot(const ConvGeometry& g, std::uint64_t seed, bool with_bias) {
    g.validate();
    DenseConvParams p;
    p.geometry = g;
    p.kernel = Tensor({g.in_channels, g.kh, g.kw, g.out_channels});
    const double lim = glorot_limit(g.in_channels * g.kh * g.kw, g.out_channels * g.kh * g.kw);
    for (std::size_t i = 0; i < p.kernel.size(); ++i) p.kernel[i] = lim * uniform_pm1(seed, i);
    p.has_bias = with_bias;
    if (with_bias) p.bias = Tensor({g.out_channels});
    return p;
}

Tensor dense_conv_forward(const DenseConvParams& p, const Tensor& input) {
    const ConvGeometry& g = p.geometry;
    const Tensor cols = im2col(input, g);
    Tensor out_mat = matmul(cols, mat_n(p.kernel, 4));  // (h2*w2) x d1
    if (p.has_bias) {
        const std::size_t rows = out_mat.rows();
        for (std::size_t s = 0; s < g.out_channels; ++s)
            for (std::size_t r = 0; r < rows; ++r) out_mat.at(r, s) += p.bias[s];
    }
    return unmat_n(out_mat, {g.out_h(), g.out_w(), g.out_channels}, 3);
}

LayerGrads dense_conv_backward(const DenseConvParams& p, const Tensor& input, const Tensor& grad_out) {
    const ConvGeometry& g = p.geometry;
    const std::size_t h2 = g.out_h(), w2 = g.out_w();
    if (grad_out.rank() != 3 || grad_out.extent(1) != h2 || grad_out.extent(2) != w2 ||
        grad_out.extent(3) != g.out_channels) {
        throw std::invalid_argument("dense_conv_backward: gradient " + shape_str(grad_out.shape()) +
                                    " does not match output geometry");
    }
    const Tensor gmat = mat_n(grad_out, 3);  // (h2*w2) x d1
    const Tensor cols = im2col(input, g);

    LayerGrads out;
    const Tensor dk_mat = matmul(transpose(cols), gmat);  // (d2*h*w) x d1
    out.param_grads.push_back(unmat_n(dk_mat, p.kernel.shape(), 4));
    if (p.has_bias) {
        Tensor db({g.out_channels});
        for (std::size_t s = 0; s < g.out_channels; ++s) {
            double acc = 0.0;
            for (std::size_t r = 0; r < h2 * w2; ++r) acc += gmat.at(r, s);
            db[s] = acc;
        }
        out.param_grads.push_back(db);
    }
    const Tensor dcols = matmul(gmat, transpose(mat_n(p.kernel, 4)));
    out.input_grad = col2im(dcols, g);
    return out;
}

}  // namespace sknn
