#include "sknn/sk_fc.hpp"

#include <cmath>
#include <stdexcept>

#include "sknn/dense_layers.hpp"
#include "sknn/rng.hpp"

namespace sknn {

void SkFcParams::refresh_sign_cache() {
    u1_dense.clear();
    u2_dense.clear();
    for (std::size_t i = 0; i < ell; ++i) {
        u1_dense.push_back(materialize(u1[i]));
        u2_dense.push_back(materialize(u2[i]));
    }
}

namespace {

SkFcParams make_shell(std::size_t d1, std::size_t d2, std::size_t k, std::size_t ell, std::uint64_t seed) {
    if (d1 == 0 || d2 == 0 || k == 0 || ell == 0) {
        throw std::invalid_argument("sk_fc: d1, d2, k, ell must all be >= 1");
    }
    SkFcParams p;
    p.d1 = d1;
    p.d2 = d2;
    p.k = k;
    p.ell = ell;
    p.bias = Tensor({d1});
    for (std::size_t i = 0; i < ell; ++i) {
        p.u1.emplace_back(sub_seed(seed, 2 * i), k, d1);
        p.u2.emplace_back(sub_seed(seed, 2 * i + 1), k, d2);
    }
    p.refresh_sign_cache();
    return p;
}

}  // namespace

SkFcParams sk_fc_init(std::size_t d1, std::size_t d2, std::size_t k, std::size_t ell, std::uint64_t seed) {
    SkFcParams p = make_shell(d1, d2, k, ell, seed);
    const double lim = glorot_limit(d2, d1) * std::sqrt(2.0 * static_cast<double>(ell));
    const std::uint64_t init_seed = sub_seed(seed, 0x5f5f696e6974ull);  // distinct from the U streams
    std::uint64_t counter = 0;
    for (std::size_t i = 0; i < ell; ++i) {
        Tensor s1({k, d2});
        for (std::size_t j = 0; j < s1.size(); ++j) s1[j] = lim * uniform_pm1(init_seed, counter++);
        p.s1.push_back(std::move(s1));
    }
    for (std::size_t i = 0; i < ell; ++i) {
        Tensor s2({d1, k});
        for (std::size_t j = 0; j < s2.size(); ++j) s2[j] = lim * uniform_pm1(init_seed, counter++);
        p.s2.push_back(std::move(s2));
    }
    return p;
}

SkFcParams sketch_from_dense_fc(const Tensor& w, const Tensor& b, std::size_t k, std::size_t ell,
                                std::uint64_t seed) {
    if (w.rank() != 2) throw std::invalid_argument("sketch_from_dense_fc: W must be rank 2");
    SkFcParams p = make_shell(w.rows(), w.cols(), k, ell, seed);
    if (b.size() != p.d1) throw std::invalid_argument("sketch_from_dense_fc: bias length mismatch");
    p.bias = b;
    for (std::size_t i = 0; i < ell; ++i) {
        p.s1.push_back(matmul(p.u1_dense[i], w));             // U1 W
        p.s2.push_back(matmul(w, transpose(p.u2_dense[i])));  // W U2^T
    }
    return p;
}

Tensor sk_fc_forward(const SkFcParams& p, const Tensor& h_in) {
    if (h_in.rank() != 1 || h_in.size() != p.d2) {
        throw std::invalid_argument("sk_fc_forward: input " + shape_str(h_in.shape()) + " does not match d2=" +
                                    std::to_string(p.d2));
    }
    Tensor a({p.d1});
    for (std::size_t i = 0; i < p.ell; ++i) {
        a += matvec_t(p.u1_dense[i], matvec(p.s1[i], h_in));  // U1^T (S1 h)
        a += matvec(p.s2[i], matvec(p.u2_dense[i], h_in));    // S2 (U2 h)
    }
    a *= 1.0 / (2.0 * static_cast<double>(p.ell));
    a += p.bias;
    return a;
}

LayerGrads sk_fc_backward(const SkFcParams& p, const Tensor& h_in, const Tensor& g) {
    if (g.rank() != 1 || g.size() != p.d1) {
        throw std::invalid_argument("sk_fc_backward: gradient " + shape_str(g.shape()) + " does not match d1=" +
                                    std::to_string(p.d1));
    }
    const double inv = 1.0 / (2.0 * static_cast<double>(p.ell));
    LayerGrads out;
    out.input_grad = Tensor({p.d2});
    std::vector<Tensor> ds2;
    for (std::size_t i = 0; i < p.ell; ++i) {
        const Tensor u1g = matvec(p.u1_dense[i], g);  // k
        Tensor ds1 = outer(u1g, h_in);                // k x d2
        ds1 *= inv;
        out.param_grads.push_back(std::move(ds1));
        out.input_grad += matvec_t(p.s1[i], u1g);

        const Tensor u2h = matvec(p.u2_dense[i], h_in);  // k
        Tensor d2i = outer(g, u2h);                      // d1 x k
        d2i *= inv;
        ds2.push_back(std::move(d2i));
        out.input_grad += matvec_t(p.u2_dense[i], matvec_t(p.s2[i], g));
    }
    for (auto& t : ds2) out.param_grads.push_back(std::move(t));
    out.param_grads.push_back(g);  // db
    out.input_grad *= inv;
    return out;
}

}  // namespace sknn
