#include "sknn/sketch_verify.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "sknn/rng.hpp"
#include "sknn/threads.hpp"

namespace sknn {

double VarianceReport::slack() const { return 1.0 + 5.0 / std::sqrt(static_cast<double>(trials)); }

std::string VarianceReport::to_json() const {
    nlohmann::json j{{"d1", d1},
                     {"d2", d2},
                     {"d3", d3},
                     {"k", k},
                     {"trials", trials},
                     {"seed", seed},
                     {"empirical_left", empirical_left},
                     {"empirical_right", empirical_right},
                     {"bound_left", bound_left},
                     {"bound_right", bound_right},
                     {"slack", slack()},
                     {"pass_left", pass_left},
                     {"pass_right", pass_right}};
    return j.dump();
}

std::string EnumReport::to_json() const {
    nlohmann::json j{{"d1", d1},
                     {"d2", d2},
                     {"d3", d3},
                     {"k", k},
                     {"patterns_left", patterns_left},
                     {"patterns_right", patterns_right},
                     {"dev_left", dev_left},
                     {"dev_right", dev_right},
                     {"tol", tol},
                     {"pass_left", pass_left},
                     {"pass_right", pass_right}};
    return j.dump();
}

VarianceReport verify_variance(const Tensor& w, const Tensor& m, std::size_t k, std::size_t trials,
                               std::uint64_t seed) {
    if (w.rank() != 2 || m.rank() != 2 || w.cols() != m.rows()) {
        throw std::invalid_argument("verify_variance: need W (d1 x d2) and M (d2 x d3), got " +
                                    shape_str(w.shape()) + " and " + shape_str(m.shape()));
    }
    if (trials < 1000) throw std::invalid_argument("verify_variance: trials must be >= 1000");

    VarianceReport rep;
    rep.d1 = w.rows();
    rep.d2 = w.cols();
    rep.d3 = m.cols();
    rep.k = k;
    rep.trials = trials;
    rep.seed = seed;

    const Tensor wm = matmul(w, m);
    rep.bound_left = 2.0 * static_cast<double>(rep.d1) * frobenius_norm_sq(wm) / static_cast<double>(k);
    rep.bound_right = 2.0 * frobenius_norm_sq(w) * frobenius_norm_sq(m) / static_cast<double>(k);

    std::vector<double> err_left(trials), err_right(trials);
    parallel_for(trials, [&](std::size_t t) {
        const SignMatrix u1{sub_seed(seed, 2 * t), k, rep.d1};
        const SignMatrix u2{sub_seed(seed, 2 * t + 1), k, rep.d2};
        const Tensor u1d = materialize(u1);
        const Tensor u2d = materialize(u2);
        Tensor left = estimate_left(matmul(u1d, w), u1d, m);
        Tensor right = estimate_right(matmul(w, transpose(u2d)), u2d, m);
        left -= wm;
        right -= wm;
        err_left[t] = frobenius_norm_sq(left);
        err_right[t] = frobenius_norm_sq(right);
    });

    double sl = 0.0, sr = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        sl += err_left[t];
        sr += err_right[t];
    }
    rep.empirical_left = sl / static_cast<double>(trials);
    rep.empirical_right = sr / static_cast<double>(trials);
    rep.pass_left = rep.empirical_left <= rep.bound_left * rep.slack();
    rep.pass_right = rep.empirical_right <= rep.bound_right * rep.slack();
    return rep;
}

Tensor sign_matrix_from_bits(std::uint64_t bits, std::size_t k, std::size_t d) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k));
    Tensor u({k, d});
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < d; ++c) u.at(r, c) = ((bits >> (r * d + c)) & 1u) ? -s : s;
    return u;
}

EnumReport verify_unbiased_enum(const Tensor& w, const Tensor& m, std::size_t k, double tol) {
    if (w.rank() != 2 || m.rank() != 2 || w.cols() != m.rows()) {
        throw std::invalid_argument("verify_unbiased_enum: need W (d1 x d2) and M (d2 x d3)");
    }
    EnumReport rep;
    rep.d1 = w.rows();
    rep.d2 = w.cols();
    rep.d3 = m.cols();
    rep.k = k;
    rep.tol = tol;
    if (k * std::max(rep.d1, rep.d2) > 24) {
        throw std::invalid_argument("verify_unbiased_enum: 2^(k*max(d1,d2)) too large to enumerate");
    }

    const Tensor wm = matmul(w, m);
    double wm_scale = 1.0;
    for (std::size_t i = 0; i < wm.size(); ++i) wm_scale = std::max(wm_scale, std::abs(wm[i]));

    const std::uint64_t n_left = std::uint64_t{1} << (k * rep.d1);
    Tensor mean_left({rep.d1, rep.d3});
    for (std::uint64_t bits = 0; bits < n_left; ++bits) {
        const Tensor u1 = sign_matrix_from_bits(bits, k, rep.d1);
        mean_left += estimate_left(matmul(u1, w), u1, m);
    }
    mean_left *= 1.0 / static_cast<double>(n_left);
    rep.patterns_left = n_left;
    rep.dev_left = max_abs_diff(mean_left, wm) / wm_scale;
    rep.pass_left = rep.dev_left <= tol;

    const std::uint64_t n_right = std::uint64_t{1} << (k * rep.d2);
    Tensor mean_right({rep.d1, rep.d3});
    for (std::uint64_t bits = 0; bits < n_right; ++bits) {
        const Tensor u2 = sign_matrix_from_bits(bits, k, rep.d2);
        mean_right += estimate_right(matmul(w, transpose(u2)), u2, m);
    }
    mean_right *= 1.0 / static_cast<double>(n_right);
    rep.patterns_right = n_right;
    rep.dev_right = max_abs_diff(mean_right, wm) / wm_scale;
    rep.pass_right = rep.dev_right <= tol;
    return rep;
}

double identity_enum_deviation(std::size_t d) {
    if (d == 0 || d > 20) throw std::invalid_argument("identity_enum_deviation: d must be in 1..20");
    const std::uint64_t n = std::uint64_t{1} << d;
    Tensor mean({d, d});
    for (std::uint64_t bits = 0; bits < n; ++bits) {
        const Tensor z = sign_matrix_from_bits(bits, 1, d);
        mean += matmul(transpose(z), z);
    }
    mean *= 1.0 / static_cast<double>(n);
    Tensor eye({d, d});
    for (std::size_t i = 0; i < d; ++i) eye.at(i, i) = 1.0;
    return max_abs_diff(mean, eye);
}

}  // namespace sknn
