#ifndef SKNN_SKETCH_VERIFY_HPP
#define SKNN_SKETCH_VERIFY_HPP

#include <cstdint>
#include <string>

#include "sknn/sketch.hpp"
#include "sknn/tensor.hpp"

namespace sknn {

/**
 * Empirical certification of the estimator variance bounds. Draws a fresh
 * pair of sign matrices per trial (W and M stay fixed), measures the mean
 * squared Frobenius error of both estimators against W M, and compares with
 * the analytic bounds
 *
 *   left:  2 d1 |W M|_F^2 / k
 *   right: 2 |W|_F^2 |M|_F^2 / k
 *
 * A check passes when empirical <= bound * (1 + 5/sqrt(trials)). The slack
 * absorbs Monte Carlo noise while still failing on any constant-factor bug.
 */
struct VarianceReport {
    std::size_t d1 = 0, d2 = 0, d3 = 0, k = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double empirical_left = 0.0;
    double empirical_right = 0.0;
    double bound_left = 0.0;
    double bound_right = 0.0;
    bool pass_left = false;
    bool pass_right = false;

    double slack() const;
    bool pass() const { return pass_left && pass_right; }
    std::string to_json() const;
};

VarianceReport verify_variance(const Tensor& w, const Tensor& m, std::size_t k, std::size_t trials,
                               std::uint64_t seed);

/**
 * Exhaustive unbiasedness check: enumerates every sign pattern of the k x d1
 * (left) and k x d2 (right) matrices and compares the mean estimate with the
 * exact product W M. Only sensible while 2^(k*max(d1,d2)) stays small.
 */
struct EnumReport {
    std::size_t d1 = 0, d2 = 0, d3 = 0, k = 0;
    std::size_t patterns_left = 0;
    std::size_t patterns_right = 0;
    double dev_left = 0.0;   // max |mean - WM| / max(1, max|WM|)
    double dev_right = 0.0;
    double tol = 0.0;
    bool pass_left = false;
    bool pass_right = false;

    bool pass() const { return pass_left && pass_right; }
    std::string to_json() const;
};

EnumReport verify_unbiased_enum(const Tensor& w, const Tensor& m, std::size_t k, double tol = 1e-12);

/// Max |mean of Z^T Z over all 2^d sign rows - I_d| for k = 1 (exact zero).
double identity_enum_deviation(std::size_t d);

/// Sign matrix with an explicit +-1 pattern taken from the bits of `bits`
/// (bit r*d+c gives the sign of entry (r,c)), scaled by 1/sqrt(k).
Tensor sign_matrix_from_bits(std::uint64_t bits, std::size_t k, std::size_t d);

}  // namespace sknn

#endif  // SKNN_SKETCH_VERIFY_HPP
