#ifndef SKNN_SIGN_MATRIX_HPP
#define SKNN_SIGN_MATRIX_HPP

#include <cstdint>
#include <cstddef>

#include "sknn/rng.hpp"
#include "sknn/tensor.hpp"

namespace sknn {

/**
 * A k x d scaled random sign matrix, represented by its seed alone.
 * Entries are +1/sqrt(k) or -1/sqrt(k); the sign of entry (r, c) is the
 * top bit of hash2(seed, r*d + c) (set bit means negative). The same
 * (seed, k, d) always materializes the identical matrix, regardless of
 * platform, call order, or thread count.
 */
struct SignMatrix {
    std::uint64_t seed = 0;
    std::size_t k = 0;  // rows
    std::size_t d = 0;  // cols

    SignMatrix() = default;
    SignMatrix(std::uint64_t seed_, std::size_t k_, std::size_t d_) : seed(seed_), k(k_), d(d_) {}

    double scale() const;

    /// Entry (r, c), 0-based.
    double entry(std::size_t r, std::size_t c) const {
        const bool neg = (hash2(seed, static_cast<std::uint64_t>(r) * d + c) >> 63) != 0;
        return neg ? -scale() : scale();
    }
};

/// Dense k x d tensor with the matrix's entries.
Tensor materialize(const SignMatrix& sm);

}  // namespace sknn

#endif  // SKNN_SIGN_MATRIX_HPP
