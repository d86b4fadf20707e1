#include "sknn/sign_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace sknn {

double SignMatrix::scale() const {
    if (k == 0 || d == 0) throw std::invalid_argument("sign matrix dims must be >= 1");
    return 1.0 / std::sqrt(static_cast<double>(k));
}

Tensor materialize(const SignMatrix& sm) {
    const double s = sm.scale();
    Tensor m({sm.k, sm.d});
    for (std::size_t c = 0; c < sm.d; ++c)
        for (std::size_t r = 0; r < sm.k; ++r)
            m.at(r, c) = ((hash2(sm.seed, static_cast<std::uint64_t>(r) * sm.d + c) >> 63) != 0) ? -s : s;
    return m;
}

}  // namespace sknn
