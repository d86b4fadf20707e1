#include "sknn/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sknn {

namespace {

std::size_t checked_size(const std::vector<std::size_t>& shape) {
    if (shape.empty() || shape.size() > 4) {
        throw std::invalid_argument("tensor rank must be 1..4, got shape " + shape_str(shape));
    }
    std::size_t n = 1;
    for (std::size_t d : shape) {
        if (d == 0) {
            throw std::invalid_argument("tensor extents must be >= 1, got shape " + shape_str(shape));
        }
        n *= d;
    }
    return n;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Splits a shape around `mode` (1-based): `low` = product of earlier
// extents, `high` = product of later ones.
void split_around_mode(const std::vector<std::size_t>& shape, std::size_t mode,
                       std::size_t& low, std::size_t& dn, std::size_t& high) {
    require(mode >= 1 && mode <= shape.size(),
            "mode " + std::to_string(mode) + " out of range for shape " + shape_str(shape));
    low = 1;
    high = 1;
    for (std::size_t m = 0; m + 1 < mode; ++m) low *= shape[m];
    for (std::size_t m = mode; m < shape.size(); ++m) high *= shape[m];
    dn = shape[mode - 1];
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(checked_size(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_size(shape_) != data_.size()) {
        throw std::invalid_argument("data length " + std::to_string(data_.size()) +
                                    " does not match shape " + shape_str(shape_));
    }
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols) { return Tensor({rows, cols}); }

Tensor Tensor::vec(std::size_t n) { return Tensor({n}); }

std::size_t Tensor::extent(std::size_t mode) const {
    require(mode >= 1 && mode <= shape_.size(),
            "mode " + std::to_string(mode) + " out of range for shape " + shape_str(shape_));
    return shape_[mode - 1];
}

double& Tensor::at(std::size_t i) {
    return data_[i];
}
double& Tensor::at(std::size_t i, std::size_t j) {
    return data_[i + shape_[0] * j];
}
double& Tensor::at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[i + shape_[0] * (j + shape_[1] * k)];
}
double& Tensor::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[i + shape_[0] * (j + shape_[1] * (k + shape_[2] * l))];
}
double Tensor::at(std::size_t i) const { return data_[i]; }
double Tensor::at(std::size_t i, std::size_t j) const { return data_[i + shape_[0] * j]; }
double Tensor::at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[i + shape_[0] * (j + shape_[1] * k)];
}
double Tensor::at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[i + shape_[0] * (j + shape_[1] * (k + shape_[2] * l))];
}

Tensor& Tensor::operator+=(const Tensor& other) {
    require(same_shape(other), "shape mismatch in +=: " + shape_str(shape_) + " vs " + shape_str(other.shape_));
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
    require(same_shape(other), "shape mismatch in -=: " + shape_str(shape_) + " vs " + shape_str(other.shape_));
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Tensor& Tensor::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Tensor Tensor::reshaped(std::vector<std::size_t> new_shape) const {
    if (checked_size(new_shape) != data_.size()) {
        throw std::invalid_argument("reshape " + shape_str(shape_) + " -> " + shape_str(new_shape) +
                                    " changes element count");
    }
    return Tensor(std::move(new_shape), data_);
}

std::string shape_str(const std::vector<std::size_t>& shape) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << "x";
        os << shape[i];
    }
    os << ")";
    return os.str();
}

Tensor mode_n_product(const Tensor& t, const Tensor& m, std::size_t mode) {
    require(m.rank() == 2, "mode_n_product expects a rank-2 factor, got " + shape_str(m.shape()));
    std::size_t low, dn, high;
    split_around_mode(t.shape(), mode, low, dn, high);
    const std::size_t k = m.rows();
    require(m.cols() == dn, "mode_n_product: factor " + shape_str(m.shape()) + " does not match extent " +
                                std::to_string(dn) + " of mode " + std::to_string(mode) + " in " +
                                shape_str(t.shape()));

    std::vector<std::size_t> out_shape = t.shape();
    out_shape[mode - 1] = k;
    Tensor out(out_shape);

    const double* tp = t.data();
    const double* mp = m.data();
    double* op = out.data();
    for (std::size_t hi = 0; hi < high; ++hi) {
        for (std::size_t j = 0; j < k; ++j) {
            double* orow = op + low * (j + k * hi);
            for (std::size_t i = 0; i < dn; ++i) {
                const double w = mp[j + k * i];
                const double* trow = tp + low * (i + dn * hi);
                for (std::size_t lo = 0; lo < low; ++lo) orow[lo] += w * trow[lo];
            }
        }
    }
    return out;
}

Tensor mat_n(const Tensor& t, std::size_t mode) {
    std::size_t low, dn, high;
    split_around_mode(t.shape(), mode, low, dn, high);
    const std::size_t rows = low * high;
    Tensor out({rows, dn});
    const double* tp = t.data();
    double* op = out.data();
    for (std::size_t hi = 0; hi < high; ++hi) {
        for (std::size_t i = 0; i < dn; ++i) {
            const double* src = tp + low * (i + dn * hi);
            double* dst = op + (low * hi) + rows * i;
            for (std::size_t lo = 0; lo < low; ++lo) dst[lo] = src[lo];
        }
    }
    return out;
}

Tensor unmat_n(const Tensor& m, const std::vector<std::size_t>& shape, std::size_t mode) {
    require(m.rank() == 2, "unmat_n expects a rank-2 input, got " + shape_str(m.shape()));
    std::size_t low, dn, high;
    split_around_mode(shape, mode, low, dn, high);
    require(m.rows() == low * high && m.cols() == dn,
            "unmat_n: matrix " + shape_str(m.shape()) + " inconsistent with target " + shape_str(shape) +
                " at mode " + std::to_string(mode));
    Tensor out(shape);
    const double* mp = m.data();
    double* op = out.data();
    const std::size_t rows = low * high;
    for (std::size_t hi = 0; hi < high; ++hi) {
        for (std::size_t i = 0; i < dn; ++i) {
            const double* src = mp + (low * hi) + rows * i;
            double* dst = op + low * (i + dn * hi);
            for (std::size_t lo = 0; lo < low; ++lo) dst[lo] = src[lo];
        }
    }
    return out;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    require(a.rank() == 2 && b.rank() == 2,
            "matmul expects rank-2 inputs, got " + shape_str(a.shape()) + " and " + shape_str(b.shape()));
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    require(b.rows() == k, "matmul shape mismatch: " + shape_str(a.shape()) + " * " + shape_str(b.shape()));
    Tensor c({m, n});
    const double* ap = a.data();
    const double* bp = b.data();
    double* cp = c.data();
    for (std::size_t j = 0; j < n; ++j) {
        double* ccol = cp + m * j;
        for (std::size_t l = 0; l < k; ++l) {
            const double bv = bp[l + k * j];
            const double* acol = ap + m * l;
            for (std::size_t i = 0; i < m; ++i) ccol[i] += acol[i] * bv;
        }
    }
    return c;
}

Tensor transpose(const Tensor& a) {
    require(a.rank() == 2, "transpose expects a rank-2 input, got " + shape_str(a.shape()));
    const std::size_t m = a.rows(), n = a.cols();
    Tensor t({n, m});
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) t.at(j, i) = a.at(i, j);
    return t;
}

Tensor matvec(const Tensor& a, const Tensor& x) {
    require(a.rank() == 2 && x.rank() == 1 && a.cols() == x.size(),
            "matvec shape mismatch: " + shape_str(a.shape()) + " * " + shape_str(x.shape()));
    const std::size_t m = a.rows(), k = a.cols();
    Tensor y({m});
    const double* ap = a.data();
    for (std::size_t l = 0; l < k; ++l) {
        const double xv = x[l];
        const double* acol = ap + m * l;
        for (std::size_t i = 0; i < m; ++i) y[i] += acol[i] * xv;
    }
    return y;
}

Tensor matvec_t(const Tensor& a, const Tensor& x) {
    require(a.rank() == 2 && x.rank() == 1 && a.rows() == x.size(),
            "matvec_t shape mismatch: " + shape_str(a.shape()) + "^T * " + shape_str(x.shape()));
    const std::size_t m = a.rows(), k = a.cols();
    Tensor y({k});
    const double* ap = a.data();
    for (std::size_t l = 0; l < k; ++l) {
        const double* acol = ap + m * l;
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += acol[i] * x[i];
        y[l] = s;
    }
    return y;
}

Tensor outer(const Tensor& x, const Tensor& y) {
    require(x.rank() == 1 && y.rank() == 1,
            "outer expects rank-1 inputs, got " + shape_str(x.shape()) + " and " + shape_str(y.shape()));
    Tensor o({x.size(), y.size()});
    for (std::size_t j = 0; j < y.size(); ++j)
        for (std::size_t i = 0; i < x.size(); ++i) o.at(i, j) = x[i] * y[j];
    return o;
}

double dot(const Tensor& a, const Tensor& b) {
    require(a.size() == b.size(), "dot length mismatch: " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double frobenius_norm_sq(const Tensor& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * a[i];
    return s;
}

double frobenius_norm(const Tensor& a) { return std::sqrt(frobenius_norm_sq(a)); }

double max_abs_diff(const Tensor& a, const Tensor& b) {
    require(a.size() == b.size(),
            "max_abs_diff length mismatch: " + shape_str(a.shape()) + " vs " + shape_str(b.shape()));
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace sknn
