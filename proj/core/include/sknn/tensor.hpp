#ifndef SKNN_TENSOR_HPP
#define SKNN_TENSOR_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace sknn {

/**
 * Dense tensor of 64-bit reals with one to four modes.
 *
 * Storage is a single flat array with mode 1 fastest: for a tensor with
 * extents d1..dp the entry (i1,...,ip) (1-based in this comment, 0-based
 * in the API) lives at flat index
 *
 *     i1 + d1*(i2-1) + d1*d2*(i3-1) + d1*d2*d3*(i4-1).
 *
 * A rank-2 tensor is therefore a column-major matrix: (i,j) -> i + rows*j.
 *
 * Tensors are plain values. Every operation below returns a fresh tensor;
 * nothing aliases.
 */
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);

    static Tensor matrix(std::size_t rows, std::size_t cols);
    static Tensor vec(std::size_t n);

    std::size_t rank() const { return shape_.size(); }
    const std::vector<std::size_t>& shape() const { return shape_; }
    /// Extent of `mode` (1-based, matching the mat_n / mode_n naming).
    std::size_t extent(std::size_t mode) const;
    std::size_t size() const { return data_.size(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& storage() { return data_; }
    const std::vector<double>& storage() const { return data_; }

    double operator[](std::size_t flat) const { return data_[flat]; }
    double& operator[](std::size_t flat) { return data_[flat]; }

    // 0-based element accessors for the common ranks.
    double& at(std::size_t i);
    double& at(std::size_t i, std::size_t j);
    double& at(std::size_t i, std::size_t j, std::size_t k);
    double& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l);
    double at(std::size_t i) const;
    double at(std::size_t i, std::size_t j) const;
    double at(std::size_t i, std::size_t j, std::size_t k) const;
    double at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

    std::size_t rows() const { return extent(1); }
    std::size_t cols() const { return extent(2); }

    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor& operator*=(double s);

    /// Same data, new shape (element counts must agree).
    Tensor reshaped(std::vector<std::size_t> new_shape) const;

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

std::string shape_str(const std::vector<std::size_t>& shape);

/**
 * Mode-n matrix product: contracts mode n (1-based) of `t` with the columns
 * of the rank-2 tensor `m` (k x d_n). The result has t's shape with extent
 * d_n replaced by k:
 *
 *     out(i1,..,j,..,ip) = sum over i_n of t(i1,..,i_n,..,ip) * m(j, i_n)
 *
 * For rank-2 t this gives m*t at mode 1 and t*transpose(m) at mode 2.
 */
Tensor mode_n_product(const Tensor& t, const Tensor& m, std::size_t mode);

/**
 * Flattening along mode n (1-based): a (prod of other extents) x d_n matrix.
 * The row index runs over the non-n modes in ascending order with earlier
 * modes fastest; the column index is mode n. For rank 4 and n = 4 this is
 * row = i1 + d1*(i2-1) + d1*d2*(i3-1), col = i4 (1-based). Note the rows,
 * not the columns, range over the non-n modes; that is the convention the
 * sketched-layer algebra relies on.
 */
Tensor mat_n(const Tensor& t, std::size_t mode);

/// Inverse of mat_n: exact round-trip back to `shape`.
Tensor unmat_n(const Tensor& m, const std::vector<std::size_t>& shape, std::size_t mode);

// Dense rank-2 / rank-1 kernels.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
Tensor matvec(const Tensor& a, const Tensor& x);    // A x
Tensor matvec_t(const Tensor& a, const Tensor& x);  // transpose(A) x
Tensor outer(const Tensor& x, const Tensor& y);     // x y^T

double dot(const Tensor& a, const Tensor& b);
double frobenius_norm_sq(const Tensor& a);
double frobenius_norm(const Tensor& a);
double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace sknn

#endif  // SKNN_TENSOR_HPP
