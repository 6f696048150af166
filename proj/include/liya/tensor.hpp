#ifndef LIYA_TENSOR_HPP
#define LIYA_TENSOR_HPP

#include <initializer_list>
#include <vector>

#include "liya/rational.hpp"

namespace liya {

using Index = std::vector<int>;

/// Dense tensor of Rationals over a multi-index, row-major.
/// Houses structure constants, elements of tensor powers, and residuals.
class Tensor {
public:
  Tensor() = default;
  explicit Tensor(Index shape);

  const Index& shape() const { return shape_; }
  int order() const { return static_cast<int>(shape_.size()); }
  std::size_t size() const { return data_.size(); }

  const Rational& at(const Index& idx) const { return data_[offset(idx)]; }
  Rational& at(const Index& idx) { return data_[offset(idx)]; }
  const Rational& flat(std::size_t i) const { return data_[i]; }
  Rational& flat(std::size_t i) { return data_[i]; }

  bool is_zero() const;

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator-() const;
  Tensor scaled(const Rational& c) const;
  bool operator==(const Tensor& o) const { return shape_ == o.shape_ && data_ == o.data_; }

  /// Entries are visited in row-major order; idx is reused across calls.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    Index idx(shape_.size(), 0);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      fn(idx, data_[i]);
      bump(idx);
    }
  }

  /// Axis permutation, left-to-right composition convention: axis k of the
  /// input lands at position perm[k] of the output.
  Tensor permute(const std::vector<int>& perm) const;

  /// Transposition of axes a and b.
  Tensor swap_axes(int a, int b) const;

  /// Contracts the leading axes against one covector each (coordinates in the
  /// dual basis); remaining axes survive. Full contraction yields shape [].
  Tensor contract_pairing(const std::vector<std::vector<Rational>>& covectors) const;

  /// Nonzero entries as (multi-index, value) pairs, row-major order.
  std::vector<std::pair<Index, Rational>> nonzeros() const;

  std::size_t offset(const Index& idx) const;

private:
  void bump(Index& idx) const;

  Index shape_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> data_;
};

/// Dense rational matrix acting on coordinate columns.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Rational& c) const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  Mat transpose() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  /// Exact determinant (square only), by fraction-free-ish Gaussian elimination.
  Rational det() const;

  /// Exact inverse; throws std::domain_error if singular.
  Mat inverse() const;

private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

Mat commutator(const Mat& a, const Mat& b);

std::vector<Rational> zero_vec(int n);
std::vector<Rational> basis_vec(int n, int i);
std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> neg(const std::vector<Rational>& v);
std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& c);
bool is_zero(const std::vector<Rational>& v);
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace liya

#endif
