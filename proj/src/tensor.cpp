#include "liya/tensor.hpp"

#include <stdexcept>

namespace liya {

Tensor::Tensor(Index shape) : shape_(std::move(shape)) {
  std::size_t total = 1;
  for (int e : shape_) {
    if (e <= 0) throw std::invalid_argument("tensor: nonpositive extent");
    total *= static_cast<std::size_t>(e);
  }
  strides_.assign(shape_.size(), 1);
  for (int k = static_cast<int>(shape_.size()) - 2; k >= 0; --k)
    strides_[k] = strides_[k + 1] * static_cast<std::size_t>(shape_[k + 1]);
  data_.assign(total, Rational());
}

std::size_t Tensor::offset(const Index& idx) const {
  if (idx.size() != shape_.size()) throw std::invalid_argument("tensor: index order mismatch");
  std::size_t off = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= shape_[k]) throw std::out_of_range("tensor: index out of range");
    off += strides_[k] * static_cast<std::size_t>(idx[k]);
  }
  return off;
}

void Tensor::bump(Index& idx) const {
  for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
    if (++idx[k] < shape_[k]) return;
    idx[k] = 0;
  }
}

bool Tensor::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("tensor: shape mismatch");
  Tensor out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Tensor Tensor::operator-(const Tensor& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("tensor: shape mismatch");
  Tensor out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Tensor Tensor::operator-() const {
  Tensor out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Tensor Tensor::scaled(const Rational& c) const {
  Tensor out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

Tensor Tensor::permute(const std::vector<int>& perm) const {
  if (perm.size() != shape_.size()) throw std::invalid_argument("permute: axis count mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p])
      throw std::invalid_argument("permute: not a permutation");
    seen[p] = true;
  }
  Index out_shape(shape_.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_shape[perm[k]] = shape_[k];
  Tensor out(out_shape);
  Index j(shape_.size());
  for_each([&](const Index& i, const Rational& v) {
    for (std::size_t k = 0; k < perm.size(); ++k) j[perm[k]] = i[k];
    out.at(j) = v;
  });
  return out;
}

Tensor Tensor::swap_axes(int a, int b) const {
  std::vector<int> perm(shape_.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  std::swap(perm[a], perm[b]);
  return permute(perm);
}

Tensor Tensor::contract_pairing(const std::vector<std::vector<Rational>>& covectors) const {
  if (covectors.size() > shape_.size())
    throw std::invalid_argument("contract: more covectors than axes");
  for (std::size_t k = 0; k < covectors.size(); ++k)
    if (static_cast<int>(covectors[k].size()) != shape_[k])
      throw std::invalid_argument("contract: extent mismatch");
  Index rest(shape_.begin() + covectors.size(), shape_.end());
  Tensor out(rest.empty() ? Index{} : rest);
  if (rest.empty()) out = Tensor(Index{});
  for_each([&](const Index& i, const Rational& v) {
    if (v.is_zero()) return;
    Rational c = v;
    for (std::size_t k = 0; k < covectors.size(); ++k) {
      c *= covectors[k][i[k]];
      if (c.is_zero()) return;
    }
    Index j(i.begin() + covectors.size(), i.end());
    out.at(j) += c;
  });
  return out;
}

std::vector<std::pair<Index, Rational>> Tensor::nonzeros() const {
  std::vector<std::pair<Index, Rational>> out;
  for_each([&](const Index& i, const Rational& v) {
    if (!v.is_zero()) out.emplace_back(i, v);
  });
  return out;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("mat: shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("mat: shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Mat Mat::operator-() const {
  Mat out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("mat: product shape mismatch");
  Mat out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Mat Mat::scaled(const Rational& c) const {
  Mat out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<Rational> Mat::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("mat: apply shape mismatch");
  std::vector<Rational> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Rational Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: not square");
  Mat m = *this;
  Rational d(1);
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int r = c; r < rows_; ++r)
      if (!m(r, c).is_zero()) { p = r; break; }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Rational inv = Rational(1) / m(c, c);
    for (int r = c + 1; r < rows_; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) * inv;
      for (int j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  int n = rows_;
  Mat m = *this, inv = Mat::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!m(r, c).is_zero()) { p = r; break; }
    if (p < 0) throw std::domain_error("inverse: singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = Rational(1) / m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) *= piv;
      inv(c, j) *= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

std::vector<Rational> zero_vec(int n) { return std::vector<Rational>(static_cast<std::size_t>(n)); }

std::vector<Rational> basis_vec(int n, int i) {
  auto v = zero_vec(n);
  v[static_cast<std::size_t>(i)] = Rational(1);
  return v;
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

std::vector<Rational> neg(const std::vector<Rational>& v) {
  std::vector<Rational> out(v);
  for (auto& x : out) x = -x;
  return out;
}

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& c) {
  std::vector<Rational> out(v);
  for (auto& x : out) x *= c;
  return out;
}

bool is_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace liya
