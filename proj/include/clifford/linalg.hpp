#ifndef CLIFFORD_LINALG_HPP
#define CLIFFORD_LINALG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "clifford/error.hpp"
#include "clifford/scalar.hpp"

namespace clifford {

/// Dense row-major square-or-rectangular matrix with exact or float entries.
/// Only used at oracle scale (a few hundred entries per side at most).
template <Scalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<S>::zero()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows * cols, errc::shape_mismatch, "matrix data does not match its shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  /// Row-list literal, e.g. Matrix<Rational>::from_rows({{0, 1}, {0, 0}}).
  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    std::size_t n = rows.size();
    std::size_t m = n == 0 ? 0 : rows.front().size();
    Matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      require(rows[i].size() == m, errc::shape_mismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  static Matrix diagonal(const std::vector<S>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const std::vector<S>& data() const noexcept { return data_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const S& x : data_)
      if (!scalar_equal(x, scalar_traits<S>::zero())) return false;
    return true;
  }

  S trace() const {
    require(square(), errc::shape_mismatch, "trace of a non-square matrix");
    S t = scalar_traits<S>::zero();
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// (1/n) Tr, the trace normalized so that the identity has trace 1.
  S normalized_trace() const { return trace() / from_rational<S>(Rational(static_cast<long long>(rows_))); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = scalar_traits<S>::conj((*this)(i, j));
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, errc::shape_mismatch, "matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, errc::shape_mismatch, "matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (S& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, errc::shape_mismatch, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (clifford::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!scalar_equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < cols_; ++j) out += (j == 0 ? "" : ", ") + to_text((*this)(i, j));
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <Scalar S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return r;
}

/// Gauss-Jordan inverse; throws errc::precondition on a singular matrix.
template <Scalar S>
Matrix<S> inverse(const Matrix<S>& m) {
  require(m.square(), errc::shape_mismatch, "inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix<S> a = m;
  Matrix<S> inv = Matrix<S>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (!scalar_equal(a(r, col), scalar_traits<S>::zero())) {
        pivot = r;
        break;
      }
    require(pivot != n, errc::precondition, "matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    S p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      S f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Rank of a family of sparse vectors (finitely supported maps Key -> S) by
/// incremental elimination against pivots keyed on each vector's leading
/// key. Exact on exact domains.
template <class Key, Scalar S>
std::size_t sparse_rank(const std::vector<std::map<Key, S>>& vectors) {
  std::map<Key, std::map<Key, S>> pivots;  // leading key -> row normalized to leading coefficient 1
  for (std::map<Key, S> v : vectors) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto hit = pivots.find(lead->first);
      if (hit == pivots.end()) {
        S c = lead->second;
        for (auto& [k, x] : v) x /= c;
        Key key = lead->first;
        pivots.emplace(std::move(key), std::move(v));
        break;
      }
      S f = lead->second;
      for (const auto& [k, x] : hit->second) {
        auto [it, inserted] = v.try_emplace(k, scalar_traits<S>::zero());
        it->second -= f * x;
        if (scalar_equal(it->second, scalar_traits<S>::zero())) v.erase(it);
      }
    }
  }
  return pivots.size();
}

/// Rank of the matrices viewed as vectors of their entries.
template <Scalar S>
std::size_t matrix_family_rank(const std::vector<Matrix<S>>& mats) {
  std::vector<std::map<std::size_t, S>> vs;
  vs.reserve(mats.size());
  for (const auto& m : mats) {
    std::map<std::size_t, S> v;
    for (std::size_t i = 0; i < m.data().size(); ++i)
      if (!is_zero(m.data()[i])) v.emplace(i, m.data()[i]);
    vs.push_back(std::move(v));
  }
  return sparse_rank(vs);
}

}  // namespace clifford

#endif  // CLIFFORD_LINALG_HPP
