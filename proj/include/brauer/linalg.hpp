#pragma once

#include "brauer/field.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brauer {

/// Dense row-major matrix.
template <class V>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const V& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  V& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const V& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  V* row(std::size_t r) { return data_.data() + r * cols_; }
  const V* row(std::size_t r) const { return data_.data() + r * cols_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<V> data_;
};

template <Field F>
using MatrixOver = Matrix<typename F::value_type>;

template <Field F>
using VectorOver = std::vector<typename F::value_type>;

template <Field F>
MatrixOver<F> identity_matrix(const F& k, std::size_t n) {
  MatrixOver<F> m(n, n, k.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

template <Field F>
MatrixOver<F> multiply(const F& k, const MatrixOver<F>& a, const MatrixOver<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  MatrixOver<F> c(a.rows(), b.cols(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const auto& ail = a(i, l);
      if (is_zero(ail)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(l, j))) c(i, j) = c(i, j) + ail * b(l, j);
    }
  return c;
}

template <Field F>
VectorOver<F> apply(const F& k, const MatrixOver<F>& a, const VectorOver<F>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  VectorOver<F> out(a.rows(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(v[j]) && !is_zero(a(i, j))) out[i] = out[i] + a(i, j) * v[j];
  return out;
}

template <class V>
bool is_zero_vector(const std::vector<V>& v) {
  return std::all_of(v.begin(), v.end(), [](const V& e) { return is_zero(e); });
}

template <class V>
bool is_zero_matrix(const Matrix<V>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// In-place reduced row echelon form; pivot = first nonzero entry in the column.
/// Returns the pivot columns.
template <Field F>
std::vector<std::size_t> rref_in_place(const F& k, MatrixOver<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const auto inv = k.one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
std::size_t rank(const F& k, MatrixOver<F> m) {
  return rref_in_place(k, m).size();
}

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that column.
template <Field F>
std::vector<VectorOver<F>> nullspace(const F& k, MatrixOver<F> m) {
  auto pivots = rref_in_place(k, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<VectorOver<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorOver<F> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.zero() - m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Fraction-free (Bareiss) elimination; returns the rank.
inline std::size_t bareiss_rank(Matrix<Integer> a) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

/// Scale each row by the lcm of its denominators.
inline Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j)));
  }
  return out;
}

inline std::size_t bareiss_rank(const Matrix<Rational>& m) { return bareiss_rank(clear_denominators(m)); }

/// Incrementally built subspace with coordinates relative to the accepted generators.
template <Field F>
class SpanBasis {
 public:
  using V = typename F::value_type;

  SpanBasis(F field, std::size_t ambient) : k_(std::move(field)), n_(ambient) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  const F& field() const { return k_; }
  /// The generators that were accepted, in insertion order.
  const std::vector<std::vector<V>>& generators() const { return generators_; }

  /// Adds v if it is independent of the current span; returns whether it was added.
  bool add(const std::vector<V>& v) {
    check(v);
    auto residual = v;
    std::vector<V> combo(rows_.size(), k_.zero());
    reduce(residual, combo);
    auto lead = std::find_if(residual.begin(), residual.end(), [](const V& e) { return !is_zero(e); });
    if (lead == residual.end()) return false;
    std::size_t piv = static_cast<std::size_t>(lead - residual.begin());
    const V inv = k_.one() / residual[piv];
    for (auto& e : residual)
      if (!is_zero(e)) e = e * inv;
    for (auto& row : combos_) row.push_back(k_.zero());
    for (auto& c : combo) c = (k_.zero() - c) * inv;
    combo.push_back(inv);
    rows_.push_back(std::move(residual));
    pivots_.push_back(piv);
    combos_.push_back(std::move(combo));
    generators_.push_back(v);
    return true;
  }

  bool contains(const std::vector<V>& v) const {
    check(v);
    auto residual = v;
    reduce_only(residual);
    return is_zero_vector(residual);
  }

  /// Coefficients c with v = sum c_i generators()[i], if v lies in the span.
  std::optional<std::vector<V>> coordinates(const std::vector<V>& v) const {
    check(v);
    auto residual = v;
    std::vector<V> used(rows_.size(), k_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const V c = residual[pivots_[i]];
      if (is_zero(c)) continue;
      used[i] = c;
      axpy(residual, c, rows_[i]);
    }
    if (!is_zero_vector(residual)) return std::nullopt;
    std::vector<V> coords(rows_.size(), k_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (is_zero(used[i])) continue;
      for (std::size_t j = 0; j < combos_[i].size(); ++j)
        if (!is_zero(combos_[i][j])) coords[j] = coords[j] + used[i] * combos_[i][j];
    }
    return coords;
  }

 private:
  void check(const std::vector<V>& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match ambient dimension");
  }
  void axpy(std::vector<V>& v, const V& c, const std::vector<V>& row) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (!is_zero(row[j])) v[j] = v[j] - c * row[j];
  }
  void reduce_only(std::vector<V>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const V c = v[pivots_[i]];
      if (!is_zero(c)) axpy(v, c, rows_[i]);
    }
  }
  void reduce(std::vector<V>& v, std::vector<V>& combo) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const V c = v[pivots_[i]];
      if (is_zero(c)) continue;
      axpy(v, c, rows_[i]);
      for (std::size_t j = 0; j < combos_[i].size(); ++j)
        if (!is_zero(combos_[i][j])) combo[j] = combo[j] + c * combos_[i][j];
    }
  }

  F k_;
  std::size_t n_;
  std::vector<std::vector<V>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<V>> combos_;
  std::vector<std::vector<V>> generators_;
};

/// Dimension of the span of a family of vectors.
template <Field F>
std::size_t span_dim(const F& k, std::size_t ambient, const std::vector<VectorOver<F>>& vs) {
  SpanBasis<F> s(k, ambient);
  for (const auto& v : vs) s.add(v);
  return s.size();
}

/// a ⊆ b as spans.
template <Field F>
bool span_contains(const F& k, std::size_t ambient, const std::vector<VectorOver<F>>& b,
                   const std::vector<VectorOver<F>>& a) {
  SpanBasis<F> s(k, ambient);
  for (const auto& v : b) s.add(v);
  return std::all_of(a.begin(), a.end(), [&](const auto& v) { return s.contains(v); });
}

template <Field F>
bool same_span(const F& k, std::size_t ambient, const std::vector<VectorOver<F>>& a,
               const std::vector<VectorOver<F>>& b) {
  return span_contains(k, ambient, a, b) && span_contains(k, ambient, b, a);
}

}  // namespace brauer
