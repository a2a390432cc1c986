#pragma once

#include "brauer/field.hpp"
#include "brauer/linalg.hpp"
#include "brauer/permutation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

/// Weakly decreasing sequence of positive parts. The empty partition prints as "(0)".
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    for (int v : parts)
      if (v < 0) throw std::invalid_argument("negative part");
    if (!std::is_sorted(parts.rbegin(), parts.rend())) throw std::invalid_argument("parts must be weakly decreasing");
  }

  int size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
  }
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < length() ? parts[i] : 0; }

  Partition dual() const {
    std::vector<int> d;
    for (int c = 1; c <= part(0); ++c) {
      int n = 0;
      for (int v : parts)
        if (v >= c) ++n;
      d.push_back(n);
    }
    return Partition(std::move(d));
  }

  std::string to_string() const {
    if (parts.empty()) return "(0)";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of m, largest first part first: (m), (m-1,1), ..., (1^m).
inline std::vector<Partition> partitions(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(left, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/// Number of standard tableaux (hook length formula).
inline std::uint64_t standard_tableaux_count(const Partition& mu) {
  const auto d = mu.dual();
  std::uint64_t num = 1, den = 1;
  for (int i = 2; i <= mu.size(); ++i) num *= i;
  for (int r = 0; r < mu.length(); ++r)
    for (int c = 0; c < mu.parts[r]; ++c) den *= static_cast<std::uint64_t>(mu.parts[r] - c - 1 + d.parts[c] - r - 1 + 1);
  return num / den;
}

namespace detail {

inline long long mn_rec(std::vector<int> beta, const std::vector<int>& rho, std::size_t idx,
                        std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
  if (idx == rho.size()) return 1;
  auto key = std::make_pair(beta, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = rho[idx];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    auto next = beta;
    next[i] = target;
    std::sort(next.rbegin(), next.rend());
    long long sub = mn_rec(next, rho, idx + 1, memo);
    total += (between % 2 ? -sub : sub);
  }
  memo[key] = total;
  return total;
}

}  // namespace detail

/// χ_μ on the class of the given cycle type (Murnaghan-Nakayama).
inline long long character(const Partition& mu, const Partition& cycle_type) {
  if (mu.size() != cycle_type.size()) throw std::invalid_argument("character: size mismatch");
  const int l = mu.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = mu.parts[i] + (l - 1 - i);
  std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
  return detail::mn_rec(beta, cycle_type.parts, 0, memo);
}

inline std::uint64_t class_size(const Partition& cycle_type) {
  std::uint64_t n = 1;
  for (int i = 2; i <= cycle_type.size(); ++i) n *= i;
  std::map<int, int> mult;
  for (int v : cycle_type.parts) ++mult[v];
  for (auto [len, c] : mult) {
    for (int t = 0; t < c; ++t) n /= len;
    for (int t = 2; t <= c; ++t) n /= t;
  }
  return n;
}

inline void require_semisimple_group_algebra(std::uint64_t characteristic, int m) {
  if (characteristic != 0 && characteristic <= static_cast<std::uint64_t>(m))
    throw unsupported_field("characteristic must be 0 or exceed the degree of the symmetric group");
}

/// Element of k[S_m]; the product is the convolution over composition of permutations.
template <Field F>
class GroupAlgebraElement {
 public:
  using V = typename F::value_type;

  GroupAlgebraElement(F k, int m) : k_(std::move(k)), m_(m) {}

  static GroupAlgebraElement basis(F k, const Permutation& g) {
    GroupAlgebraElement e(k, g.degree());
    e.c_.emplace(g, k.one());
    return e;
  }
  static GroupAlgebraElement identity(F k, int m) { return basis(k, Permutation::identity(m)); }

  const F& field() const { return k_; }
  int degree() const { return m_; }
  const std::map<Permutation, V>& terms() const { return c_; }
  V coefficient(const Permutation& g) const {
    auto it = c_.find(g);
    return it == c_.end() ? k_.zero() : it->second;
  }
  void add_term(const Permutation& g, const V& c) {
    if (g.degree() != m_) throw std::invalid_argument("degree mismatch");
    if (is_zero(c)) return;
    auto [it, fresh] = c_.emplace(g, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_zero(it->second)) c_.erase(it);
    }
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a.check(b);
    for (const auto& [g, c] : b.c_) a.add_term(g, c);
    return a;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a.check(b);
    for (const auto& [g, c] : b.c_) a.add_term(g, a.k_.zero() - c);
    return a;
  }
  friend GroupAlgebraElement operator*(const V& s, GroupAlgebraElement a) {
    if (is_zero(s)) return GroupAlgebraElement(a.k_, a.m_);
    for (auto& [g, c] : a.c_) c = s * c;
    return a;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check(b);
    GroupAlgebraElement out(a.k_, a.m_);
    for (const auto& [g, x] : a.c_)
      for (const auto& [h, y] : b.c_) out.add_term(g * h, x * y);
    return out;
  }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }
  bool is_zero_element() const { return c_.empty(); }

  /// Coefficient vector indexed by lex_rank.
  std::vector<V> to_vector() const {
    std::vector<V> v(factorial_size(), k_.zero());
    for (const auto& [g, c] : c_) v[lex_rank(g)] = c;
    return v;
  }

 private:
  std::size_t factorial_size() const {
    std::size_t n = 1;
    for (int i = 2; i <= m_; ++i) n *= i;
    return n;
  }
  void check(const GroupAlgebraElement& o) const {
    if (o.m_ != m_) throw std::invalid_argument("group algebra degree mismatch");
  }
  F k_;
  int m_;
  std::map<Permutation, V> c_;
};

/// e_μ = (dim μ / m!) Σ χ_μ(σ⁻¹) σ.
template <Field F>
GroupAlgebraElement<F> central_idempotent(const F& k, const Partition& mu) {
  const int m = mu.size();
  require_semisimple_group_algebra(k.characteristic(), m);
  GroupAlgebraElement<F> e(k, m);
  const auto scale = k.from_int(static_cast<long long>(standard_tableaux_count(mu))) /
                     k.from_int(static_cast<long long>(
                         [m] {
                           long long n = 1;
                           for (int i = 2; i <= m; ++i) n *= i;
                           return n;
                         }()));
  std::map<std::vector<int>, long long> chi;
  for (const auto& s : Permutation::all(m)) {
    auto ct = s.inverse().cycle_type();
    auto it = chi.find(ct);
    if (it == chi.end()) it = chi.emplace(ct, character(mu, Partition(ct))).first;
    e.add_term(s, scale * k.from_int(it->second));
  }
  return e;
}

/// Σ over permutations of the given positions, each weighted by its sign if `alternating`.
template <Field F>
GroupAlgebraElement<F> block_symmetrizer(const F& k, int m, const std::vector<int>& positions, bool alternating) {
  for (int p : positions)
    if (p < 1 || p > m) throw std::out_of_range("symmetrizer position");
  GroupAlgebraElement<F> e(k, m);
  const int q = static_cast<int>(positions.size());
  for (const auto& s : Permutation::all(q)) {
    auto img = Permutation::identity(m).images();
    for (int t = 0; t < q; ++t) img[positions[t] - 1] = positions[s(t + 1) - 1];
    e.add_term(Permutation(img), k.from_int(alternating ? s.sign() : 1));
  }
  return e;
}

namespace detail {
inline std::vector<int> block_positions(int offset, int len) {
  std::vector<int> v;
  for (int t = 1; t <= len; ++t) v.push_back(offset + t);
  return v;
}
inline void check_blocks(int m, int p, int q, int off_p, int off_q) {
  if (p < 0 || q < 0 || off_p < 0 || off_q < 0 || off_p + p > m || off_q + q > m)
    throw std::out_of_range("block outside 1..m");
  if (p > 0 && q > 0 && off_p < off_q + q && off_q < off_p + p) throw std::invalid_argument("blocks overlap");
}
}  // namespace detail

/// Alt_p on positions off_p+1..off_p+p times Alt_q on off_q+1..off_q+q.
template <Field F>
GroupAlgebraElement<F> alt_alt(const F& k, int m, int p, int q, int off_p = 0, int off_q = -1) {
  if (off_q < 0) off_q = off_p + p;
  detail::check_blocks(m, p, q, off_p, off_q);
  return block_symmetrizer(k, m, detail::block_positions(off_p, p), true) *
         block_symmetrizer(k, m, detail::block_positions(off_q, q), true);
}

/// Sym_p on positions off_p+1..off_p+p times Sym_q on off_q+1..off_q+q.
template <Field F>
GroupAlgebraElement<F> sym_sym(const F& k, int m, int p, int q, int off_p = 0, int off_q = -1) {
  if (off_q < 0) off_q = off_p + p;
  detail::check_blocks(m, p, q, off_p, off_q);
  return block_symmetrizer(k, m, detail::block_positions(off_p, p), false) *
         block_symmetrizer(k, m, detail::block_positions(off_q, q), false);
}

/// Dimension of the two-sided ideal of k[S_m] generated by e.
template <Field F>
std::size_t two_sided_ideal_dim(const GroupAlgebraElement<F>& e) {
  const int m = e.degree();
  const auto& k = e.field();
  const auto perms = Permutation::all(m);
  SpanBasis<F> span(k, perms.size());
  std::deque<GroupAlgebraElement<F>> todo;
  if (span.add(e.to_vector())) todo.push_back(e);
  while (!todo.empty()) {
    auto v = std::move(todo.front());
    todo.pop_front();
    for (int i = 1; i < m; ++i) {
      auto s = GroupAlgebraElement<F>::basis(k, Permutation::simple(m, i));
      for (auto w : {s * v, v * s})
        if (span.add(w.to_vector())) todo.push_back(std::move(w));
    }
  }
  return span.size();
}

/// The simple module M_μ realised inside k[S_m] as the left ideal of a Young symmetrizer.
/// Basis: reduced echelon rows of that ideal; coordinates are read off the pivot columns.
template <Field F>
class SpechtModule {
 public:
  using V = typename F::value_type;

  SpechtModule(F k, Partition mu) : k_(std::move(k)), mu_(std::move(mu)), m_(mu_.size()) {
    require_semisimple_group_algebra(k_.characteristic(), m_);
    perms_ = Permutation::all(m_);
    // row-reading tableau: row r holds consecutive entries
    std::vector<std::vector<int>> rows, cols(mu_.part(0));
    int next = 1;
    for (int r = 0; r < mu_.length(); ++r) {
      rows.emplace_back();
      for (int c = 0; c < mu_.parts[r]; ++c) {
        rows.back().push_back(next);
        cols[c].push_back(next);
        ++next;
      }
    }
    GroupAlgebraElement<F> a = GroupAlgebraElement<F>::identity(k_, m_);
    for (const auto& row : rows) a = a * block_symmetrizer(k_, m_, row, false);
    GroupAlgebraElement<F> b = GroupAlgebraElement<F>::identity(k_, m_);
    for (const auto& col : cols) b = b * block_symmetrizer(k_, m_, col, true);
    const auto y = a * b;

    SpanBasis<F> span(k_, perms_.size());
    std::deque<std::vector<V>> todo;
    if (span.add(y.to_vector())) todo.push_back(y.to_vector());
    while (!todo.empty()) {
      auto v = std::move(todo.front());
      todo.pop_front();
      for (int i = 1; i < m_; ++i) {
        auto w = left_multiply(Permutation::simple(m_, i), v);
        if (span.add(w)) todo.push_back(std::move(w));
      }
    }
    MatrixOver<F> gens(span.size(), perms_.size(), k_.zero());
    for (std::size_t r = 0; r < span.size(); ++r)
      for (std::size_t c = 0; c < perms_.size(); ++c) gens(r, c) = span.generators()[r][c];
    pivots_ = rref_in_place(k_, gens);
    basis_ = gens;
    dim_ = static_cast<int>(pivots_.size());
    for (int i = 1; i < m_; ++i) generators_.push_back(compute_matrix(Permutation::simple(m_, i)));
  }

  const Partition& partition() const { return mu_; }
  int dim() const { return dim_; }
  const F& field() const { return k_; }
  /// Matrices of s_1, ..., s_{m-1}.
  const std::vector<MatrixOver<F>>& generator_matrices() const { return generators_; }
  /// Basis vectors of the ideal (rows), as coefficient vectors over Permutation::all(m).
  const MatrixOver<F>& basis() const { return basis_; }

  /// ρ_μ(σ), assembled from a word in the generators.
  MatrixOver<F> matrix(const Permutation& sigma) const {
    if (sigma.degree() != m_) throw std::invalid_argument("Specht matrix: degree mismatch");
    if (auto it = cache_.find(sigma); it != cache_.end()) return it->second;
    auto mat = identity_matrix(k_, dim_);
    for (int i : sigma.reduced_word()) mat = multiply(k_, mat, generators_[i - 1]);
    cache_.emplace(sigma, mat);
    return mat;
  }

  /// ρ_μ extended linearly to k[S_m].
  MatrixOver<F> matrix(const GroupAlgebraElement<F>& e) const {
    MatrixOver<F> out(dim_, dim_, k_.zero());
    for (const auto& [g, c] : e.terms()) {
      auto mg = matrix(g);
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
          if (!is_zero(mg(i, j))) out(i, j) = out(i, j) + c * mg(i, j);
    }
    return out;
  }

 private:
  std::vector<V> left_multiply(const Permutation& g, const std::vector<V>& v) const {
    std::vector<V> out(v.size(), k_.zero());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) out[lex_rank(g * perms_[i])] = v[i];
    return out;
  }
  MatrixOver<F> compute_matrix(const Permutation& g) const {
    MatrixOver<F> out(dim_, dim_, k_.zero());
    for (int j = 0; j < dim_; ++j) {
      std::vector<V> col(basis_.row(j), basis_.row(j) + basis_.cols());
      auto w = left_multiply(g, col);
      for (int i = 0; i < dim_; ++i) out(i, j) = w[pivots_[i]];
    }
    return out;
  }

  F k_;
  Partition mu_;
  int m_;
  int dim_ = 0;
  std::vector<Permutation> perms_;
  MatrixOver<F> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<MatrixOver<F>> generators_;
  mutable std::map<Permutation, MatrixOver<F>> cache_;
};

}  // namespace brauer
