#pragma once

// π_V and π_W: B_f^(n) on V^⊗f (orthogonal, dim V = n) and B_f^(−2n) on W^⊗f (symplectic, dim W = 2n).

#include "brauer/algebra.hpp"
#include "brauer/modular.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace brauer {

using IntMatrix = Matrix<long long>;

enum class Series { orthogonal, symplectic };

inline std::string to_string(Series s) { return s == Series::orthogonal ? "orthogonal" : "symplectic"; }

/// V with the identity form, or W = k^{2n} with J = [[0, I], [−I, 0]].
struct BilinearSpace {
  Series kind = Series::orthogonal;
  int n = 1;
  int dim = 1;
  IntMatrix gram;

  static BilinearSpace orthogonal(int n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    BilinearSpace s{Series::orthogonal, n, n, IntMatrix(n, n, 0)};
    for (int i = 0; i < n; ++i) s.gram(i, i) = 1;
    return s;
  }
  static BilinearSpace symplectic(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    BilinearSpace s{Series::symplectic, n, 2 * n, IntMatrix(2 * n, 2 * n, 0)};
    for (int i = 0; i < n; ++i) {
      s.gram(i, n + i) = 1;
      s.gram(n + i, i) = -1;
    }
    return s;
  }
  static BilinearSpace make(Series s, int n) { return s == Series::orthogonal ? orthogonal(n) : symplectic(n); }

  /// The parameter x this space realises: n, resp. −2n.
  long long loop_value() const { return kind == Series::orthogonal ? n : -2LL * n; }

  /// ψ = Θ⁻¹(id) as a dim×dim coefficient array, where Θ(v1⊗v2)(v) = (v1, v) v2; equals G^{−T}.
  IntMatrix psi() const {
    IntMatrix p(dim, dim, 0);
    // G is orthogonal with entries in {0, ±1}, so G^{-T} = G
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) p(i, j) = gram(i, j);
    return p;
  }

  /// Θ(Σ ψ_ij e_i⊗e_j) as a matrix: v ↦ Σ ψ_ij (e_i, v) e_j.
  IntMatrix theta(const IntMatrix& t) const {
    IntMatrix m(dim, dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int v = 0; v < dim; ++v) m(j, v) += t(i, j) * gram(i, v);
    return m;
  }
};

/// Operators on the f-fold tensor power of a BilinearSpace, indexed by multi-indices with slot 1 most significant.
class TensorRep {
 public:
  TensorRep(BilinearSpace s, int f) : s_(std::move(s)), f_(f), psi_(s_.psi()) {
    if (f < 1 || f > kMaxF) throw std::invalid_argument("f out of range");
    size_ = 1;
    for (int i = 0; i < f; ++i) size_ *= static_cast<std::size_t>(s_.dim);
  }

  const BilinearSpace& space() const { return s_; }
  int f() const { return f_; }
  std::size_t size() const { return size_; }

  std::vector<int> digits(std::size_t idx) const {
    std::vector<int> d(f_);
    for (int i = f_ - 1; i >= 0; --i) {
      d[i] = static_cast<int>(idx % s_.dim);
      idx /= s_.dim;
    }
    return d;
  }
  std::size_t index(const std::vector<int>& d) const {
    std::size_t idx = 0;
    for (int v : d) idx = idx * s_.dim + v;
    return idx;
  }

  /// Contraction Φ_{p,q} followed by insertion Ψ_{p,q}: entry [out a][in b] = G_{b_p b_q} ψ_{a_p a_q} Π δ.
  IntMatrix tau(int p, int q) const {
    if (p == q || p < 1 || q < 1 || p > f_ || q > f_) throw std::invalid_argument("tau needs 1 <= p != q <= f");
    IntMatrix m(size_, size_, 0);
    for (std::size_t a = 0; a < size_; ++a) {
      auto da = digits(a);
      const long long pa = psi_(da[p - 1], da[q - 1]);
      if (pa == 0) continue;
      auto db = da;
      for (int u = 0; u < s_.dim; ++u)
        for (int v = 0; v < s_.dim; ++v) {
          const long long g = s_.gram(u, v);
          if (g == 0) continue;
          db[p - 1] = u;
          db[q - 1] = v;
          m(a, index(db)) += g * pa;
        }
    }
    return m;
  }

  /// Plain place permutation: output slot i reads input slot σ(i).
  IntMatrix place_permutation(const Permutation& sigma) const {
    if (sigma.degree() != f_) throw std::invalid_argument("permutation degree mismatch");
    IntMatrix m(size_, size_, 0);
    for (std::size_t a = 0; a < size_; ++a) {
      auto da = digits(a);
      std::vector<int> db(f_);
      for (int i = 1; i <= f_; ++i) db[sigma(i) - 1] = da[i - 1];
      m(a, index(db)) = 1;
    }
    return m;
  }

  /// Closed form: ε(d) (symplectic only) · Π_{top arcs i<j} ψ_{a_i a_j} · Π_{bottom arcs i<j} G_{b_i b_j} · Π δ.
  /// Returned sparsely as (row, col, value).
  std::vector<std::tuple<std::size_t, std::size_t, long long>> diagram_entries(const Diagram& d) const {
    if (d.f() != f_) throw std::invalid_argument("diagram size mismatch");
    const long long eps = s_.kind == Series::symplectic ? sign(d) : 1;
    std::vector<Pair> top, bottom, vert;
    for (auto [x, y] : d.edges()) {
      if (y <= f_) top.emplace_back(x, y);
      else if (x > f_) bottom.emplace_back(x - f_, y - f_);
      else vert.emplace_back(x, y - f_);
    }
    std::vector<std::tuple<std::size_t, std::size_t, long long>> out;
    std::vector<int> db(f_, 0);
    for (std::size_t a = 0; a < size_; ++a) {
      auto da = digits(a);
      long long c = eps;
      for (auto [i, j] : top) c *= psi_(da[i - 1], da[j - 1]);
      if (c == 0) continue;
      for (auto [i, j] : vert) db[j - 1] = da[i - 1];
      // each bottom arc ranges over the nonzero form entries
      std::function<void(std::size_t, long long)> rec = [&](std::size_t t, long long acc) {
        if (t == bottom.size()) {
          out.emplace_back(a, index(db), acc);
          return;
        }
        auto [i, j] = bottom[t];
        for (int u = 0; u < s_.dim; ++u)
          for (int v = 0; v < s_.dim; ++v) {
            const long long g = s_.gram(u, v);
            if (g == 0) continue;
            db[i - 1] = u;
            db[j - 1] = v;
            rec(t + 1, acc * g);
          }
      };
      rec(0, c);
    }
    return out;
  }

  IntMatrix diagram(const Diagram& d) const {
    IntMatrix m(size_, size_, 0);
    for (auto [r, c, v] : diagram_entries(d)) m(r, c) += v;
    return m;
  }

  /// π(d) assembled from d = d_σ h_{1,2}⋯h_{2k−1,2k} d_ρ with d_σ ↦ ±σ, h ↦ ±τ.
  IntMatrix diagram_via_factorization(const Diagram& d) const {
    const auto fac = factorize(d);
    const bool symp = s_.kind == Series::symplectic;
    IntMatrix m = place_permutation(fac.sigma);
    if (symp && fac.sigma.sign() < 0) negate(m);
    for (int t = 0; t < fac.k; ++t) {
      auto tm = tau(2 * t + 1, 2 * t + 2);
      if (symp) negate(tm);
      m = mul(m, tm);
    }
    auto r = place_permutation(fac.rho);
    if (symp && fac.rho.sign() < 0) negate(r);
    return mul(m, r);
  }

  /// π of a rational combination.
  Matrix<Rational> element(const QElement& e) const {
    Matrix<Rational> m(size_, size_, Rational(0));
    for (const auto& [d, c] : e.terms())
      for (auto [r, col, v] : diagram_entries(d)) m(r, col) += c * v;
    return m;
  }

  static IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    IntMatrix c(a.rows(), b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t l = 0; l < a.cols(); ++l) {
        const long long x = a(i, l);
        if (!x) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
      }
    return c;
  }
  static void negate(IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  }

 private:
  BilinearSpace s_;
  int f_;
  IntMatrix psi_;
  std::size_t size_ = 1;
};

/// The algebra context matching a space: x = n or x = −2n.
inline QContext tensor_context(const BilinearSpace& s, int f) { return make_context(f, Rational(s.loop_value())); }

inline void require_matching_parameter(const QContext& ctx, const BilinearSpace& s) {
  if (ctx.x != Rational(s.loop_value()))
    throw std::invalid_argument("x must equal n (orthogonal) or -2n (symplectic) for this space");
}

/// Exact basis of Ker(π) ⊆ B_f^(x), computed on the algebra side: one column per diagram,
/// one row per operator entry that some diagram touches.
inline std::vector<QElement> kernel_basis(const QContext& ctx, const BilinearSpace& s) {
  require_matching_parameter(ctx, s);
  const TensorRep rep(s, ctx.f);
  const auto& ds = diagram_basis(ctx.f);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, long long>>> cols(ds.size());
  for (std::size_t j = 0; j < ds.size(); ++j)
    for (auto [r, c, v] : rep.diagram_entries(ds[j])) {
      auto it = rows.emplace(std::make_pair(r, c), rows.size()).first;
      cols[j].emplace_back(it->second, v);
    }
  Matrix<Integer> m(rows.size(), ds.size(), Integer(0));
  for (std::size_t j = 0; j < ds.size(); ++j)
    for (auto [r, v] : cols[j]) m(r, j) += v;
  std::vector<QElement> out;
  if (rows.empty()) {
    for (const auto& d : ds) out.push_back(QElement::diagram(ctx, d));
    return out;
  }
  for (const auto& v : modular::certified_nullspace(m).basis) out.push_back(QElement::from_vector(ctx, v));
  return out;
}

}  // namespace brauer
