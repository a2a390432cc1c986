#pragma once

#include "brauer/diagram.hpp"
#include "brauer/field.hpp"
#include "brauer/linalg.hpp"
#include "brauer/modular.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// f, the loop parameter x and the coefficient field.
template <Field F>
struct AlgebraContext {
  using V = typename F::value_type;

  int f;
  V x;
  F field;

  AlgebraContext(int f_, V x_, F k) : f(f_), x(std::move(x_)), field(std::move(k)) {
    if (f < 1 || f > kMaxF) throw std::invalid_argument("f out of supported range");
    const auto p = field.characteristic();
    if (p != 0 && p <= static_cast<std::uint64_t>(f))
      throw unsupported_field("coefficient field needs characteristic 0 or greater than f");
  }

  /// Skips the characteristic check; for routines valid over every field.
  static AlgebraContext unchecked(int f_, V x_, F k) { return AlgebraContext(f_, std::move(x_), std::move(k), 0); }

  /// x^e.
  V x_power(int e) const { return power(x, e, field.one()); }
  std::size_t dim() const { return static_cast<std::size_t>(double_factorial(2 * f - 1)); }

  friend bool operator==(const AlgebraContext& a, const AlgebraContext& b) {
    return a.f == b.f && a.x == b.x && a.field == b.field;
  }

 private:
  AlgebraContext(int f_, V x_, F k, int) : f(f_), x(std::move(x_)), field(std::move(k)) {
    if (f < 1 || f > kMaxF) throw std::invalid_argument("f out of supported range");
  }
};

using QContext = AlgebraContext<RationalField>;

inline QContext make_context(int f, const Rational& x) { return QContext(f, x, RationalField{}); }

/// Cached all_diagrams(f).
inline const std::vector<Diagram>& diagram_basis(int f) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Diagram>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[f];
  if (!slot) slot = std::make_unique<std::vector<Diagram>>(all_diagrams(f));
  return *slot;
}

/// Sparse linear combination of f-diagrams.
template <Field F>
class BrauerElement {
 public:
  using V = typename F::value_type;
  using Context = AlgebraContext<F>;

  explicit BrauerElement(Context ctx) : ctx_(std::move(ctx)) {}

  static BrauerElement diagram(const Context& ctx, const Diagram& d) { return term(ctx, d, ctx.field.one()); }
  static BrauerElement term(const Context& ctx, const Diagram& d, const V& c) {
    BrauerElement e(ctx);
    e.add_term(d, c);
    return e;
  }
  static BrauerElement identity(const Context& ctx) { return diagram(ctx, Diagram::identity(ctx.f)); }

  /// From coordinates over diagram_basis(f).
  static BrauerElement from_vector(const Context& ctx, const std::vector<V>& v) {
    const auto& basis = diagram_basis(ctx.f);
    if (v.size() != basis.size()) throw std::invalid_argument("coordinate vector length");
    BrauerElement e(ctx);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) e.c_.emplace(basis[i], v[i]);
    return e;
  }

  const Context& context() const { return ctx_; }
  const std::map<Diagram, V>& terms() const { return c_; }
  std::size_t support_size() const { return c_.size(); }
  bool is_zero_element() const { return c_.empty(); }

  V coefficient(const Diagram& d) const {
    auto it = c_.find(d);
    return it == c_.end() ? ctx_.field.zero() : it->second;
  }

  void add_term(const Diagram& d, const V& c) {
    if (d.f() != ctx_.f) throw std::invalid_argument("diagram size does not match the algebra");
    if (is_zero(c)) return;
    auto [it, fresh] = c_.emplace(d, c);
    if (!fresh) {
      it->second = it->second + c;
      if (is_zero(it->second)) c_.erase(it);
    }
  }

  std::vector<V> to_vector() const {
    std::vector<V> v(ctx_.dim(), ctx_.field.zero());
    for (const auto& [d, c] : c_) v[diagram_rank(d)] = c;
    return v;
  }

  /// Smallest arc count in the support (f if zero).
  int min_arcs() const {
    int m = ctx_.f;
    for (const auto& [d, c] : c_) m = std::min(m, d.arc_count());
    return m;
  }

  friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) {
    a.check(b);
    for (const auto& [d, c] : b.c_) a.add_term(d, c);
    return a;
  }
  friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) {
    a.check(b);
    for (const auto& [d, c] : b.c_) a.add_term(d, a.ctx_.field.zero() - c);
    return a;
  }
  friend BrauerElement operator*(const V& s, BrauerElement a) {
    if (is_zero(s)) return BrauerElement(a.ctx_);
    for (auto& [d, c] : a.c_) c = s * c;
    return a;
  }
  friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
    a.check(b);
    BrauerElement out(a.ctx_);
    std::vector<V> xp;
    for (int e = 0; e <= a.ctx_.f; ++e) xp.push_back(a.ctx_.x_power(e));
    for (const auto& [da, ca] : a.c_)
      for (const auto& [db, cb] : b.c_) {
        auto r = compose(da, db);
        out.add_term(r.diagram, ca * cb * xp[r.loops]);
      }
    return out;
  }
  friend bool operator==(const BrauerElement& a, const BrauerElement& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

 private:
  void check(const BrauerElement& o) const {
    if (!(o.ctx_ == ctx_)) throw std::invalid_argument("elements from different algebra contexts");
  }
  Context ctx_;
  std::map<Diagram, V> c_;
};

using QElement = BrauerElement<RationalField>;

template <Field F>
BrauerElement<F> multiply(const BrauerElement<F>& a, const BrauerElement<F>& b) {
  return a * b;
}

/// Splits e into its part inside B(k) (diagrams with at least k arcs) and the rest.
template <Field F>
std::pair<BrauerElement<F>, BrauerElement<F>> filtration_project(const BrauerElement<F>& e, int k) {
  BrauerElement<F> in(e.context()), rest(e.context());
  for (const auto& [d, c] : e.terms()) (d.arc_count() >= k ? in : rest).add_term(d, c);
  return {in, rest};
}

/// Drops every diagram with more than `level` arcs (reduction modulo B(level+1)).
template <Field F>
BrauerElement<F> truncate_above(const BrauerElement<F>& e, int level) {
  BrauerElement<F> out(e.context());
  for (const auto& [d, c] : e.terms())
    if (d.arc_count() <= level) out.add_term(d, c);
  return out;
}

// ------------------------------------------------------------------ trace form

/// Trace form tr(L_a L_b) of the left regular representation of the subquotient
/// B(lo)/B(hi+1), on its diagram basis (diagrams with lo..hi arcs, canonical order).
template <Field F>
MatrixOver<F> trace_form(const AlgebraContext<F>& ctx, int lo, int hi) {
  const auto& all = diagram_basis(ctx.f);
  std::vector<std::size_t> idx;  // subquotient basis -> global index
  std::vector<long> local(all.size(), -1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    int a = all[i].arc_count();
    if (a >= lo && a <= hi) {
      local[i] = static_cast<long>(idx.size());
      idx.push_back(i);
    }
  }
  std::vector<typename F::value_type> xp;
  for (int e = 0; e <= ctx.f; ++e) xp.push_back(ctx.x_power(e));
  // t(d) = trace of left multiplication by d
  std::vector<typename F::value_type> t(idx.size(), ctx.field.zero());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      auto r = compose(all[idx[i]], all[idx[j]]);
      if (r.diagram == all[idx[j]]) t[i] = t[i] + xp[r.loops];
    }
  MatrixOver<F> tf(idx.size(), idx.size(), ctx.field.zero());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      auto r = compose(all[idx[i]], all[idx[j]]);
      if (r.diagram.arc_count() > hi) continue;
      tf(i, j) = xp[r.loops] * t[static_cast<std::size_t>(local[diagram_rank(r.diagram)])];
    }
  return tf;
}

template <Field F>
MatrixOver<F> trace_form(const AlgebraContext<F>& ctx) {
  return trace_form(ctx, 0, ctx.f / 2);
}

/// Exact nullspace of a rational matrix through the multi-modular route.
inline modular::Nullspace rational_nullspace(const Matrix<Rational>& m) {
  return modular::certified_nullspace(clear_denominators(m));
}

/// Radical of B_f^(x) in characteristic 0, as the radical of the trace form.
class RadicalOracle {
 public:
  explicit RadicalOracle(QContext ctx) : ctx_(std::move(ctx)), form_(trace_form(ctx_)) {}

  const QContext& context() const { return ctx_; }
  const Matrix<Rational>& form() const { return form_; }

  std::size_t dim() const { return null().basis.size(); }

  std::vector<QElement> basis() const {
    std::vector<QElement> out;
    for (const auto& v : null().basis) out.push_back(QElement::from_vector(ctx_, v));
    return out;
  }

  /// Coordinate vectors of a radical basis.
  const std::vector<std::vector<Rational>>& basis_vectors() const { return null().basis; }

  /// e ∈ Rad  ⟺  the trace form kills e.
  bool contains(const QElement& e) const {
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (const auto& [d, c] : e.terms()) sparse.emplace_back(diagram_rank(d), c);
    for (std::size_t i = 0; i < form_.rows(); ++i) {
      Rational acc = 0;
      for (const auto& [j, c] : sparse) acc += form_(i, j) * c;
      if (!acc.is_zero()) return false;
    }
    return true;
  }

 private:
  const modular::Nullspace& null() const {
    if (!null_) null_ = std::make_unique<modular::Nullspace>(rational_nullspace(form_));
    return *null_;
  }
  QContext ctx_;
  Matrix<Rational> form_;
  mutable std::unique_ptr<modular::Nullspace> null_;
};

inline void require_char_zero(std::uint64_t characteristic) {
  if (characteristic != 0)
    throw unsupported_field("the trace-form radical is only valid in characteristic 0");
}

/// Basis of Rad(B_f^(x)).
inline std::vector<QElement> radical_basis(const QContext& ctx) { return RadicalOracle(ctx).basis(); }

template <Field F>
std::vector<BrauerElement<F>> radical_basis(const AlgebraContext<F>& ctx) {
  require_char_zero(ctx.field.characteristic());
  throw unsupported_field("radical needs the rational field");
}

/// dim Rad of the subquotient B(lo)/B(hi+1) computed from its own trace form.
inline std::size_t subquotient_radical_dim(const QContext& ctx, int lo, int hi) {
  return rational_nullspace(trace_form(ctx, lo, hi)).basis.size();
}

}  // namespace brauer
