#pragma once

#include "brauer/algebra.hpp"
#include "brauer/blocks.hpp"

#include <string>
#include <vector>

namespace brauer {

/// H^μ_{f,k} = M_μ ⊗ H_{f,k}. Coordinates are indexed specht·|J| + junction, as the columns of Φ.
template <Field F>
class CellModule {
 public:
  using V = typename F::value_type;
  using Vector = std::vector<V>;

  CellModule(AlgebraContext<F> ctx, int k, Partition mu)
      : ctx_(std::move(ctx)), desc_(describe_block(ctx_.f, k, mu)), mu_(std::move(mu)) {}

  const AlgebraContext<F>& context() const { return ctx_; }
  int k() const { return desc_.k; }
  const Partition& mu() const { return mu_; }
  std::size_t dim() const { return desc_.h(); }
  const BlockDescriptor& descriptor() const { return desc_; }
  const std::vector<Junction>& junctions() const { return junction_basis(ctx_.f, desc_.k); }

  Vector zero() const { return Vector(dim(), ctx_.field.zero()); }
  Vector unit(std::size_t specht_index, std::size_t junction) const {
    auto v = zero();
    v.at(specht_index * desc_.junctions + junction) = ctx_.field.one();
    return v;
  }

  /// d.(u ⊗ v) = x^{C(d,v)} π(d,v).u ⊗ d⋆v, and 0 when v is not admissible for d.
  Vector act(const Diagram& d, const Vector& w) const {
    check(w);
    const auto& js = junctions();
    const std::size_t nj = js.size(), sd = desc_.specht_dim;
    const auto& sp = specht_module(ctx_.field, mu_);
    Vector out = zero();
    for (std::size_t v = 0; v < nj; ++v) {
      bool any = false;
      for (std::size_t c = 0; c < sd && !any; ++c) any = !is_zero(w[c * nj + v]);
      if (!any) continue;
      auto a = act_on_junction(d, js[v]);
      if (!a) continue;
      const auto scale = ctx_.x_power(a->loops);
      if (is_zero(scale)) continue;
      const std::size_t target = junction_index(a->junction);
      const auto rho = sp.matrix(a->pi);
      for (std::size_t b = 0; b < sd; ++b)
        for (std::size_t c = 0; c < sd; ++c) {
          const auto& y = w[c * nj + v];
          if (is_zero(y) || is_zero(rho(b, c))) continue;
          out[b * nj + target] = out[b * nj + target] + scale * rho(b, c) * y;
        }
    }
    return out;
  }

  Vector act(const BrauerElement<F>& e, const Vector& w) const {
    if (!(e.context() == ctx_)) throw std::invalid_argument("element from a different algebra context");
    Vector out = zero();
    for (const auto& [d, c] : e.terms()) {
      auto part = act(d, w);
      for (std::size_t i = 0; i < out.size(); ++i)
        if (!is_zero(part[i])) out[i] = out[i] + c * part[i];
    }
    return out;
  }

  /// The bilinear data of the module; equal to the block structure matrix Φ.
  MatrixOver<F> gram_matrix() const { return block_structure_matrix(ctx_, desc_.k, mu_); }
  std::size_t gram_rank() const { return exact_rank(ctx_.field, gram_matrix()); }

  /// f even, k = f/2, x = 0: Φ vanishes and the module has no simple quotient.
  bool exceptional() const { return ctx_.f % 2 == 0 && 2 * desc_.k == ctx_.f && is_zero(ctx_.x); }

  /// {y : Φy = 0}; the whole module in the exceptional case.
  std::vector<Vector> gram_radical_basis() const {
    if (exceptional()) return standard_basis();
    return nullspace(ctx_.field, gram_matrix());
  }

  /// Span of e.w for e in `elements`, w over the standard basis; reduced to a basis.
  std::vector<Vector> span_of_action(const std::vector<BrauerElement<F>>& elements) const {
    SpanBasis<F> span(ctx_.field, dim());
    const auto basis = standard_basis();
    for (const auto& e : elements)
      for (const auto& w : basis) span.add(act(e, w));
    return span.generators();
  }

  std::vector<Vector> standard_basis() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) {
      auto v = zero();
      v[i] = ctx_.field.one();
      out.push_back(std::move(v));
    }
    return out;
  }

  /// dim of {e ∈ B : e.M = 0}.
  std::size_t annihilator_dim() const {
    const auto& ds = diagram_basis(ctx_.f);
    const std::size_t n = dim();
    MatrixOver<F> m(n * n, ds.size(), ctx_.field.zero());
    const auto basis = standard_basis();
    for (std::size_t j = 0; j < ds.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) {
        auto col = act(ds[j], basis[i]);
        for (std::size_t r = 0; r < n; ++r) m(i * n + r, j) = col[r];
      }
    return ds.size() - exact_rank(ctx_.field, m);
  }

 private:
  void check(const Vector& w) const {
    if (w.size() != dim()) throw std::invalid_argument("cell vector length");
  }
  AlgebraContext<F> ctx_;
  BlockDescriptor desc_;
  Partition mu_;
};

using QCellModule = CellModule<RationalField>;

/// Rad(B)·M over Q, computed from the trace-form radical; the whole module in the exceptional case.
inline std::vector<std::vector<Rational>> module_radical_basis(const QCellModule& m, const RadicalOracle& rad) {
  if (!(rad.context() == m.context())) throw std::invalid_argument("radical oracle for another context");
  if (m.exceptional()) return m.standard_basis();
  return m.span_of_action(rad.basis());
}

template <Field F>
std::vector<std::vector<typename F::value_type>> module_radical_basis(const CellModule<F>& m) {
  require_char_zero(m.context().field.characteristic());
  throw unsupported_field("module radical needs the rational field");
}

struct RActionReport {
  std::size_t span_dim = 0;
  std::size_t radical_dim = 0;
  bool contained = false;
  bool equals_radical = false;
};

/// R.M against Rad(M) = Gram radical: containment is the claim, equality is only reported.
template <Field F>
RActionReport check_R_action(const CellModule<F>& m, const std::vector<BrauerElement<F>>& r_basis) {
  RActionReport rep;
  const auto rm = m.span_of_action(r_basis);
  const auto rad = m.gram_radical_basis();
  rep.span_dim = rm.size();
  rep.radical_dim = span_dim(m.context().field, m.dim(), rad);
  rep.contained = span_contains(m.context().field, m.dim(), rad, rm);
  rep.equals_radical = rep.contained && rep.span_dim == rep.radical_dim;
  return rep;
}

inline std::string conjecture_label(const std::optional<RActionReport>& r) {
  if (!r) return "n/a";
  return r->equals_radical ? "holds" : "fails";
}

}  // namespace brauer
