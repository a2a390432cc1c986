#pragma once

// Block decomposition of the standard series: B[k] = B(k)/B(k+1) splits over partitions
// μ ⊢ f−2k into generalized matrix algebras B[k;μ], each described by a structure matrix Φ.

#include "brauer/algebra.hpp"
#include "brauer/symmetric_group.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

namespace brauer {

/// Shared Specht module per (field, μ).
template <Field F>
const SpechtModule<F>& specht_module(const F& k, const Partition& mu) {
  static std::mutex mu_lock;
  static std::map<std::pair<std::uint64_t, std::vector<int>>, std::unique_ptr<SpechtModule<F>>> cache;
  std::lock_guard<std::mutex> lock(mu_lock);
  auto& slot = cache[{k.characteristic(), mu.parts}];
  if (!slot) slot = std::make_unique<SpechtModule<F>>(k, mu);
  return *slot;
}

/// Cached all_junctions(f, k).
inline const std::vector<Junction>& junction_basis(int f, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Junction>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{f, k}];
  if (!slot) slot = std::make_unique<std::vector<Junction>>(all_junctions(f, k));
  return *slot;
}

inline std::size_t junction_index(const Junction& j) {
  const auto& all = junction_basis(j.f(), j.k());
  auto it = std::lower_bound(all.begin(), all.end(), j);
  if (it == all.end() || !(*it == j)) throw std::invalid_argument("junction not in basis");
  return static_cast<std::size_t>(it - all.begin());
}

struct BlockDescriptor {
  int k = 0;
  Partition mu;
  std::size_t specht_dim = 0;
  std::size_t junctions = 0;
  std::size_t h() const { return specht_dim * junctions; }
};

inline BlockDescriptor describe_block(int f, int k, const Partition& mu) {
  if (k < 0 || 2 * k > f || mu.size() != f - 2 * k) throw std::invalid_argument("partition size must be f-2k");
  return {k, mu, standard_tableaux_count(mu), junction_basis(f, k).size()};
}

/// All (k, μ) in order of increasing k, partitions from (m) down to (1^m).
inline std::vector<BlockDescriptor> all_blocks(int f) {
  std::vector<BlockDescriptor> out;
  for (int k = 0; 2 * k <= f; ++k)
    for (const auto& mu : partitions(f - 2 * k)) out.push_back(describe_block(f, k, mu));
  return out;
}

/// Φ of B[k;μ]. Row (b, w) and column (c, v), index specht·|J| + junction:
/// x^{C(w,v)} ρ_μ(γ(w,v)⁻¹)_{bc}, or 0 when gluing w to v drops a level.
template <Field F>
MatrixOver<F> block_structure_matrix(const AlgebraContext<F>& ctx, int k, const Partition& mu) {
  const auto desc = describe_block(ctx.f, k, mu);
  const auto& js = junction_basis(ctx.f, k);
  const auto& sp = specht_module(ctx.field, mu);
  const std::size_t d = desc.specht_dim, nj = js.size();
  MatrixOver<F> phi(desc.h(), desc.h(), ctx.field.zero());
  for (std::size_t w = 0; w < nj; ++w)
    for (std::size_t v = 0; v < nj; ++v) {
      auto g = glue_junctions(js[w], js[v]);
      if (!g) continue;
      const auto scale = ctx.x_power(g->loops);
      if (is_zero(scale)) continue;
      const auto rho = sp.matrix(g->gamma.inverse());
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) phi(b * nj + w, c * nj + v) = scale * rho(b, c);
    }
  return phi;
}

/// Exact rank: fraction-free over Q, plain elimination over F_p.
template <Field F>
std::size_t exact_rank(const F& k, const MatrixOver<F>& m) {
  if constexpr (std::is_same_v<F, RationalField>)
    return bareiss_rank(m);
  else
    return rank(k, m);
}

struct BlockRadical {
  BlockDescriptor block;
  std::size_t rank = 0;
  std::size_t rad_dim = 0;
  std::size_t simple_dim = 0;
};

/// h, rank Φ and h² − rank² for B[k;μ].
template <Field F>
BlockRadical block_radical_dim(const AlgebraContext<F>& ctx, int k, const Partition& mu) {
  const auto phi = block_structure_matrix(ctx, k, mu);
  BlockRadical r;
  r.block = describe_block(ctx.f, k, mu);
  r.rank = exact_rank(ctx.field, phi);
  const std::size_t h = r.block.h();
  r.simple_dim = r.rank * r.rank;
  r.rad_dim = h * h - r.simple_dim;
  return r;
}

/// One row per block of the semisimple quotient S = ⊕ S[k;μ].
template <Field F>
std::vector<BlockRadical> semisimple_quotient_dims(const AlgebraContext<F>& ctx) {
  std::vector<BlockRadical> out;
  for (const auto& b : all_blocks(ctx.f)) out.push_back(block_radical_dim(ctx, b.k, b.mu));
  return out;
}

/// dim B − Σ rank².
template <Field F>
std::size_t block_route_radical_dim(const AlgebraContext<F>& ctx) {
  std::size_t s = 0;
  for (const auto& r : semisimple_quotient_dims(ctx)) s += r.simple_dim;
  return ctx.dim() - s;
}

// ------------------------------------------------------------ semisimplicity

struct SemisimplicityVerdict {
  std::optional<bool> semisimple;
  /// "table" for the integral shapes n, 0, −2n; "stable" for non-integral x; "not covered" otherwise.
  std::string tag;
};

inline SemisimplicityVerdict is_semisimple_criterion(int f, const Rational& x) {
  if (f < 1) throw std::invalid_argument("f must be positive");
  if (boost::multiprecision::denominator(x) != 1) return {true, "stable"};
  const Integer n = boost::multiprecision::numerator(x);
  if (n == 0) return {f == 1 || f == 3 || f == 5, "table"};
  if (n > 0) return {n >= f - 1, "table"};
  if (n % 2 == 0) return {-n / 2 >= f - 1, "table"};
  return {std::nullopt, "not covered"};
}

/// Rui's criterion for integral x ≠ 0 (and the x = 0 rule), used as an independent cross-check.
inline bool rui_semisimple(int f, long long x) {
  if (x == 0) return f == 1 || f == 3 || f == 5;
  const bool in_window = x >= 4 - 2 * f && x <= f - 2;
  const bool excepted = x > 4 - 2 * f && x <= 3 - f && (x % 2 != 0);
  return !(in_window && !excepted);
}

// ------------------------------------------------------ matrix units and Brown

/// Preimage in k[S_m] of the matrix unit E_ab of ρ_μ: (dim/m!) Σ_g ρ_μ(g⁻¹)_{ba} g.
template <Field F>
GroupAlgebraElement<F> matrix_unit(const F& k, const Partition& mu, std::size_t a, std::size_t b) {
  const auto& sp = specht_module(k, mu);
  const int m = mu.size();
  const auto scale = k.from_int(sp.dim()) / k.from_int(static_cast<long long>(factorial(m)));
  GroupAlgebraElement<F> e(k, m);
  for (const auto& g : Permutation::all(m)) e.add_term(g, scale * sp.matrix(g.inverse())(b, a));
  return e;
}

/// Lift of an h×h block matrix X = Σ X_{(a,t),(b,w)} E_ab ⊗ e_{t,w} into B(k).
/// The group element g sits on the strands as the diagram with permutation part g⁻¹.
template <Field F>
BrauerElement<F> lift_block_element(const AlgebraContext<F>& ctx, int k, const Partition& mu,
                                    const MatrixOver<F>& x) {
  const auto desc = describe_block(ctx.f, k, mu);
  const auto& js = junction_basis(ctx.f, k);
  const std::size_t nj = js.size(), d = desc.specht_dim;
  if (x.rows() != desc.h() || x.cols() != desc.h()) throw std::invalid_argument("block matrix shape");
  BrauerElement<F> out(ctx);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      bool any = false;
      for (std::size_t t = 0; t < nj && !any; ++t)
        for (std::size_t w = 0; w < nj && !any; ++w) any = !is_zero(x(a * nj + t, b * nj + w));
      if (!any) continue;
      const auto e = matrix_unit(ctx.field, mu, a, b);
      for (std::size_t t = 0; t < nj; ++t)
        for (std::size_t w = 0; w < nj; ++w) {
          const auto& c = x(a * nj + t, b * nj + w);
          if (is_zero(c)) continue;
          for (const auto& [g, cg] : e.terms())
            out.add_term(reconstruct(g.inverse(), ArcStructure{js[t], js[w]}), c * cg);
        }
    }
  return out;
}

/// Spanning set of the block radical {X : ΦXΦ = 0}: u vᵀ with Φu = 0 or vᵀΦ = 0.
template <Field F>
std::vector<MatrixOver<F>> block_radical_generators(const AlgebraContext<F>& ctx, const MatrixOver<F>& phi) {
  const auto& k = ctx.field;
  const std::size_t h = phi.rows();
  MatrixOver<F> phit(h, h, k.zero());
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) phit(i, j) = phi(j, i);
  std::vector<MatrixOver<F>> out;
  for (const auto& u : nullspace(k, phi))
    for (std::size_t c = 0; c < h; ++c) {
      MatrixOver<F> m(h, h, k.zero());
      for (std::size_t r = 0; r < h; ++r) m(r, c) = u[r];
      out.push_back(std::move(m));
    }
  for (const auto& v : nullspace(k, phit))
    for (std::size_t r = 0; r < h; ++r) {
      MatrixOver<F> m(h, h, k.zero());
      for (std::size_t c = 0; c < h; ++c) m(r, c) = v[c];
      out.push_back(std::move(m));
    }
  return out;
}

/// Basis of {X : ΦXΦ = 0}, as h×h matrices (dimension h² − rank²).
template <Field F>
std::vector<MatrixOver<F>> block_radical_basis(const AlgebraContext<F>& ctx, const MatrixOver<F>& phi) {
  const std::size_t h = phi.rows();
  SpanBasis<F> span(ctx.field, h * h);
  std::vector<MatrixOver<F>> out;
  for (auto& m : block_radical_generators(ctx, phi)) {
    std::vector<typename F::value_type> v(h * h);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) v[i * h + j] = m(i, j);
    if (span.add(v)) out.push_back(std::move(m));
  }
  return out;
}

struct BrownCheck {
  BlockDescriptor block;
  std::size_t rad_dim = 0;
  /// lift(X) lift(Y) ≡ lift(XΦY) modulo B(k+1) on all sampled pairs.
  bool product_law = true;
  /// Lifted triple products vanish modulo B(k+1).
  bool cube_zero = true;
  std::size_t triples_checked = 0;
};

/// Brown's nilpotency bound for one block: the lifted block radical cubed lies in B(k+1).
/// All triples are checked when there are at most `exhaustive_limit`; otherwise `samples` random ones.
template <Field F>
BrownCheck brown_check(const AlgebraContext<F>& ctx, int k, const Partition& mu, std::uint64_t seed = 1,
                       std::size_t exhaustive_limit = 512, std::size_t samples = 200) {
  BrownCheck out;
  out.block = describe_block(ctx.f, k, mu);
  const auto phi = block_structure_matrix(ctx, k, mu);
  const auto rad = block_radical_basis(ctx, phi);
  out.rad_dim = rad.size();
  if (rad.empty()) return out;
  std::vector<BrauerElement<F>> lifts;
  for (const auto& x : rad) lifts.push_back(lift_block_element(ctx, k, mu, x));
  const auto& kf = ctx.field;
  auto level = [&](const BrauerElement<F>& e) { return truncate_above(e, k); };
  const std::size_t n = rad.size();
  std::vector<std::array<std::size_t, 3>> triples;
  if (n * n * n <= exhaustive_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) triples.push_back({a, b, c});
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) triples.push_back({pick(rng), pick(rng), pick(rng)});
  }
  for (const auto& [a, b, c] : triples) {
    const auto xy = multiply(kf, multiply(kf, rad[a], phi), rad[b]);
    const auto ab = level(lifts[a] * lifts[b]);
    if (!(ab == lift_block_element(ctx, k, mu, xy))) out.product_law = false;
    const auto abc = level(ab * lifts[c]);
    if (!abc.is_zero_element()) out.cube_zero = false;
    ++out.triples_checked;
  }
  return out;
}

}  // namespace brauer
