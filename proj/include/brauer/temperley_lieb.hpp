#pragma once

// The top ideal B(f/2) of B_f^(1) for even f, its trace functionals and pointed chord diagrams.

#include "brauer/algebra.hpp"
#include "brauer/blocks.hpp"
#include "brauer/cell_module.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace brauer {

namespace detail {
inline void require_even(int f) {
  if (f < 2 || f % 2) throw std::invalid_argument("needs even f >= 2");
}
template <Field F>
void require_tl(const AlgebraContext<F>& ctx) {
  require_even(ctx.f);
  if (!(ctx.x == ctx.field.one())) throw std::invalid_argument("needs x = 1");
}
}  // namespace detail

/// B_f^(1) over an arbitrary field, small characteristic included.
template <Field F>
AlgebraContext<F> tl_context(int f, F field) {
  detail::require_even(f);
  return AlgebraContext<F>::unchecked(f, field.one(), field);
}

/// D_{f,f/2}, canonical order.
inline std::vector<Diagram> top_diagrams(int f) {
  detail::require_even(f);
  return diagrams_with_arcs(f, f / 2);
}

/// d1 d2 inside D_{f,f/2}: loops contribute 1, so the product is a single diagram.
inline Diagram monoid_product(const Diagram& a, const Diagram& b) {
  detail::require_even(a.f());
  if (a.arc_count() != a.f() / 2 || b.arc_count() != b.f() / 2)
    throw std::invalid_argument("monoid product needs diagrams with f/2 arcs");
  return compose(a, b).diagram;
}

/// Tr_B: sum of the coefficients of the f/2-arc diagrams.
template <Field F>
typename F::value_type trace_B(const BrauerElement<F>& e) {
  auto s = e.context().field.zero();
  for (const auto& [d, c] : e.terms())
    if (2 * d.arc_count() == d.f()) s = s + c;
  return s;
}

/// Tr_H: sum of the coordinates.
template <class V>
V trace_H(const std::vector<V>& v, const V& zero) {
  V s = zero;
  for (const auto& c : v) s = s + c;
  return s;
}

/// {d_i − d_{i+1}}: a basis of Ker(Tr_B) in B(f/2).
template <Field F>
std::vector<BrauerElement<F>> tl_radical_basis(const AlgebraContext<F>& ctx) {
  detail::require_tl(ctx);
  const auto ds = top_diagrams(ctx.f);
  std::vector<BrauerElement<F>> out;
  for (std::size_t i = 0; i + 1 < ds.size(); ++i)
    out.push_back(BrauerElement<F>::diagram(ctx, ds[i]) - BrauerElement<F>::diagram(ctx, ds[i + 1]));
  return out;
}

/// {j_i − j_{i+1}} in H^{(0)}_{f,f/2}: a basis of Ker(Tr_H).
template <Field F>
std::vector<std::vector<typename F::value_type>> tl_module_radical(const AlgebraContext<F>& ctx) {
  detail::require_tl(ctx);
  const std::size_t n = junction_basis(ctx.f, ctx.f / 2).size();
  std::vector<std::vector<typename F::value_type>> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<typename F::value_type> v(n, ctx.field.zero());
    v[i] = ctx.field.one();
    v[i + 1] = ctx.field.zero() - ctx.field.one();
    out.push_back(std::move(v));
  }
  return out;
}

/// dim(Rad ∩ B(k)): radical vectors whose coordinates on diagrams with fewer than k arcs vanish.
inline std::size_t radical_ideal_intersection_dim(const RadicalOracle& rad, int k) {
  const auto& ds = diagram_basis(rad.context().f);
  std::vector<std::size_t> low;
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (ds[i].arc_count() < k) low.push_back(i);
  const auto& vs = rad.basis_vectors();
  Matrix<Rational> m(low.size(), vs.size(), Rational(0));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < low.size(); ++i) m(i, j) = vs[j][low[i]];
  return vs.size() - (low.empty() || vs.empty() ? 0 : bareiss_rank(m));
}

struct CubeCheck {
  bool ok = true;
  std::size_t triples = 0;
  bool exhaustive = false;
};

/// (d1 − d1')(d2 − d2')(d3 − d3') = 0. Exhaustive over the difference basis when it has at most
/// `exhaustive_limit` triples, otherwise `samples` random triples of arbitrary differences.
template <Field F>
CubeCheck cube_zero_check(const AlgebraContext<F>& ctx, std::uint64_t seed = 1, std::size_t samples = 10000,
                          std::size_t exhaustive_limit = 1000) {
  detail::require_tl(ctx);
  CubeCheck out;
  const auto ds = top_diagrams(ctx.f);
  using E = BrauerElement<F>;
  auto diff = [&](std::size_t i, std::size_t j) { return E::diagram(ctx, ds[i]) - E::diagram(ctx, ds[j]); };
  const std::size_t n = ds.size();
  if (n < 2) {
    out.exhaustive = true;
    return out;
  }
  const std::size_t b = n - 1;
  if (b * b * b <= exhaustive_limit) {
    out.exhaustive = true;
    for (std::size_t a = 0; a < b; ++a)
      for (std::size_t c = 0; c < b; ++c) {
        const auto ac = diff(a, a + 1) * diff(c, c + 1);
        for (std::size_t e = 0; e < b; ++e) {
          ++out.triples;
          if (!(ac * diff(e, e + 1)).is_zero_element()) out.ok = false;
        }
      }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto p = diff(pick(rng), pick(rng)) * diff(pick(rng), pick(rng)) * diff(pick(rng), pick(rng));
    ++out.triples;
    if (!p.is_zero_element()) out.ok = false;
  }
  return out;
}

// ------------------------------------------------------------ chord diagrams

/// f points on an oriented circle, numbered 1..f clockwise from a basepoint, joined by f/2 chords.
struct ChordDiagram {
  int f = 0;
  std::vector<Pair> chords;
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// Close the junction's segment into a circle; the gap becomes the basepoint.
inline ChordDiagram chord_of_junction(const Junction& j) {
  detail::require_even(j.f());
  if (2 * j.k() != j.f()) throw std::invalid_argument("chord diagrams come from junctions with f/2 arcs");
  return {j.f(), j.arcs()};
}

inline Junction junction_of_chord(const ChordDiagram& c) {
  detail::require_even(c.f);
  if (2 * static_cast<int>(c.chords.size()) != c.f) throw std::invalid_argument("need f/2 chords");
  return Junction(c.f, c.chords);
}

inline std::vector<ChordDiagram> all_chord_diagrams(int f) {
  std::vector<ChordDiagram> out;
  for (const auto& j : all_junctions(f, f / 2)) out.push_back(chord_of_junction(j));
  return out;
}

/// Circular ASCII picture: points are digits (mod 10), chord k is drawn with the k-th letter,
/// '*' marks the basepoint.
inline std::string render_chord(const ChordDiagram& c, int radius = 0) {
  if (radius <= 0) radius = std::max(4, c.f);
  const int rows = 2 * radius + 3, cols = 4 * radius + 7;
  std::vector<std::string> grid(rows, std::string(cols, ' '));
  const double pi = std::acos(-1.0);
  const int cy = rows / 2, cx = cols / 2;
  auto place = [&](double angle, double r) {
    int y = cy - static_cast<int>(std::lround(r * std::cos(angle)));
    int x = cx + static_cast<int>(std::lround(2.0 * r * std::sin(angle)));
    return std::pair<int, int>{y, x};
  };
  auto angle_of = [&](int p) { return 2.0 * pi * (p - 0.5) / c.f; };
  for (std::size_t k = 0; k < c.chords.size(); ++k) {
    auto [a, b] = c.chords[k];
    auto [y0, x0] = place(angle_of(a), radius);
    auto [y1, x1] = place(angle_of(b), radius);
    const int steps = std::max(std::abs(y1 - y0), std::abs(x1 - x0));
    for (int s = 1; s < steps; ++s) {
      int y = y0 + static_cast<int>(std::lround(double(y1 - y0) * s / steps));
      int x = x0 + static_cast<int>(std::lround(double(x1 - x0) * s / steps));
      if (grid[y][x] == ' ') grid[y][x] = static_cast<char>('a' + k % 26);
    }
  }
  for (int p = 1; p <= c.f; ++p) {
    auto [y, x] = place(angle_of(p), radius);
    grid[y][x] = static_cast<char>('0' + p % 10);
  }
  auto [by, bx] = place(0.0, radius + 1);
  grid[by][bx] = '*';
  std::ostringstream os;
  for (auto& line : grid) {
    auto end = line.find_last_not_of(' ');
    if (end == std::string::npos) continue;
    os << line.substr(0, end + 1) << '\n';
  }
  for (std::size_t k = 0; k < c.chords.size(); ++k)
    os << static_cast<char>('a' + k % 26) << ": " << c.chords[k].first << '-' << c.chords[k].second << '\n';
  return os.str();
}

}  // namespace brauer
