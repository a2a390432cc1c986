#pragma once

#include "brauer/permutation.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace brauer {

/// Largest f supported by the fixed-size scratch buffers.
inline constexpr int kMaxF = 12;

using Pair = std::pair<int, int>;

/// Vertex of an f-diagram: top vertex i has index i, bottom vertex j has index f+j.
struct VertexLabel {
  int index = 1;

  static VertexLabel top(int i) { return {i}; }
  static VertexLabel bottom(int j, int f) { return {f + j}; }
  bool is_top(int f) const { return index <= f; }
  /// Position within its row, 1..f.
  int position(int f) const { return is_top(f) ? index : index - f; }
  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

/// Perfect matching on the labels 1..2f.
class Diagram {
 public:
  Diagram() = default;

  static Diagram from_pairs(int f, const std::vector<Pair>& edges) {
    check_f(f);
    Diagram d;
    d.f_ = f;
    d.mate_.assign(2 * f, kFree);
    if (static_cast<int>(edges.size()) != f) throw std::invalid_argument("an f-diagram has exactly f edges");
    for (auto [a, b] : edges) {
      if (a < 1 || b < 1 || a > 2 * f || b > 2 * f || a == b) throw std::invalid_argument("edge label out of range");
      if (d.mate_[a - 1] != kFree || d.mate_[b - 1] != kFree)
        throw std::invalid_argument("edges do not form a perfect matching");
      d.mate_[a - 1] = static_cast<std::uint8_t>(b - 1);
      d.mate_[b - 1] = static_cast<std::uint8_t>(a - 1);
    }
    return d;
  }

  /// 0-based partner array of length 2f.
  static Diagram from_mates(int f, std::vector<std::uint8_t> mates) {
    check_f(f);
    if (static_cast<int>(mates.size()) != 2 * f) throw std::invalid_argument("partner array length");
    for (int l = 0; l < 2 * f; ++l)
      if (mates[l] >= 2 * f || mates[l] == l || mates[mates[l]] != l) throw std::invalid_argument("not an involution");
    Diagram d;
    d.f_ = f;
    d.mate_ = std::move(mates);
    return d;
  }

  static Diagram identity(int f) {
    check_f(f);
    Diagram d;
    d.f_ = f;
    d.mate_.resize(2 * f);
    for (int i = 0; i < f; ++i) {
      d.mate_[i] = static_cast<std::uint8_t>(f + i);
      d.mate_[f + i] = static_cast<std::uint8_t>(i);
    }
    return d;
  }

  int f() const { return f_; }
  /// Partner of a 1-based label.
  int partner(int label) const { return mate_.at(label - 1) + 1; }
  const std::vector<std::uint8_t>& mates() const { return mate_; }

  /// Edges as sorted pairs in increasing order.
  std::vector<Pair> edges() const {
    std::vector<Pair> out;
    for (int l = 0; l < 2 * f_; ++l)
      if (l < mate_[l]) out.emplace_back(l + 1, mate_[l] + 1);
    return out;
  }

  /// Number of top arcs (equal to the number of bottom arcs).
  int arc_count() const {
    int c = 0;
    for (int i = 0; i < f_; ++i)
      if (mate_[i] < f_) ++c;
    return c / 2;
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  static constexpr std::uint8_t kFree = 0xff;
  static void check_f(int f) {
    if (f < 1 || f > kMaxF) throw std::invalid_argument("f out of supported range");
  }
  int f_ = 0;
  std::vector<std::uint8_t> mate_;
};

/// One-row partial matching: a k-arc f-junction.
class Junction {
 public:
  Junction() = default;
  Junction(int f, std::vector<Pair> arcs) : f_(f), mate_(f, -1) {
    if (f < 0 || f > kMaxF) throw std::invalid_argument("f out of supported range");
    for (auto& [a, b] : arcs) {
      if (a > b) std::swap(a, b);
      if (a < 1 || b > f || a == b) throw std::invalid_argument("junction arc out of range");
      if (mate_[a - 1] != -1 || mate_[b - 1] != -1) throw std::invalid_argument("junction arcs overlap");
      mate_[a - 1] = static_cast<std::int8_t>(b - 1);
      mate_[b - 1] = static_cast<std::int8_t>(a - 1);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs_ = std::move(arcs);
  }

  int f() const { return f_; }
  int k() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Pair>& arcs() const { return arcs_; }
  /// 1-based partner, or 0 if the vertex is isolated.
  int partner(int v) const { return mate_.at(v - 1) + 1; }
  bool isolated(int v) const { return mate_.at(v - 1) < 0; }
  /// Isolated vertices in increasing order.
  std::vector<int> isolated_vertices() const {
    std::vector<int> out;
    for (int v = 1; v <= f_; ++v)
      if (isolated(v)) out.push_back(v);
    return out;
  }

  friend bool operator==(const Junction& a, const Junction& b) { return a.f_ == b.f_ && a.arcs_ == b.arcs_; }
  friend auto operator<=>(const Junction& a, const Junction& b) {
    if (auto c = a.f_ <=> b.f_; c != 0) return c;
    return a.arcs_ <=> b.arcs_;
  }

 private:
  int f_ = 0;
  std::vector<std::int8_t> mate_;
  std::vector<Pair> arcs_;
};

struct ArcStructure {
  Junction top;
  Junction bottom;
  friend bool operator==(const ArcStructure&, const ArcStructure&) = default;
};

// ---------------------------------------------------------------- counting

inline std::uint64_t double_factorial(int n) {
  std::uint64_t r = 1;
  for (int t = n; t > 1; t -= 2) r *= static_cast<std::uint64_t>(t);
  return r;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

// ------------------------------------------------------------- enumeration

namespace detail {

inline void matchings_rec(std::vector<std::uint8_t>& mate, std::uint32_t free_mask, int n,
                          const std::function<void(const std::vector<std::uint8_t>&)>& emit) {
  if (free_mask == 0) {
    emit(mate);
    return;
  }
  int v = __builtin_ctz(free_mask);
  std::uint32_t rest = free_mask & ~(1u << v);
  for (int w = v + 1; w < n; ++w) {
    if (!(rest & (1u << w))) continue;
    mate[v] = static_cast<std::uint8_t>(w);
    mate[w] = static_cast<std::uint8_t>(v);
    matchings_rec(mate, rest & ~(1u << w), n, emit);
  }
}

}  // namespace detail

/// All f-diagrams in canonical (lexicographic edge list) order.
inline std::vector<Diagram> all_diagrams(int f) {
  std::vector<Diagram> out;
  out.reserve(double_factorial(2 * f - 1));
  std::vector<std::uint8_t> mate(2 * f);
  detail::matchings_rec(mate, (2 * f == 32) ? 0xffffffffu : ((1u << (2 * f)) - 1), 2 * f,
                        [&](const std::vector<std::uint8_t>& m) { out.push_back(Diagram::from_mates(f, m)); });
  return out;
}

/// The f-diagrams with exactly k arcs, in canonical order.
inline std::vector<Diagram> diagrams_with_arcs(int f, int k) {
  std::vector<Diagram> out;
  for (auto& d : all_diagrams(f))
    if (d.arc_count() == k) out.push_back(std::move(d));
  return out;
}

/// Index of d in all_diagrams(d.f()).
inline std::size_t diagram_rank(const Diagram& d) {
  const int n = 2 * d.f();
  std::uint32_t free_mask = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  std::size_t r = 0;
  int remaining = n;
  const auto& m = d.mates();
  while (free_mask) {
    int v = __builtin_ctz(free_mask);
    int w = m[v];
    std::uint32_t below = free_mask & ((1u << w) - 1) & ~((1u << (v + 1)) - 1);
    std::size_t c = static_cast<std::size_t>(__builtin_popcount(below));
    r = r * static_cast<std::size_t>(remaining - 1) + c;
    free_mask &= ~((1u << v) | (1u << w));
    remaining -= 2;
  }
  return r;
}

/// All k-arc f-junctions, sorted by arc list.
inline std::vector<Junction> all_junctions(int f, int k) {
  std::vector<Junction> out;
  if (2 * k > f || k < 0) return out;
  std::vector<Pair> arcs;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out.emplace_back(f, arcs);
      return;
    }
    for (int a = start; a <= f; ++a) {
      bool used = false;
      for (auto& [x, y] : arcs) used = used || x == a || y == a;
      if (used) continue;
      for (int b = a + 1; b <= f; ++b) {
        bool busy = false;
        for (auto& [x, y] : arcs) busy = busy || x == b || y == b;
        if (busy) continue;
        arcs.emplace_back(a, b);
        rec(a + 1, left - 1);
        arcs.pop_back();
      }
    }
  };
  rec(1, k);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------- structure

struct ComposeResult {
  Diagram diagram;
  int loops = 0;
};

/// Stack a above b (a's bottom row glued to b's top row); returns a∗b and the closed loop count.
inline ComposeResult compose(const Diagram& a, const Diagram& b) {
  if (a.f() != b.f()) throw std::invalid_argument("compose: diagrams of different size");
  const int f = a.f();
  std::array<std::uint8_t, 3 * kMaxF> parent{};
  for (int i = 0; i < 3 * f; ++i) parent[i] = static_cast<std::uint8_t>(i);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = static_cast<std::uint8_t>(std::min(x, y));
  };
  const auto& ma = a.mates();
  const auto& mb = b.mates();
  for (int l = 0; l < 2 * f; ++l) {
    if (l < ma[l]) unite(l, ma[l]);
    if (l < mb[l]) unite(l + f, mb[l] + f);
  }
  std::array<int, 3 * kMaxF> first_ext;
  first_ext.fill(-1);
  std::vector<std::uint8_t> mate(2 * f);
  auto label_of = [f](int node) { return node < f ? node : node - f; };
  for (int node = 0; node < 3 * f; ++node) {
    if (node >= f && node < 2 * f) continue;
    int r = find(node);
    if (first_ext[r] < 0) {
      first_ext[r] = node;
    } else {
      int x = label_of(first_ext[r]), y = label_of(node);
      mate[x] = static_cast<std::uint8_t>(y);
      mate[y] = static_cast<std::uint8_t>(x);
    }
  }
  int loops = 0;
  std::array<bool, 3 * kMaxF> counted{};
  for (int node = f; node < 2 * f; ++node) {
    int r = find(node);
    if (first_ext[r] < 0 && !counted[r]) {
      counted[r] = true;
      ++loops;
    }
  }
  return {Diagram::from_mates(f, std::move(mate)), loops};
}

inline ArcStructure arc_structure(const Diagram& d) {
  const int f = d.f();
  std::vector<Pair> top, bottom;
  for (const auto& [a, b] : d.edges()) {
    if (b <= f) top.emplace_back(a, b);
    if (a > f) bottom.emplace_back(a - f, b - f);
  }
  return {Junction(f, top), Junction(f, bottom)};
}

/// Permutation part: isolated vertices ranked left to right in each row; σ(r) is the bottom rank
/// joined to top rank r.
inline Permutation sigma_part(const Diagram& d) {
  const int f = d.f();
  std::vector<int> bottom_rank(f + 1, 0);
  int rb = 0;
  for (int j = 1; j <= f; ++j)
    if (d.partner(f + j) <= f) bottom_rank[j] = ++rb;
  std::vector<int> img;
  for (int i = 1; i <= f; ++i) {
    int p = d.partner(i);
    if (p > f) img.push_back(bottom_rank[p - f]);
  }
  return Permutation(std::move(img));
}

/// Inverse of d ↦ (σ(d), as(d)).
inline Diagram reconstruct(const Permutation& sigma, const ArcStructure& as) {
  const int f = as.top.f();
  if (as.bottom.f() != f || as.top.k() != as.bottom.k()) throw std::invalid_argument("arc structure mismatch");
  if (sigma.degree() != f - 2 * as.top.k()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<Pair> edges(as.top.arcs());
  for (auto [a, b] : as.bottom.arcs()) edges.emplace_back(f + a, f + b);
  auto ti = as.top.isolated_vertices();
  auto bi = as.bottom.isolated_vertices();
  for (int r = 1; r <= sigma.degree(); ++r) edges.emplace_back(ti[r - 1], f + bi[sigma(r) - 1]);
  return Diagram::from_pairs(f, edges);
}

/// Joins i⁺ to σ(i)⁻.
inline Diagram make_d_sigma(const Permutation& sigma) {
  const int f = sigma.degree();
  std::vector<Pair> edges;
  for (int i = 1; i <= f; ++i) edges.emplace_back(i, f + sigma(i));
  return Diagram::from_pairs(f, edges);
}

/// Arcs i⁺j⁺ and i⁻j⁻ with straight strands elsewhere.
inline Diagram make_h(int i, int j, int f) {
  if (i == j) throw std::invalid_argument("h_{i,j} needs i != j");
  if (i < 1 || j < 1 || i > f || j > f) throw std::out_of_range("h_{i,j} index");
  std::vector<Pair> edges{{i, j}, {f + i, f + j}};
  for (int t = 1; t <= f; ++t)
    if (t != i && t != j) edges.emplace_back(t, f + t);
  return Diagram::from_pairs(f, edges);
}

struct Factorization {
  Permutation sigma;
  int k = 0;
  Permutation rho;
};

/// d = d_σ · h_{1,2} ⋯ h_{2k−1,2k} · d_ρ. Arcs are assigned to the slots (2t−1, 2t) in order of their
/// left endpoints; the permutation part is carried by σ and ρ is increasing on the strands.
inline Factorization factorize(const Diagram& d) {
  const int f = d.f();
  const auto as = arc_structure(d);
  const int k = as.top.k();
  const auto pi = sigma_part(d);
  std::vector<int> s(f), r(f);
  for (int t = 0; t < k; ++t) {
    s[as.top.arcs()[t].first - 1] = 2 * t + 1;
    s[as.top.arcs()[t].second - 1] = 2 * t + 2;
    r[2 * t] = as.bottom.arcs()[t].first;
    r[2 * t + 1] = as.bottom.arcs()[t].second;
  }
  auto ti = as.top.isolated_vertices();
  auto bi = as.bottom.isolated_vertices();
  for (std::size_t q = 0; q < ti.size(); ++q) {
    s[ti[q] - 1] = 2 * k + pi(static_cast<int>(q) + 1);
    r[2 * k + q] = bi[q];
  }
  return {Permutation(s), k, Permutation(r)};
}

/// h_{1,2} h_{3,4} ⋯ h_{2k−1,2k}.
inline Diagram arc_block(int f, int k) {
  std::vector<Pair> edges;
  for (int t = 0; t < k; ++t) {
    edges.emplace_back(2 * t + 1, 2 * t + 2);
    edges.emplace_back(f + 2 * t + 1, f + 2 * t + 2);
  }
  for (int i = 2 * k + 1; i <= f; ++i) edges.emplace_back(i, f + i);
  return Diagram::from_pairs(f, edges);
}

inline ComposeResult recompose(const Factorization& fac) {
  const int f = fac.sigma.degree();
  auto left = compose(make_d_sigma(fac.sigma), arc_block(f, fac.k));
  auto full = compose(left.diagram, make_d_sigma(fac.rho));
  return {full.diagram, left.loops + full.loops};
}

/// ε(d) = sgn(σ)·(−1)^k·sgn(ρ).
inline int sign(const Diagram& d) {
  auto fac = factorize(d);
  return fac.sigma.sign() * ((fac.k % 2) ? -1 : 1) * fac.rho.sign();
}

struct JunctionAction {
  Junction junction;
  int loops = 0;
  /// Rank of an isolated vertex of v ↦ rank of the isolated vertex of d⋆v it is joined to.
  Permutation pi;
};

/// d placed above the junction v. Empty when the result would gain arcs.
inline std::optional<JunctionAction> act_on_junction(const Diagram& d, const Junction& v) {
  if (d.f() != v.f()) throw std::invalid_argument("act_on_junction: size mismatch");
  const int f = d.f();
  std::array<std::uint8_t, 2 * kMaxF> parent{};
  for (int i = 0; i < 2 * f; ++i) parent[i] = static_cast<std::uint8_t>(i);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = static_cast<std::uint8_t>(std::min(x, y));
  };
  const auto& m = d.mates();
  for (int l = 0; l < 2 * f; ++l)
    if (l < m[l]) unite(l, m[l]);
  for (auto [a, b] : v.arcs()) unite(f + a - 1, f + b - 1);
  // endpoints: top vertices and isolated vertices of v
  std::array<int, 2 * kMaxF> first{};
  first.fill(-1);
  std::vector<Pair> arcs;
  std::vector<int> iso_to_top(f + 1, 0);
  for (int node = 0; node < 2 * f; ++node) {
    bool endpoint = node < f || v.isolated(node - f + 1);
    if (!endpoint) continue;
    int r = find(node);
    if (first[r] < 0) {
      first[r] = node;
      continue;
    }
    int x = first[r], y = node;
    if (x < f && y < f) {
      arcs.emplace_back(x + 1, y + 1);
    } else if (x < f) {
      iso_to_top[y - f + 1] = x + 1;
    } else {
      return std::nullopt;  // two isolated vertices of v joined: an arc would appear
    }
  }
  int loops = 0;
  std::array<bool, 2 * kMaxF> counted{};
  for (int node = f; node < 2 * f; ++node) {
    int r = find(node);
    if (first[r] < 0 && !counted[r]) {
      counted[r] = true;
      ++loops;
    }
  }
  Junction out(f, arcs);
  std::vector<int> top_rank(f + 1, 0);
  int rt = 0;
  for (int u = 1; u <= f; ++u)
    if (out.isolated(u)) top_rank[u] = ++rt;
  std::vector<int> img;
  for (int vtx : v.isolated_vertices()) img.push_back(top_rank[iso_to_top[vtx]]);
  return JunctionAction{std::move(out), loops, Permutation(std::move(img))};
}

struct GlueResult {
  int loops = 0;
  /// Rank of an isolated vertex of b ↦ rank of the isolated vertex of t it is joined to.
  Permutation gamma;
};

/// Vertex i of the bottom half b identified with vertex i of the top half t.
/// Empty when an isolated vertex reaches an arc end on its own side (the product drops a level).
inline std::optional<GlueResult> glue_junctions(const Junction& b, const Junction& t) {
  if (b.f() != t.f() || b.k() != t.k()) throw std::invalid_argument("glue_junctions: shape mismatch");
  const int f = b.f();
  std::vector<int> b_rank(f + 1, 0), t_rank(f + 1, 0);
  int rb = 0, rt = 0;
  for (int v = 1; v <= f; ++v) {
    if (b.isolated(v)) b_rank[v] = ++rb;
    if (t.isolated(v)) t_rank[v] = ++rt;
  }
  std::vector<bool> seen(f + 1, false);
  std::vector<int> img(rb, 0);
  for (int start = 1; start <= f; ++start) {
    if (!b.isolated(start)) continue;
    // walk: t-edge, b-edge, t-edge, ... until a t-isolated vertex
    int u = start;
    seen[u] = true;
    while (true) {
      if (t.isolated(u)) break;
      u = t.partner(u);
      seen[u] = true;
      if (b.isolated(u)) return std::nullopt;
      u = b.partner(u);
      seen[u] = true;
    }
    img[b_rank[start] - 1] = t_rank[u];
  }
  int loops = 0;
  for (int v = 1; v <= f; ++v) {
    if (seen[v]) continue;
    if (b.isolated(v) || t.isolated(v)) return std::nullopt;  // path with both ends on one side
    ++loops;
    int u = v;
    do {
      seen[u] = true;
      u = t.partner(u);
      seen[u] = true;
      u = b.partner(u);
    } while (u != v);
  }
  return GlueResult{loops, Permutation(std::move(img))};
}

/// Relabel the vertices by π ∈ S_{2f}.
inline Diagram s2f_act(const Permutation& pi, const Diagram& d) {
  const int f = d.f();
  if (pi.degree() != 2 * f) throw std::invalid_argument("s2f_act: degree must be 2f");
  std::vector<Pair> edges;
  for (auto [a, b] : d.edges()) edges.emplace_back(pi(a), pi(b));
  return Diagram::from_pairs(f, edges);
}

/// Insert the arcs i⁺j⁺ and h⁻k⁻; old vertices move order-preservingly into the other slots.
inline Diagram insert_arcs(const Diagram& d, Pair top_pair, Pair bottom_pair) {
  const int g = d.f(), f = g + 2;
  auto [i, j] = top_pair;
  auto [h, k] = bottom_pair;
  if (!(1 <= i && i < j && j <= f && 1 <= h && h < k && k <= f)) throw std::out_of_range("insert_arcs: bad pairs");
  std::vector<int> top_slot, bottom_slot;
  for (int s = 1; s <= f; ++s) {
    if (s != i && s != j) top_slot.push_back(s);
    if (s != h && s != k) bottom_slot.push_back(s);
  }
  auto map = [&](int label) { return label <= g ? top_slot[label - 1] : f + bottom_slot[label - g - 1]; };
  std::vector<Pair> edges{{i, j}, {f + h, f + k}};
  for (auto [a, b] : d.edges()) edges.emplace_back(map(a), map(b));
  return Diagram::from_pairs(f, edges);
}

/// Mirror image in the horizontal axis (an anti-automorphism of the product).
inline Diagram flip(const Diagram& d) {
  const int f = d.f();
  std::vector<Pair> edges;
  for (auto [a, b] : d.edges()) edges.emplace_back(a <= f ? a + f : a - f, b <= f ? b + f : b - f);
  return Diagram::from_pairs(f, edges);
}

}  // namespace brauer
