#pragma once

// Diagrammatic minors (alternating S_r-sums) and Pfaffians (matching sums) in B_f^(x).

#include "brauer/algebra.hpp"
#include "brauer/permutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

struct MinorSpec {
  int f = 0;
  std::vector<Pair> fixed;
  std::vector<int> rows;     // I
  std::vector<int> columns;  // J
  int r() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

struct PfaffianSpec {
  int f = 0;
  std::vector<Pair> fixed;
  std::vector<int> moving;
  int r() const { return static_cast<int>(moving.size()) / 2; }
  friend bool operator==(const PfaffianSpec&, const PfaffianSpec&) = default;
};

namespace detail {

inline void check_cover(int f, const std::vector<Pair>& fixed, const std::vector<int>& moving) {
  std::vector<int> seen(2 * f + 1, 0);
  auto mark = [&](int l) {
    if (l < 1 || l > 2 * f) throw std::invalid_argument("label out of range");
    if (seen[l]++) throw std::invalid_argument("label used twice");
  };
  for (auto [a, b] : fixed) {
    mark(a);
    mark(b);
  }
  for (int l : moving) mark(l);
  for (int l = 1; l <= 2 * f; ++l)
    if (!seen[l]) throw std::invalid_argument("labels do not cover 1..2f");
}

inline std::vector<Pair> with_fixed(const std::vector<Pair>& fixed, std::vector<Pair> moving_edges) {
  moving_edges.insert(moving_edges.end(), fixed.begin(), fixed.end());
  return moving_edges;
}

/// All perfect matchings of `labels`, each as a list of pairs (a before b in the list order).
inline void for_each_matching(const std::vector<int>& labels, const std::function<void(const std::vector<Pair>&)>& fn) {
  std::vector<Pair> cur;
  std::vector<bool> used(labels.size(), false);
  std::function<void()> rec = [&] {
    std::size_t first = 0;
    while (first < labels.size() && used[first]) ++first;
    if (first == labels.size()) {
      fn(cur);
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < labels.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(labels[first], labels[j]);
      rec();
      cur.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec();
}

/// Sign of (1..2r) ↦ (h1 k1 ... hr kr) in positions of `order`.
inline int matching_sign(const std::vector<int>& order, const std::vector<Pair>& matching) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> ps;
  for (auto [a, b] : matching) {
    int pa = pos.at(a), pb = pos.at(b);
    if (pa > pb) std::swap(pa, pb);
    ps.emplace_back(pa, pb);
  }
  std::sort(ps.begin(), ps.end());
  std::vector<int> img;
  for (auto [a, b] : ps) {
    img.push_back(a);
    img.push_back(b);
  }
  return Permutation(img).sign();
}

}  // namespace detail

inline void validate(const MinorSpec& s) {
  if (s.rows.size() != s.columns.size() || s.rows.empty()) throw std::invalid_argument("minor needs |I| = |J| >= 1");
  std::vector<int> moving(s.rows);
  moving.insert(moving.end(), s.columns.begin(), s.columns.end());
  detail::check_cover(s.f, s.fixed, moving);
}

inline void validate(const PfaffianSpec& s) {
  if (s.moving.empty() || s.moving.size() % 2) throw std::invalid_argument("Pfaffian needs an even, nonempty moving set");
  detail::check_cover(s.f, s.fixed, s.moving);
}

/// Φ_V: the monomial x_{i1 j1}⋯x_{if jf} as the diagram with those edges.
inline Diagram phi_V(int f, const std::vector<Pair>& pairing) { return Diagram::from_pairs(f, pairing); }

/// Φ_W: the same diagram, weighted by ε.
struct SignedDiagram {
  int sign = 1;
  Diagram diagram;
};
inline SignedDiagram phi_W(int f, const std::vector<Pair>& pairing) {
  auto d = phi_V(f, pairing);
  return {sign(d), d};
}

/// Diagrams of the alternating sum, with signs: term σ joins I_t to J_σ(t).
inline std::vector<SignedDiagram> minor_terms(const MinorSpec& s) {
  validate(s);
  std::vector<SignedDiagram> out;
  for (const auto& sigma : Permutation::all(s.r())) {
    std::vector<Pair> edges;
    for (int t = 1; t <= s.r(); ++t) edges.emplace_back(s.rows[t - 1], s.columns[sigma(t) - 1]);
    out.push_back({sigma.sign(), phi_V(s.f, detail::with_fixed(s.fixed, edges))});
  }
  return out;
}

/// Diagrams of the Pfaffian with their coefficients (matching sign times ε).
/// Signs are taken in increasing label order, so the order of `moving` does not matter.
inline std::vector<SignedDiagram> pfaffian_terms(const PfaffianSpec& s) {
  validate(s);
  std::vector<int> order(s.moving);
  std::sort(order.begin(), order.end());
  std::vector<SignedDiagram> out;
  detail::for_each_matching(order, [&](const std::vector<Pair>& m) {
    auto w = phi_W(s.f, detail::with_fixed(s.fixed, m));
    out.push_back({detail::matching_sign(order, m) * w.sign, w.diagram});
  });
  return out;
}

template <Field F>
BrauerElement<F> build_minor(const AlgebraContext<F>& ctx, const MinorSpec& s) {
  if (s.f != ctx.f) throw std::invalid_argument("minor spec size mismatch");
  BrauerElement<F> e(ctx);
  for (const auto& t : minor_terms(s)) e.add_term(t.diagram, ctx.field.from_int(t.sign));
  return e;
}

/// Throws std::logic_error if the diagrams do not all carry the same sign.
template <Field F>
BrauerElement<F> build_pfaffian(const AlgebraContext<F>& ctx, const PfaffianSpec& s) {
  if (s.f != ctx.f) throw std::invalid_argument("Pfaffian spec size mismatch");
  const auto terms = pfaffian_terms(s);
  BrauerElement<F> e(ctx);
  for (const auto& t : terms) {
    if (t.sign != terms.front().sign) throw std::logic_error("Pfaffian terms carry different signs");
    e.add_term(t.diagram, ctx.field.from_int(t.sign));
  }
  return e;
}

inline int min_arcs(const std::vector<SignedDiagram>& terms) {
  int m = kMaxF;
  for (const auto& t : terms) m = std::min(m, t.diagram.arc_count());
  return m;
}

// ------------------------------------------------------------- enumeration

namespace detail {

inline void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == size) {
      fn(cur);
      return;
    }
    for (int v = next; v <= n - (size - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

inline std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  return out;
}

}  // namespace detail

/// One spec per (moving set, {I, J} split with min(moving) ∈ I, fixed matching); I and J increasing.
/// Keeps those whose every diagram has at least `min_arc_count` arcs.
inline std::vector<MinorSpec> enumerate_minor_specs(int f, int r, int min_arc_count = 0) {
  if (r < 1) throw std::invalid_argument("order must be positive");
  std::vector<MinorSpec> out;
  if (r > f) return out;
  detail::for_each_subset(2 * f, 2 * r, [&](const std::vector<int>& moving) {
    const auto rest = detail::complement(2 * f, moving);
    std::vector<int> others(moving.begin() + 1, moving.end());
    detail::for_each_subset(2 * r - 1, r - 1, [&](const std::vector<int>& pick) {
      std::vector<int> rows{moving[0]}, cols;
      for (int p : pick) rows.push_back(others[p - 1]);
      for (std::size_t i = 0; i < others.size(); ++i)
        if (!std::binary_search(pick.begin(), pick.end(), static_cast<int>(i) + 1)) cols.push_back(others[i]);
      detail::for_each_matching(rest, [&](const std::vector<Pair>& fixed) {
        MinorSpec s{f, fixed, rows, cols};
        if (min_arc_count > 0 && min_arcs(minor_terms(s)) < min_arc_count) return;
        out.push_back(std::move(s));
      });
    });
  });
  return out;
}

inline std::vector<PfaffianSpec> enumerate_pfaffian_specs(int f, int r, int min_arc_count = 0) {
  if (r < 1) throw std::invalid_argument("half-order must be positive");
  std::vector<PfaffianSpec> out;
  if (r > f) return out;
  detail::for_each_subset(2 * f, 2 * r, [&](const std::vector<int>& moving) {
    const auto rest = detail::complement(2 * f, moving);
    detail::for_each_matching(rest, [&](const std::vector<Pair>& fixed) {
      PfaffianSpec s{f, fixed, moving};
      if (min_arc_count > 0 && min_arcs(pfaffian_terms(s)) < min_arc_count) return;
      out.push_back(std::move(s));
    });
  });
  return out;
}

template <Field F>
std::vector<BrauerElement<F>> enumerate_minors(const AlgebraContext<F>& ctx, int r, int min_arc_count = 0) {
  std::vector<BrauerElement<F>> out;
  for (const auto& s : enumerate_minor_specs(ctx.f, r, min_arc_count)) out.push_back(build_minor(ctx, s));
  return out;
}

template <Field F>
std::vector<BrauerElement<F>> enumerate_pfaffians(const AlgebraContext<F>& ctx, int r, int min_arc_count = 0) {
  std::vector<BrauerElement<F>> out;
  for (const auto& s : enumerate_pfaffian_specs(ctx.f, r, min_arc_count)) out.push_back(build_pfaffian(ctx, s));
  return out;
}

// ------------------------------------------------------------ spans of elements

/// Linearly independent subfamily of `elems`, in order, using coordinates on their joint support.
template <Field F>
std::vector<BrauerElement<F>> independent_subset(const std::vector<BrauerElement<F>>& elems) {
  if (elems.empty()) return {};
  std::map<Diagram, std::size_t> index;
  for (const auto& e : elems)
    for (const auto& [d, c] : e.terms()) index.emplace(d, index.size());
  const auto& k = elems.front().context().field;
  SpanBasis<F> span(k, index.size());
  std::vector<BrauerElement<F>> out;
  for (const auto& e : elems) {
    std::vector<typename F::value_type> v(index.size(), k.zero());
    for (const auto& [d, c] : e.terms()) v[index.at(d)] = c;
    if (span.add(v)) out.push_back(e);
  }
  return out;
}

template <Field F>
std::vector<typename F::value_type> coordinates_of(const BrauerElement<F>& e) {
  return e.to_vector();
}

template <Field F>
std::vector<std::vector<typename F::value_type>> coordinate_vectors(const std::vector<BrauerElement<F>>& es) {
  std::vector<std::vector<typename F::value_type>> out;
  for (const auto& e : es) out.push_back(e.to_vector());
  return out;
}

// ------------------------------------------------------------ diagram times minor

enum class Side { left, right };

struct MinorProduct {
  bool zero = false;
  int exponent = 0;  // power of x
  MinorSpec spec;    // valid when !zero
};

struct PfaffianProduct {
  bool zero = false;
  int exponent = 0;
  int sign = 1;  // product = sign · x^exponent · build_pfaffian(spec)
  PfaffianSpec spec;
};

namespace detail {

inline int flip_label(int f, int l) { return l <= f ? l + f : l - f; }

inline std::vector<Pair> flip_pairs(int f, const std::vector<Pair>& ps) {
  std::vector<Pair> out;
  for (auto [a, b] : ps) out.emplace_back(flip_label(f, a), flip_label(f, b));
  return out;
}

inline std::vector<int> flip_labels(int f, const std::vector<int>& ls) {
  std::vector<int> out;
  for (int l : ls) out.push_back(flip_label(f, l));
  return out;
}

/// Paths through d (on top) and the fixed edges of the lower factor.
struct StackAnalysis {
  std::vector<Pair> fixed;                  // new fixed edges
  std::map<int, int> moved_to;              // old moving label -> new external label
  std::vector<std::pair<int, int>> joined;  // pairs of old moving labels linked by a path
  int loops = 0;
};

inline StackAnalysis analyse_stack(const Diagram& d, const std::vector<Pair>& fixed, const std::vector<int>& moving) {
  const int f = d.f();
  // nodes: top 0..f-1, middle f..2f-1, bottom 2f..3f-1
  std::vector<std::vector<int>> adj(3 * f);
  auto d_node = [f](int l) { return l <= f ? l - 1 : f + (l - f) - 1; };
  auto lower_node = [f](int l) { return l <= f ? f + l - 1 : 2 * f + (l - f) - 1; };
  for (auto [a, b] : d.edges()) {
    adj[d_node(a)].push_back(d_node(b));
    adj[d_node(b)].push_back(d_node(a));
  }
  for (auto [a, b] : fixed) {
    adj[lower_node(a)].push_back(lower_node(b));
    adj[lower_node(b)].push_back(lower_node(a));
  }
  std::vector<int> moving_of(3 * f, 0);
  for (int l : moving) moving_of[lower_node(l)] = l;
  auto external_label = [f](int node) -> int {
    if (node < f) return node + 1;
    if (node >= 2 * f) return f + (node - 2 * f) + 1;
    return 0;
  };
  StackAnalysis out;
  std::vector<bool> seen(3 * f, false);
  auto walk = [&](int start) {
    int prev = -1, cur = start;
    seen[cur] = true;
    while (true) {
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev && !seen[nb]) {
          next = nb;
          break;
        }
      if (next < 0) return cur;
      prev = cur;
      cur = next;
      seen[cur] = true;
    }
  };
  for (int node = 0; node < 3 * f; ++node) {
    if (seen[node] || adj[node].size() >= 2) continue;
    const int end = walk(node);
    const int ma = moving_of[node], mb = moving_of[end];
    const int ea = external_label(node), eb = external_label(end);
    if (node == end) {
      out.moved_to[ma] = ea;  // an isolated moving vertex of the bottom row
    } else if (ma && mb) {
      out.joined.emplace_back(ma, mb);
    } else if (ma) {
      out.moved_to[ma] = eb;
    } else if (mb) {
      out.moved_to[mb] = ea;
    } else {
      out.fixed.emplace_back(std::min(ea, eb), std::max(ea, eb));
    }
  }
  for (int node = 0; node < 3 * f; ++node)
    if (!seen[node]) {
      ++out.loops;
      int cur = node;
      int prev = -1;
      while (!seen[cur]) {
        seen[cur] = true;
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
    }
  return out;
}

template <class V>
bool equals_int(const V& x, long long v, const V& one) {
  V acc = one - one;
  if (v >= 0)
    for (long long i = 0; i < v; ++i) acc = acc + one;
  else
    for (long long i = 0; i < -v; ++i) acc = acc - one;
  return x == acc;
}

}  // namespace detail

/// d·δ (left) or δ·d (right) for a minor δ, following the case analysis of the product:
/// an arc of d joining two moving vertices of one class kills the product; joining a row to a column
/// vertex kills it exactly when x = r − 1 (otherwise the result is not a minor of order r and
/// std::domain_error is thrown). Otherwise the product is x^e times the returned minor.
template <Field F>
MinorProduct multiply_diagram_minor(const AlgebraContext<F>& ctx, const Diagram& d, const MinorSpec& s, Side side) {
  validate(s);
  if (d.f() != s.f || ctx.f != s.f) throw std::invalid_argument("size mismatch");
  const int f = s.f;
  if (side == Side::right) {
    MinorSpec fs{f, detail::flip_pairs(f, s.fixed), detail::flip_labels(f, s.rows), detail::flip_labels(f, s.columns)};
    auto p = multiply_diagram_minor(ctx, flip(d), fs, Side::left);
    if (!p.zero)
      p.spec = MinorSpec{f, detail::flip_pairs(f, p.spec.fixed), detail::flip_labels(f, p.spec.rows),
                         detail::flip_labels(f, p.spec.columns)};
    return p;
  }
  std::vector<int> moving(s.rows);
  moving.insert(moving.end(), s.columns.begin(), s.columns.end());
  const auto an = detail::analyse_stack(d, s.fixed, moving);
  auto in_rows = [&](int l) { return std::find(s.rows.begin(), s.rows.end(), l) != s.rows.end(); };
  bool cross = false;
  for (auto [a, b] : an.joined) {
    if (in_rows(a) == in_rows(b)) return {true, 0, {}};
    cross = true;
  }
  if (cross) {
    if (detail::equals_int(ctx.x, s.r() - 1, ctx.field.one())) return {true, 0, {}};
    throw std::domain_error("row-column contraction with x != r-1 lowers the order of the minor");
  }
  MinorSpec out{f, an.fixed, {}, {}};
  for (int l : s.rows) out.rows.push_back(an.moved_to.at(l));
  for (int l : s.columns) out.columns.push_back(an.moved_to.at(l));
  return {false, an.loops, out};
}

/// Pfaffian analog: any contraction of two moving vertices kills the product exactly when
/// x = −2(r − 1); otherwise std::domain_error. Otherwise the product is ±x^e times a Pfaffian.
template <Field F>
PfaffianProduct multiply_diagram_pfaffian(const AlgebraContext<F>& ctx, const Diagram& d, const PfaffianSpec& s,
                                          Side side) {
  validate(s);
  if (d.f() != s.f || ctx.f != s.f) throw std::invalid_argument("size mismatch");
  const int f = s.f;
  PfaffianProduct out;
  PfaffianSpec work = s;
  Diagram dd = d;
  if (side == Side::right) {
    work = PfaffianSpec{f, detail::flip_pairs(f, s.fixed), detail::flip_labels(f, s.moving)};
    dd = flip(d);
  }
  const auto an = detail::analyse_stack(dd, work.fixed, work.moving);
  if (!an.joined.empty()) {
    if (detail::equals_int(ctx.x, -2 * (s.r() - 1), ctx.field.one())) {
      out.zero = true;
      return out;
    }
    throw std::domain_error("contraction inside a Pfaffian with x != -2(r-1) lowers its order");
  }
  PfaffianSpec res{f, an.fixed, {}};
  for (int l : work.moving) res.moving.push_back(an.moved_to.at(l));
  if (side == Side::right) res = PfaffianSpec{f, detail::flip_pairs(f, res.fixed), detail::flip_labels(f, res.moving)};
  std::sort(res.moving.begin(), res.moving.end());
  out.exponent = an.loops;
  out.spec = res;
  // fix the sign by one term of the actual product
  const auto first = pfaffian_terms(s).front();
  const auto prod = side == Side::left ? compose(d, first.diagram) : compose(first.diagram, d);
  const auto target = build_pfaffian(ctx, res);
  const int tsign = is_zero(target.coefficient(prod.diagram) - ctx.field.one()) ? 1 : -1;
  out.sign = first.sign * tsign;
  return out;
}

// ------------------------------------------------------------ R-spaces

enum class RSpaceKind { minors, diagrams, pfaffians };

struct RSpaceShape {
  RSpaceKind kind;
  int n = 0;      // x = n, 0 or −2n
  int level = 0;  // filtration level k the generators live in
};

/// Shape of R_f^(x) for x ∈ {n, 0, −2n}; empty for other x.
inline std::optional<RSpaceShape> r_space_shape(int f, const Rational& x) {
  if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
  const Integer v = boost::multiprecision::numerator(x);
  if (v == 0) return RSpaceShape{RSpaceKind::diagrams, 0, (f + 1) / 2};
  if (v > 0) {
    const int n = v.convert_to<int>();
    return RSpaceShape{RSpaceKind::minors, n, std::max(0, (f - n + 1) / 2)};
  }
  if (v % 2 == 0) {
    const int n = (-v / 2).convert_to<int>();
    return RSpaceShape{RSpaceKind::pfaffians, n, std::max(0, (f - n + 1) / 2)};
  }
  return std::nullopt;
}

/// Spanning generators of R_f^(x) before reduction.
template <Field F>
std::vector<BrauerElement<F>> r_space_generators(const AlgebraContext<F>& ctx, const RSpaceShape& sh) {
  std::vector<BrauerElement<F>> gens;
  switch (sh.kind) {
    case RSpaceKind::diagrams:
      for (const auto& d : diagram_basis(ctx.f))
        if (d.arc_count() >= sh.level) gens.push_back(BrauerElement<F>::diagram(ctx, d));
      break;
    case RSpaceKind::minors:
      gens = enumerate_minors(ctx, sh.n + 1, sh.level);
      break;
    case RSpaceKind::pfaffians:
      gens = enumerate_pfaffians(ctx, sh.n + 1, sh.level);
      break;
  }
  return gens;
}

/// Basis of R_f^(x). Throws std::invalid_argument unless x is n > 0, 0 or −2n.
template <Field F>
std::vector<BrauerElement<F>> r_space_basis(const AlgebraContext<F>& ctx, const Rational& x) {
  auto sh = r_space_shape(ctx.f, x);
  if (!sh) throw std::invalid_argument("R-space needs x = n, 0 or -2n");
  return independent_subset(r_space_generators(ctx, *sh));
}

inline std::vector<QElement> r_space_basis(const QContext& ctx) { return r_space_basis(ctx, ctx.x); }

// ------------------------------------------------------------ text encoding

namespace detail {

inline std::string join_labels(const std::vector<int>& ls) {
  std::string s;
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + std::to_string(ls[i]);
  return s;
}

inline std::string join_pairs(std::vector<Pair> ps) {
  std::sort(ps.begin(), ps.end());
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i)
    s += (i ? "," : "") + std::to_string(ps[i].first) + "-" + std::to_string(ps[i].second);
  return s;
}

inline std::vector<int> parse_labels(const std::string& v) {
  std::vector<int> out;
  if (v.empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

inline std::vector<Pair> parse_pairs(const std::string& v) {
  std::vector<Pair> out;
  if (v.empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("fixed edge needs a-b");
    int a = std::stoi(item.substr(0, dash)), b = std::stoi(item.substr(dash + 1));
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

inline std::map<std::string, std::string> parse_fields(const std::string& text, const std::string& head) {
  std::stringstream ss(text);
  std::string word;
  ss >> word;
  if (word != head) throw std::invalid_argument("expected '" + head + "'");
  std::map<std::string, std::string> kv;
  while (ss >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + word + "'");
    kv[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return kv;
}

}  // namespace detail

/// "minor f=4 r=2 I=1,2 J=5,6 fixed=3-4,7-8"
inline std::string format_spec(const MinorSpec& s) {
  std::string out = "minor f=" + std::to_string(s.f) + " r=" + std::to_string(s.r()) +
                    " I=" + detail::join_labels(s.rows) + " J=" + detail::join_labels(s.columns);
  if (!s.fixed.empty()) out += " fixed=" + detail::join_pairs(s.fixed);
  return out;
}

/// "pfaffian f=4 r=2 moving=1,2,3,4 fixed=5-6,7-8"
inline std::string format_spec(const PfaffianSpec& s) {
  std::string out = "pfaffian f=" + std::to_string(s.f) + " r=" + std::to_string(s.r()) +
                    " moving=" + detail::join_labels(s.moving);
  if (!s.fixed.empty()) out += " fixed=" + detail::join_pairs(s.fixed);
  return out;
}

inline MinorSpec parse_minor_spec(const std::string& text) {
  auto kv = detail::parse_fields(text, "minor");
  try {
    MinorSpec s{std::stoi(kv.at("f")), detail::parse_pairs(kv["fixed"]), detail::parse_labels(kv.at("I")),
                detail::parse_labels(kv.at("J"))};
    if (kv.count("r") && std::stoi(kv["r"]) != s.r()) throw std::invalid_argument("r does not match |I|");
    validate(s);
    return s;
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("minor spec needs f, I and J");
  }
}

inline PfaffianSpec parse_pfaffian_spec(const std::string& text) {
  auto kv = detail::parse_fields(text, "pfaffian");
  try {
    PfaffianSpec s{std::stoi(kv.at("f")), detail::parse_pairs(kv["fixed"]), detail::parse_labels(kv.at("moving"))};
    if (kv.count("r") && std::stoi(kv["r"]) != s.r()) throw std::invalid_argument("r does not match the moving set");
    validate(s);
    return s;
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("Pfaffian spec needs f and moving");
  }
}

}  // namespace brauer
