#pragma once

// Report builders behind the command-line front end.

#include "brauer/verify.hpp"

#include <cstdlib>
#include <string>

namespace brauer {

/// Bad flags or a size guard: exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Guard {
  int max_f = 6;
  std::size_t max_tensor = 10000;
  bool force = false;

  /// Default limits, with BRAUER_MAX_F read from the environment.
  static Guard from_env(bool force) {
    Guard g;
    g.force = force;
    if (const char* v = std::getenv("BRAUER_MAX_F")) {
      try {
        g.max_f = std::stoi(v);
      } catch (const std::exception&) {
        throw usage_error("BRAUER_MAX_F must be an integer");
      }
    }
    return g;
  }

  void algebra(int f, int slack = 0) const {
    if (f < 1) throw usage_error("f must be positive");
    if (f > kMaxF) throw usage_error("f above the hard limit " + std::to_string(kMaxF));
    if (!force && f > max_f + slack)
      throw usage_error("f = " + std::to_string(f) + " exceeds the guard f <= " + std::to_string(max_f + slack) +
                        " (use --force or BRAUER_MAX_F)");
  }

  void tensor(int dim, int f) const {
    double size = 1;
    for (int i = 0; i < f; ++i) size *= dim;
    if (!force && size > static_cast<double>(max_tensor))
      throw usage_error("dim^f = " + std::to_string(static_cast<long long>(size)) + " exceeds the guard 10^4 (use --force)");
  }
};

/// |D_f|, |D_{f,k}| and |J_{f,k}| by enumeration against the closed formulas.
inline Report cmd_dims(int f) {
  Report rep("dims", {{"f", f}});
  Json rows = Json::array();
  std::uint64_t total = 0;
  bool ok = true;
  for (int k = 0; 2 * k <= f; ++k) {
    const std::uint64_t j_enum = all_junctions(f, k).size();
    const std::uint64_t j_formula = binomial(f, 2 * k) * double_factorial(2 * k - 1);
    const std::uint64_t d_enum = diagrams_with_arcs(f, k).size();
    const std::uint64_t d_formula = factorial(f - 2 * k) * j_formula * j_formula;
    ok = ok && j_enum == j_formula && d_enum == d_formula;
    total += d_enum;
    rows.push_back({{"k", k}, {"D_fk", d_enum}, {"J_fk", j_enum}});
  }
  const std::uint64_t all = all_diagrams(f).size();
  rep.results()["D_f"] = all;
  rep.results()["levels"] = rows;
  rep.check("|J_{f,k}| = C(f,2k)(2k-1)!! and |D_{f,k}| = (f-2k)! |J_{f,k}|^2", ok);
  rep.check("|D_f| = (2f-1)!!", all == double_factorial(2 * f - 1) && total == all,
            detail::count_detail(all, double_factorial(2 * f - 1)));
  return rep;
}

/// dim Rad(B_f^(x)); R-space containment where R is defined; optional Rad ∩ B(level) and basis dump.
inline Report cmd_radical(int f, const Rational& x, std::optional<int> level, bool dump_basis) {
  Json args{{"f", f}, {"x", to_string(x)}};
  if (level) args["level"] = *level;
  Report rep("radical", args);
  const auto ctx = make_context(f, x);
  const RadicalOracle rad(ctx);
  rep.results()["dim"] = ctx.dim();
  rep.results()["rad_dim"] = rad.dim();
  if (level) rep.results()["rad_in_level_dim"] = radical_ideal_intersection_dim(rad, *level);
  if (auto sh = r_space_shape(f, x)) {
    const auto gens = r_space_generators(ctx, *sh);
    const auto basis = independent_subset(gens);
    bool all_in = true;
    for (const auto& g : gens) all_in = all_in && rad.contains(g);
    const std::size_t inter = radical_ideal_intersection_dim(rad, sh->level);
    rep.results()["r_level"] = sh->level;
    rep.results()["r_dim"] = basis.size();
    rep.results()["rad_in_r_level_dim"] = inter;
    rep.check("R_f^(x) lies in Rad(B)", all_in);
    if (sh->kind == RSpaceKind::diagrams) rep.check("Rad(B(level)) = R_f^(0)", inter == basis.size());
    else rep.info("conjecture_5_10", std::string(inter == basis.size() ? "holds" : "fails") + " at this size");
  } else {
    rep.info("R_f^(x)", "not defined for this x");
  }
  if (dump_basis) {
    Json b = Json::array();
    for (const auto& e : rad.basis()) b.push_back(detail::element_json(e));
    rep.results()["basis"] = b;
  }
  return rep;
}

/// Per-block h, rank Φ, block radical and simple quotient dimensions.
inline Report cmd_blocks(int f, const Rational& x) {
  Report rep("blocks", {{"f", f}, {"x", to_string(x)}});
  const auto ctx = make_context(f, x);
  Json rows = Json::array();
  std::size_t simple = 0, h2 = 0;
  for (const auto& r : semisimple_quotient_dims(ctx)) {
    const std::size_t h = r.block.h();
    simple += r.simple_dim;
    h2 += h * h;
    rows.push_back({{"k", r.block.k}, {"mu", r.block.mu.to_string()}, {"h", h}, {"rank", r.rank},
                    {"rad_dim", r.rad_dim}, {"simple_dim", r.simple_dim}});
  }
  rep.results()["dim"] = ctx.dim();
  rep.results()["blocks"] = rows;
  rep.results()["semisimple_quotient_dim"] = simple;
  rep.results()["rad_dim"] = ctx.dim() - simple;
  rep.check("sum h^2 = dim B", h2 == ctx.dim(), detail::count_detail(h2, ctx.dim()));
  const auto v = is_semisimple_criterion(f, x);
  rep.results()["semisimple"] = simple == ctx.dim();
  if (v.semisimple) rep.check("semisimplicity criterion", *v.semisimple == (simple == ctx.dim()), v.tag);
  else rep.info("semisimplicity criterion", v.tag);
  return rep;
}

/// dim Ker(π) against the span of the minors (orthogonal) or Pfaffians (symplectic).
inline Report cmd_kernel(Series s, int n, int f) {
  SuiteParams p;
  p.series = s;
  p.n = n;
  p.f = f;
  auto rep = suite_thm4_8(p);
  Report out("kernel", {{"series", to_string(s)}, {"n", n}, {"f", f}});
  out.results() = rep.results();
  for (const auto& c : rep.checks()) {
    if (c.status == Status::info) out.info(c.name, c.detail);
    else out.check(c.name, c.status == Status::pass, c.detail);
  }
  return out;
}

/// ASCII picture of a diagram, or of the chord diagram of an f/2-arc junction given as "f=4;13|24".
inline Report cmd_render(const std::optional<std::string>& diagram, const std::optional<std::string>& chord) {
  if (diagram.has_value() == chord.has_value()) throw usage_error("render needs exactly one of --diagram, --chord");
  if (diagram) {
    Report rep("render", {{"diagram", *diagram}});
    const auto d = parse_diagram(*diagram);
    rep.results()["encoding"] = format_diagram(d);
    rep.results()["arcs"] = d.arc_count();
    rep.results()["picture"] = render_diagram(d);
    return rep;
  }
  Report rep("render", {{"chord", *chord}});
  // a chord diagram is the top row of a diagram with f/2 arcs
  const std::string& t = *chord;
  const auto semi = t.find(';');
  if (semi == std::string::npos) throw parse_error(t.size(), "expected ';'");
  const std::string arcs = t.substr(semi + 1);
  const auto d = parse_diagram(t.substr(0, semi + 1) + arcs + "/" + arcs);
  const auto as = arc_structure(d);
  if (2 * as.top.k() != d.f()) throw parse_error(semi + 1, "a chord diagram needs f/2 chords");
  const auto c = chord_of_junction(as.top);
  Json cj = Json::array();
  for (auto [a, b] : c.chords) cj.push_back(Json::array({a, b}));
  rep.results()["f"] = c.f;
  rep.results()["chords"] = cj;
  rep.results()["picture"] = render_chord(c);
  return rep;
}

}  // namespace brauer
