#include "brauer/brauer.hpp"

#include <gtest/gtest.h>

using namespace brauer;

namespace {

Diagram H() { return make_h(1, 2, 2); }

const QContext& tl4() {
  static const QContext c = tl_context(4, RationalField{});
  return c;
}

std::string status_of(const Report& r, const std::string& name) {
  const auto* c = r.find(name);
  return c ? to_string(c->status) : "missing";
}

}  // namespace

// ------------------------------------------------------------ monoid D_{f,f/2}

TEST(TemperleyLieb, MonoidProduct) {
  EXPECT_EQ(monoid_product(H(), H()), H());
  const auto ds = top_diagrams(4);
  ASSERT_EQ(ds.size(), 9u);
  for (const auto& a : ds)
    for (const auto& b : ds) {
      const auto p = monoid_product(a, b);
      EXPECT_EQ(p.arc_count(), 2);
      // (tas(a), bas(b))
      EXPECT_EQ(arc_structure(p).top, arc_structure(a).top);
      EXPECT_EQ(arc_structure(p).bottom, arc_structure(b).bottom);
      EXPECT_EQ(QElement::diagram(tl4(), a) * QElement::diagram(tl4(), b), QElement::diagram(tl4(), p));
    }
  for (const auto& d : ds)
    if (arc_structure(d).top == arc_structure(d).bottom) EXPECT_EQ(monoid_product(d, d), d);
  EXPECT_THROW(monoid_product(Diagram::identity(2), H()), std::invalid_argument);
  EXPECT_THROW(top_diagrams(3), std::invalid_argument);
}

TEST(TemperleyLieb, CountsByEnumeration) {
  EXPECT_EQ(top_diagrams(2).size(), 1u);
  EXPECT_EQ(top_diagrams(4).size(), 9u);
  EXPECT_EQ(top_diagrams(6).size(), 225u);
  for (int f : {2, 4, 6}) {
    const auto j = all_junctions(f, f / 2).size();
    EXPECT_EQ(top_diagrams(f).size(), j * j);
    EXPECT_EQ(j, double_factorial(f - 1));
  }
  // the closed form 2(f-1)!! does not match the enumeration at f = 4
  EXPECT_NE(top_diagrams(4).size(), 2 * double_factorial(3));
}

TEST(TemperleyLieb, RadicalBasis) {
  EXPECT_TRUE(tl_radical_basis(tl_context(2, RationalField{})).empty());
  EXPECT_EQ(tl_radical_basis(tl4()).size(), 8u);
  const auto c6 = tl_context(6, RationalField{});
  const auto b6 = tl_radical_basis(c6);
  EXPECT_EQ(b6.size(), 224u);
  for (const auto& e : b6) EXPECT_TRUE(trace_B(e).is_zero());
  EXPECT_EQ(independent_subset(b6).size(), 224u);
  EXPECT_THROW(tl_radical_basis(make_context(4, Rational(2))), std::invalid_argument);
}

TEST(TemperleyLieb, KernelIsIdealWithOneDimensionalQuotient) {
  for (int f : {4, 6}) {
    const auto c = tl_context(f, RationalField{});
    const auto ds = top_diagrams(f);
    const auto kb = tl_radical_basis(c);
    for (std::size_t i = 0; i < kb.size(); i += (f == 6 ? 37 : 1))
      for (std::size_t j = 0; j < ds.size(); j += (f == 6 ? 11 : 1)) {
        const auto d = QElement::diagram(c, ds[j]);
        EXPECT_TRUE(trace_B(d * kb[i]).is_zero());
        EXPECT_TRUE(trace_B(kb[i] * d).is_zero());
      }
    // Tr_B is multiplicative on B(f/2), so B(f/2)/Ker is k with its own product
    for (std::size_t i = 0; i < ds.size(); i += (f == 6 ? 23 : 1))
      for (std::size_t j = 0; j < ds.size(); j += (f == 6 ? 29 : 1)) {
        const auto a = Rational(2) * QElement::diagram(c, ds[i]) + QElement::diagram(c, ds[(i + 1) % ds.size()]);
        const auto b = Rational(-1) * QElement::diagram(c, ds[j]) + Rational(5) * QElement::diagram(c, ds[0]);
        EXPECT_EQ(trace_B(a * b), trace_B(a) * trace_B(b));
      }
  }
}

TEST(TemperleyLieb, KernelMatchesRadicalAtFourPoints) {
  const RadicalOracle rad(tl4());
  EXPECT_EQ(radical_ideal_intersection_dim(rad, 2), 8u);
  for (const auto& e : tl_radical_basis(tl4())) EXPECT_TRUE(rad.contains(e));
  // R_4^(1) spans the same space
  const RationalField Q;
  const auto r = coordinate_vectors(r_space_basis(tl4()));
  const auto k = coordinate_vectors(tl_radical_basis(tl4()));
  EXPECT_TRUE(span_contains(Q, tl4().dim(), r, k));
  EXPECT_TRUE(span_contains(Q, tl4().dim(), k, r));
}

TEST(TemperleyLieb, CubeVanishes) {
  EXPECT_TRUE(cube_zero_check(tl_context(2, RationalField{})).ok);
  const auto c4 = cube_zero_check(tl4());
  EXPECT_TRUE(c4.ok);
  EXPECT_TRUE(c4.exhaustive);
  EXPECT_EQ(c4.triples, 512u);
  const auto c6 = cube_zero_check(tl_context(6, RationalField{}), 3, 1500);
  EXPECT_TRUE(c6.ok);
  EXPECT_FALSE(c6.exhaustive);
  // squares do not vanish in general
  const auto ds = top_diagrams(4);
  bool some_square = false;
  for (std::size_t i = 0; i < ds.size() && !some_square; ++i)
    for (std::size_t j = 0; j < ds.size() && !some_square; ++j)
      for (std::size_t l = 0; l < ds.size() && !some_square; ++l) {
        const auto a = QElement::diagram(tl4(), ds[i]) - QElement::diagram(tl4(), ds[j]);
        const auto b = QElement::diagram(tl4(), ds[l]) - QElement::diagram(tl4(), ds[0]);
        some_square = !(a * b).is_zero_element();
      }
  EXPECT_TRUE(some_square);
}

TEST(TemperleyLieb, SmallCharacteristic) {
  for (std::uint64_t p : {2u, 3u}) {
    const auto c = tl_context(4, PrimeField{p});
    EXPECT_TRUE(cube_zero_check(c).ok);
    const auto kb = tl_radical_basis(c);
    EXPECT_EQ(kb.size(), 8u);
    for (const auto& e : kb) EXPECT_TRUE(is_zero(trace_B(e)));
    EXPECT_THROW(radical_basis(c), unsupported_field);
  }
}

TEST(TemperleyLieb, ModuleRadical) {
  EXPECT_TRUE(tl_module_radical(tl_context(2, RationalField{})).empty());
  EXPECT_EQ(tl_module_radical(tl4()).size(), 2u);
  const auto c6 = tl_context(6, RationalField{});
  EXPECT_EQ(tl_module_radical(c6).size(), 14u);
  const RationalField Q;
  for (const QContext* c : {&tl4(), &c6}) {
    const QCellModule m(*c, c->f / 2, Partition(std::vector<int>{}));
    const auto kr = tl_module_radical(*c);
    const auto gram = m.gram_radical_basis();
    EXPECT_TRUE(span_contains(Q, m.dim(), gram, kr));
    EXPECT_EQ(gram.size(), kr.size());
    for (const auto& v : kr) EXPECT_TRUE(trace_H(v, Rational(0)).is_zero());
  }
  const QCellModule m4(tl4(), 2, Partition(std::vector<int>{}));
  const auto ra = module_radical_basis(m4, RadicalOracle(tl4()));
  EXPECT_TRUE(span_contains(Q, m4.dim(), tl_module_radical(tl4()), ra));
  EXPECT_EQ(ra.size(), 2u);
  const auto rh = m4.span_of_action(r_space_basis(tl4()));
  EXPECT_EQ(rh.size(), 2u);
}

TEST(TemperleyLieb, DiagramOnJunctionIsTopArcStructure) {
  for (int f : {2, 4, 6}) {
    const auto c = tl_context(f, RationalField{});
    const QCellModule m(c, f / 2, Partition(std::vector<int>{}));
    const auto& js = m.junctions();
    const auto ds = top_diagrams(f);
    const std::size_t step_d = f == 6 ? 7 : 1;
    for (std::size_t i = 0; i < ds.size(); i += step_d)
      for (std::size_t j = 0; j < js.size(); ++j) {
        const auto out = m.act(ds[i], m.unit(0, j));
        EXPECT_EQ(out, m.unit(0, junction_index(arc_structure(ds[i]).top)));
      }
  }
}

TEST(TemperleyLieb, ChordDiagrams) {
  const auto j2 = Junction(2, {{1, 2}});
  EXPECT_EQ(chord_of_junction(j2).chords, (std::vector<Pair>{{1, 2}}));
  for (int f : {2, 4, 6}) {
    const auto cs = all_chord_diagrams(f);
    EXPECT_EQ(cs.size(), double_factorial(f - 1));
    for (const auto& c : cs) {
      EXPECT_EQ(static_cast<int>(c.chords.size()), f / 2);
      EXPECT_EQ(chord_of_junction(junction_of_chord(c)), c);
    }
  }
  EXPECT_THROW(chord_of_junction(Junction(4, {{1, 2}})), std::invalid_argument);
  const auto pic = render_chord(all_chord_diagrams(4)[1]);
  EXPECT_NE(pic.find('*'), std::string::npos);
  EXPECT_NE(pic.find('a'), std::string::npos);
  EXPECT_NE(pic.find('b'), std::string::npos);
}

// ------------------------------------------------------------ reports

TEST(Report, Formats) {
  Report r("demo", {{"f", 2}});
  r.results()["value"] = 3;
  r.results()["rows"] = Json::array({Json{{"k", 0}}});
  r.check("first", true);
  r.info("note", "holds at this size");
  EXPECT_TRUE(r.passed());
  const auto j = r.to_json();
  EXPECT_EQ(j["schema"], "brauer-report/1");
  EXPECT_EQ(j["command"]["name"], "demo");
  EXPECT_EQ(j["command"]["args"]["f"], 2);
  EXPECT_EQ(j["results"]["value"], 3);
  EXPECT_EQ(j["checks"][1]["status"], "info");
  EXPECT_EQ(j["status"], "pass");
  const auto csv = r.to_csv();
  EXPECT_EQ(csv.rfind("section,key,value\n", 0), 0u);
  EXPECT_NE(csv.find("check,note,info: holds at this size"), std::string::npos);
  EXPECT_NE(r.to_text().find("[pass] first"), std::string::npos);
  EXPECT_THROW(r.render("xml"), std::invalid_argument);
  r.check("second", false, "a,b");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.to_json()["status"], "fail");
  EXPECT_NE(r.to_csv().find("check,second,\"fail: a,b\""), std::string::npos);
}

TEST(Commands, Dims) {
  auto r = cmd_dims(3);
  EXPECT_EQ(r.results()["D_f"], 15);
  EXPECT_TRUE(r.passed());
  r = cmd_dims(4);
  EXPECT_EQ(r.results()["levels"][1]["J_fk"], 6);
  EXPECT_EQ(cmd_dims(1).results()["D_f"], 1);
}

TEST(Commands, Radical) {
  auto r = cmd_radical(2, Rational(0), std::nullopt, true);
  EXPECT_EQ(r.results()["rad_dim"], 1);
  EXPECT_EQ(r.results()["basis"].size(), 1u);
  r = cmd_radical(4, Rational(0), 2, false);
  EXPECT_GE(r.results()["rad_dim"].get<int>(), 9);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(status_of(r, "R_f^(x) lies in Rad(B)"), "pass");
  EXPECT_EQ(r.results()["rad_in_level_dim"], 9);
  EXPECT_EQ(cmd_radical(3, Rational(0), std::nullopt, false).results()["rad_dim"], 0);
  r = cmd_radical(4, Rational(1), std::nullopt, false);
  EXPECT_EQ(status_of(r, "conjecture_5_10"), "info");
  EXPECT_TRUE(r.passed());
}

TEST(Commands, Blocks) {
  const auto r = cmd_blocks(4, Rational(0));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.results()["rad_dim"], 36);
  bool found = false;
  for (const auto& row : r.results()["blocks"])
    if (row["k"] == 2) {
      found = true;
      EXPECT_EQ(row["h"], 3);
      EXPECT_EQ(row["rad_dim"], 9);
    }
  EXPECT_TRUE(found);
}

TEST(Commands, Kernel) {
  auto r = cmd_kernel(Series::orthogonal, 1, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.command(), "kernel");
  EXPECT_TRUE(cmd_kernel(Series::symplectic, 1, 2).passed());
  EXPECT_TRUE(cmd_kernel(Series::orthogonal, 2, 2).passed());
}

TEST(Commands, Render) {
  auto r = cmd_render(std::string("f=2;12/12"), std::nullopt);
  EXPECT_EQ(r.results()["encoding"], "f=2;12/12");
  EXPECT_NE(r.results()["picture"].get<std::string>().find(",-."), std::string::npos);
  r = cmd_render(std::string("f=2;/"), std::nullopt);
  EXPECT_NE(r.results()["picture"].get<std::string>().find("| |"), std::string::npos);
  EXPECT_THROW(cmd_render(std::string("f=2;1"), std::nullopt), parse_error);
  r = cmd_render(std::nullopt, std::string("f=4;13|24"));
  EXPECT_EQ(r.results()["chords"].size(), 2u);
  EXPECT_THROW(cmd_render(std::nullopt, std::string("f=4;13")), parse_error);
  EXPECT_THROW(cmd_render(std::nullopt, std::nullopt), usage_error);
}

TEST(Commands, Guards) {
  Guard g;
  EXPECT_THROW(g.algebra(9), usage_error);
  EXPECT_NO_THROW(g.algebra(7, 1));
  EXPECT_THROW(g.algebra(7), usage_error);
  EXPECT_THROW(g.tensor(5, 6), usage_error);
  EXPECT_NO_THROW(g.tensor(3, 4));
  g.force = true;
  EXPECT_NO_THROW(g.algebra(8));
  EXPECT_NO_THROW(g.tensor(5, 6));
}

TEST(Commands, DeterministicOutput) {
  const auto a = cmd_radical(3, Rational(1), 1, true).render("json");
  const auto b = cmd_radical(3, Rational(1), 1, true).render("json");
  EXPECT_EQ(a, b);
  SuiteParams p;
  p.f = 4;
  p.x = Rational(1);
  EXPECT_EQ(run_suite("thm6_3", p).render("json"), run_suite("thm6_3", p).render("json"));
}

// ------------------------------------------------------------ suites

TEST(Suites, Examples) {
  SuiteParams p;
  p.f = 4;
  EXPECT_TRUE(run_suite("thm6_3", p).passed());
  p.n = 1;
  EXPECT_TRUE(run_suite("thm5_5", p).passed());
  p.f = 3;
  p.x = Rational(0);
  EXPECT_TRUE(run_suite("consistency", p).passed());
  EXPECT_THROW(run_suite("nope", p), std::invalid_argument);
}

TEST(Suites, ConjecturesAreInfoOnly) {
  SuiteParams p;
  p.f = 4;
  for (int x : {1, 2, -2}) {
    p.x = Rational(x);
    const auto r = run_suite("thm5_3", p);
    EXPECT_TRUE(r.passed()) << x;
    const auto* c = r.find("conjecture_5_10");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::info);
  }
  const auto t = run_suite("thm6_3", p);
  for (const auto& c : t.checks())
    if (c.name.rfind("conjecture_", 0) == 0) {
      EXPECT_EQ(c.status, Status::info);
      EXPECT_NE(c.detail.find("holds"), std::string::npos) << c.name;
    }
}

TEST(Suites, BrownAndInherit) {
  SuiteParams p;
  p.f = 4;
  for (int x : {0, 1, -2}) {
    p.x = Rational(x);
    EXPECT_TRUE(run_suite("brown", p).passed()) << x;
    EXPECT_TRUE(run_suite("inherit", p).passed()) << x;
  }
}
