#include "brauer/brauer.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace brauer;

namespace {

Diagram H() { return make_h(1, 2, 2); }
Diagram X() { return make_d_sigma(Permutation::transposition(2, 1, 2)); }
Diagram I2() { return Diagram::identity(2); }

QElement el(const QContext& c, const Diagram& d) { return QElement::diagram(c, d); }

bool same_span(const std::vector<QElement>& a, const std::vector<QElement>& b, std::size_t dim) {
  const RationalField Q;
  const auto va = coordinate_vectors(a), vb = coordinate_vectors(b);
  return span_contains(Q, dim, va, vb) && span_contains(Q, dim, vb, va);
}

// Orthogonal tensor action with identity form, written from scratch: one Kronecker delta per edge.
IntMatrix orthogonal_oracle(const Diagram& d, int n) {
  const int f = d.f();
  std::size_t size = 1;
  for (int i = 0; i < f; ++i) size *= n;
  IntMatrix m(size, size, 0);
  std::vector<int> lab(2 * f);
  for (std::size_t out = 0; out < size; ++out)
    for (std::size_t in = 0; in < size; ++in) {
      std::size_t o = out, i = in;
      for (int s = f - 1; s >= 0; --s) {
        lab[s] = static_cast<int>(o % n);
        lab[f + s] = static_cast<int>(i % n);
        o /= n;
        i /= n;
      }
      bool ok = true;
      for (auto [p, q] : d.edges()) ok = ok && lab[p - 1] == lab[q - 1];
      m(out, in) = ok ? 1 : 0;
    }
  return m;
}

IntMatrix identity_int(int n) {
  IntMatrix m(n, n, 0);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix<Integer> to_integer(const IntMatrix& m) {
  Matrix<Integer> r(m.rows(), m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace

// ------------------------------------------------------------ Φ_V, Φ_W

TEST(Minors, PhiMaps) {
  EXPECT_EQ(phi_V(2, {{1, 3}, {2, 4}}), I2());
  EXPECT_EQ(phi_V(2, {{1, 4}, {2, 3}}), X());
  const auto w = phi_W(2, {{1, 2}, {3, 4}});
  EXPECT_EQ(w.diagram, H());
  EXPECT_EQ(w.sign, -1);
  EXPECT_THROW(phi_V(2, {{1, 3}}), std::invalid_argument);
}

// ------------------------------------------------------------ minors

TEST(Minors, BuildExamples) {
  const auto c = make_context(2, Rational(1));
  EXPECT_EQ(build_minor(c, MinorSpec{2, {}, {1, 2}, {3, 4}}), el(c, I2()) - el(c, X()));
  EXPECT_EQ(build_minor(c, MinorSpec{2, {}, {1, 3}, {2, 4}}), el(c, H()) - el(c, X()));
  const auto c4 = make_context(4, Rational(2));
  const auto one = build_minor(c4, MinorSpec{4, {{2, 3}, {4, 8}, {6, 7}}, {1}, {5}});
  EXPECT_EQ(one.terms().size(), 1u);
  EXPECT_EQ(one, el(c4, Diagram::from_pairs(4, {{1, 5}, {2, 3}, {4, 8}, {6, 7}})));
  EXPECT_THROW(build_minor(c, MinorSpec{2, {}, {1, 2}, {2, 4}}), std::invalid_argument);
  EXPECT_THROW(build_minor(c, MinorSpec{2, {}, {1}, {3}}), std::invalid_argument);
}

TEST(Minors, AntisymmetricInColumns) {
  const auto c = make_context(3, Rational(1));
  for (const auto& s : enumerate_minor_specs(3, 2)) {
    auto t = s;
    std::swap(t.columns[0], t.columns[1]);
    EXPECT_EQ(build_minor(c, t), Rational(-1) * build_minor(c, s));
    auto u = s;
    std::swap(u.rows[0], u.rows[1]);
    EXPECT_EQ(build_minor(c, u), Rational(-1) * build_minor(c, s));
  }
  for (const auto& s : enumerate_minor_specs(3, 3)) EXPECT_EQ(build_minor(c, s).terms().size(), 6u);
}

TEST(Minors, EnumerationExamples) {
  const auto c = make_context(2, Rational(1));
  const auto all = enumerate_minors(c, 2);
  EXPECT_EQ(all.size(), 3u);
  EXPECT_EQ(independent_subset(all).size(), 2u);
  EXPECT_TRUE(enumerate_minors(c, 2, 1).empty());
  const auto c4 = make_context(4, Rational(1));
  const auto deep = enumerate_minors(c4, 2, 2);
  EXPECT_FALSE(deep.empty());
  for (const auto& m : deep) EXPECT_GE(m.min_arcs(), 2);
  for (const auto& s : enumerate_minor_specs(4, 2, 1)) EXPECT_GE(min_arcs(minor_terms(s)), 1);
}

TEST(Minors, SpecTextRoundTrip) {
  const MinorSpec s{4, {{3, 4}, {7, 8}}, {1, 2}, {5, 6}};
  EXPECT_EQ(format_spec(s), "minor f=4 r=2 I=1,2 J=5,6 fixed=3-4,7-8");
  EXPECT_EQ(parse_minor_spec(format_spec(s)), s);
  for (const auto& t : enumerate_minor_specs(3, 2)) EXPECT_EQ(parse_minor_spec(format_spec(t)), t);
  for (const auto& t : enumerate_pfaffian_specs(3, 2)) EXPECT_EQ(parse_pfaffian_spec(format_spec(t)), t);
  EXPECT_THROW(parse_minor_spec("minor f=4 r=2 I=1,2"), std::invalid_argument);
}

TEST(Minors, DiagramTimesMinorMatchesProduct) {
  for (int f = 2; f <= 4; ++f)
    for (int x : {1, 2, 3}) {
      const auto c = make_context(f, Rational(x));
      const int r = x + 1;
      if (r > f) continue;
      std::mt19937 rng(f * 10 + x);
      const auto specs = enumerate_minor_specs(f, r);
      const auto& ds = diagram_basis(f);
      for (int t = 0; t < 150; ++t) {
        const auto& s = specs[rng() % specs.size()];
        const auto& d = ds[rng() % ds.size()];
        for (Side side : {Side::left, Side::right}) {
          const auto m = build_minor(c, s);
          const auto oracle = side == Side::left ? el(c, d) * m : m * el(c, d);
          const auto p = multiply_diagram_minor(c, d, s, side);
          if (p.zero) {
            ASSERT_TRUE(oracle.is_zero_element()) << format_spec(s) << " " << format_diagram(d);
          } else {
            ASSERT_EQ(oracle, c.x_power(p.exponent) * build_minor(c, p.spec)) << format_spec(s) << " " << format_diagram(d);
          }
        }
      }
    }
}

TEST(Minors, PermutationsRelabelMinors) {
  const auto c = make_context(3, Rational(2));
  for (const auto& s : enumerate_minor_specs(3, 3))
    for (const auto& p : Permutation::all(3)) {
      const auto r = multiply_diagram_minor(c, make_d_sigma(p), s, Side::left);
      EXPECT_FALSE(r.zero);
      EXPECT_EQ(r.exponent, 0);
    }
}

TEST(Minors, LeftMultipleByHOfIdentityMinorVanishes) {
  const auto c = make_context(2, Rational(1));
  const MinorSpec s{2, {}, {1, 2}, {3, 4}};
  EXPECT_TRUE((el(c, H()) * build_minor(c, s)).is_zero_element());
  EXPECT_TRUE(multiply_diagram_minor(c, H(), s, Side::left).zero);
}

// ------------------------------------------------------------ Pfaffians

TEST(Pfaffians, BuildExamples) {
  const auto c = make_context(2, Rational(-2));
  const auto p = build_pfaffian(c, PfaffianSpec{2, {}, {1, 2, 3, 4}});
  ASSERT_EQ(p.terms().size(), 3u);
  const Rational s = p.coefficient(I2());
  EXPECT_TRUE(s == Rational(1) || s == Rational(-1));
  EXPECT_EQ(p, s * (el(c, I2()) + el(c, X()) + el(c, H())));
  const auto c3 = make_context(3, Rational(-2));
  const auto q = build_pfaffian(c3, PfaffianSpec{3, {{3, 6}}, {1, 2, 4, 5}});
  EXPECT_EQ(q.terms().size(), 3u);
  for (const auto& [d, v] : q.terms()) EXPECT_EQ(d.partner(3), 6);
  const auto one = build_pfaffian(c, PfaffianSpec{2, {{1, 3}}, {2, 4}});
  EXPECT_EQ(one.terms().size(), 1u);
}

TEST(Pfaffians, SingleSignSums) {
  const auto c = make_context(4, Rational(-2));
  for (int r = 1; r <= 4; ++r)
    for (const auto& s : enumerate_pfaffian_specs(4, r)) {
      const auto p = build_pfaffian(c, s);
      ASSERT_EQ(p.terms().size(), double_factorial(2 * r - 1));
      const Rational first = p.terms().begin()->second;
      for (const auto& [d, v] : p.terms()) ASSERT_EQ(v, first);
    }
}

TEST(Pfaffians, IndependentOfMovingOrder) {
  const auto c = make_context(3, Rational(-2));
  for (const auto& s : enumerate_pfaffian_specs(3, 2)) {
    auto t = s;
    std::reverse(t.moving.begin(), t.moving.end());
    EXPECT_EQ(build_pfaffian(c, t), build_pfaffian(c, s));
    std::swap(t.moving[0], t.moving[1]);
    EXPECT_EQ(build_pfaffian(c, t), build_pfaffian(c, s));
  }
}

TEST(Pfaffians, ContractionNeedsMatchingParameter) {
  // H joins 1- and 2- of the order-4 Pfaffian: zero at x = -2, an order drop otherwise
  const PfaffianSpec s{2, {}, {1, 2, 3, 4}};
  EXPECT_TRUE(multiply_diagram_pfaffian(make_context(2, Rational(-2)), H(), s, Side::left).zero);
  EXPECT_THROW(multiply_diagram_pfaffian(make_context(2, Rational(3)), H(), s, Side::left), std::domain_error);
  const auto c = make_context(2, Rational(-2));
  EXPECT_TRUE((el(c, H()) * build_pfaffian(c, s)).is_zero_element());
}

TEST(Pfaffians, MatchingSignIsPfaffianSign) {
  // Pf of the generic 4x4 skew matrix: x12 x34 − x13 x24 + x14 x23
  const std::vector<int> order{1, 2, 3, 4};
  EXPECT_EQ(detail::matching_sign(order, {{1, 2}, {3, 4}}), 1);
  EXPECT_EQ(detail::matching_sign(order, {{1, 3}, {2, 4}}), -1);
  EXPECT_EQ(detail::matching_sign(order, {{1, 4}, {2, 3}}), 1);
}

TEST(Pfaffians, DiagramTimesPfaffianMatchesProduct) {
  for (int f = 2; f <= 4; ++f)
    for (int n : {1, 2}) {
      const auto c = make_context(f, Rational(-2 * n));
      const int r = n + 1;
      if (r > f) continue;
      std::mt19937 rng(f * 7 + n);
      const auto specs = enumerate_pfaffian_specs(f, r);
      const auto& ds = diagram_basis(f);
      for (int t = 0; t < 150; ++t) {
        const auto& s = specs[rng() % specs.size()];
        const auto& d = ds[rng() % ds.size()];
        for (Side side : {Side::left, Side::right}) {
          const auto pf = build_pfaffian(c, s);
          const auto oracle = side == Side::left ? el(c, d) * pf : pf * el(c, d);
          const auto p = multiply_diagram_pfaffian(c, d, s, side);
          if (p.zero) {
            ASSERT_TRUE(oracle.is_zero_element());
          } else {
            ASSERT_EQ(oracle, Rational(p.sign) * c.x_power(p.exponent) * build_pfaffian(c, p.spec));
          }
        }
      }
    }
}

// ------------------------------------------------------------ R-spaces

TEST(RSpace, Examples) {
  EXPECT_EQ(r_space_basis(make_context(4, Rational(0))).size(), 9u);
  EXPECT_TRUE(r_space_basis(make_context(2, Rational(1))).empty());
  EXPECT_EQ(r_space_basis(make_context(4, Rational(1))).size(), 8u);
  EXPECT_THROW(r_space_basis(make_context(3, Rational(-3))), std::invalid_argument);
  EXPECT_THROW(r_space_basis(make_context(3, Rational(1, 2))), std::invalid_argument);
}

TEST(RSpace, ContainedInRadical) {
  const std::vector<std::pair<int, int>> cases{{2, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}, {4, -2}};
  for (auto [f, x] : cases) {
    const auto c = make_context(f, Rational(x));
    const RadicalOracle rad(c);
    for (const auto& e : r_space_basis(c)) EXPECT_TRUE(rad.contains(e)) << f << " " << x;
  }
}

TEST(RSpace, InheritedFromSmallerAlgebra) {
  for (int x : {0, 1, -2}) {
    const auto c2 = make_context(2, Rational(x)), c4 = make_context(4, Rational(x));
    const auto small = r_space_basis(c2);
    const auto big = r_space_basis(c4);
    const RadicalOracle rad(c4);
    const RationalField Q;
    const auto bv = coordinate_vectors(big);
    for (const auto& e : small) {
      QElement lifted(c4);
      for (const auto& [d, v] : e.terms()) lifted.add_term(insert_arcs(d, {2, 4}, {1, 3}), v);
      EXPECT_TRUE(rad.contains(lifted));
      EXPECT_TRUE(span_contains(Q, c4.dim(), bv, {lifted.to_vector()}));
    }
  }
}

// ------------------------------------------------------------ tensor representations

TEST(Tensor, Psi) {
  const auto o1 = BilinearSpace::orthogonal(1);
  EXPECT_EQ(o1.psi()(0, 0), 1);
  const auto o2 = BilinearSpace::orthogonal(2);
  EXPECT_EQ(o2.psi(), identity_int(2));
  for (int n : {1, 2}) {
    const auto s = BilinearSpace::symplectic(n);
    EXPECT_EQ(s.theta(s.psi()), identity_int(2 * n));
    EXPECT_EQ(BilinearSpace::orthogonal(n).theta(BilinearSpace::orthogonal(n).psi()), identity_int(n));
  }
}

TEST(Tensor, TauExamples) {
  const TensorRep r1(BilinearSpace::orthogonal(1), 2);
  EXPECT_EQ(r1.tau(1, 2), identity_int(1));
  const TensorRep r2(BilinearSpace::orthogonal(2), 2);
  const auto t = r2.tau(1, 2);
  EXPECT_EQ(t.rows(), 4u);
  long long tr = 0;
  for (std::size_t i = 0; i < 4; ++i) tr += t(i, i);
  EXPECT_EQ(tr, 2);
  EXPECT_EQ(bareiss_rank(to_integer(t)), 1u);
  EXPECT_THROW(r2.tau(1, 1), std::invalid_argument);
  for (int n : {1, 2})
    for (Series s : {Series::orthogonal, Series::symplectic}) {
      const auto sp = BilinearSpace::make(s, n);
      const TensorRep r(sp, 3);
      for (auto [p, q] : std::vector<Pair>{{1, 2}, {1, 3}, {2, 3}}) {
        const auto tm = r.tau(p, q);
        const auto sq = TensorRep::mul(tm, tm);
        // τ² = (form trace) τ: n for orthogonal, 2n for the skew form
        const long long scale = s == Series::orthogonal ? n : 2 * n;
        for (std::size_t i = 0; i < tm.rows(); ++i)
          for (std::size_t j = 0; j < tm.cols(); ++j) ASSERT_EQ(sq(i, j), scale * tm(i, j));
        if (s == Series::orthogonal) EXPECT_EQ(r.tau(q, p), tm);
      }
    }
}

TEST(Tensor, MatchesIndependentOrthogonalFormula) {
  for (int n : {1, 2, 3})
    for (int f = 1; f <= 3; ++f) {
      const TensorRep r(BilinearSpace::orthogonal(n), f);
      for (const auto& d : diagram_basis(f)) ASSERT_EQ(r.diagram(d), orthogonal_oracle(d, n));
    }
}

TEST(Tensor, ClosedFormMatchesFactorization) {
  for (Series s : {Series::orthogonal, Series::symplectic})
    for (int n : {1, 2})
      for (int f = 1; f <= 3; ++f) {
        const TensorRep r(BilinearSpace::make(s, n), f);
        for (const auto& d : diagram_basis(f)) ASSERT_EQ(r.diagram(d), r.diagram_via_factorization(d));
      }
}

TEST(Tensor, HomomorphismExhaustive) {
  for (Series s : {Series::orthogonal, Series::symplectic})
    for (int n : {1, 2})
      for (int f = 1; f <= 3; ++f) {
        const auto sp = BilinearSpace::make(s, n);
        const auto c = tensor_context(sp, f);
        const TensorRep r(sp, f);
        const RationalField Q;
        const auto& ds = diagram_basis(f);
        std::vector<Matrix<Rational>> img;
        for (const auto& d : ds) img.push_back(r.element(el(c, d)));
        for (std::size_t a = 0; a < ds.size(); ++a)
          for (std::size_t b = 0; b < ds.size(); ++b)
            ASSERT_EQ(r.element(el(c, ds[a]) * el(c, ds[b])), multiply(Q, img[a], img[b]))
                << to_string(s) << " n=" << n << " " << format_diagram(ds[a]) << " " << format_diagram(ds[b]);
        EXPECT_EQ(r.element(QElement::identity(c)), identity_matrix(Q, r.size()));
      }
}

TEST(Tensor, SmallExamples) {
  const auto sp = BilinearSpace::orthogonal(1);
  const TensorRep r(sp, 2);
  for (const auto& d : {H(), X(), I2()}) EXPECT_EQ(r.diagram(d), identity_int(1));
  const auto hh = TensorRep::mul(r.diagram(H()), r.diagram(H()));
  EXPECT_EQ(hh, r.diagram(H()));
}

TEST(Tensor, ParameterMismatchRejected) {
  const auto sp = BilinearSpace::orthogonal(2);
  EXPECT_THROW(kernel_basis(make_context(2, Rational(1)), sp), std::invalid_argument);
  EXPECT_THROW(kernel_basis(make_context(2, Rational(2)), BilinearSpace::symplectic(1)), std::invalid_argument);
  EXPECT_THROW(BilinearSpace::orthogonal(0), std::invalid_argument);
}

TEST(Kernel, Examples) {
  auto sp = BilinearSpace::orthogonal(1);
  auto c = tensor_context(sp, 2);
  auto k = kernel_basis(c, sp);
  EXPECT_EQ(k.size(), 2u);
  EXPECT_TRUE(same_span(k, {el(c, I2()) - el(c, X()), el(c, H()) - el(c, X())}, 3));
  sp = BilinearSpace::symplectic(1);
  c = tensor_context(sp, 2);
  k = kernel_basis(c, sp);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(same_span(k, {build_pfaffian(c, PfaffianSpec{2, {}, {1, 2, 3, 4}})}, 3));
  sp = BilinearSpace::orthogonal(2);
  EXPECT_TRUE(kernel_basis(tensor_context(sp, 2), sp).empty());
}

TEST(Kernel, InjectiveExactlyWhenLarge) {
  for (int f = 1; f <= 3; ++f)
    for (int n = 1; n <= 3; ++n) {
      const auto sp = BilinearSpace::orthogonal(n);
      EXPECT_EQ(kernel_basis(tensor_context(sp, f), sp).empty(), n >= f) << f << " " << n;
    }
}

TEST(Kernel, SpannedByMinorsAndPfaffians) {
  for (int f = 2; f <= 4; ++f)
    for (int n = 1; n <= 2; ++n) {
      const auto sp = BilinearSpace::orthogonal(n);
      const auto c = tensor_context(sp, f);
      EXPECT_TRUE(same_span(kernel_basis(c, sp), enumerate_minors(c, n + 1), c.dim())) << f << " " << n;
    }
  for (int f = 2; f <= 4; ++f) {
    const auto sp = BilinearSpace::symplectic(1);
    const auto c = tensor_context(sp, f);
    EXPECT_TRUE(same_span(kernel_basis(c, sp), enumerate_pfaffians(c, 2), c.dim())) << f;
  }
}

TEST(Kernel, ContainsRadical) {
  for (int f = 2; f <= 4; ++f)
    for (Series s : {Series::orthogonal, Series::symplectic}) {
      const auto sp = BilinearSpace::make(s, 1);
      const auto c = tensor_context(sp, f);
      const auto k = coordinate_vectors(kernel_basis(c, sp));
      const RadicalOracle rad(c);
      EXPECT_TRUE(span_contains(RationalField{}, c.dim(), k, rad.basis_vectors())) << f;
    }
}

TEST(Kernel, StableUnderRelabelling) {
  std::mt19937 rng(5);
  for (int f = 2; f <= 3; ++f) {
    const auto sp = BilinearSpace::orthogonal(1);
    const auto c = tensor_context(sp, f);
    const auto k = coordinate_vectors(kernel_basis(c, sp));
    const auto perms = Permutation::all(2 * f);
    for (const auto& m : enumerate_minors(c, 2))
      for (int t = 0; t < 5; ++t) {
        const auto& g = perms[rng() % perms.size()];
        QElement moved(c);
        for (const auto& [d, v] : m.terms()) moved.add_term(s2f_act(g, d), v);
        EXPECT_TRUE(span_contains(RationalField{}, c.dim(), k, {moved.to_vector()}));
      }
  }
}
