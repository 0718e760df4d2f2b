#include <gtest/gtest.h>

#include "ckforms/algebra.hpp"
#include "ckforms/errors.hpp"
#include "ckforms/ranks.hpp"
#include "oracles.hpp"

using namespace ckforms;

namespace {

using ckforms::testing::brute_killing;
using ckforms::testing::trace_form;

struct DimCase {
  const char* text;
  std::size_t dim;
  std::size_t dim_k;
  int rank;
  int rank_k;
};

}  // namespace

TEST(Algebra, KillingFormOnSoIsMultipleOfTrace) {
  for (int n = 3; n <= 8; ++n) {
    const auto a = build_algebra(make_spec(Family::SO, {n, 0}));
    const QMatrix b = brute_killing(a).value();
    EXPECT_EQ(b, Rational(n - 2) * trace_form(a)) << "so(" << n << ")";
    EXPECT_EQ(a.killing(), b);
  }
}

TEST(Algebra, KillingFormOnSlIsMultipleOfTrace) {
  for (int n = 2; n <= 5; ++n) {
    const auto a = build_algebra(make_spec(Family::SL_R, {n}));
    const QMatrix b = brute_killing(a).value();
    EXPECT_EQ(b, Rational(2 * n) * trace_form(a)) << "sl(" << n << ",R)";
    EXPECT_EQ(a.killing(), b);
  }
}

TEST(Algebra, SmallKillingValues) {
  const auto so3 = build_algebra(make_spec(Family::SO, {3, 0}));
  // standard rotation generators have tr(XX) = -2
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(so3.killing()(i, j), i == j ? -2 : 0);

  const auto sl2 = build_algebra(make_spec(Family::SL_R, {2}));
  SparseQMatrix h(2, {{0, 0, 1}, {1, 1, -1}});
  const auto c = sl2.coordinates(h);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(dot(*c, sl2.killing() * *c), 8);
}

TEST(Algebra, ComplexFamiliesDoubleTheTraceFactor) {
  // as real algebras B is twice the real part of the complex Killing form;
  // the realified trace is already twice the real part of the complex trace
  for (int n = 2; n <= 3; ++n) {
    const auto a = build_algebra(make_spec(Family::SL_C, {n}));
    EXPECT_EQ(brute_killing(a).value(), Rational(2 * n) * trace_form(a));
  }
  for (int n = 3; n <= 5; ++n) {
    const auto a = build_algebra(make_spec(Family::SO_C, {n}));
    EXPECT_EQ(brute_killing(a).value(), Rational(n - 2) * trace_form(a));
  }
}

TEST(Algebra, BruteKillingAgreesEverywhere) {
  for (const char* t : {"SU(2,1)", "SP(1,1)", "SL_H(2)", "SP_C(1)", "SOSTAR(4)", "SO(2,3)"}) {
    const auto a = build_algebra(parse_algebra_spec(t));
    EXPECT_EQ(a.killing(), brute_killing(a).value()) << t;
    EXPECT_EQ(killing_form(a), a.killing()) << t;
  }
}

TEST(Algebra, DimensionsAndRanks) {
  const DimCase cases[] = {
      {"SO(3,2)", 10, 4, 2, 2},     {"SO(1,2)", 3, 1, 1, 1},      {"SO(2,2)", 6, 2, 2, 2},
      {"SL_R(3)", 8, 3, 2, 1},      {"SL_R(4)", 15, 6, 3, 2},     {"SL_C(2)", 6, 3, 2, 1},
      {"SL_C(3)", 16, 8, 4, 2},     {"SU(2,1)", 8, 4, 2, 2},      {"SU(1,1)", 3, 1, 1, 1},
      {"SL_H(2)", 15, 10, 3, 2},    {"SP(1,1)", 10, 6, 2, 2},     {"SP_C(2)", 20, 10, 4, 2},
      {"SO_C(4)", 12, 6, 4, 2},     {"SO_C(3)", 6, 3, 2, 1},      {"SOSTAR(4)", 6, 4, 2, 2},
      {"SOSTAR(6)", 15, 9, 3, 3},   {"SO(5)", 10, 10, 2, 2},
  };
  for (const auto& c : cases) {
    const AlgebraSpec s = parse_algebra_spec(c.text);
    const auto a = build_algebra(s);
    EXPECT_EQ(a.dim(), c.dim) << c.text;
    EXPECT_EQ(a.dim_k(), c.dim_k) << c.text;
    EXPECT_EQ(real_dimension(s), c.dim) << c.text;
    EXPECT_EQ(compact_dimension(s), c.dim_k) << c.text;
    EXPECT_EQ(complex_rank(s), c.rank) << c.text;
    EXPECT_EQ(compact_rank(s), c.rank_k) << c.text;
  }
}

TEST(Algebra, StructuralProperties) {
  for (const char* t : {"SO(2,3)", "SL_R(3)", "SL_C(2)", "SU(2,1)", "SL_H(2)", "SP(1,1)", "SP_C(1)",
                        "SO_C(4)", "SOSTAR(4)"}) {
    const auto a = build_algebra(parse_algebra_spec(t));
    EXPECT_TRUE(satisfies_jacobi(a)) << t;
    EXPECT_TRUE(killing_is_invariant(a)) << t;
    EXPECT_TRUE(is_theta_adapted(a)) << t;
  }
}

TEST(Algebra, ThetaSignatureAndDefiniteness) {
  for (const char* t : {"SO(3,2)", "SL_R(4)", "SU(2,1)", "SL_C(2)", "SP(1,1)", "SOSTAR(6)", "SL_H(2)"}) {
    const auto a = build_algebra(parse_algebra_spec(t));
    const auto& sig = a.theta_signature();
    for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_EQ(sig[i], i < a.dim_k() ? 1 : -1) << t;
    // theta(X) = -X^T on the basis matrices
    for (std::size_t i = 0; i < a.dim(); ++i)
      EXPECT_EQ(a.basis()[i].transpose().scaled(-1), a.basis()[i].scaled(sig[i])) << t;
    const CartanDecomposition cd = cartan_decomposition(a);
    QMatrix bk(cd.k_basis.size(), cd.k_basis.size()), bp(cd.p_basis.size(), cd.p_basis.size());
    for (std::size_t i = 0; i < cd.k_basis.size(); ++i)
      for (std::size_t j = 0; j < cd.k_basis.size(); ++j) bk(i, j) = a.killing()(cd.k_basis[i], cd.k_basis[j]);
    for (std::size_t i = 0; i < cd.p_basis.size(); ++i)
      for (std::size_t j = 0; j < cd.p_basis.size(); ++j) bp(i, j) = a.killing()(cd.p_basis[i], cd.p_basis[j]);
    EXPECT_EQ(inertia(bk).negative, bk.rows()) << t;
    EXPECT_EQ(inertia(bp).positive, bp.rows()) << t;
    for (std::size_t i : cd.k_basis)
      for (std::size_t j : cd.p_basis) EXPECT_EQ(a.killing()(i, j), 0) << t;
  }
}

TEST(Algebra, BracketRoundTrip) {
  const auto a = build_algebra(parse_algebra_spec("SU(2,1)"));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      QVector x(a.dim()), y(a.dim());
      x[i] = 1;
      y[j] = 1;
      EXPECT_EQ(a.to_matrix(a.bracket(x, y)), commutator(a.basis()[i], a.basis()[j]));
    }
}

TEST(Algebra, GroupCopiesAreBlockDiagonal) {
  const AlgebraSpec s = make_spec(Family::SL_R, {2}, 2);
  const auto a = build_algebra(s);
  EXPECT_EQ(a.dim(), 6u);
  EXPECT_EQ(a.matrix_size(), 4u);
  EXPECT_EQ(complex_rank(s), 2);
  EXPECT_TRUE(satisfies_jacobi(a));
}

TEST(Algebra, ParseSpecs) {
  EXPECT_EQ(parse_algebra_spec("so(3,2)"), make_spec(Family::SO, {3, 2}));
  EXPECT_EQ(parse_algebra_spec("SO(4)"), make_spec(Family::SO, {4, 0}));
  EXPECT_EQ(parse_algebra_spec(" SL_R(4) "), make_spec(Family::SL_R, {4}));
  EXPECT_EQ(parse_algebra_spec("SOSTAR(6)").family, Family::SOSTAR);
  EXPECT_EQ(make_spec(Family::SU, {2, 1}).to_string(), "SU(2,1)");
}

TEST(Algebra, ParseErrors) {
  for (const char* bad : {"", "SO(3,", "XX(3)", "SO(3,2", "SO(a,b)", "SL_R()", "SO(3,2))"}) {
    EXPECT_THROW(parse_algebra_spec(bad), ParseError) << bad;
  }
  try {
    parse_algebra_spec("SO(3;2)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Algebra, UnsupportedParameters) {
  for (const char* bad : {"SL_R(1)", "SO(1,0)", "SOSTAR(3)", "SU(0,0)"}) {
    try {
      validate_spec(parse_algebra_spec(bad));
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsupportedFamily) << bad;
    }
  }
}

TEST(Algebra, DimensionCap) {
  try {
    build_algebra(make_spec(Family::SL_R, {20}), 256);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionCapExceeded);
  }
}

TEST(Algebra, QuaternionBlocksMultiply) {
  // i j = k under left multiplication
  EXPECT_EQ(quaternion_block(0, 1, 0, 0) * quaternion_block(0, 0, 1, 0), quaternion_block(0, 0, 0, 1));
  EXPECT_EQ(quaternion_block(0, 1, 0, 0) * quaternion_block(0, 1, 0, 0), quaternion_block(-1, 0, 0, 0));
}
