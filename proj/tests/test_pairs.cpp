#include <gtest/gtest.h>

#include "ckforms/catalog.hpp"
#include "ckforms/errors.hpp"
#include "ckforms/grammar.hpp"
#include "ckforms/pairs.hpp"
#include "gen.hpp"

using namespace ckforms;
using ckforms::testing::Gen;

namespace {

struct Counts {
  const char* pair;
  std::size_t dim_GH, q_fiber, p_degree;
};

// k-first basis: the p-part is every coordinate past dim_k
bool inside_p(const LieAlgebraInstance& g, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < g.dim_k(); ++c)
      if (s.basis()(r, c) != 0) return false;
  return true;
}

}  // namespace

TEST(Pairs, SmallDimensionCounts) {
  const Counts cases[] = {
      {"SO(1,2)/SO(1,1)", 2, 1, 1},
      {"SL_R(3)/SL_R(2)", 5, 2, 3},
      {"GROUP(SL_R(2))", 3, 1, 2},
      {"SL_R(4)/SL_R(2)", 12, 5, 7},
      {"SO(2,2)/SO(2,1)", 3, 1, 2},
  };
  for (const auto& c : cases) {
    const ReductivePair rp = embed_pair(parse_pair(c.pair));
    EXPECT_EQ(rp.dim_GH, c.dim_GH) << c.pair;
    EXPECT_EQ(rp.q_fiber, c.q_fiber) << c.pair;
    EXPECT_EQ(rp.p_degree, c.p_degree) << c.pair;
    EXPECT_EQ(rp.V.dim(), c.p_degree) << c.pair;
  }
}

TEST(Pairs, CatalogInvariants) {
  for (const auto& e : builtin_catalog()) {
    SCOPED_TRACE(e.id);
    const ReductivePair rp = embed_pair(e.pair);
    const LieAlgebraInstance& g = *rp.g;
    // dimension counts straight from the family formulas
    const std::size_t dim_GH = real_dimension(e.pair.g) - real_dimension(e.pair.h);
    AlgebraSpec h1 = e.pair.h;
    const std::size_t q = compact_dimension(e.pair.g) - compact_dimension(h1);
    EXPECT_EQ(rp.dim_GH, dim_GH);
    EXPECT_EQ(rp.q_fiber, q);
    EXPECT_EQ(rp.V.dim(), dim_GH - q);
    EXPECT_EQ(rp.h_subspace.dim(), real_dimension(e.pair.h));

    EXPECT_TRUE(is_subalgebra(g, rp.h_subspace));
    EXPECT_TRUE(is_theta_stable(g, rp.h_subspace));
    EXPECT_TRUE(inside_p(g, rp.V));
    EXPECT_EQ(restricted_inertia(g.killing(), rp.V).positive, rp.V.dim());
    EXPECT_TRUE(V_is_l_invariant(rp));
    // l = h ∩ k
    EXPECT_EQ(rp.l_subspace, intersect(rp.h_subspace, rp.k_subspace));
  }
}

TEST(Pairs, CompactSubgroupGivesWholeP) {
  // h inside k makes h-perp contain k-perp = p
  for (const char* t : {"SL_R(3)/SO(3)", "SO(2,1)/SO(2)", "SU(2,1)/SU(2)"}) {
    const ReductivePair rp = embed_pair(parse_pair(t));
    EXPECT_EQ(intersect(rp.h_subspace, rp.k_subspace), rp.h_subspace) << t;
    EXPECT_EQ(rp.V.dim(), rp.g->dim_p()) << t;
  }
  const ReductivePair rp = embed_pair(parse_pair("SL_R(3)/SO(3)"));
  EXPECT_EQ(rp.h_subspace, rp.k_subspace);
  EXPECT_EQ(rp.q_fiber, 0u);
  EXPECT_EQ(rp.V.dim(), 5u);
}

TEST(Pairs, GroupSpaceDiagonal) {
  const ReductivePair rp = embed_pair(parse_pair("GROUP(SU(2,1))"));
  const LieAlgebraInstance& g = *rp.g;
  const std::size_t n = g.matrix_size() / 2;
  for (std::size_t r = 0; r < rp.h_subspace.dim(); ++r) {
    const QMatrix m = g.to_matrix(rp.h_subspace.basis().row(r)).to_dense();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(m(i, j), m(n + i, n + j));
        EXPECT_EQ(m(i, n + j), 0);
        EXPECT_EQ(m(n + i, j), 0);
      }
  }
  EXPECT_EQ(rp.spec.embedding, Embedding::DiagonalGroupSpace);
}

TEST(Pairs, OrthogonalComplements) {
  const auto g = build_algebra(parse_algebra_spec("SO(2,1)"));
  const ReductivePair rp = embed_pair(parse_pair("SO(2,1)/SO(1,1)"));
  EXPECT_EQ(orthogonal_complement(rp.h_subspace, rp.g->killing()).dim(), 2u);

  const Subspace full = Subspace::coordinate(g.dim(), 0, g.dim());
  EXPECT_EQ(orthogonal_complement(full, g.killing()).dim(), 0u);

  Gen gen(21);
  for (const char* t : {"SO(2,3)", "SU(2,1)", "SL_R(3)"}) {
    const auto a = build_algebra(parse_algebra_spec(t));
    for (int trial = 0; trial < 20; ++trial) {
      const Subspace s = Subspace::span(gen.matrix(gen.integer(1, a.dim() - 1), a.dim(), 0.5), a.dim());
      const Subspace c = orthogonal_complement(s, a.killing());
      EXPECT_EQ(s.dim() + c.dim(), a.dim()) << t;
      EXPECT_EQ(orthogonal_complement(c, a.killing()), s) << t;
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j)
          EXPECT_EQ(dot(s.basis().row(i), a.killing() * c.basis().row(j)), 0) << t;
    }
  }
}

TEST(Pairs, DegenerateFormRejected) {
  QMatrix zero(3, 3);
  try {
    orthogonal_complement(Subspace::coordinate(3, 0, 1), zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateForm);
  }
}

TEST(Pairs, SubspaceCoordinates) {
  Gen gen(22);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix rows = gen.matrix(gen.integer(1, 4), 6, 0.3);
    const Subspace s = Subspace::span(rows, 6);
    for (std::size_t r = 0; r < rows.rows(); ++r) {
      const auto c = s.coordinates_of(rows.row(r));
      ASSERT_TRUE(c.has_value());
      EXPECT_EQ(s.basis().transpose() * *c, rows.row(r));
    }
  }
}

TEST(Pairs, ComputeVChecksDimension) {
  const ReductivePair rp = embed_pair(parse_pair("SO(2,2)/SO(2,1)"));
  EXPECT_NO_THROW(compute_V(*rp.g, rp.h_subspace, rp.k_subspace, 2));
  try {
    compute_V(*rp.g, rp.h_subspace, rp.k_subspace, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Grammar, Examples) {
  const PairSpec a = parse_pair("SO(3,2)/SO(3,1)");
  EXPECT_EQ(a.g, make_spec(Family::SO, {3, 2}));
  EXPECT_EQ(a.h, make_spec(Family::SO, {3, 1}));
  EXPECT_EQ(a.embedding, Embedding::UpperLeftBlock);

  const PairSpec b = parse_pair("GROUP(SU(2,1))");
  EXPECT_EQ(b.embedding, Embedding::DiagonalGroupSpace);
  EXPECT_EQ(b.g, make_spec(Family::SU, {2, 1}, 2));
  EXPECT_EQ(b.h, make_spec(Family::SU, {2, 1}));

  EXPECT_EQ(parse_pair("SL_C(3)/SU(2,1)").embedding, Embedding::RealFormInComplexification);
  EXPECT_EQ(parse_pair("  so_c(4)/so(2,2) ").embedding, Embedding::RealFormInComplexification);
}

TEST(Grammar, RoundTrip) {
  for (const auto& e : builtin_catalog()) EXPECT_EQ(parse_pair(e.pair.to_string()), e.pair) << e.id;
}

TEST(Grammar, Errors) {
  struct Bad {
    const char* text;
    std::size_t position;
  };
  const Bad cases[] = {{"SO(3,2)", 7}, {"SO(3,2)/", 8}, {"GROUP(SU(2,1)", 12}, {"SO(3, 2)/SO(3,1)", 5}, {"SO(3,2)/SO(3,1)x", 15}};
  for (const auto& c : cases) {
    try {
      parse_pair(c.text);
      FAIL() << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.position) << c.text << ": " << e.what();
      EXPECT_FALSE(e.expected().empty()) << c.text;
    }
  }
}

TEST(Grammar, UnsupportedPairs) {
  for (const char* t : {"SO(3,2)/SL_R(2)", "SL_R(3)/SL_R(4)", "SU(2,1)/SO(3,1)"}) {
    EXPECT_THROW(embed_pair(parse_pair(t)), Error) << t;
  }
}
