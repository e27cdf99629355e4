#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sphcomb/builtins.hpp"
#include "sphcomb/spherical.hpp"
#include "support.hpp"

using namespace sphcomb;
using namespace sphcomb::testing;

namespace {

  LocalFieldParams const q5(Integer(5), Integer(5));

  std::vector<std::string> words(SphericalInvariants const& inv, std::vector<std::size_t> const& ks) {
    std::vector<std::string> out;
    for (auto k : ks) {
      out.push_back(word_to_string(inv.element(k).word()));
    }
    return out;
  }

  // Matrices of W_X elements, for comparing subgroups of different
  // enumerations of the same group.
  std::set<SmallMatrix> little_weyl_matrices(SphericalInvariants const& inv) {
    std::set<SmallMatrix> out;
    for (auto k : inv.little_weyl.elements) {
      out.insert(inv.element(k).matrix());
    }
    return out;
  }

}  // namespace

TEST(Invariants, Horospherical) {
  for (auto const* type : {"A1", "A2", "B2", "G2"}) {
    auto const inv = compute_invariants(build_horospherical_full(RootDatum::named(type)), q5);
    EXPECT_EQ(words(inv, inv.little_weyl.elements), std::vector<std::string>{"e"}) << type;
    EXPECT_EQ(*inv.multiplicity, Integer(WeylGroup(RootDatum::named(type)).size())) << type;
  }
}

TEST(Invariants, GroupCase) {
  for (auto const* type : {"A1", "A2", "B2"}) {
    auto const d   = RootDatum::named(type);
    auto const inv = compute_invariants(build_group_case(d), q5);
    EXPECT_EQ(inv.little_weyl.order(), WeylGroup(d).size()) << type;
    EXPECT_EQ(inv.rank(), d.rank()) << type;
    EXPECT_EQ(*inv.multiplicity, 1) << type;
  }
}

TEST(Invariants, Sl2Family) {
  auto const t = compute_invariants(build_sl2(Sl2Case::T_split), q5);
  EXPECT_EQ(words(t, t.little_weyl.elements), (std::vector<std::string>{"e", "s1"}));
  EXPECT_EQ(*t.h1, 4);
  EXPECT_EQ(*t.multiplicity, 4);
  auto const n = compute_invariants(build_sl2(Sl2Case::N), LocalFieldParams(Integer(7), Integer(7)));
  EXPECT_EQ(*n.multiplicity, 8);
  auto const point = compute_invariants(build_sl2(Sl2Case::G), q5);
  EXPECT_EQ(point.p_roots, std::vector<std::size_t>{0});
  EXPECT_EQ(point.normalizer.size(), 1u);
  EXPECT_EQ(*point.multiplicity, 1);
}

TEST(Invariants, RequireValidGraph) {
  auto const fixtures = mutation_fixtures();
  for (auto const& f : fixtures) {
    EXPECT_THROW(compute_invariants(f.graph), Error) << f.description;
  }
}

TEST(Invariants, LittleWeylGroupLiesInMinimalCosetRepresentatives) {
  for (auto const& [name, g] : bundled_graphs()) {
    auto const inv = compute_invariants(g);
    for (auto k : inv.little_weyl.elements) {
      EXPECT_TRUE(inv.group->keeps_positive(k, inv.p_roots)) << name;
    }
  }
}

TEST(Invariants, LittleWeylGroupIsGeneratedByReflections) {
  for (auto const& [name, g] : bundled_graphs()) {
    auto const inv  = compute_invariants(g);
    auto const refl = reflections_in(inv);
    EXPECT_EQ(generate_subgroup(*inv.group, refl).size(), inv.little_weyl.order()) << name;
    // every reflection fixes a hyperplane of a_X^* and negates a complement
    SpanCoordinates const span(inv.weights);
    for (auto k : refl) {
      auto const r = *span.restrict(inv.element(k).matrix());
      EXPECT_EQ(r * r, RationalMatrix::identity(r.rows())) << name;
    }
  }
}

TEST(Invariants, NormalizerOfFullRankWeightsIsW) {
  for (auto const* type : {"A2", "B2"}) {
    auto const inv = compute_invariants(build_horospherical_full(RootDatum::named(type)));
    EXPECT_EQ(inv.normalizer.size(), inv.group->size());
  }
}

TEST(Admissibility, OpenOrbitCosetIsMinusRhoPlusWeights) {
  auto const g   = build_sl2(Sl2Case::T_split);
  auto const inv = compute_invariants(g);
  auto const c   = admissible_coset(g, inv, "open");
  EXPECT_TRUE(c.contains(RationalVector{Rational(-1)}));
  EXPECT_TRUE(c.contains(RationalVector{Rational(7, 3)}));

  auto const point = build_point(RootDatum::named("A1"));
  auto const pc    = admissible_coset(point, compute_invariants(point), "open");
  EXPECT_TRUE(pc.contains(RationalVector{Rational(-1)}));
  EXPECT_FALSE(pc.contains(RationalVector{Rational(0)}));
}

TEST(Admissibility, TransportConsistency) {
  for (auto const& [name, g] : bundled_graphs()) {
    auto const inv  = compute_invariants(g);
    auto const base = admissible_coset(g, inv, g.open_id());
    for (auto k : min_coset_rep_indices(*inv.group, inv.p_roots, CosetSide::left)) {
      auto const& w = inv.element(k);
      AffineCharacterCoset const moved{w.act(base.shift), transport(w, base.direction)};
      EXPECT_EQ(admissible_coset(g, inv, knop_apply(g, g.open_id(), w)), moved)
          << name << " " << word_to_string(w.word());
    }
  }
}

TEST(Admissibility, RejectsLowerRank) {
  auto const g   = build_sl2(Sl2Case::T_split);
  auto const inv = compute_invariants(g);
  EXPECT_THROW(admissible_coset(g, inv, "closed1"), Error);
}

TEST(BadDivisors, PointOfPgl2) {
  auto const g   = build_point(RootDatum::named("A1"));
  auto const bad = bad_divisors(g, compute_invariants(g));
  EXPECT_TRUE(bad.r_containments.empty());
  EXPECT_EQ(bad.q_containments, std::vector<SmallVector>{SmallVector{1}});
}

TEST(BadDivisors, ExactlyTheLeviCoroots) {
  for (auto const& [name, g] : bundled_graphs()) {
    auto const inv = compute_invariants(g);
    auto const bad = bad_divisors(g, inv);
    EXPECT_TRUE(bad.r_containments.empty()) << name;
    std::set<SmallVector> expected, got(bad.q_containments.begin(), bad.q_containments.end());
    for (auto a : inv.p_roots) {
      expected.insert(g.datum().simple_coroot(a));
    }
    EXPECT_EQ(got, expected) << name;
  }
}

TEST(Induction, TSplitOnLeviOfA2) {
  auto const inner   = build_sl2(Sl2Case::T_split);
  auto const ambient = RootDatum::named("A2");
  auto const g       = build_parabolic_induction(inner, {0}, ambient);
  EXPECT_EQ(g.nodes().size(), 9u);
  EXPECT_TRUE(validate(g).pass);

  auto const inv       = compute_invariants(g, q5);
  auto const inner_inv = compute_invariants(inner, q5);
  EXPECT_EQ(inv.little_weyl.order(), 2u);
  std::set<SmallMatrix> mapped;
  for (auto k : inner_inv.little_weyl.elements) {
    Word w = inner_inv.element(k).word();
    mapped.insert(WeylElement::from_word(ambient, w).matrix());  // inner root i is ambient root p_roots[i] = i
  }
  EXPECT_EQ(little_weyl_matrices(inv), mapped);

  LeviEmbedding const embed(inner.datum(), ambient, {0});
  EXPECT_EQ(g.open_node().lattice, embed(inner.open_node().lattice));
}

TEST(Induction, LeviLatticeInputGivesTheSameGraph) {
  auto const inner   = build_sl2(Sl2Case::N);
  auto const ambient = RootDatum::named("B2");
  auto const direct  = build_parabolic_induction(inner, {1}, ambient);
  auto const levi    = embed_graph(inner, ambient, {1});
  EXPECT_TRUE(validate(levi).pass);
  auto const via_levi = build_parabolic_induction(levi, {1}, ambient);
  EXPECT_EQ(direct, via_levi);
  // with the inner graph already on the Levi the character groups agree literally
  EXPECT_EQ(via_levi.open_node().lattice, levi.open_node().lattice);
}

TEST(Induction, EmbeddingPullsBackLeviPairings) {
  // X(A) = Z^2 for A2; the T_split lattice 2Z on the Levi of a1 lifts to
  // {v : <v, a1^> even}.
  LeviEmbedding const embed(RootDatum::named("A1"), RootDatum::named("A2"), {0});
  auto const          lifted = embed(Sublattice::from_rows(1, {IntVector{Integer(2)}}));
  EXPECT_EQ(lifted, Sublattice::from_rows(2, {IntVector{Integer(2), Integer(0)}, IntVector{Integer(0), Integer(1)}}));
  EXPECT_EQ(embed(Sublattice::zero(1)), Sublattice::from_rows(2, {IntVector{Integer(0), Integer(1)}}));
}

TEST(Induction, PointGivesHorosphericalVariety) {
  auto const g   = build_parabolic_induction(build_point(trivial_datum()), {}, RootDatum::named("A2"));
  auto const h   = build_horospherical_full(RootDatum::named("A2"));
  auto const inv = compute_invariants(g, q5);
  EXPECT_EQ(g.nodes().size(), h.nodes().size());
  EXPECT_EQ(inv.little_weyl.order(), 1u);
  EXPECT_EQ(*inv.multiplicity, *compute_invariants(h, q5).multiplicity);
}

TEST(Induction, MultiplicityCrossCheck) {
  for (auto const& [inner, roots, type] :
       {std::tuple{Sl2Case::T_split, std::vector<std::size_t>{0}, "A2"},
        std::tuple{Sl2Case::N, std::vector<std::size_t>{1}, "B2"},
        std::tuple{Sl2Case::U, std::vector<std::size_t>{0}, "G2"}}) {
    auto const ambient  = RootDatum::named(type);
    auto const inner_g  = build_sl2(inner);
    auto const g        = build_parabolic_induction(inner_g, roots, ambient);
    auto const inv      = compute_invariants(g, q5);
    auto const inner_iv = compute_invariants(inner_g, q5);
    // second path: weights from the embedding, W_X from the inner graph
    LeviEmbedding const embed(inner_g.datum(), ambient, roots);
    auto const          weights = embed(inner_g.open_node().lattice);
    WeylGroup const     w(ambient);
    auto const          normalizer = normalizer_of(w, weights);
    auto const          h1         = h1_order(quotient_invariants(ambient.ambient_rank(), weights).torsion, q5);
    Integer const       expected   = Integer(normalizer.size() / inner_iv.little_weyl.order()) * h1;
    EXPECT_EQ(*inv.multiplicity, expected) << type;
  }
}

TEST(Induction, InconsistentInputsRejected) {
  auto const inner = build_sl2(Sl2Case::T_split);
  for (auto const& roots : {std::vector<std::size_t>{}, std::vector<std::size_t>{0, 1}}) {
    try {
      build_parabolic_induction(inner, roots, RootDatum::named("A2"));
      FAIL() << "mismatched Levi accepted";
    } catch (Error const& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InductionInconsistent);
    }
  }
  try {
    build_parabolic_induction(mutation_fixtures()[2].graph, {0}, RootDatum::named("A2"));
    FAIL() << "invalid inner graph accepted";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InductionInconsistent);
  }
}

TEST(Builtins, NamesResolve) {
  EXPECT_EQ(build_builtin("induce:sl2:T_split@A2/{a1}"), build_parabolic_induction(build_sl2(Sl2Case::T_split), {0}, RootDatum::named("A2")));
  EXPECT_EQ(build_builtin("group:A1"), build_group_case(RootDatum::named("A1")));
  EXPECT_THROW(build_builtin("sl2:Q"), Error);
  EXPECT_THROW(build_builtin("horospherical:Z9"), Error);
  EXPECT_THROW(build_builtin("induce:sl2:T_split@A2"), Error);
}
