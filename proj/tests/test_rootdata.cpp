#include <gtest/gtest.h>

#include <set>

#include "sphcomb/rootdata.hpp"

using namespace sphcomb;

namespace {

  std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  struct TypeCounts {
    std::string name;
    std::size_t positive_roots;
    std::size_t weyl_order;
  };

  // Classical closed forms: A_n n(n+1)/2, (n+1)!; B_n, C_n n^2, 2^n n!;
  // D_n n(n-1), 2^(n-1) n!; exceptional orders from their root counts.
  std::vector<TypeCounts> known_counts() {
    std::vector<TypeCounts> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      out.push_back({"A" + std::to_string(n), n * (n + 1) / 2, factorial(n + 1)});
    }
    for (std::size_t n = 2; n <= 4; ++n) {
      out.push_back({"B" + std::to_string(n), n * n, (std::size_t{1} << n) * factorial(n)});
      out.push_back({"C" + std::to_string(n), n * n, (std::size_t{1} << n) * factorial(n)});
    }
    out.push_back({"D4", 12, 8 * factorial(4)});
    out.push_back({"G2", 6, 12});
    out.push_back({"F4", 24, 1152});
    out.push_back({"E6", 36, 51840});
    return out;
  }

}  // namespace

TEST(RootDatum, RootCountsAndWeylOrders) {
  for (auto const& c : known_counts()) {
    auto const d = RootDatum::named(c.name);
    EXPECT_EQ(d.positive_roots().size(), c.positive_roots) << c.name;
    EXPECT_EQ(WeylGroup(d).size(), c.weyl_order) << c.name;
  }
}

TEST(RootDatum, A1Conventions) {
  auto const d = RootDatum::named("A1");
  EXPECT_EQ(d.ambient_rank(), 1u);
  EXPECT_EQ(d.simple_root(0), SmallVector{2});
  EXPECT_EQ(d.simple_coroot(0), SmallVector{1});
  EXPECT_EQ(rho(d), RationalVector{Rational(1)});
}

TEST(RootDatum, CartanPairing) {
  for (auto const* name : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
    auto const d = RootDatum::named(name);
    for (std::size_t i = 0; i < d.rank(); ++i) {
      for (std::size_t j = 0; j < d.rank(); ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < d.ambient_rank(); ++k) {
          s += d.simple_root(j)[k] * d.simple_coroot(i)[k];
        }
        EXPECT_EQ(s, d.cartan()(i, j)) << name;
      }
    }
  }
}

TEST(RootDatum, RhoPairsToOneWithSimpleCoroots) {
  for (auto const* name : {"A2", "B2", "G2", "C3", "D4", "A2xA1"}) {
    auto const d = RootDatum::named(name);
    auto const r = rho(d);
    for (std::size_t i = 0; i < d.rank(); ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < d.ambient_rank(); ++k) {
        s += r[k] * d.simple_coroot(i)[k];
      }
      EXPECT_EQ(s, Rational(1)) << name;
    }
    // rho is half the sum of the positive roots
    RationalVector half(d.ambient_rank(), Rational(0));
    for (auto const& root : d.positive_roots()) {
      for (std::size_t k = 0; k < d.ambient_rank(); ++k) {
        half[k] += Rational(root.vector[k], 2);
      }
    }
    EXPECT_EQ(r, half) << name;
  }
}

TEST(RootDatum, NonFiniteTypeRejected) {
  SmallMatrix affine = SmallMatrix::from_rows({{2, -2}, {-2, 2}}, 2);
  try {
    RootDatum::from_cartan(affine, 2);
    FAIL() << "affine Cartan matrix accepted";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFiniteType);
  }
  SmallMatrix hyperbolic = SmallMatrix::from_rows({{2, -3}, {-2, 2}}, 2);
  EXPECT_THROW(RootDatum::from_cartan(hyperbolic, 2), Error);
}

TEST(RootDatum, ProductsAndLevis) {
  auto const d = RootDatum::named("A2xA1");
  EXPECT_EQ(d.rank(), 3u);
  EXPECT_EQ(WeylGroup(d).size(), 12u);
  auto const levi = RootDatum::named("A3").levi({0, 2});
  EXPECT_EQ(levi.rank(), 2u);
  EXPECT_EQ(WeylGroup(levi).size(), 4u);
}

TEST(WeylGroup, LengthEqualsInversionCount) {
  for (auto const* name : {"A3", "B3", "G2"}) {
    WeylGroup const w(RootDatum::named(name));
    for (std::size_t k = 0; k < w.size(); ++k) {
      EXPECT_EQ(w[k].length(), w.inversion_count(k)) << name << " " << word_to_string(w[k].word());
    }
    EXPECT_EQ(w.longest().length(), w.datum().positive_roots().size());
  }
}

TEST(WeylGroup, GroupLaws) {
  WeylGroup const w(RootDatum::named("B2"));
  for (std::size_t a = 0; a < w.size(); ++a) {
    EXPECT_EQ(w.multiply(a, w.inverse(a)), 0u);
    for (std::size_t b = 0; b < w.size(); ++b) {
      for (std::size_t c = 0; c < w.size(); ++c) {
        EXPECT_EQ(w.multiply(w.multiply(a, b), c), w.multiply(a, w.multiply(b, c)));
      }
    }
  }
}

TEST(WeylGroup, ReducedWordsOfLongestElement) {
  // A2: s1s2s1 = s2s1s2; B2: the two alternating words; A3: 16
  WeylGroup const a2(RootDatum::named("A2"));
  EXPECT_EQ(a2.reduced_words(a2.size() - 1).size(), 2u);
  WeylGroup const a3(RootDatum::named("A3"));
  EXPECT_EQ(a3.reduced_words(a3.size() - 1).size(), 16u);
  WeylGroup const b2(RootDatum::named("B2"));
  EXPECT_EQ(b2.reduced_words(b2.size() - 1).size(), 2u);
  for (auto const& word : a3.reduced_words(a3.size() - 1)) {
    EXPECT_EQ(WeylElement::from_word(a3.datum(), word), a3.longest());
  }
}

TEST(WeylGroup, CapRaisesGroupTooLarge) {
  try {
    WeylGroup(RootDatum::named("E6"), 1000);
    FAIL() << "cap ignored";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
  }
}

TEST(Cosets, A2LeftRepresentativesOfFirstRoot) {
  auto const reps = min_coset_reps(RootDatum::named("A2"), {0}, CosetSide::left);
  std::vector<std::string> words;
  for (auto const& w : reps) {
    words.push_back(word_to_string(w.word()));
  }
  EXPECT_EQ(words, (std::vector<std::string>{"e", "s2", "s1,s2"}));
}

TEST(Cosets, RepresentativesPartitionTheGroup) {
  for (auto const* name : {"A3", "B3", "G2"}) {
    WeylGroup const w(RootDatum::named(name));
    for (std::size_t mask = 0; mask < (std::size_t{1} << w.datum().rank()); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < w.datum().rank(); ++i) {
        if (mask & (std::size_t{1} << i)) {
          subset.push_back(i);
        }
      }
      auto const parabolic = w.parabolic(subset);
      for (auto side : {CosetSide::left, CosetSide::right}) {
        auto const            reps = min_coset_rep_indices(w, subset, side);
        std::set<std::size_t> covered;
        for (auto r : reps) {
          for (auto p : parabolic) {
            auto const x = side == CosetSide::left ? w.multiply(r, p) : w.multiply(p, r);
            EXPECT_TRUE(covered.insert(x).second) << name << " overlapping cosets";
            // the representative is the unique shortest element of its coset
            if (x != r) {
              EXPECT_LT(w[r].length(), w[x].length());
            }
          }
        }
        EXPECT_EQ(covered.size(), w.size()) << name;
      }
    }
  }
}

TEST(Words, ParseAndRender) {
  EXPECT_EQ(parse_word("e"), Word{});
  EXPECT_EQ(parse_word("s1,s2,s1"), (Word{0, 1, 0}));
  EXPECT_EQ(parse_word("1,2"), (Word{0, 1}));
  EXPECT_EQ(parse_word("s2s1"), (Word{1, 0}));
  EXPECT_EQ(word_to_string({0, 1, 0}), "s1,s2,s1");
  EXPECT_THROW(parse_word("s0"), Error);
  EXPECT_THROW(parse_word("x1"), Error);
}
