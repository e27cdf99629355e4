#pragma once

// Combinatorial shadow of the intertwining operators T_w on the
// asymptotic Mellin transforms, and the invariant degrees of W_X.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "orbitgraph.hpp"
#include "spherical.hpp"

namespace sphcomb {

  //! The space of Mellin symbols supported on one maximal-rank orbit.
  struct IntertwinerSymbol {
    std::string            orbit;
    std::optional<Integer> space_dim;

    friend bool operator==(IntertwinerSymbol const&, IntertwinerSymbol const&) = default;
  };

  struct CompositionResult {
    std::optional<IntertwinerSymbol> symbol;  // empty means the zero map

    bool is_zero() const noexcept {
      return !symbol.has_value();
    }
    std::string const& orbit() const {
      if (!symbol) {
        fail(ErrorKind::InvalidArgument, "the composite operator vanishes");
      }
      return symbol->orbit;
    }
  };

  //! T_{w_alpha} on a symbol supported on Y.
  inline CompositionResult compose_simple(OrbitGraph const& g, IntertwinerSymbol const& s, std::size_t root) {
    RootEdge const& e = g.edge_of(s.orbit, root);
    if (e.type != EdgeType::U && e.open != s.orbit) {
      fail(ErrorKind::NotMaximalRank,
           "orbit '" + s.orbit + "' is not of maximal rank in its P_alpha-orbit for s" + std::to_string(root + 1));
    }
    switch (e.type) {
      case EdgeType::G: return {};
      case EdgeType::N: return {s};
      case EdgeType::U:
      case EdgeType::T: return {IntertwinerSymbol{knop_simple(g, s.orbit, root), s.space_dim}};
    }
    return {};
  }

  //! T_w = T_{s_1} o ... o T_{s_k} on the symbol of the open orbit; the
  //! rightmost factor acts first.
  inline CompositionResult compose_word(OrbitGraph const& g, Word const& word,
                                        std::optional<Integer> space_dim = std::nullopt) {
    CompositionResult current{IntertwinerSymbol{g.open_id(), std::move(space_dim)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      current = compose_simple(g, *current.symbol, *it);
      if (current.is_zero()) {
        break;
      }
    }
    return current;
  }

  inline CompositionResult compose(OrbitGraph const& g, WeylElement const& w,
                                   std::optional<Integer> space_dim = std::nullopt) {
    return compose_word(g, w.word(), std::move(space_dim));
  }

  namespace detail {

    inline std::vector<std::size_t> nonvanishing_raw(OrbitGraph const& g, WeylGroup const& group) {
      std::vector<std::size_t> out;
      for (std::size_t k = 0; k < group.size(); ++k) {
        if (!compose(g, group[k]).is_zero()) {
          out.push_back(k);
        }
      }
      return out;
    }

  }  // namespace detail

  //! {w : T_w != 0}; checked against the minimal representatives of W/W_P(X).
  inline std::vector<std::size_t> nonvanishing_set(OrbitGraph const& g, SphericalInvariants const& inv) {
    auto got      = detail::nonvanishing_raw(g, *inv.group);
    auto expected = min_coset_rep_indices(*inv.group, inv.p_roots, CosetSide::left);
    if (got != expected) {
      fail(ErrorKind::Cor1Violation,
           "T_w is nonzero for " + std::to_string(got.size()) + " elements, but [W/W_P(X)] has "
               + std::to_string(expected.size()));
    }
    return got;
  }

  //! {w : T_w maps the open orbit to itself}; checked to equal W_X.
  inline std::vector<std::size_t> fixed_set(OrbitGraph const& g, SphericalInvariants const& inv) {
    std::vector<std::size_t> out;
    for (auto k : nonvanishing_set(g, inv)) {
      if (compose(g, inv.element(k)).orbit() == g.open_id()) {
        out.push_back(k);
      }
    }
    if (out != inv.little_weyl.elements) {
      fail(ErrorKind::Cor1Violation, "elements with T_w preserving the open orbit differ from W_X");
    }
    return out;
  }

  //! Every reduced word of every element gives the same composite.
  inline void check_reduced_word_independence(OrbitGraph const& g, WeylGroup const& group) {
    for (std::size_t k = 0; k < group.size(); ++k) {
      auto const reference = compose(g, group[k]);
      for (auto const& word : group.reduced_words(k)) {
        auto const other = compose_word(g, word);
        if (other.is_zero() != reference.is_zero()
            || (!other.is_zero() && other.orbit() != reference.orbit())) {
          fail(ErrorKind::Cor1Violation,
               "composite for " + word_to_string(word) + " depends on the reduced word");
        }
      }
    }
  }

  //! Generic rank of the Hecke module of asymptotic Mellin transforms,
  //! [N_W(a_X^*, rho) : W_X] * |H^1(k, A_X)|; agrees with the multiplicity.
  inline Integer hecke_generic_rank(OrbitGraph const& g, SphericalInvariants const& inv) {
    if (!inv.h1) {
      fail(ErrorKind::InvalidArgument, "the generic rank needs local field parameters");
    }
    auto const    fixed = fixed_set(g, inv);
    Integer const rank  = Integer(inv.normalizer.size() / fixed.size()) * *inv.h1;
    if (!inv.multiplicity || rank != *inv.multiplicity) {
      fail(ErrorKind::LemmaViolation, "Hecke generic rank differs from the multiplicity");
    }
    return rank;
  }

  namespace detail {

    //! det(I - t g) for a square matrix, via Faddeev-LeVerrier.
    inline std::vector<Rational> reversed_char_poly(RationalMatrix const& g) {
      std::size_t const     m = g.rows();
      std::vector<Rational> c(m + 1, Rational(0));
      c[0]             = 1;
      RationalMatrix acc(m, m);
      for (std::size_t k = 1; k <= m; ++k) {
        RationalMatrix next = g * acc;
        for (std::size_t i = 0; i < m; ++i) {
          next(i, i) += c[k - 1];
        }
        acc            = next;
        RationalMatrix gm = g * acc;
        Rational       tr = 0;
        for (std::size_t i = 0; i < m; ++i) {
          tr += gm(i, i);
        }
        c[k] = -tr / Rational(static_cast<long long>(k));
      }
      return c;
    }

    //! Coefficients of 1/p(t) up to t^n, for p(0) = 1.
    inline std::vector<Rational> invert_series(std::vector<Rational> const& p, std::size_t n) {
      std::vector<Rational> q(n + 1, Rational(0));
      q[0] = 1;
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 1; j < p.size() && j <= k; ++j) {
          q[k] -= p[j] * q[k - j];
        }
      }
      return q;
    }

  }  // namespace detail

  //! Molien series of W_X on a_X^* (x) Q written as prod 1/(1 - t^{d_i}).
  inline std::vector<std::size_t> invariant_degrees(SphericalInvariants const& inv) {
    SpanCoordinates const       span(inv.weights);
    std::size_t const           m = span.dim();
    std::vector<RationalMatrix> image;
    for (auto k : inv.little_weyl.elements) {
      auto r = span.restrict(inv.element(k).matrix());
      if (!r) {
        fail(ErrorKind::NotReflectionGroup, "W_X does not preserve a_X^*");
      }
      if (std::find(image.begin(), image.end(), *r) == image.end()) {
        image.push_back(std::move(*r));
      }
    }
    std::size_t reflections = 0;
    for (auto const& r : image) {
      auto diff = r;
      for (std::size_t i = 0; i < m; ++i) {
        diff(i, i) -= 1;
      }
      if (rank_over_q(diff) == 1) {
        ++reflections;
      }
    }

    std::size_t const     order = image.size();
    std::size_t const     top   = order + m + 1;
    std::vector<Rational> series(top + 1, Rational(0));
    for (auto const& r : image) {
      auto const q = detail::invert_series(detail::reversed_char_poly(r), top);
      for (std::size_t k = 0; k <= top; ++k) {
        series[k] += q[k];
      }
    }
    for (auto& c : series) {
      c /= Rational(static_cast<long long>(order));
    }

    std::vector<std::size_t> degrees;
    while (true) {
      std::size_t k = 1;
      while (k <= top && series[k] == 0) {
        ++k;
      }
      if (k > top) {
        break;
      }
      if (series[k] < 0 || denominator(series[k]) != 1 || degrees.size() == m) {
        fail(ErrorKind::NotReflectionGroup, "Molien series is not a product of 1/(1 - t^d)");
      }
      degrees.push_back(k);
      for (std::size_t j = top; j >= k; --j) {
        series[j] -= series[j - k];
      }
    }
    Integer     product = 1;
    std::size_t exponents = 0;
    for (auto d : degrees) {
      product *= d;
      exponents += d - 1;
    }
    if (degrees.size() != m || product != order || exponents != reflections) {
      fail(ErrorKind::NotReflectionGroup,
           "W_X acting on a_X^* is not generated by reflections (degrees do not match)");
    }
    return degrees;
  }

}  // namespace sphcomb
