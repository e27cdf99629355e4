#pragma once

// Invariants of a validated orbit graph: the little Weyl group, its
// normalizer, admissibility cosets, bad divisors and multiplicities.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "orbitgraph.hpp"
#include "rootdata.hpp"

namespace sphcomb {

  //! Coordinates of lattice vectors in the basis of L (x) Q.
  class SpanCoordinates {
   public:
    explicit SpanCoordinates(Sublattice const& l) : _basis(matrix_cast<Rational>(l.basis())) {
      RationalMatrix reduced = _basis;
      _pivots                = rref(reduced);
      std::size_t const m    = _pivots.size();
      RationalMatrix    s(m, m);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t t = 0; t < m; ++t) {
          s(t, a) = _basis(a, _pivots[t]);
        }
      }
      _solve = m == 0 ? s : inverse(s);
    }

    std::size_t dim() const noexcept {
      return _pivots.size();
    }

    std::optional<RationalVector> coordinates(RationalVector const& v) const {
      std::size_t const m = dim();
      RationalVector    c(m, Rational(0));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t t = 0; t < m; ++t) {
          c[a] += _solve(a, t) * v[_pivots[t]];
        }
      }
      RationalVector back(v.size(), Rational(0));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          back[j] += c[a] * _basis(a, j);
        }
      }
      if (back != v) {
        return std::nullopt;
      }
      return c;
    }

    //! Matrix of w on the span in the lattice basis; nullopt if the span is
    //! not w-stable.
    std::optional<RationalMatrix> restrict(SmallMatrix const& w) const {
      std::size_t const m = dim();
      RationalMatrix    r(m, m);
      WeylElement const g({}, w);
      for (std::size_t k = 0; k < m; ++k) {
        auto image = g.act(_basis.row(k));
        auto c     = coordinates(image);
        if (!c) {
          return std::nullopt;
        }
        for (std::size_t l = 0; l < m; ++l) {
          r(l, k) = (*c)[l];
        }
      }
      return r;
    }

   private:
    RationalMatrix           _basis;
    std::vector<std::size_t> _pivots;
    RationalMatrix           _solve;
  };

  //! An affine subspace shift + (direction (x) Q) of X(A) (x) Q.
  struct AffineCharacterCoset {
    RationalVector shift;
    Sublattice     direction;

    bool contains(RationalVector const& v) const {
      return direction.span_contains(sub(v, shift));
    }

    friend bool operator==(AffineCharacterCoset const& a, AffineCharacterCoset const& b) {
      return saturation(a.direction) == saturation(b.direction) && a.contains(b.shift);
    }
  };

  struct SphericalInvariants {
    std::shared_ptr<WeylGroup const> group;
    std::vector<std::size_t>         p_roots;      // Delta_P(X), 0-based
    WeylSubgroup                     stabilizer;   // W_(X)
    WeylSubgroup                     parabolic;    // W_P(X)
    WeylSubgroup                     little_weyl;  // W_X
    Sublattice                       weights;      // a_X^* = X(open orbit)
    std::vector<std::size_t>         normalizer;   // N_W(a_X^*, rho)
    std::optional<LocalFieldParams>  field;
    std::optional<Integer>           h1;
    std::optional<Integer>           multiplicity;

    std::size_t rank() const noexcept {
      return weights.rank();
    }
    std::size_t normalizer_index() const noexcept {
      return normalizer.size() / little_weyl.order();
    }
    WeylElement const& element(std::size_t k) const {
      return (*group)[k];
    }
  };

  namespace detail {

    inline std::vector<std::size_t> type_g_roots(OrbitGraph const& g) {
      std::vector<std::size_t> out;
      for (std::size_t a = 0; a < g.datum().rank(); ++a) {
        if (g.edge_of(g.open_id(), a).type == EdgeType::G) {
          out.push_back(a);
        }
      }
      return out;
    }

    inline void require_valid(OrbitGraph const& g) {
      auto report = validate(g);
      if (!report.pass) {
        std::string what = "orbit graph fails validation:";
        for (auto const& c : report.failed_checks()) {
          what += " " + c;
        }
        fail(ErrorKind::InvalidArgument, what);
      }
    }

  }  // namespace detail

  //! {w : w(a_X^* (x) Q) = a_X^* (x) Q and rho - w rho in a_X^* (x) Q}.
  inline std::vector<std::size_t> normalizer_of(WeylGroup const& group, Sublattice const& weights) {
    SpanCoordinates const span(weights);
    auto const            r = rho(group.datum());
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < group.size(); ++k) {
      auto const& w = group[k];
      if (span.restrict(w.matrix()) && span.coordinates(sub(r, w.act(r)))) {
        out.push_back(k);
      }
    }
    return out;
  }

  //! Requires a graph that passes validation.
  inline SphericalInvariants compute_invariants(OrbitGraph const&              g,
                                                std::optional<LocalFieldParams> field = std::nullopt,
                                                std::size_t                     cap   = default_group_cap) {
    detail::require_valid(g);
    SphericalInvariants inv;
    auto                group = std::make_shared<WeylGroup const>(g.datum(), cap);
    inv.group               = group;
    inv.p_roots             = detail::type_g_roots(g);
    inv.stabilizer          = stabilizer(g, g.open_id(), *group);
    inv.parabolic.elements  = group->parabolic(inv.p_roots);
    for (auto a : inv.p_roots) {
      inv.parabolic.generators.push_back(group->index_of_word({a}));
    }
    for (auto k : inv.parabolic.elements) {
      if (!inv.stabilizer.contains(k)) {
        fail(ErrorKind::StabilizerNotSemidirect,
             "W_P(X) element " + word_to_string((*group)[k].word()) + " does not stabilize the open orbit");
      }
    }
    for (auto k : inv.stabilizer.elements) {
      if (group->keeps_positive(k, inv.p_roots)) {
        inv.little_weyl.elements.push_back(k);
      }
    }
    if (inv.little_weyl.order() * inv.parabolic.order() != inv.stabilizer.order()
        || !closed_under_product(*group, inv.little_weyl.elements)) {
      fail(ErrorKind::StabilizerNotSemidirect,
           "W_(X) of order " + std::to_string(inv.stabilizer.order())
               + " is not W_X x| W_P(X) with |W_P(X)| = " + std::to_string(inv.parabolic.order()));
    }
    inv.little_weyl.generators = greedy_generators(*group, inv.little_weyl.elements);
    inv.weights                = g.open_node().lattice;
    inv.normalizer             = normalizer_of(*group, inv.weights);
    for (auto k : inv.little_weyl.elements) {
      if (!std::binary_search(inv.normalizer.begin(), inv.normalizer.end(), k)) {
        fail(ErrorKind::StabilizerNotSemidirect,
             "W_X element " + word_to_string((*group)[k].word()) + " does not normalize (a_X^*, rho)");
      }
    }
    if (field) {
      inv.field        = field;
      inv.h1           = rational_orbit_count(g, g.open_id(), *field);
      inv.multiplicity = Integer(inv.normalizer_index()) * *inv.h1;
    }
    return inv;
  }

  //! Reflections of W_X acting on a_X^* (x) Q, as element indices.
  inline std::vector<std::size_t> reflections_in(SphericalInvariants const& inv) {
    SpanCoordinates const    span(inv.weights);
    std::vector<std::size_t> out;
    for (auto k : inv.little_weyl.elements) {
      auto r = *span.restrict(inv.element(k).matrix());
      for (std::size_t i = 0; i < r.rows(); ++i) {
        r(i, i) -= 1;
      }
      if (rank_over_q(r) == 1) {
        out.push_back(k);
      }
    }
    return out;
  }

  //! The coset -rho_w + w a_X^* attached to the maximal-rank orbit ^wX.
  inline AffineCharacterCoset admissible_coset(OrbitGraph const& g, SphericalInvariants const& inv,
                                               std::string const& id) {
    if (!g.is_maximal_rank(id)) {
      fail(ErrorKind::NotMaximalRank, "orbit '" + id + "' is not of maximal rank");
    }
    auto const                          minus_rho = scale(rho(g.datum()), Rational(-1));
    std::optional<AffineCharacterCoset> found;
    for (auto k : min_coset_rep_indices(*inv.group, inv.p_roots, CosetSide::left)) {
      auto const& w = inv.element(k);
      if (knop_apply(g, g.open_id(), w) != id) {
        continue;
      }
      AffineCharacterCoset c{w.act(minus_rho), transport(w, inv.weights)};
      if (!found) {
        found = std::move(c);
      } else if (!(*found == c)) {
        fail(ErrorKind::LemmaViolation,
             "two Weyl elements reaching '" + id + "' give different admissibility cosets");
      }
    }
    if (!found) {
      fail(ErrorKind::LemmaViolation, "maximal-rank orbit '" + id + "' is not in the W-orbit of the open orbit");
    }
    return *found;
  }

  struct BadDivisors {
    std::vector<SmallVector> r_containments;  // -rho + a_X^* inside R_beta
    std::vector<SmallVector> q_containments;  // -rho + a_X^* inside Q_beta
  };

  //! For every coroot beta: does <-rho + v, beta> vanish (R) or equal -1 (Q)
  //! identically on a_X^*? Only the coroots of Delta_P(X) may do either.
  inline BadDivisors bad_divisors(OrbitGraph const& g, SphericalInvariants const& inv) {
    auto const& d         = g.datum();
    auto const  minus_rho = scale(rho(d), Rational(-1));
    BadDivisors out;
    for (auto const& root : d.positive_roots()) {
      for (int sign : {1, -1}) {
        SmallVector coroot = root.coroot;
        for (auto& x : coroot) {
          x *= sign;
        }
        if (inv.weights.pairs_nontrivially(coroot)) {
          continue;
        }
        Rational c = 0;
        for (std::size_t j = 0; j < coroot.size(); ++j) {
          c += minus_rho[j] * coroot[j];
        }
        if (c == 0) {
          out.r_containments.push_back(coroot);
        } else if (c == -1) {
          out.q_containments.push_back(coroot);
        }
      }
    }
    std::vector<SmallVector> expected;
    for (auto a : inv.p_roots) {
      expected.push_back(d.simple_coroot(a));
    }
    auto got = out.q_containments;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (!out.r_containments.empty() || got != expected) {
      fail(ErrorKind::LemmaViolation,
           "bad divisors containing -rho + a_X^* are not exactly the Q-divisors of Delta_P(X)");
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // Builders
  // ---------------------------------------------------------------------------

  //! "e" or concatenated letters such as "s1s2".
  inline std::string word_label(Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (auto i : w) {
      out += "s" + std::to_string(i + 1);
    }
    return out;
  }

  enum class Sl2Case { G, T_split, T_nonsplit, N, U };

  inline std::string_view to_string(Sl2Case c) noexcept {
    switch (c) {
      case Sl2Case::G: return "G";
      case Sl2Case::T_split: return "T_split";
      case Sl2Case::T_nonsplit: return "T_nonsplit";
      case Sl2Case::N: return "N";
      case Sl2Case::U: return "U";
    }
    return "?";
  }

  //! Every root has type G at a single orbit with trivial characters.
  inline OrbitGraph build_point(RootDatum const& d) {
    OrbitNode              n{"open", Sublattice::zero(d.ambient_rank()), 0, true, "G"};
    std::vector<RootEdge> edges;
    for (std::size_t a = 0; a < d.rank(); ++a) {
      edges.push_back({a, EdgeType::G, "open", {}});
    }
    return OrbitGraph(d, {n}, edges, "open");
  }

  //! The five homogeneous PGL_2-varieties, on X(A) = Z with alpha = 2.
  inline OrbitGraph build_sl2(Sl2Case c) {
    auto const d  = RootDatum::named("A1");
    auto const lz = [](long m) { return Sublattice::from_rows(1, {IntVector{Integer(m)}}); };
    auto const z0 = Sublattice::zero(1);
    switch (c) {
      case Sl2Case::G: return build_point(d);
      case Sl2Case::T_split:
      case Sl2Case::T_nonsplit: {
        bool const split = c == Sl2Case::T_split;
        return OrbitGraph(d,
                          {{"open", lz(2), 2, true, "G"},
                           {"closed1", z0, 1, split, "G"},
                           {"closed2", z0, 1, split, "G"}},
                          {{0, EdgeType::T, "open", {"closed1", "closed2"}}}, "open");
      }
      case Sl2Case::N:
        return OrbitGraph(d, {{"open", lz(4), 2, true, "G"}, {"closed", z0, 1, true, "G"}},
                          {{0, EdgeType::N, "open", {"closed"}}}, "open");
      case Sl2Case::U:
        return OrbitGraph(d, {{"open", lz(1), 2, true, "G"}, {"closed", lz(1), 1, true, "G"}},
                          {{0, EdgeType::U, "open", {"closed"}}}, "open");
    }
    fail(ErrorKind::InvalidArgument, "unknown PGL_2 case");
  }

  //! G as a G x G-variety: Bruhat cells BwB, X(BwB) = {(chi, -w^{-1} chi)}.
  inline OrbitGraph build_group_case(RootDatum const& d, std::size_t cap = default_group_cap) {
    WeylGroup const   group(d, cap);
    auto const        doubled = RootDatum::product(d, d);
    std::size_t const n       = d.ambient_rank();
    std::size_t const r       = d.rank();

    std::vector<OrbitNode> nodes;
    for (std::size_t k = 0; k < group.size(); ++k) {
      auto const inv = group[group.inverse(k)];
      IntMatrix  gens(0, 2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        SmallVector e(n, 0);
        e[i]      = 1;
        auto   m  = inv.act(e);
        IntVector row(2 * n, Integer(0));
        row[i] = 1;
        for (std::size_t j = 0; j < n; ++j) {
          row[n + j] = -m[j];
        }
        gens.append_row(row);
      }
      nodes.push_back({word_label(group[k].word()), Sublattice(2 * n, gens), group[k].length(), true, "G"});
    }
    std::vector<RootEdge> edges;
    for (std::size_t k = 0; k < group.size(); ++k) {
      for (std::size_t a = 0; a < r; ++a) {
        auto const s = group.index_of_word({a});
        for (auto [root, other] : {std::pair{a, group.multiply(s, k)}, std::pair{r + a, group.multiply(k, s)}}) {
          if (group[other].length() > group[k].length()) {
            edges.push_back({root, EdgeType::U, nodes[other].id, {nodes[k].id}});
          }
        }
      }
    }
    std::sort(edges.begin(), edges.end(), [](auto const& x, auto const& y) {
      return std::tie(x.root, x.open) < std::tie(y.root, y.open);
    });
    return OrbitGraph(doubled, nodes, edges, word_label(group.longest().word()));
  }

  //! G/U: B-orbits B w B/U with full character lattice.
  inline OrbitGraph build_horospherical_full(RootDatum const& d, std::size_t cap = default_group_cap) {
    WeylGroup const        group(d, cap);
    std::vector<OrbitNode> nodes;
    for (std::size_t k = 0; k < group.size(); ++k) {
      nodes.push_back({word_label(group[k].word()), Sublattice::full(d.ambient_rank()), group[k].length(),
                       true, "G"});
    }
    std::vector<RootEdge> edges;
    for (std::size_t a = 0; a < d.rank(); ++a) {
      auto const s = group.index_of_word({a});
      for (std::size_t k = 0; k < group.size(); ++k) {
        auto const other = group.multiply(k, s);
        if (group[other].length() > group[k].length()) {
          edges.push_back({a, EdgeType::U, nodes[other].id, {nodes[k].id}});
        }
      }
    }
    return OrbitGraph(d, nodes, edges, word_label(group.longest().word()));
  }

  //! Map from character lattices of an inner graph on the Levi of p_roots to
  //! sublattices of X(A).
  class LeviEmbedding {
   public:
    LeviEmbedding(RootDatum const& inner, RootDatum const& ambient, std::vector<std::size_t> p_roots)
        : _ambient(ambient), _p(std::move(p_roots)) {
      if (inner.rank() != _p.size()) {
        fail(ErrorKind::InductionInconsistent,
             "inner datum has " + std::to_string(inner.rank()) + " simple roots but "
                 + std::to_string(_p.size()) + " Levi roots were given");
      }
      for (auto i : _p) {
        ambient.check_root_index(i);
      }
      for (std::size_t i = 0; i < _p.size(); ++i) {
        for (std::size_t j = 0; j < _p.size(); ++j) {
          if (inner.cartan()(i, j) != ambient.cartan()(_p[i], _p[j])) {
            fail(ErrorKind::InductionInconsistent, "inner Cartan matrix is not the Levi submatrix");
          }
        }
      }
      if (inner == ambient.levi(_p)) {
        _same_lattice = true;
        return;
      }
      if (inner.ambient_rank() != inner.rank()) {
        fail(ErrorKind::InductionInconsistent,
             "inner datum must either be the Levi sub-datum of X(A) or semisimple of full rank");
      }
      SmallMatrix pair(inner.rank(), inner.rank());
      for (std::size_t i = 0; i < inner.rank(); ++i) {
        for (std::size_t j = 0; j < inner.rank(); ++j) {
          pair(i, j) = inner.simple_coroot(i)[j];
        }
      }
      if (rank_over_q(matrix_cast<Rational>(pair)) != inner.rank()) {
        fail(ErrorKind::InductionInconsistent, "inner coroots are linearly dependent");
      }
      _inner_coroots = inner.simple_coroots();
    }

    bool same_lattice() const noexcept {
      return _same_lattice;
    }

    //! Identity in the Levi case; otherwise the characters of A whose
    //! pairings with the Levi coroots are those of some element of L.
    Sublattice operator()(Sublattice const& l) const {
      if (_same_lattice) {
        return l;
      }
      std::size_t const n = _ambient.ambient_rank();
      std::size_t const r = _p.size();
      IntMatrix         graph(0, n + r);
      IntMatrix         target(0, n + r);
      for (std::size_t k = 0; k < n; ++k) {
        IntVector g(n + r, Integer(0)), t(n + r, Integer(0));
        g[k] = t[k] = 1;
        for (std::size_t i = 0; i < r; ++i) {
          g[n + i] = _ambient.simple_coroot(_p[i])[k];
        }
        graph.append_row(g);
        target.append_row(t);
      }
      for (auto const& v : l.rows()) {
        IntVector t(n + r, Integer(0));
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            t[n + i] += v[j] * _inner_coroots[i][j];
          }
        }
        target.append_row(t);
      }
      auto      meet = intersection(Sublattice(n + r, graph), Sublattice(n + r, target));
      IntMatrix proj(0, n);
      for (auto const& v : meet.rows()) {
        proj.append_row(IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)));
      }
      return Sublattice(n, proj);
    }

   private:
    RootDatum                _ambient;
    std::vector<std::size_t> _p;
    bool                     _same_lattice = false;
    std::vector<SmallVector> _inner_coroots;
  };

  //! The inner graph rewritten over the Levi sub-datum of X(A).
  inline OrbitGraph embed_graph(OrbitGraph const& inner, RootDatum const& ambient,
                                std::vector<std::size_t> const& p_roots) {
    LeviEmbedding const    embed(inner.datum(), ambient, p_roots);
    std::vector<OrbitNode> nodes = inner.nodes();
    for (auto& n : nodes) {
      n.lattice = embed(n.lattice);
    }
    return OrbitGraph(ambient.levi(p_roots), nodes, inner.edges(), inner.open_id());
  }

  //! Orbit graph of X = X' x^{P^-} G for a spherical M-variety X' given by
  //! its graph on the Levi of p_roots. Nodes are pairs (Y', w) with w minimal
  //! in W_P w; inner root i corresponds to ambient root p_roots[i].
  inline OrbitGraph build_parabolic_induction(OrbitGraph const& inner, std::vector<std::size_t> p_roots,
                                              RootDatum const& ambient, std::size_t cap = default_group_cap) {
    if (!validate(inner).pass) {
      fail(ErrorKind::InductionInconsistent, "inner orbit graph fails validation");
    }
    std::sort(p_roots.begin(), p_roots.end());
    if (std::adjacent_find(p_roots.begin(), p_roots.end()) != p_roots.end()) {
      fail(ErrorKind::InductionInconsistent, "repeated Levi root");
    }
    LeviEmbedding const embed(inner.datum(), ambient, p_roots);
    WeylGroup const     group(ambient, cap);
    auto const          reps = min_coset_rep_indices(group, p_roots, CosetSide::right);
    std::size_t         top  = 0;
    for (auto k : reps) {
      top = std::max(top, group[k].length());
    }
    auto const id_of = [&](std::string const& inner_id, std::size_t k) {
      return inner_id + "|" + word_label(group[k].word());
    };

    std::vector<OrbitNode> nodes;
    for (auto const& n : inner.nodes()) {
      auto const lifted = embed(n.lattice);
      for (auto k : reps) {
        nodes.push_back({id_of(n.id, k), transport(group[group.inverse(k)], lifted),
                         n.dim + top - group[k].length(), n.rational, n.g_orbit});
      }
    }

    std::vector<RootEdge> edges;
    for (std::size_t a = 0; a < ambient.rank(); ++a) {
      auto const s = group.index_of_word({a});
      for (auto k : reps) {
        auto const image = group[k].act(ambient.simple_root(a));
        auto const beta  = ambient.simple_index(image);
        auto const pos   = beta ? std::find(p_roots.begin(), p_roots.end(), *beta) : p_roots.end();
        if (pos != p_roots.end()) {
          auto const j = static_cast<std::size_t>(pos - p_roots.begin());
          for (auto const& e : inner.edges()) {
            if (e.root != j) {
              continue;
            }
            RootEdge lifted{a, e.type, id_of(e.open, k), {}};
            for (auto const& c : e.closed) {
              lifted.closed.push_back(id_of(c, k));
            }
            edges.push_back(std::move(lifted));
          }
          continue;
        }
        auto const other = group.multiply(k, s);
        if (!std::binary_search(reps.begin(), reps.end(), other)) {
          fail(ErrorKind::InductionInconsistent,
               "w s_alpha left the minimal coset representatives for w = " + word_to_string(group[k].word()));
        }
        if (group[other].length() < group[k].length()) {
          for (auto const& n : inner.nodes()) {
            edges.push_back({a, EdgeType::U, id_of(n.id, other), {id_of(n.id, k)}});
          }
        }
      }
    }

    OrbitGraph out(ambient, nodes, edges, id_of(inner.open_id(), 0));
    auto       report = validate(out);
    if (!report.pass) {
      std::string what = "induced graph fails validation:";
      for (auto const& c : report.failed_checks()) {
        what += " " + c;
      }
      fail(ErrorKind::InductionInconsistent, what);
    }
    return out;
  }

}  // namespace sphcomb
