#pragma once

// Typed Borel-orbit graphs, the Weyl group action they carry, and the
// validator that checks them against the structure theory of spherical
// varieties.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "rootdata.hpp"

namespace sphcomb {

  //! Image of a point stabilizer of P_alpha in PGL_2.
  enum class EdgeType { G, U, T, N };

  constexpr std::string_view to_string(EdgeType t) noexcept {
    switch (t) {
      case EdgeType::G: return "G";
      case EdgeType::U: return "U";
      case EdgeType::T: return "T";
      case EdgeType::N: return "N";
    }
    return "?";
  }

  inline EdgeType edge_type_from_string(std::string_view s) {
    if (s == "G") return EdgeType::G;
    if (s == "U") return EdgeType::U;
    if (s == "T") return EdgeType::T;
    if (s == "N") return EdgeType::N;
    fail(ErrorKind::ParseError, "unknown edge type '" + std::string(s) + "'");
  }

  //! Number of closed members each edge type carries.
  constexpr std::size_t closed_member_count(EdgeType t) noexcept {
    switch (t) {
      case EdgeType::G: return 0;
      case EdgeType::T: return 2;
      default: return 1;
    }
  }

  struct OrbitNode {
    std::string id;
    Sublattice  lattice;  // X(Y) inside X(A)
    std::size_t dim = 0;
    bool        rational = true;
    std::string g_orbit;

    std::size_t rank() const noexcept {
      return lattice.rank();
    }

    friend bool operator==(OrbitNode const&, OrbitNode const&) = default;
  };

  //! One P_alpha-orbit: its open B-orbit and the closed ones below it. For
  //! type G the open member is the only member.
  struct RootEdge {
    std::size_t              root = 0;
    EdgeType                 type = EdgeType::G;
    std::string              open;
    std::vector<std::string> closed;

    std::vector<std::string> members() const {
      std::vector<std::string> m{open};
      m.insert(m.end(), closed.begin(), closed.end());
      return m;
    }

    friend bool operator==(RootEdge const&, RootEdge const&) = default;
  };

  class OrbitGraph {
   public:
    OrbitGraph() = default;

    OrbitGraph(RootDatum datum, std::vector<OrbitNode> nodes, std::vector<RootEdge> edges,
               std::string open_id)
        : _datum(std::move(datum)),
          _nodes(std::move(nodes)),
          _edges(std::move(edges)),
          _open(std::move(open_id)) {
      for (std::size_t k = 0; k < _nodes.size(); ++k) {
        _by_id.emplace(_nodes[k].id, k);
      }
      for (std::size_t e = 0; e < _edges.size(); ++e) {
        for (auto const& m : _edges[e].members()) {
          if (auto k = find(m)) {
            _membership[{*k, _edges[e].root}].push_back(e);
          }
        }
      }
    }

    RootDatum const& datum() const noexcept {
      return _datum;
    }
    std::vector<OrbitNode> const& nodes() const noexcept {
      return _nodes;
    }
    std::vector<RootEdge> const& edges() const noexcept {
      return _edges;
    }
    std::string const& open_id() const noexcept {
      return _open;
    }

    std::optional<std::size_t> find(std::string const& id) const {
      auto it = _by_id.find(id);
      if (it == _by_id.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::size_t index(std::string const& id) const {
      auto k = find(id);
      if (!k) {
        fail(ErrorKind::InvalidArgument, "unknown orbit id '" + id + "'");
      }
      return *k;
    }

    OrbitNode const& node(std::string const& id) const {
      return _nodes[index(id)];
    }
    OrbitNode const& open_node() const {
      return node(_open);
    }

    //! Edges of the given root containing the node; exactly one in a valid graph.
    std::vector<std::size_t> const& memberships(std::size_t node_index, std::size_t root) const {
      static std::vector<std::size_t> const none;
      auto it = _membership.find({node_index, root});
      return it == _membership.end() ? none : it->second;
    }

    RootEdge const& edge_of(std::string const& id, std::size_t root) const {
      _datum.check_root_index(root);
      auto const& m = memberships(index(id), root);
      if (m.size() != 1) {
        fail(ErrorKind::InvalidArgument,
             "orbit '" + id + "' lies in " + std::to_string(m.size()) + " edges for root s"
                 + std::to_string(root + 1));
      }
      return _edges[m.front()];
    }

    std::size_t max_rank() const {
      std::size_t r = 0;
      for (auto const& n : _nodes) {
        r = std::max(r, n.rank());
      }
      return r;
    }

    bool is_maximal_rank(std::string const& id) const {
      return node(id).rank() == max_rank();
    }

    std::vector<std::string> maximal_rank_ids() const {
      std::vector<std::string> out;
      auto const               r = max_rank();
      for (auto const& n : _nodes) {
        if (n.rank() == r) {
          out.push_back(n.id);
        }
      }
      return out;
    }

    friend bool operator==(OrbitGraph const& a, OrbitGraph const& b) {
      return a._datum == b._datum && a._datum.name() == b._datum.name() && a._nodes == b._nodes
             && a._edges == b._edges && a._open == b._open;
    }

   private:
    RootDatum                                                          _datum;
    std::vector<OrbitNode>                                             _nodes;
    std::vector<RootEdge>                                              _edges;
    std::string                                                        _open;
    std::map<std::string, std::size_t>                                 _by_id;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> _membership;
  };

  //! The simple reflection w_alpha acting on the B-orbits of one P_alpha-orbit.
  inline std::string knop_simple(OrbitGraph const& g, std::string const& id, std::size_t root) {
    RootEdge const& e = g.edge_of(id, root);
    switch (e.type) {
      case EdgeType::G:
      case EdgeType::N: return id;
      case EdgeType::U: return id == e.open ? e.closed.at(0) : e.open;
      case EdgeType::T:
        if (id == e.open) {
          return id;
        }
        return id == e.closed.at(0) ? e.closed.at(1) : e.closed.at(0);
    }
    return id;
  }

  //! Left action ^wY := Y^{w^{-1}}: the letters of w act from right to left.
  inline std::string knop_apply_word(OrbitGraph const& g, std::string const& id, Word const& word) {
    if (word.size() > 1 && !g.is_maximal_rank(id)) {
      fail(ErrorKind::NotMaximalRank,
           "composite Knop action is only defined here on orbits of maximal rank, '" + id
               + "' has rank " + std::to_string(g.node(id).rank()));
    }
    std::string current = id;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      current = knop_simple(g, current, *it);
    }
    return current;
  }

  inline std::string knop_apply(OrbitGraph const& g, std::string const& id, WeylElement const& w) {
    return knop_apply_word(g, id, w.word());
  }

  //! A subgroup of an enumerated Weyl group, by element indices.
  struct WeylSubgroup {
    std::vector<std::size_t> elements;
    std::vector<std::size_t> generators;

    std::size_t order() const noexcept {
      return elements.size();
    }
    bool contains(std::size_t k) const {
      return std::binary_search(elements.begin(), elements.end(), k);
    }
  };

  //! Closure of a set of elements under multiplication.
  inline std::vector<std::size_t> generate_subgroup(WeylGroup const&                group,
                                                    std::vector<std::size_t> const& gens) {
    std::set<std::size_t>    seen{0};
    std::vector<std::size_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto g : gens) {
        auto p = group.multiply(queue[head], g);
        if (seen.insert(p).second) {
          queue.push_back(p);
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  //! Greedy generating set taken in ShortLex order.
  inline std::vector<std::size_t> greedy_generators(WeylGroup const&                group,
                                                    std::vector<std::size_t> const& elements) {
    std::vector<std::size_t> gens;
    std::vector<std::size_t> span{0};
    for (auto k : elements) {
      if (!std::binary_search(span.begin(), span.end(), k)) {
        gens.push_back(k);
        span = generate_subgroup(group, gens);
      }
    }
    return gens;
  }

  inline bool closed_under_product(WeylGroup const& group, std::vector<std::size_t> const& elements) {
    for (auto a : elements) {
      for (auto b : elements) {
        if (!std::binary_search(elements.begin(), elements.end(), group.multiply(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  //! {w in W : ^wY = Y}.
  inline WeylSubgroup stabilizer(OrbitGraph const& g, std::string const& id, WeylGroup const& group) {
    if (!g.is_maximal_rank(id)) {
      fail(ErrorKind::NotMaximalRank, "stabilizer requested for '" + id + "' below maximal rank");
    }
    WeylSubgroup s;
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (knop_apply(g, id, group[k]) == id) {
        s.elements.push_back(k);
      }
    }
    if (!closed_under_product(group, s.elements)) {
      fail(ErrorKind::InvalidArgument, "Knop stabilizer of '" + id + "' is not closed under products");
    }
    s.generators = greedy_generators(group, s.elements);
    return s;
  }

  inline WeylSubgroup stabilizer(OrbitGraph const& g, std::string const& id,
                                 std::size_t cap = default_group_cap) {
    return stabilizer(g, id, WeylGroup(g.datum(), cap));
  }

  //! Number of B(k)-orbits in the k-points of a rational B-orbit: |H^1(k, A_Y)|.
  inline Integer rational_orbit_count(OrbitGraph const& g, std::string const& id,
                                      LocalFieldParams const& field) {
    auto const& n = g.node(id);
    if (!n.rational) {
      fail(ErrorKind::NotRational, "orbit '" + id + "' has no k-point");
    }
    return h1_order(quotient_invariants(g.datum().ambient_rank(), n.lattice).torsion, field);
  }

  // ---------------------------------------------------------------------------
  // Validation
  // ---------------------------------------------------------------------------

  enum class Severity { error, warning };

  struct Finding {
    std::string              check;
    Severity                 severity = Severity::error;
    std::string              message;
    std::vector<std::string> ids;
  };

  struct ValidationReport {
    bool                 pass = true;
    std::vector<Finding> findings;

    bool has(std::string_view check) const {
      return std::any_of(findings.begin(), findings.end(), [&](auto const& f) {
        return f.check == check && f.severity == Severity::error;
      });
    }

    std::vector<std::string> failed_checks() const {
      std::set<std::string> s;
      for (auto const& f : findings) {
        if (f.severity == Severity::error) {
          s.insert(f.check);
        }
      }
      return {s.begin(), s.end()};
    }
  };

  inline std::string render(Finding const& f) {
    std::string out = f.check + (f.severity == Severity::error ? " error: " : " warning: ") + f.message;
    if (!f.ids.empty()) {
      out += " [";
      for (std::size_t i = 0; i < f.ids.size(); ++i) {
        out += (i ? ", " : "") + f.ids[i];
      }
      out += "]";
    }
    return out;
  }

  namespace detail {

    class Validator {
     public:
      explicit Validator(OrbitGraph const& g) : _g(g), _d(g.datum()) {}

      ValidationReport run() {
        check_structure();
        if (_report.has("V1")) {
          _report.pass = false;
          return std::move(_report);
        }
        check_dims();
        check_character_relations();
        check_rank_stability();
        check_braid_relations();
        check_nondegeneracy();
        check_rationality();
        check_g_orbits();
        check_open_node();
        check_levi();
        _report.pass = _report.failed_checks().empty();
        return std::move(_report);
      }

     private:
      void error(std::string check, std::string message, std::vector<std::string> ids = {}) {
        _report.findings.push_back({std::move(check), Severity::error, std::move(message), std::move(ids)});
      }

      static std::string root_name(std::size_t r) {
        return "s" + std::to_string(r + 1);
      }

      // V1: every (node, root) pair lies in exactly one well-formed edge.
      void check_structure() {
        std::set<std::string> ids;
        for (auto const& n : _g.nodes()) {
          if (n.id.empty()) {
            error("V1", "node with empty id");
          }
          if (!ids.insert(n.id).second) {
            error("V1", "duplicate node id", {n.id});
          }
          if (n.lattice.ambient_rank() != _d.ambient_rank()) {
            error("V1", "character lattice lives in rank " + std::to_string(n.lattice.ambient_rank())
                            + " but the ambient rank is " + std::to_string(_d.ambient_rank()),
                  {n.id});
          }
        }
        if (!_g.find(_g.open_id())) {
          error("V1", "open orbit id does not name a node", {_g.open_id()});
        }
        for (auto const& e : _g.edges()) {
          if (e.root >= _d.rank()) {
            error("V1", "edge refers to a root index outside 1.." + std::to_string(_d.rank()), e.members());
            continue;
          }
          if (e.closed.size() != closed_member_count(e.type)) {
            error("V1",
                  "type " + std::string(to_string(e.type)) + " edge for " + root_name(e.root) + " needs "
                      + std::to_string(closed_member_count(e.type)) + " closed members, has "
                      + std::to_string(e.closed.size()),
                  e.members());
          }
          auto                  members = e.members();
          std::set<std::string> distinct(members.begin(), members.end());
          if (distinct.size() != members.size()) {
            error("V1", "edge for " + root_name(e.root) + " repeats a member", members);
          }
          for (auto const& m : members) {
            if (!_g.find(m)) {
              error("V1", "edge for " + root_name(e.root) + " names an unknown orbit", {m});
            }
          }
        }
        for (std::size_t k = 0; k < _g.nodes().size(); ++k) {
          for (std::size_t r = 0; r < _d.rank(); ++r) {
            auto count = _g.memberships(k, r).size();
            if (count != 1) {
              error("V1",
                    "orbit lies in " + std::to_string(count) + " edges for " + root_name(r)
                        + " (expected exactly one)",
                    {_g.nodes()[k].id});
            }
          }
        }
      }

      // V2: raising increases the dimension by exactly one.
      void check_dims() {
        for (auto const& e : _g.edges()) {
          auto const open_dim = _g.node(e.open).dim;
          for (auto const& c : e.closed) {
            if (_g.node(c).dim + 1 != open_dim) {
              error("V2",
                    "type " + std::string(to_string(e.type)) + " edge for " + root_name(e.root)
                        + ": open orbit has dim " + std::to_string(open_dim) + ", closed orbit has dim "
                        + std::to_string(_g.node(c).dim),
                    {e.open, c});
            }
          }
        }
      }

      // V3: relations between the character groups of one P_alpha-orbit.
      void check_character_relations() {
        for (auto const& e : _g.edges()) {
          auto const  s    = WeylElement::from_word(_d, {e.root});
          auto const& open = _g.node(e.open).lattice;
          std::string where = " (" + root_name(e.root) + ")";
          switch (e.type) {
            case EdgeType::G:
              if (!open.fixed_by(s.matrix())) {
                error("V3", "type G: X(Y) is not fixed by the reflection" + where, {e.open});
              }
              break;
            case EdgeType::U:
              if (transport(s, _g.node(e.closed[0]).lattice) != open) {
                error("V3", "type U: w_alpha X(Z) differs from X(Y)" + where, e.members());
              }
              break;
            case EdgeType::T: {
              auto const& z1 = _g.node(e.closed[0]).lattice;
              auto const& z2 = _g.node(e.closed[1]).lattice;
              if (transport(s, z1) != z2) {
                error("V3", "type T: w_alpha X(Z1) differs from X(Z2)" + where, e.members());
              }
              for (auto const* z : {&z1, &z2}) {
                if (!open.contains(*z) || z->rank() + 1 != open.rank()) {
                  error("V3", "type T: closed lattice is not a corank-one sublattice of X(Y)" + where,
                        e.members());
                  break;
                }
              }
              break;
            }
            case EdgeType::N:
              if (!open.contains(transport(s, _g.node(e.closed[0]).lattice))) {
                error("V3", "type N: w_alpha X(Z) is not contained in X(Y)" + where, e.members());
              }
              break;
          }
        }
      }

      // V4: orbits of maximal rank are permuted among themselves.
      void check_rank_stability() {
        auto const r = _g.max_rank();
        for (auto const& id : _g.maximal_rank_ids()) {
          for (std::size_t a = 0; a < _d.rank(); ++a) {
            auto image = knop_simple(_g, id, a);
            if (_g.node(image).rank() != r) {
              error("V4", root_name(a) + " moves a maximal-rank orbit to rank "
                              + std::to_string(_g.node(image).rank()),
                    {id, image});
            }
          }
        }
      }

      // V5: braid relations on the maximal-rank orbits.
      void check_braid_relations() {
        auto const ids = _g.maximal_rank_ids();
        for (std::size_t i = 0; i < _d.rank(); ++i) {
          for (std::size_t j = i + 1; j < _d.rank(); ++j) {
            auto const m = _d.coxeter_entry(i, j);
            Word       lhs, rhs;
            for (std::size_t k = 0; k < m; ++k) {
              lhs.push_back(k % 2 == 0 ? i : j);
              rhs.push_back(k % 2 == 0 ? j : i);
            }
            for (auto const& id : ids) {
              std::string a = id, b = id;
              for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
                a = knop_simple(_g, a, *it);
              }
              for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) {
                b = knop_simple(_g, b, *it);
              }
              if (a != b) {
                error("V5",
                      "braid relation " + word_to_string(lhs) + " = " + word_to_string(rhs)
                          + " fails",
                      {id, a, b});
              }
            }
          }
        }
      }

      // V6: non-degeneracy for roots that do not raise Y or raise it of type U.
      void check_nondegeneracy() {
        for (auto const& e : _g.edges()) {
          if (e.type == EdgeType::G) {
            continue;
          }
          std::vector<std::string> subject{e.open};
          if (e.type == EdgeType::U) {
            subject.push_back(e.closed[0]);
          }
          for (auto const& id : subject) {
            if (!_g.node(id).lattice.pairs_nontrivially(_d.simple_coroot(e.root))) {
              error("V6",
                    "every character of the orbit is orthogonal to the coroot of " + root_name(e.root)
                        + " although the edge has type " + std::string(to_string(e.type)),
                    {id});
            }
          }
        }
      }

      // V7: rationality is preserved by the action and by raising.
      void check_rationality() {
        auto const r = _g.max_rank();
        for (auto const& n : _g.nodes()) {
          if (n.rank() == r && !n.rational) {
            error("V7", "orbit of maximal rank has no k-point", {n.id});
          }
          if (!n.rational) {
            continue;
          }
          for (std::size_t a = 0; a < _d.rank(); ++a) {
            auto const& e     = _g.edge_of(n.id, a);
            auto        image = knop_simple(_g, n.id, a);
            if (!_g.node(image).rational) {
              error("V7", root_name(a) + " maps a rational orbit to a non-rational one", {n.id, image});
            }
            if (e.open != n.id && !_g.node(e.open).rational) {
              error("V7", root_name(a) + " raises a rational orbit to a non-rational one", {n.id, e.open});
            }
          }
        }
      }

      // V8: smaller G-orbits have strictly smaller rank and weights inside X(X).
      void check_g_orbits() {
        std::map<std::string, std::vector<std::size_t>> strata;
        for (std::size_t k = 0; k < _g.nodes().size(); ++k) {
          strata[_g.nodes()[k].g_orbit].push_back(k);
        }
        auto const& open     = _g.open_node();
        auto const  top_rank = open.rank();
        for (auto const& [label, members] : strata) {
          std::size_t top_dim = 0;
          for (auto k : members) {
            top_dim = std::max(top_dim, _g.nodes()[k].dim);
          }
          std::vector<std::string> tops;
          std::size_t              rank = 0;
          for (auto k : members) {
            rank = std::max(rank, _g.nodes()[k].rank());
            if (_g.nodes()[k].dim == top_dim) {
              tops.push_back(_g.nodes()[k].id);
            }
          }
          if (tops.size() != 1) {
            error("V8", "G-orbit '" + label + "' has no unique open B-orbit", tops);
            continue;
          }
          if (label == open.g_orbit) {
            continue;
          }
          if (rank >= top_rank) {
            error("V8", "G-orbit '" + label + "' reaches rank " + std::to_string(rank)
                            + ", not smaller than rank(X) = " + std::to_string(top_rank),
                  tops);
          }
          if (!open.lattice.contains(_g.node(tops.front()).lattice)) {
            error("V8", "weights of the open B-orbit of G-orbit '" + label + "' are not weights of X",
                  tops);
          }
        }
      }

      // V9: the designated open orbit has maximal dimension and rank.
      void check_open_node() {
        auto const& open = _g.open_node();
        for (auto const& n : _g.nodes()) {
          if (n.id == open.id) {
            continue;
          }
          if (n.dim >= open.dim) {
            error("V9", "orbit has dimension " + std::to_string(n.dim) + " >= dim of the open orbit "
                            + std::to_string(open.dim),
                  {open.id, n.id});
          }
          if (n.rank() > open.rank()) {
            error("V9", "orbit has larger rank than the open orbit", {open.id, n.id});
          }
        }
      }

      // V10: the Weyl group of P(X) fixes X(X) pointwise.
      void check_levi() {
        auto const&              open = _g.open_node();
        std::vector<std::size_t> levi;
        for (std::size_t a = 0; a < _d.rank(); ++a) {
          auto const& e = _g.edge_of(open.id, a);
          if (e.type == EdgeType::G) {
            levi.push_back(a);
            if (!e.closed.empty()) {
              error("V10", "type G edge at the open orbit has other members", e.members());
            }
          }
        }
        // the subgroup generated by reflections fixes L iff each generator does
        for (auto a : levi) {
          if (!open.lattice.fixed_by(_d.reflection(a))) {
            error("V10", "s" + std::to_string(a + 1) + " lies in W_P(X) but moves X(X)", {open.id});
          }
        }
      }

      OrbitGraph const& _g;
      RootDatum const&  _d;
      ValidationReport  _report;
    };

  }  // namespace detail

  //! Runs checks V1-V10; a graph is usable only if the report passes.
  inline ValidationReport validate(OrbitGraph const& g) {
    return detail::Validator(g).run();
  }

}  // namespace sphcomb
