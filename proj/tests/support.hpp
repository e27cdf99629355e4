#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sphcomb/builtins.hpp"
#include "sphcomb/io.hpp"

namespace sphcomb::testing {

  // Leibniz expansion; shares no code with the Bareiss or Smith routines.
  inline Integer leibniz_det(std::vector<std::vector<Integer>> const& m) {
    std::size_t const n = m.size();
    if (n == 0) {
      return 1;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (perm[i] > perm[j]) {
            ++inversions;
          }
        }
      }
      Integer term = inversions % 2 ? -1 : 1;
      for (std::size_t i = 0; i < n; ++i) {
        term *= m[i][perm[i]];
      }
      total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  }

  inline Integer gcd_abs(Integer a, Integer b) {
    a = a < 0 ? Integer(-a) : a;
    b = b < 0 ? Integer(-b) : b;
    while (b != 0) {
      Integer r = a % b;
      a         = b;
      b         = r;
    }
    return a;
  }

  inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool>                     mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask[i]) {
          s.push_back(i);
        }
      }
      out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
  }

  //! Nonzero invariant factors d_k / d_{k-1}, d_k the gcd of all k x k minors.
  inline std::vector<Integer> determinantal_invariants(IntMatrix const& m) {
    std::vector<Integer> divisors{1};
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      Integer g = 0;
      for (auto const& rows : subsets(m.rows(), k)) {
        for (auto const& cols : subsets(m.cols(), k)) {
          std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
              minor[i][j] = m(rows[i], cols[j]);
            }
          }
          g = gcd_abs(g, leibniz_det(minor));
        }
      }
      if (g == 0) {
        break;
      }
      divisors.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < divisors.size(); ++k) {
      out.push_back(divisors[k] / divisors[k - 1]);
    }
    return out;
  }

  inline std::string data_dir() {
    return SPHCOMB_DATA_DIR;
  }

  //! Every builtin plus every valid graph file shipped in data/graphs.
  inline std::vector<std::pair<std::string, OrbitGraph>> bundled_graphs() {
    std::vector<std::pair<std::string, OrbitGraph>> out;
    for (auto const& name : builtin_names()) {
      out.emplace_back(name, build_builtin(name));
    }
    std::vector<std::filesystem::path> files;
    for (auto const& entry : std::filesystem::directory_iterator(data_dir())) {
      if (entry.is_regular_file() && entry.path().extension() == ".graph") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (auto const& f : files) {
      out.emplace_back(f.filename().string(), load_graph(f.string()));
    }
    return out;
  }

  //! Copy of g with its nodes, edges or open id edited.
  inline OrbitGraph mutate(OrbitGraph const& g, std::function<void(std::vector<OrbitNode>&)> nodes_fn,
                           std::function<void(std::vector<RootEdge>&)> edges_fn = {},
                           std::string open_id = "") {
    auto nodes = g.nodes();
    auto edges = g.edges();
    if (nodes_fn) {
      nodes_fn(nodes);
    }
    if (edges_fn) {
      edges_fn(edges);
    }
    return OrbitGraph(g.datum(), nodes, edges, open_id.empty() ? g.open_id() : open_id);
  }

  inline OrbitNode& node_named(std::vector<OrbitNode>& nodes, std::string const& id) {
    return *std::find_if(nodes.begin(), nodes.end(), [&](auto const& n) { return n.id == id; });
  }

  inline Sublattice multiples(long m) {
    return Sublattice::from_rows(1, {IntVector{Integer(m)}});
  }

  struct MutationFixture {
    std::string check;
    std::string description;
    OrbitGraph  graph;
  };

  //! One graph per check V1-V10, each built to violate that check.
  inline std::vector<MutationFixture> mutation_fixtures() {
    auto const t   = build_sl2(Sl2Case::T_split);
    auto const u   = build_sl2(Sl2Case::U);
    auto const n   = build_sl2(Sl2Case::N);
    auto const h   = build_horospherical_full(RootDatum::named("A2"));
    auto const pt  = build_point(RootDatum::named("A1"));
    std::vector<MutationFixture> out;

    out.push_back({"V1", "T_split with its only edge removed", mutate(t, {}, [](auto& e) { e.clear(); })});
    out.push_back({"V2", "T_split with a closed orbit of dimension 0",
                   mutate(t, [](auto& ns) { node_named(ns, "closed1").dim = 0; })});
    out.push_back({"V3", "U case with X(Z) = 2Z",
                   mutate(u, [](auto& ns) { node_named(ns, "closed").lattice = multiples(2); })});
    out.push_back({"V4", "T_split with a closed orbit of full rank",
                   mutate(t, [](auto& ns) { node_named(ns, "closed1").lattice = multiples(2); })});
    out.push_back({"V5", "G/U for A2 with the s1-edges re-paired",
                   mutate(h, {}, [](auto& es) {
                     es.erase(std::remove_if(es.begin(), es.end(), [](auto const& e) { return e.root == 0; }),
                              es.end());
                     es.push_back({0, EdgeType::U, "s1", {"e"}});
                     es.push_back({0, EdgeType::U, "s1s2", {"s2"}});
                     es.push_back({0, EdgeType::U, "s1s2s1", {"s2s1"}});
                   })});
    out.push_back({"V6", "N case with trivial characters on the open orbit",
                   mutate(n, [](auto& ns) { node_named(ns, "open").lattice = Sublattice::zero(1); })});
    out.push_back({"V7", "T_split whose open orbit has no k-point",
                   mutate(t, [](auto& ns) { node_named(ns, "open").rational = false; })});
    out.push_back({"V8", "T_split plus a second G-orbit of full rank",
                   mutate(
                       t,
                       [](auto& ns) {
                         ns.push_back({"y", multiples(2), 1, true, "Z"});
                         ns.push_back({"z", multiples(2), 0, true, "Z"});
                       },
                       [](auto& es) { es.push_back({0, EdgeType::U, "y", {"z"}}); })});
    out.push_back({"V9", "T_split with a closed orbit designated open", mutate(t, {}, {}, "closed1")});
    out.push_back({"V10", "point of PGL_2 with X = X(A)",
                   mutate(pt, [](auto& ns) { ns.front().lattice = Sublattice::full(1); })});
    return out;
  }

}  // namespace sphcomb::testing
