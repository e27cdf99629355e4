#pragma once

// Deterministic reports of everything computed for one orbit graph.

#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "intertwine.hpp"
#include "io.hpp"
#include "spherical.hpp"

namespace sphcomb {

  //! Reduced-word independence is checked on every reduced word only for
  //! groups up to this order.
  inline constexpr std::size_t exhaustive_word_check_limit = 48;

  namespace detail {

    inline Json words_json(SphericalInvariants const& inv, std::vector<std::size_t> const& ks) {
      Json out = Json::array();
      for (auto k : ks) {
        out.push_back(word_to_string(inv.element(k).word()));
      }
      return out;
    }

    inline Json rational_vector_json(RationalVector const& v) {
      Json out = Json::array();
      for (auto const& x : v) {
        out.push_back(to_string(x));
      }
      return out;
    }

    inline Json lattice_json(Sublattice const& l) {
      Json out = Json::array();
      for (auto const& row : l.rows()) {
        Json r = Json::array();
        for (auto const& x : row) {
          r.push_back(integer_to_json(x));
        }
        out.push_back(std::move(r));
      }
      return out;
    }

    inline Json roots_json(std::vector<std::size_t> const& roots) {
      Json out = Json::array();
      for (auto a : roots) {
        out.push_back("s" + std::to_string(a + 1));
      }
      return out;
    }

  }  // namespace detail

  struct ReportOptions {
    std::optional<LocalFieldParams> field;
    std::size_t                     cap = default_group_cap;
  };

  //! Validation results and, for a valid graph, every invariant. Consistency
  //! checks that fail raise an Error.
  inline Json build_report(OrbitGraph const& g, std::string const& source, ReportOptions const& opts = {}) {
    Json report{{"source", source}, {"root_datum", datum_to_json(g.datum())}};
    report["orbits"] = g.nodes().size();

    auto const validation = validate(g);
    Json       findings   = Json::array();
    for (auto const& f : validation.findings) {
      findings.push_back(render(f));
    }
    report["validation"] = Json{{"pass", validation.pass}, {"findings", std::move(findings)}};
    if (!validation.pass) {
      return report;
    }

    auto const inv = compute_invariants(g, opts.field, opts.cap);
    Json       inv_json{{"rank", inv.rank()},
                        {"p_roots", detail::roots_json(inv.p_roots)},
                        {"stabilizer_order", inv.stabilizer.order()},
                        {"parabolic_order", inv.parabolic.order()},
                        {"little_weyl_order", inv.little_weyl.order()},
                        {"little_weyl", detail::words_json(inv, inv.little_weyl.elements)},
                        {"little_weyl_generators", detail::words_json(inv, inv.little_weyl.generators)},
                        {"weights", detail::lattice_json(inv.weights)},
                        {"normalizer_order", inv.normalizer.size()},
                        {"normalizer_index", inv.normalizer_index()}};
    if (opts.field) {
      inv_json["q"]            = opts.field->q().str();
      inv_json["p"]            = opts.field->p().str();
      inv_json["h1"]           = detail::integer_to_json(*inv.h1);
      inv_json["multiplicity"] = detail::integer_to_json(*inv.multiplicity);
    }
    report["invariants"] = std::move(inv_json);

    Json       table    = Json::array();
    auto const max_rank = g.max_rank();
    for (auto const& n : g.nodes()) {
      auto const quotient = quotient_invariants(g.datum().ambient_rank(), n.lattice);
      Json       torsion  = Json::array();
      for (auto const& d : quotient.torsion.factors()) {
        torsion.push_back(detail::integer_to_json(d));
      }
      Json row{{"id", n.id},
               {"dim", n.dim},
               {"rank", n.rank()},
               {"rational", n.rational},
               {"g_orbit", n.g_orbit},
               {"maximal_rank", n.rank() == max_rank},
               {"torsion", std::move(torsion)}};
      if (opts.field && n.rational && n.rank() == max_rank) {
        row["rational_orbits"] = detail::integer_to_json(rational_orbit_count(g, n.id, *opts.field));
      }
      table.push_back(std::move(row));
    }
    report["orbit_table"] = std::move(table);

    Json cosets = Json::array();
    for (auto const& id : g.maximal_rank_ids()) {
      auto const c = admissible_coset(g, inv, id);
      cosets.push_back(Json{{"orbit", id},
                            {"shift", detail::rational_vector_json(c.shift)},
                            {"direction", detail::lattice_json(c.direction)}});
    }
    report["admissibility_cosets"] = std::move(cosets);

    auto const bad = bad_divisors(g, inv);
    Json       q   = Json::array();
    for (auto const& c : bad.q_containments) {
      q.push_back(c);
    }
    report["bad_divisors"] = Json{{"r_containments", bad.r_containments.size()}, {"q_containments", std::move(q)}};

    auto const nonvanishing = nonvanishing_set(g, inv);
    auto const fixed        = fixed_set(g, inv);
    Json       calculus{{"nonvanishing", detail::words_json(inv, nonvanishing)},
                        {"fixed", detail::words_json(inv, fixed)}};
    if (inv.group->size() <= exhaustive_word_check_limit) {
      check_reduced_word_independence(g, *inv.group);
      calculus["reduced_word_check"] = "exhaustive";
    } else {
      calculus["reduced_word_check"] = "skipped, |W| = " + std::to_string(inv.group->size());
    }
    if (opts.field) {
      calculus["hecke_generic_rank"] = detail::integer_to_json(hecke_generic_rank(g, inv));
    }
    report["intertwiners"] = std::move(calculus);
    report["degrees"]      = invariant_degrees(inv);
    return report;
  }

  namespace detail {

    inline std::string plain(Json const& v, char const* sep = ", ") {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_array()) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          out += (i ? sep : "") + plain(v[i]);
        }
        return out + "]";
      }
      return v.dump();
    }

    // Words are comma-separated themselves, so lists of them use semicolons.
    inline std::string plain_field(std::string const& key, Json const& v) {
      static std::set<std::string> const word_lists{"little_weyl", "little_weyl_generators", "nonvanishing",
                                                    "fixed"};
      return plain(v, word_lists.count(key) ? "; " : ", ");
    }

  }  // namespace detail

  inline std::string render_report_text(Json const& r) {
    using detail::plain;
    std::ostringstream out;
    out << "source: " << plain(r["source"]) << "\n";
    out << "root datum: " << r["root_datum"].dump() << "\n";
    out << "orbits: " << r["orbits"].dump() << "\n";
    auto const& v = r["validation"];
    out << "validation: " << (v["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    for (auto const& f : v["findings"]) {
      out << "  " << f.get<std::string>() << "\n";
    }
    if (!r.contains("invariants")) {
      return out.str();
    }
    out << "\n[invariants]\n";
    for (auto const& [key, value] : r["invariants"].items()) {
      out << key << ": " << detail::plain_field(key, value) << "\n";
    }
    out << "\n[orbits]\n";
    for (auto const& row : r["orbit_table"]) {
      out << plain(row["id"]) << ": dim " << row["dim"].dump() << ", rank " << row["rank"].dump()
          << (row["rational"].get<bool>() ? ", rational" : ", not rational") << ", G-orbit "
          << plain(row["g_orbit"]) << ", torsion " << plain(row["torsion"]);
      if (row.contains("rational_orbits")) {
        out << ", B(k)-orbits " << plain(row["rational_orbits"]);
      }
      out << "\n";
    }
    out << "\n[admissibility cosets]\n";
    for (auto const& c : r["admissibility_cosets"]) {
      out << plain(c["orbit"]) << ": " << plain(c["shift"]) << " + span " << plain(c["direction"]) << "\n";
    }
    out << "\n[bad divisors]\n";
    out << "R containments: " << r["bad_divisors"]["r_containments"].dump() << "\n";
    out << "Q containments (coroots): " << plain(r["bad_divisors"]["q_containments"]) << "\n";
    out << "\n[intertwiners]\n";
    for (auto const& [key, value] : r["intertwiners"].items()) {
      out << key << ": " << detail::plain_field(key, value) << "\n";
    }
    out << "\ndegrees: " << plain(r["degrees"]) << "\n";
    return out.str();
  }

}  // namespace sphcomb
