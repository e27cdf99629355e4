#pragma once

// JSON form of orbit graphs (format_version 1).

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "orbitgraph.hpp"

namespace sphcomb {

  using Json = nlohmann::ordered_json;

  inline constexpr int graph_format_version = 1;

  namespace detail {

    [[noreturn]] inline void parse_fail(std::string const& what) {
      fail(ErrorKind::ParseError, what);
    }

    inline Json const& field(Json const& obj, char const* key) {
      if (!obj.is_object() || !obj.contains(key)) {
        parse_fail(std::string("missing field '") + key + "'");
      }
      return obj.at(key);
    }

    inline Integer integer_from_json(Json const& v) {
      if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
      }
      if (v.is_string()) {
        auto const s = v.get<std::string>();
        auto const body = !s.empty() && s[0] == '-' ? s.substr(1) : s;
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) {
          parse_fail("'" + s + "' is not a decimal integer");
        }
        return Integer(s);
      }
      parse_fail("expected an integer, got " + v.dump());
    }

    inline Json integer_to_json(Integer const& x) {
      if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
      }
      return x.str();
    }

    inline std::int64_t small_from_json(Json const& v) {
      auto const x = integer_from_json(v);
      if (x < -(Integer(1) << 40) || x > (Integer(1) << 40)) {
        parse_fail("root datum entry " + x.str() + " is out of range");
      }
      return static_cast<std::int64_t>(x);
    }

    inline std::vector<SmallVector> small_rows(Json const& v, std::size_t width, char const* what) {
      if (!v.is_array()) {
        parse_fail(std::string(what) + " must be an array of rows");
      }
      std::vector<SmallVector> rows;
      for (auto const& row : v) {
        if (!row.is_array() || row.size() != width) {
          parse_fail(std::string(what) + " rows must have length " + std::to_string(width));
        }
        SmallVector r;
        for (auto const& x : row) {
          r.push_back(small_from_json(x));
        }
        rows.push_back(std::move(r));
      }
      return rows;
    }

    inline Json small_rows_to_json(std::vector<SmallVector> const& rows) {
      Json out = Json::array();
      for (auto const& r : rows) {
        out.push_back(r);
      }
      return out;
    }

    inline std::size_t size_from_json(Json const& v, char const* what) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        parse_fail(std::string(what) + " must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

  }  // namespace detail

  //! {"type": "B2"} for named data, otherwise explicit roots and coroots.
  inline Json datum_to_json(RootDatum const& d) {
    if (!d.name().empty()) {
      try {
        if (RootDatum::named(d.name()) == d) {
          return Json{{"type", d.name()}};
        }
      } catch (Error const&) {
      }
    }
    Json out{{"ambient_rank", d.ambient_rank()},
             {"simple_roots", detail::small_rows_to_json(d.simple_roots())},
             {"simple_coroots", detail::small_rows_to_json(d.simple_coroots())}};
    if (!d.name().empty()) {
      out["name"] = d.name();
    }
    return out;
  }

  inline RootDatum datum_from_json(Json const& j) {
    if (!j.is_object()) {
      detail::parse_fail("root_datum must be an object");
    }
    if (j.contains("type")) {
      if (!j.at("type").is_string()) {
        detail::parse_fail("root_datum.type must be a string");
      }
      try {
        return RootDatum::named(j.at("type").get<std::string>());
      } catch (Error const& e) {
        detail::parse_fail(e.what());
      }
    }
    auto const n    = detail::size_from_json(detail::field(j, "ambient_rank"), "ambient_rank");
    auto const name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    try {
      if (j.contains("cartan")) {
        auto const& c = j.at("cartan");
        auto const  r = c.is_array() ? c.size() : 0;
        auto const  rows = detail::small_rows(c, r, "cartan");
        SmallMatrix m(r, r);
        for (std::size_t a = 0; a < r; ++a) {
          for (std::size_t b = 0; b < r; ++b) {
            m(a, b) = rows[a][b];
          }
        }
        return RootDatum::from_cartan(m, n, name);
      }
      return RootDatum::from_roots(n, detail::small_rows(detail::field(j, "simple_roots"), n, "simple_roots"),
                                   detail::small_rows(detail::field(j, "simple_coroots"), n, "simple_coroots"),
                                   name);
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::ParseError) {
        throw;
      }
      detail::parse_fail(std::string("invalid root datum: ") + e.what());
    }
  }

  inline Json graph_to_json(OrbitGraph const& g) {
    Json nodes = Json::array();
    for (auto const& n : g.nodes()) {
      Json lattice = Json::array();
      for (auto const& row : n.lattice.rows()) {
        Json r = Json::array();
        for (auto const& x : row) {
          r.push_back(detail::integer_to_json(x));
        }
        lattice.push_back(std::move(r));
      }
      nodes.push_back(Json{{"id", n.id},
                           {"lattice", std::move(lattice)},
                           {"dim", n.dim},
                           {"rational", n.rational},
                           {"g_orbit", n.g_orbit}});
    }
    Json edges = Json::array();
    for (auto const& e : g.edges()) {
      edges.push_back(Json{{"root", e.root + 1},
                           {"type", std::string(to_string(e.type))},
                           {"open", e.open},
                           {"closed", e.closed}});
    }
    return Json{{"format_version", graph_format_version},
                {"root_datum", datum_to_json(g.datum())},
                {"nodes", std::move(nodes)},
                {"edges", std::move(edges)},
                {"open_id", g.open_id()}};
  }

  //! Parses and prechecks references; structural checks are left to validate().
  inline OrbitGraph graph_from_json(Json const& j) {
    using detail::field;
    if (!j.is_object()) {
      detail::parse_fail("graph document must be a JSON object");
    }
    auto const& version = field(j, "format_version");
    if (!version.is_number_integer() || version.get<std::int64_t>() != graph_format_version) {
      detail::parse_fail("unsupported format_version " + version.dump());
    }
    auto const        datum = datum_from_json(field(j, "root_datum"));
    std::size_t const n     = datum.ambient_rank();

    std::vector<OrbitNode> nodes;
    std::set<std::string>  ids;
    auto const&            jn = field(j, "nodes");
    if (!jn.is_array()) {
      detail::parse_fail("nodes must be an array");
    }
    for (auto const& x : jn) {
      OrbitNode node;
      auto const& id = field(x, "id");
      if (!id.is_string()) {
        detail::parse_fail("node id must be a string");
      }
      node.id = id.get<std::string>();
      if (!ids.insert(node.id).second) {
        detail::parse_fail("duplicate node id '" + node.id + "'");
      }
      auto const& lat = field(x, "lattice");
      if (!lat.is_array()) {
        detail::parse_fail("lattice of '" + node.id + "' must be an array of rows");
      }
      IntMatrix gens(0, n);
      for (auto const& row : lat) {
        if (!row.is_array() || row.size() != n) {
          detail::parse_fail("lattice rows of '" + node.id + "' must have length " + std::to_string(n));
        }
        IntVector v;
        for (auto const& c : row) {
          v.push_back(detail::integer_from_json(c));
        }
        gens.append_row(v);
      }
      node.lattice = Sublattice(n, gens);
      node.dim     = detail::size_from_json(field(x, "dim"), "dim");
      auto const& rational = field(x, "rational");
      if (!rational.is_boolean()) {
        detail::parse_fail("rational must be a boolean");
      }
      node.rational     = rational.get<bool>();
      auto const& label = field(x, "g_orbit");
      if (!label.is_string()) {
        detail::parse_fail("g_orbit must be a string");
      }
      node.g_orbit = label.get<std::string>();
      nodes.push_back(std::move(node));
    }

    std::vector<RootEdge>                                    edges;
    std::map<std::pair<std::string, std::size_t>, std::size_t> seen;
    auto const&                                              je = field(j, "edges");
    if (!je.is_array()) {
      detail::parse_fail("edges must be an array");
    }
    auto const known = [&](Json const& v) {
      if (!v.is_string()) {
        detail::parse_fail("edge members must be node ids");
      }
      auto const s = v.get<std::string>();
      if (!ids.count(s)) {
        detail::parse_fail("edge refers to unknown node '" + s + "'");
      }
      return s;
    };
    for (auto const& x : je) {
      RootEdge e;
      auto const root = detail::size_from_json(field(x, "root"), "root");
      if (root == 0 || root > datum.rank()) {
        detail::parse_fail("edge root " + std::to_string(root) + " outside 1.." + std::to_string(datum.rank()));
      }
      e.root = root - 1;
      auto const& type = field(x, "type");
      if (!type.is_string()) {
        detail::parse_fail("edge type must be a string");
      }
      e.type = edge_type_from_string(type.get<std::string>());
      e.open = known(field(x, "open"));
      auto const& closed = x.contains("closed") ? x.at("closed") : Json::array();
      if (!closed.is_array()) {
        detail::parse_fail("closed must be an array");
      }
      for (auto const& c : closed) {
        e.closed.push_back(known(c));
      }
      for (auto const& m : e.members()) {
        if (seen[{m, e.root}]++ > 0) {
          detail::parse_fail("orbit '" + m + "' appears in two edges for s" + std::to_string(root));
        }
      }
      edges.push_back(std::move(e));
    }
    auto const& open = field(j, "open_id");
    if (!open.is_string() || !ids.count(open.get<std::string>())) {
      detail::parse_fail("open_id must name a node");
    }
    return OrbitGraph(datum, std::move(nodes), std::move(edges), open.get<std::string>());
  }

  inline OrbitGraph parse_graph(std::string const& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (Json::parse_error const& e) {
      fail(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(j);
  }

  inline OrbitGraph load_graph(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
  }

  inline std::string dump_graph(OrbitGraph const& g) {
    return graph_to_json(g).dump(2) + "\n";
  }

}  // namespace sphcomb
