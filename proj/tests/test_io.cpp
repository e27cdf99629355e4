#include <gtest/gtest.h>

#include "sphcomb/builtins.hpp"
#include "sphcomb/io.hpp"
#include "sphcomb/report.hpp"
#include "support.hpp"

using namespace sphcomb;
using namespace sphcomb::testing;

namespace {

  ErrorKind parse_error_kind(std::string const& text) {
    try {
      parse_graph(text);
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  }

  std::string t_split_text() {
    return dump_graph(build_sl2(Sl2Case::T_split));
  }

  std::string replace(std::string s, std::string const& from, std::string const& to) {
    auto pos = s.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    return s.replace(pos, from.size(), to);
  }

}  // namespace

TEST(GraphJson, RoundTripsEveryBundledGraph) {
  for (auto const& [name, g] : bundled_graphs()) {
    auto const text  = dump_graph(g);
    auto const again = parse_graph(text);
    EXPECT_EQ(again, g) << name;
    EXPECT_EQ(dump_graph(again), text) << name;
  }
}

TEST(GraphJson, RoundTripsMutatedGraphs) {
  for (auto const& f : mutation_fixtures()) {
    if (f.check == "V1") {
      continue;  // missing memberships are allowed through parsing, checked below
    }
    EXPECT_EQ(parse_graph(dump_graph(f.graph)), f.graph) << f.description;
  }
}

TEST(GraphJson, BigIntegersAsDecimalStrings) {
  Integer const big = Integer(1) << 70;
  auto const    g   = mutate(build_sl2(Sl2Case::T_split), [&](auto& ns) {
    ns.front().lattice = Sublattice::from_rows(1, {IntVector{big}});
  });
  auto const text = dump_graph(g);
  EXPECT_NE(text.find("\"1180591620717411303424\""), std::string::npos);
  EXPECT_EQ(parse_graph(text), g);
}

TEST(GraphJson, ExplicitRootDatumForms) {
  auto const cartan = replace(t_split_text(), "\"type\": \"A1\"", "\"cartan\": [[2]], \"ambient_rank\": 2");
  auto const g      = parse_graph(replace(cartan, "[\n          2\n        ]", "[2, 0]"));
  EXPECT_EQ(g.datum().ambient_rank(), 2u);
  EXPECT_EQ(g.node("open").lattice, Sublattice::from_rows(2, {IntVector{Integer(2), Integer(0)}}));
  auto const roots = replace(t_split_text(), "\"type\": \"A1\"",
                             "\"ambient_rank\": 1, \"simple_roots\": [[2]], \"simple_coroots\": [[1]]");
  auto const h     = parse_graph(roots);
  EXPECT_EQ(h.datum(), RootDatum::named("A1"));
}

TEST(GraphJson, Levi) {
  auto const levi = embed_graph(build_sl2(Sl2Case::T_split), RootDatum::named("A2"), {0});
  EXPECT_EQ(parse_graph(dump_graph(levi)), levi);
}

TEST(GraphJson, ParseErrors) {
  EXPECT_EQ(parse_error_kind("{"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind("[]"), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"format_version\": 1", "\"format_version\": 2")),
            ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"closed2\"\n      ]", "\"ghost\"\n      ]")),
            ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"closed2\"\n      ]", "\"closed1\"\n      ]")),
            ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"open_id\": \"open\"", "\"open_id\": \"nowhere\"")),
            ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"type\": \"T\"", "\"type\": \"X\"")), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"root\": 1", "\"root\": 2")), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"type\": \"A1\"", "\"type\": \"A0\"")), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"dim\": 2", "\"dim\": -2")), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"dim\": 2", "\"dim\": \"x\"")), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind(replace(t_split_text(), "\"lattice\": [\n        [\n          2\n        ]\n      ]",
                                     "\"lattice\": [[\"2x\"]]")),
            ErrorKind::ParseError);
  try {
    load_graph("/nonexistent/graph.json");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

TEST(GraphJson, MissingMembershipReachesTheValidator) {
  auto const text = replace(t_split_text(), ",\n        \"closed2\"", "");
  auto const g    = parse_graph(text);
  EXPECT_TRUE(validate(g).has("V1"));
}

TEST(Report, DeterministicAndComplete) {
  LocalFieldParams const field(Integer(5), Integer(5));
  for (auto const* name : {"group:A2", "horospherical:A2", "sl2:T_split", "induce:sl2:T_split@A2/{a1}"}) {
    auto const a = render_report_text(build_report(build_builtin(name), name, {field}));
    auto const b = render_report_text(build_report(build_builtin(name), name, {field}));
    EXPECT_EQ(a, b) << name;
    EXPECT_EQ(build_report(build_builtin(name), name, {field}).dump(), build_report(build_builtin(name), name, {field}).dump());
    for (auto const* section : {"[invariants]", "[orbits]", "[admissibility cosets]", "[bad divisors]",
                                "[intertwiners]", "degrees: "}) {
      EXPECT_NE(a.find(section), std::string::npos) << name << " lacks " << section;
    }
  }
  auto const group = render_report_text(build_report(build_builtin("group:A2"), "group:A2", {field}));
  EXPECT_NE(group.find("degrees: [2, 3]"), std::string::npos);
  auto const horo = render_report_text(build_report(build_builtin("horospherical:A2"), "h", {field}));
  EXPECT_NE(horo.find("degrees: [1, 1]"), std::string::npos);
  EXPECT_NE(horo.find("multiplicity: 6"), std::string::npos);
}

TEST(Report, InvalidGraphStopsAfterValidation) {
  auto const r = build_report(mutation_fixtures()[2].graph, "fixture");
  EXPECT_FALSE(r["validation"]["pass"].get<bool>());
  EXPECT_FALSE(r.contains("invariants"));
  EXPECT_NE(render_report_text(r).find("V3 error"), std::string::npos);
}
