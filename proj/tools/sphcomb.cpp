// Command-line front end: validate, invariants, compose, report, list, export.
//
// Exit codes: 0 success, 1 validation or consistency-check failure, 2 usage or
// parse error, 3 unsupported input (wild case, Weyl group too large).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sphcomb/builtins.hpp"
#include "sphcomb/intertwine.hpp"
#include "sphcomb/io.hpp"
#include "sphcomb/report.hpp"

namespace {

  using namespace sphcomb;

  int exit_code(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::ParseError:
      case ErrorKind::InvalidArgument:
      case ErrorKind::RankMismatch:
      case ErrorKind::DimensionMismatch:
      case ErrorKind::NonFiniteType: return 2;
      case ErrorKind::WildCaseUnsupported:
      case ErrorKind::GroupTooLarge: return 3;
      default: return 1;
    }
  }

  struct Source {
    std::string path;
    std::string builtin;

    void add_to(CLI::App* cmd) {
      cmd->add_option("path", path, "orbit graph JSON file");
      cmd->add_option("--builtin", builtin, "named graph, see 'list'");
    }

    OrbitGraph load(std::size_t cap) const {
      if (path.empty() == builtin.empty()) {
        fail(ErrorKind::InvalidArgument, "give exactly one of a graph file or --builtin");
      }
      return builtin.empty() ? load_graph(path) : build_builtin(builtin, cap);
    }

    std::string name() const {
      return builtin.empty() ? path : "builtin " + builtin;
    }
  };

  struct FieldOptions {
    std::optional<std::string> q, p;

    void add_to(CLI::App* cmd) {
      cmd->add_option("--q", q, "residue field size of the local field");
      cmd->add_option("--p", p, "residue characteristic");
    }

    std::optional<LocalFieldParams> get() const {
      if (q.has_value() != p.has_value()) {
        fail(ErrorKind::InvalidArgument, "--q and --p must be given together");
      }
      if (!q) {
        return std::nullopt;
      }
      auto const parse = [](std::string const& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
          fail(ErrorKind::InvalidArgument, "'" + s + "' is not a positive integer");
        }
        return Integer(s);
      };
      return LocalFieldParams(parse(*q), parse(*p));
    }
  };

  void write_output(std::string const& text, std::string const& out) {
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out);
    if (!f) {
      fail(ErrorKind::InvalidArgument, "cannot write '" + out + "'");
    }
    f << text;
  }

  int run_validate(OrbitGraph const& g) {
    auto const report = validate(g);
    for (auto const& f : report.findings) {
      std::cout << render(f) << "\n";
    }
    std::cout << (report.pass ? "valid" : "invalid") << "\n";
    return report.pass ? 0 : 1;
  }

  int run_invariants(OrbitGraph const& g, std::optional<LocalFieldParams> field, std::size_t cap) {
    auto const inv = compute_invariants(g, field, cap);
    auto const words = [&](std::vector<std::size_t> const& ks) {
      std::string out = "[";
      for (std::size_t i = 0; i < ks.size(); ++i) {
        out += (i ? "; " : "") + word_to_string(inv.element(ks[i]).word());
      }
      return out + "]";
    };
    std::cout << "rank: " << inv.rank() << "\n";
    std::cout << "p_roots: [";
    for (std::size_t i = 0; i < inv.p_roots.size(); ++i) {
      std::cout << (i ? ", " : "") << "s" << inv.p_roots[i] + 1;
    }
    std::cout << "]\n";
    std::cout << "stabilizer_order: " << inv.stabilizer.order() << "\n";
    std::cout << "little_weyl_order: " << inv.little_weyl.order() << "\n";
    std::cout << "little_weyl: " << words(inv.little_weyl.elements) << "\n";
    std::cout << "little_weyl_generators: " << words(inv.little_weyl.generators) << "\n";
    std::cout << "weights: " << lattice_to_string(inv.weights) << "\n";
    std::cout << "normalizer_order: " << inv.normalizer.size() << "\n";
    std::cout << "normalizer_index: " << inv.normalizer_index() << "\n";
    if (field) {
      std::cout << "h1: " << *inv.h1 << "\n";
      std::cout << "multiplicity: " << *inv.multiplicity << "\n";
    }
    std::cout << "degrees: [";
    auto const degrees = invariant_degrees(inv);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      std::cout << (i ? ", " : "") << degrees[i];
    }
    std::cout << "]\n";
    return 0;
  }

  int run_compose(OrbitGraph const& g, std::string const& word, bool all, std::size_t cap) {
    auto const show = [&](Word const& w) {
      auto const r = compose_word(g, w);
      std::cout << word_to_string(w) << " -> " << (r.is_zero() ? "0" : r.orbit()) << "\n";
    };
    if (all == !word.empty()) {
      fail(ErrorKind::InvalidArgument, "give exactly one of --word or --all");
    }
    if (!all) {
      auto const w = parse_word(word);
      for (auto i : w) {
        g.datum().check_root_index(i);
      }
      show(w);
      return 0;
    }
    auto const inv = compute_invariants(g, std::nullopt, cap);
    for (auto const& e : inv.group->elements()) {
      show(e.word());
    }
    auto const listing = [&](std::vector<std::size_t> const& ks) {
      std::string out = "{";
      for (std::size_t i = 0; i < ks.size(); ++i) {
        out += (i ? "; " : "") + word_to_string(inv.element(ks[i]).word());
      }
      return out + "}";
    };
    std::cout << "nonvanishing: " << listing(nonvanishing_set(g, inv)) << "\n";
    std::cout << "fixed: " << listing(fixed_set(g, inv)) << "\n";
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial invariants of spherical varieties from Borel-orbit graphs", "sphcomb"};
  app.require_subcommand(0, 1);
  std::size_t cap  = default_group_cap;
  bool        list = false;
  app.add_option("--cap", cap, "largest Weyl group to enumerate")->capture_default_str();
  app.add_flag("--list", list, "list builtin graphs");

  auto*  validate_cmd = app.add_subcommand("validate", "run checks V1-V10 on a graph");
  Source validate_src;
  validate_src.add_to(validate_cmd);

  auto*        inv_cmd = app.add_subcommand("invariants", "little Weyl group, normalizer, multiplicity");
  Source       inv_src;
  FieldOptions inv_field;
  inv_src.add_to(inv_cmd);
  inv_field.add_to(inv_cmd);

  auto*       compose_cmd = app.add_subcommand("compose", "composite intertwining operators");
  Source      compose_src;
  std::string compose_word_text;
  bool        compose_all = false;
  compose_src.add_to(compose_cmd);
  compose_cmd->add_option("--word", compose_word_text, "word such as s1,s2 (rightmost letter acts first)");
  compose_cmd->add_flag("--all", compose_all, "every element of W");

  auto*        report_cmd = app.add_subcommand("report", "full deterministic report");
  Source       report_src;
  FieldOptions report_field;
  std::string  report_out;
  bool         report_json = false;
  report_src.add_to(report_cmd);
  report_field.add_to(report_cmd);
  report_cmd->add_option("--out", report_out, "write to a file instead of stdout");
  report_cmd->add_flag("--json", report_json, "JSON instead of text");

  auto* list_cmd = app.add_subcommand("list", "list builtin graphs");

  auto*       export_cmd = app.add_subcommand("export", "write a builtin graph as JSON");
  std::string export_name, export_out;
  export_cmd->add_option("--builtin", export_name, "named graph")->required();
  export_cmd->add_option("--out", export_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list || list_cmd->parsed()) {
      for (auto const& name : builtin_names()) {
        std::cout << name << "\n";
      }
      return 0;
    }
    if (validate_cmd->parsed()) {
      return run_validate(validate_src.load(cap));
    }
    if (inv_cmd->parsed()) {
      return run_invariants(inv_src.load(cap), inv_field.get(), cap);
    }
    if (compose_cmd->parsed()) {
      return run_compose(compose_src.load(cap), compose_word_text, compose_all, cap);
    }
    if (report_cmd->parsed()) {
      auto const field  = report_field.get();
      auto const graph  = report_src.load(cap);
      auto const report = build_report(graph, report_src.name(), {field, cap});
      write_output(report_json ? report.dump(2) + "\n" : render_report_text(report), report_out);
      return report["validation"]["pass"].get<bool>() ? 0 : 1;
    }
    if (export_cmd->parsed()) {
      write_output(dump_graph(build_builtin(export_name, cap)), export_out);
      return 0;
    }
    std::cerr << app.help();
    return 2;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}
