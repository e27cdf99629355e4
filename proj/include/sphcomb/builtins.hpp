#pragma once

// Named orbit graphs: "sl2:T_split", "group:A2", "horospherical:B2",
// "point", "point:A1", "induce:sl2:T_split@A2/{a1}".

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "orbitgraph.hpp"
#include "spherical.hpp"

namespace sphcomb {

  //! The rank-zero root datum on the zero lattice.
  inline RootDatum trivial_datum() {
    return RootDatum::from_roots(0, {}, {}, "");
  }

  namespace detail {

    inline std::vector<std::size_t> parse_root_set(std::string_view text) {
      if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        fail(ErrorKind::InvalidArgument, "root set must look like {a1,a2}, got '" + std::string(text) + "'");
      }
      text = text.substr(1, text.size() - 2);
      std::vector<std::size_t> out;
      std::size_t              pos = 0;
      while (pos < text.size()) {
        auto next = text.find(',', pos);
        if (next == std::string_view::npos) {
          next = text.size();
        }
        auto item = text.substr(pos, next - pos);
        if (!item.empty() && (item.front() == 'a' || item.front() == 's')) {
          item.remove_prefix(1);
        }
        if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos) {
          fail(ErrorKind::InvalidArgument, "bad root label in '" + std::string(text) + "'");
        }
        auto const i = std::stoul(std::string(item));
        if (i == 0) {
          fail(ErrorKind::InvalidArgument, "root labels start at 1");
        }
        out.push_back(i - 1);
        pos = next + 1;
      }
      return out;
    }

  }  // namespace detail

  inline OrbitGraph build_builtin(std::string_view name, std::size_t cap = default_group_cap) {
    auto const rest_after = [&](std::string_view prefix) { return name.substr(prefix.size()); };
    if (name.rfind("induce:", 0) == 0) {
      auto const body = rest_after("induce:");
      auto const at   = body.rfind('@');
      auto const bar  = body.rfind('/');
      if (at == std::string_view::npos || bar == std::string_view::npos || bar < at) {
        fail(ErrorKind::InvalidArgument, "expected induce:<inner>@<type>/{roots}");
      }
      auto const inner   = build_builtin(body.substr(0, at), cap);
      auto const ambient = RootDatum::named(body.substr(at + 1, bar - at - 1));
      return build_parabolic_induction(inner, detail::parse_root_set(body.substr(bar + 1)), ambient, cap);
    }
    if (name.rfind("sl2:", 0) == 0) {
      for (auto c : {Sl2Case::G, Sl2Case::T_split, Sl2Case::T_nonsplit, Sl2Case::N, Sl2Case::U}) {
        if (rest_after("sl2:") == to_string(c)) {
          return build_sl2(c);
        }
      }
      fail(ErrorKind::InvalidArgument, "unknown PGL_2 case '" + std::string(rest_after("sl2:")) + "'");
    }
    if (name == "point") {
      return build_point(trivial_datum());
    }
    if (name.rfind("point:", 0) == 0) {
      return build_point(RootDatum::named(rest_after("point:")));
    }
    if (name.rfind("group:", 0) == 0) {
      return build_group_case(RootDatum::named(rest_after("group:")), cap);
    }
    if (name.rfind("horospherical:", 0) == 0) {
      return build_horospherical_full(RootDatum::named(rest_after("horospherical:")), cap);
    }
    fail(ErrorKind::InvalidArgument, "unknown builtin '" + std::string(name) + "'");
  }

  //! A representative selection; the families accept any finite type.
  inline std::vector<std::string> builtin_names() {
    return {"point",
            "point:A1",
            "sl2:G",
            "sl2:T_split",
            "sl2:T_nonsplit",
            "sl2:N",
            "sl2:U",
            "group:A1",
            "group:A2",
            "group:B2",
            "horospherical:A1",
            "horospherical:A2",
            "horospherical:B2",
            "horospherical:G2",
            "induce:point@A1/{}",
            "induce:sl2:T_split@A2/{a1}",
            "induce:sl2:N@B2/{a2}"};
  }

}  // namespace sphcomb
