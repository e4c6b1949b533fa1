#include "pfactor/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pfactor/errors.hpp"

namespace pfactor {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

int parse_int(std::string_view tok, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
  return value;
}

// Wraps json access so type errors surface as InputError.
template <class F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

BuiltPoset parse_poset_text(std::string_view text) {
  int n = -1;
  std::vector<Cover> pairs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n") throw InputError(where + "expected 'n <count>' before any cover");
      n = parse_int(tok[1], line_no);
      if (n < 1) throw InputError(where + "poset needs at least one element");
      continue;
    }
    if (tok.size() == 3 && tok[0] == "cover") {
      pairs.push_back({parse_int(tok[1], line_no), parse_int(tok[2], line_no)});
    } else if (tok.size() == 3 && tok[1] == "<") {
      pairs.push_back({parse_int(tok[0], line_no), parse_int(tok[2], line_no)});
    } else if (tok[0] == "n") {
      throw InputError(where + "duplicate 'n' line");
    } else {
      throw InputError(where + "expected 'cover a b' or 'a < b'");
    }
  }
  if (n < 0) throw InputError("missing 'n <count>' line");
  return build_poset_with_report(n, pairs);
}

BuiltPoset read_poset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset_text(buf.str());
}

std::string poset_to_text(const Poset& p) {
  std::string out = "n " + std::to_string(p.size()) + "\n";
  for (const auto& [a, b] : p.covers()) out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

Json poset_to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
  return Json{{"n", p.size()}, {"covers", covers}};
}

Poset poset_from_json(const Json& j) {
  return json_guard("poset", [&] {
    const int n = j.at("n").get<int>();
    std::vector<Cover> pairs;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw InputError("cover entries must be [a, b] pairs");
      pairs.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return build_poset(n, pairs);
  });
}

Json ideal_to_json(const Ideal& j) { return Json(j.elements()); }

Ideal ideal_from_json(const Json& j, int n) {
  return json_guard("ideal", [&] {
    Ideal out(n);
    for (const auto& e : j) {
      const int v = e.get<int>();
      if (v < 1 || v > n) throw InputError("ideal element " + std::to_string(v) + " out of range");
      out.insert(v);
    }
    return out;
  });
}

Json mis_list_to_json(const Poset& p, const std::vector<MaxIndSet>& sets) {
  Json out = Json::array();
  for (const auto& m : sets) {
    Json entry;
    if (m.is_global())
      entry["scope"] = "global";
    else
      entry["scope"] = m.scope;
    Json ideals = Json::array();
    for (const auto& j : m.ideals) ideals.push_back(ideal_to_json(j));
    entry["ideals"] = ideals;
    if (m.is_global() && m.size() == p.size()) entry["labels"] = label_map(p, m).label_of_member;
    out.push_back(entry);
  }
  return out;
}

std::vector<MaxIndSet> mis_list_from_json(const Json& j, int n) {
  return json_guard("MIS list", [&] {
    std::vector<MaxIndSet> out;
    for (const auto& entry : j) {
      MaxIndSet m;
      const auto& scope = entry.at("scope");
      if (scope.is_string()) {
        if (scope.get<std::string>() != "global") throw InputError("unknown MIS scope " + scope.dump());
        m.scope = kGlobalScope;
      } else {
        m.scope = scope.get<int>();
      }
      for (const auto& ideal : entry.at("ideals")) m.ideals.push_back(ideal_from_json(ideal, n));
      std::sort(m.ideals.begin(), m.ideals.end(), canonical_less);
      out.push_back(std::move(m));
    }
    return out;
  });
}

Json forest_to_json(const PForest& f) { return Json{{"parents", f.parents()}, {"descents", forest_descents(f)}}; }

PForest forest_from_json(const Json& j) {
  return json_guard("forest", [&] { return PForest(j.at("parents").get<std::vector<int>>()); });
}

Json gf_to_json(const FactoredGF& gf) {
  Json components = Json::array();
  for (const auto& factor : gf.factors) {
    Json terms = Json::array();
    for (const auto& t : factor.terms) {
      Json term;
      if (t.coefficient != 1) term["coefficient"] = t.coefficient;
      Json num = Json::array(), den = Json::array();
      for (const auto& j : t.numerator_ideals) num.push_back(ideal_to_json(j));
      for (const auto& j : t.denominator_ideals) den.push_back(ideal_to_json(j));
      term["numerator_ideals"] = num;
      term["denominator_ideals"] = den;
      terms.push_back(term);
    }
    components.push_back(Json{{"component", factor.component}, {"terms", terms}});
  }
  return Json{{"n", gf.n}, {"components", components}};
}

FactoredGF gf_from_json(const Json& j) {
  return json_guard("generating function", [&] {
    FactoredGF gf;
    gf.n = j.at("n").get<int>();
    for (const auto& c : j.at("components")) {
      GFFactor factor;
      factor.component = c.value("component", 0);
      for (const auto& t : c.at("terms")) {
        GFTerm term;
        term.coefficient = t.value("coefficient", 1L);
        for (const auto& x : t.at("numerator_ideals")) term.numerator_ideals.push_back(ideal_from_json(x, gf.n));
        for (const auto& x : t.at("denominator_ideals")) term.denominator_ideals.push_back(ideal_from_json(x, gf.n));
        factor.terms.push_back(std::move(term));
      }
      gf.factors.push_back(std::move(factor));
    }
    return gf;
  });
}

namespace {

// Vertex subset and grouping shared by the JSON and DOT writers.
struct GraphView {
  std::vector<int> vertices;             // vertex indices of g
  std::vector<std::vector<int>> groups;  // components, as vertex indices of g
};

GraphView view_of(const IdealGraph& g, bool principal_only) {
  GraphView v;
  if (!principal_only) {
    for (int k = 0; k < g.vertex_count(); ++k) v.vertices.push_back(k);
    for (int r = 0; r < g.component_count(); ++r) v.groups.push_back(g.component(r));
    return v;
  }
  for (int i = 1; i <= g.universe(); ++i) v.vertices.push_back(g.principal_vertex(i));
  std::sort(v.vertices.begin(), v.vertices.end());
  for (int k = 0; k < g.principal_component_count(); ++k) {
    std::vector<int> group;
    for (int i : g.principal_component(k)) group.push_back(g.principal_vertex(i));
    std::sort(group.begin(), group.end());
    v.groups.push_back(std::move(group));
  }
  return v;
}

std::vector<std::pair<int, int>> view_edges(const IdealGraph& g, const GraphView& v) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : g.edges())
    if (std::binary_search(v.vertices.begin(), v.vertices.end(), a) &&
        std::binary_search(v.vertices.begin(), v.vertices.end(), b))
      out.push_back({a, b});
  return out;
}

}  // namespace

Json graph_to_json(const IdealGraph& g, bool principal_only) {
  const GraphView v = view_of(g, principal_only);
  Json vertices = Json::array();
  for (int k : v.vertices) vertices.push_back(Json{{"id", k}, {"ideal", ideal_to_json(g.vertex(k))}});
  Json edges = Json::array();
  for (const auto& [a, b] : view_edges(g, v)) edges.push_back({a, b});
  Json groups = Json::array();
  for (const auto& grp : v.groups) groups.push_back(grp);
  return Json{{"graph", principal_only ? "H_P" : "G_P"}, {"vertices", vertices}, {"edges", edges}, {"components", groups}};
}

std::string graph_to_dot(const IdealGraph& g, bool principal_only) {
  const GraphView v = view_of(g, principal_only);
  std::ostringstream out;
  out << "graph " << (principal_only ? "H_P" : "G_P") << " {\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t r = 0; r < v.groups.size(); ++r) {
    const auto& grp = v.groups[r];
    if (grp.size() < 2) continue;
    out << "  subgraph cluster_" << r << " {\n    label=\"C" << r << "\";\n";
    for (int k : grp) out << "    v" << k << ";\n";
    out << "  }\n";
  }
  for (int k : v.vertices) out << "  v" << k << " [label=\"" << g.vertex(k).to_string() << "\"];\n";
  for (const auto& [a, b] : view_edges(g, v)) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pfactor
