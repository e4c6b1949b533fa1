#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pfactor/forests.hpp"
#include "pfactor/genfun.hpp"
#include "pfactor/ideal_graph.hpp"
#include "pfactor/mis.hpp"
#include "pfactor/poset.hpp"

namespace pfactor {

using Json = nlohmann::ordered_json;

/// Parses the line format:
///
///   # comment
///   n 6
///   cover 3 1
///   1 < 2
///
/// The `n` line must come first. Syntax errors are reported as InputError with
/// the 1-based line number; build errors (cycles, range) come from build_poset.
BuiltPoset parse_poset_text(std::string_view text);
BuiltPoset read_poset_file(const std::string& path);

/// The text format again, one `cover a b` line per cover.
std::string poset_to_text(const Poset& p);

Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json ideal_to_json(const Ideal& j);
Ideal ideal_from_json(const Json& j, int n);

/// Each entry carries the scope and, for global sets, the label of every member.
Json mis_list_to_json(const Poset& p, const std::vector<MaxIndSet>& sets);
std::vector<MaxIndSet> mis_list_from_json(const Json& j, int n);

/// {"parents": [...], "descents": [...]}; roots are their own parent.
Json forest_to_json(const PForest& f);
PForest forest_from_json(const Json& j);

/// Coefficients other than 1 are written explicitly.
Json gf_to_json(const FactoredGF& gf);
FactoredGF gf_from_json(const Json& j);

/// Vertices, edges and components of G_P; with principal_only, only H_P.
Json graph_to_json(const IdealGraph& g, bool principal_only = false);
/// Graphviz rendering with one cluster per nontrivial component.
std::string graph_to_dot(const IdealGraph& g, bool principal_only = false);

}  // namespace pfactor
