#include "pfactor/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "pfactor/errors.hpp"
#include "pfactor/forests.hpp"
#include "pfactor/genfun.hpp"
#include "pfactor/ideal_graph.hpp"
#include "pfactor/io.hpp"
#include "pfactor/mis.hpp"
#include "pfactor/oracle.hpp"

namespace pfactor {

namespace {

struct RunConfig {
  std::string input;
  std::string format = "text";
  std::size_t max_ideals = kDefaultIdealCap;
  std::size_t max_mis = kDefaultMisCap;
  std::size_t max_extensions = oracle::kExtensionCap;
  int series_degree = 4;
  bool relabel = false;
  std::uint64_t seed = 1;
  bool verify_extensions = false;
  bool duplication_path = false;
  bool principal_only = false;
  int gen_size = 6;
  double gen_density = 0.3;
  bool gen_natural = false;
};

// The error messages name the stage that failed.
class Stage {
 public:
  void set(std::string name) { name_ = std::move(name); }
  const std::string& name() const { return name_; }

 private:
  std::string name_ = "setup";
};

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

std::string ideal_list(const std::vector<Ideal>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + v[k].to_string();
  return s;
}

class Command {
 public:
  Command(const RunConfig& cfg, std::ostream& out, std::ostream& err, Stage& stage)
      : cfg_(cfg), out_(out), err_(err), stage_(stage) {}

  int dispatch(const std::string& name) {
    if (name == "gen") return gen();
    load();
    if (name == "parse") return parse();
    if (name == "ideals") return ideals();
    if (name == "graph") return graph();
    if (name == "mis") return mis();
    if (name == "forests") return forests();
    if (name == "fpx") return fpx();
    if (name == "fpq") return fpq_cmd();
    if (name == "count") return count();
    if (name == "verify") return verify();
    throw InputError("unknown subcommand " + name);
  }

  // Subcommands whose output depends on labels refuse non-natural input
  // unless --relabel was given; count relabels on its own.
  void require_natural(bool implied) {
    if (is_naturally_labeled(poset_)) return;
    if (!cfg_.relabel && !implied)
      throw InputError("poset is not naturally labelled; rerun with --relabel to use a natural relabeling");
    apply_relabel(implied && !cfg_.relabel);
  }

 private:
  void load() {
    stage_.set("parse");
    if (cfg_.input.empty()) throw InputError("--input is required");
    BuiltPoset built = read_poset_file(cfg_.input);
    for (const auto& w : built.report.warnings) err_ << "warning: " << w << '\n';
    poset_ = std::move(built.poset);
    if (cfg_.relabel && !is_naturally_labeled(poset_)) apply_relabel(false);
  }

  void apply_relabel(bool implied) {
    auto [relabeled, perm] = natural_relabel(poset_);
    std::vector<int> shown(perm.begin(), perm.end());
    err_ << "notice: " << (implied ? "input is not naturally labelled; " : "") << "relabelled old->new [";
    for (std::size_t k = 0; k < shown.size(); ++k) err_ << (k ? " " : "") << k + 1 << "->" << shown[k];
    err_ << "]\n";
    poset_ = std::move(relabeled);
  }

  const IdealGraph& graph_ref() {
    if (!g_) {
      stage_.set("ideals");
      g_.emplace(build_ideal_graph(poset_, cfg_.max_ideals));
    }
    return *g_;
  }

  const MisCatalog& catalog() {
    if (!catalog_) {
      const IdealGraph& g = graph_ref();
      stage_.set("mis");
      catalog_.emplace(enumerate_all_component_mis(g, cfg_.max_mis));
    }
    return *catalog_;
  }

  bool json() const { return cfg_.format == "json"; }
  bool dot() const { return cfg_.format == "dot"; }
  void no_dot(const char* what) const {
    if (dot()) throw InputError(std::string("--format dot is only available for graph, not ") + what);
  }

  int gen() {
    no_dot("gen");
    stage_.set("gen");
    const Poset p = random_poset(cfg_.gen_size, cfg_.gen_density, cfg_.seed, cfg_.gen_natural);
    if (json())
      out_ << poset_to_json(p).dump(2) << '\n';
    else
      out_ << poset_to_text(p);
    return kExitOk;
  }

  int parse() {
    no_dot("parse");
    if (json())
      out_ << poset_to_json(poset_).dump(2) << '\n';
    else
      out_ << poset_to_text(poset_);
    return kExitOk;
  }

  int ideals() {
    no_dot("ideals");
    const IdealGraph& g = graph_ref();
    if (json()) {
      Json arr = Json::array();
      for (const auto& j : g.vertices()) arr.push_back(ideal_to_json(j));
      out_ << arr.dump(2) << '\n';
    } else {
      for (const auto& j : g.vertices()) out_ << j.to_string() << '\n';
    }
    return kExitOk;
  }

  int graph() {
    const IdealGraph& g = graph_ref();
    stage_.set("graph");
    if (dot()) {
      out_ << graph_to_dot(g, cfg_.principal_only);
    } else if (json()) {
      out_ << graph_to_json(g, cfg_.principal_only).dump(2) << '\n';
    } else {
      const Json j = graph_to_json(g, cfg_.principal_only);
      out_ << j["graph"].get<std::string>() << ": " << j["vertices"].size() << " vertices, " << j["edges"].size()
           << " edges, " << j["components"].size() << " components\n";
      for (const auto& v : j["vertices"])
        out_ << "v" << v["id"].get<int>() << ' ' << g.vertex(v["id"].get<int>()).to_string() << '\n';
      for (const auto& e : j["edges"]) out_ << "v" << e[0].get<int>() << " -- v" << e[1].get<int>() << '\n';
    }
    return kExitOk;
  }

  int mis() {
    no_dot("mis");
    const IdealGraph& g = graph_ref();
    const MisCatalog& cat = catalog();
    stage_.set("mis");
    const std::size_t global = cat.global_count();
    if (json()) {
      Json comps = Json::array();
      for (int r = 0; r < cat.component_count(); ++r) {
        const ComponentSummary s = summarize_component(g, cat, r);
        Json verts = Json::array();
        for (const auto& j : s.vertex_ideals) verts.push_back(ideal_to_json(j));
        comps.push_back(Json{{"id", r},
                             {"vertices", verts},
                             {"jmax", ideal_to_json(s.jmax)},
                             {"mis_size", s.mis_size},
                             {"sets", mis_list_to_json(poset_, cat.component(r))}});
      }
      Json doc{{"components", comps}, {"global_count", global}};
      if (global <= cfg_.max_mis) doc["global"] = mis_list_to_json(poset_, enumerate_global_mis(cat, cfg_.max_mis));
      out_ << doc.dump(2) << '\n';
      return kExitOk;
    }
    for (int r = 0; r < cat.component_count(); ++r) {
      const ComponentSummary s = summarize_component(g, cat, r);
      out_ << "component " << r << ": " << s.vertex_ideals.size() << " vertices, MIS size " << s.mis_size << ", "
           << cat.component(r).size() << " sets, jmax " << s.jmax.to_string() << '\n';
      for (const auto& m : cat.component(r)) out_ << "  " << ideal_list(m.ideals) << '\n';
    }
    out_ << "global maximum independent sets: " << global << '\n';
    return kExitOk;
  }

  int forests() {
    no_dot("forests");
    const MisCatalog& cat = catalog();
    stage_.set("forests");
    const auto sets = enumerate_global_mis(cat, cfg_.max_mis);
    std::vector<std::pair<PForest, DescentData>> rows;
    for (const auto& m : sets) rows.emplace_back(psi(poset_, m), mis_descents(poset_, m));
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (json()) {
      Json arr = Json::array();
      for (const auto& [f, d] : rows) {
        Json entry = forest_to_json(f);
        Json ideals = Json::array();
        for (const auto& j : d.ideal_descents) ideals.push_back(ideal_to_json(j));
        entry["descent_ideals"] = ideals;
        arr.push_back(entry);
      }
      out_ << arr.dump(2) << '\n';
      return kExitOk;
    }
    out_ << rows.size() << " P-forests\n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& [f, d] = rows[k];
      out_ << "F" << k + 1 << " parents " << join(f.parents()) << " Des " << join(d.element_descents) << '\n';
      std::istringstream tree(render_forest(f));
      for (std::string line; std::getline(tree, line);) out_ << "  " << line << '\n';
    }
    return kExitOk;
  }

  int fpx() {
    no_dot("fpx");
    require_natural(false);
    const IdealGraph& g = graph_ref();
    FactoredGF gf;
    if (cfg_.duplication_path) {
      stage_.set("fpx");
      gf = fpx_duplication_path(poset_, g);
    } else {
      const MisCatalog& cat = catalog();
      stage_.set("fpx");
      gf = factored_fpx(poset_, g, cat, cfg_.verify_extensions);
    }
    if (json())
      out_ << gf_to_json(gf).dump(2) << '\n';
    else
      out_ << pretty(gf) << '\n';
    return kExitOk;
  }

  int fpq_cmd() {
    no_dot("fpq");
    require_natural(false);
    const IdealGraph& g = graph_ref();
    const MisCatalog& cat = catalog();
    stage_.set("fpq");
    const QPoly poly = fpq(poset_, factored_fpx(poset_, g, cat, cfg_.verify_extensions));
    if (json()) {
      std::vector<std::string> coeffs;
      for (const auto& c : poly.coeffs()) coeffs.push_back(c.str());
      out_ << Json{{"coefficients", coeffs}}.dump(2) << '\n';
    } else {
      out_ << poly.to_string() << '\n';
    }
    return kExitOk;
  }

  int count() {
    no_dot("count");
    require_natural(true);
    const IdealGraph& g = graph_ref();
    const MisCatalog& cat = catalog();
    stage_.set("count");
    const BigInt c = count_linear_extensions(poset_, g, cat);
    if (json())
      out_ << Json{{"count", c.str()}}.dump(2) << '\n';
    else
      out_ << c.str() << '\n';
    return kExitOk;
  }

  int verify() {
    no_dot("verify");
    stage_.set("verify");
    VerifyBudgets budgets;
    budgets.max_ideals = cfg_.max_ideals;
    budgets.max_mis = cfg_.max_mis;
    budgets.max_extensions = cfg_.max_extensions;
    budgets.series_degree = cfg_.series_degree;
    const VerificationReport report = verify_all(poset_, budgets);
    out_ << (json() ? report.to_json() + "\n" : report.to_text());
    return report.all_passed() ? kExitOk : kExitTheorem;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  Stage& stage_;
  Poset poset_;
  std::optional<IdealGraph> g_;
  std::optional<MisCatalog> catalog_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Connected order ideals, P-forests and linear extension counts of finite posets", "pfactor"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool reads_input) {
    if (reads_input) {
      sub->add_option("-i,--input", cfg.input, "Poset file")->required();
      sub->add_flag("--relabel", cfg.relabel, "Relabel to a natural labelling first");
    }
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--max-ideals", cfg.max_ideals, "Cap on connected order ideals")->check(CLI::PositiveNumber);
    sub->add_option("--max-mis", cfg.max_mis, "Cap on maximum independent sets")->check(CLI::PositiveNumber);
    sub->add_option("--max-extensions", cfg.max_extensions, "Cap on enumerated linear extensions")
        ->check(CLI::PositiveNumber);
    sub->add_option("--series-degree", cfg.series_degree, "Total degree for series checks")
        ->check(CLI::Range(0, oracle::kSeriesMaxDegree));
    sub->add_option("--seed", cfg.seed, "Seed for random generation");
    sub->add_flag("--verify-extensions", cfg.verify_extensions, "Check descent data over every extension");
  };

  common(app.add_subcommand("parse", "Echo the parsed poset"), true);
  common(app.add_subcommand("ideals", "List connected order ideals"), true);
  auto* graph = app.add_subcommand("graph", "Intersection graph G_P (or H_P)");
  common(graph, true);
  graph->add_flag("--principal-subgraph", cfg.principal_only, "Only the principal ideals (H_P)");
  common(app.add_subcommand("mis", "Maximum independent sets per component"), true);
  common(app.add_subcommand("forests", "P-forests with their descent sets"), true);
  auto* fpx = app.add_subcommand("fpx", "Factored P-partition generating function");
  common(fpx, true);
  fpx->add_flag("--duplication-path", cfg.duplication_path, "Use the forest-with-duplications product");
  common(app.add_subcommand("fpq", "Major index polynomial of the linear extensions"), true);
  common(app.add_subcommand("count", "Number of linear extensions"), true);
  common(app.add_subcommand("verify", "Check every identity against brute force"), true);
  auto* gen = app.add_subcommand("gen", "Emit a random poset");
  common(gen, false);
  gen->add_option("--size", cfg.gen_size, "Number of elements")->check(CLI::Range(1, 64));
  gen->add_option("--density", cfg.gen_density, "Relation probability")->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--natural", cfg.gen_natural, "Keep the identity labelling");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  Stage stage;
  try {
    Command cmd(cfg, out, err, stage);
    return cmd.dispatch(app.get_subcommands().front()->get_name());
  } catch (const CapExceeded& e) {
    err << "error [" << stage.name() << "]: " << e.what() << '\n';
    return kExitCap;
  } catch (const TheoremViolation& e) {
    err << "theorem violation [" << stage.name() << "]: " << e.what() << '\n';
    return kExitTheorem;
  } catch (const InputError& e) {
    err << "error [" << stage.name() << "]: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace pfactor
