#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "starspec/bounds_report.hpp"
#include "starspec/canonical.hpp"
#include "starspec/enumeration.hpp"
#include "starspec/error.hpp"
#include "starspec/extremal.hpp"
#include "starspec/graph.hpp"
#include "starspec/graph6.hpp"
#include "starspec/records.hpp"
#include "starspec/search.hpp"
#include "starspec/spectra.hpp"
#include "starspec/star_forest.hpp"
#include "starspec/thresholds.hpp"

namespace starspec::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int to_int(const std::string& s, const char* what) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
  }
  return v;
}

void expect_params(const std::vector<std::string>& params, std::size_t count, const std::string& usage) {
  if (params.size() != count) throw UsageError("expected: " + usage);
}

/// A graph argument is a path when such a file exists, inline graph6 otherwise.
Graph load_graph(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw Error(Errc::io_error, "cannot read " + arg);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return graph6_decode(line);
    }
    throw Error(Errc::parse_error, arg + ": no graph6 line found", 0);
  }
  return graph6_decode(arg);
}

json vector_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

std::string join_values(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += fmt(v[i]);
  }
  return s;
}

struct Options {
  bool json = false;
  std::optional<std::string> out_path;
  unsigned threads = 0;
};

class Runner {
 public:
  Runner(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

  void emit(const json& j, const std::string& table) {
    if (opt_.json) {
      out_ << j.dump(2) << '\n';
    } else {
      out_ << table;
    }
  }

  int construct(const std::string& kind, const std::vector<std::string>& p) {
    Graph g;
    auto ints = [&](std::size_t count, const std::string& usage) {
      expect_params(p, count, "construct " + kind + " " + usage);
      std::vector<int> v;
      for (const auto& s : p) v.push_back(to_int(s, "parameter"));
      return v;
    };
    if (kind == "f") {
      const auto v = ints(2, "<n> <k>");
      g = make_F(v[0], v[1]);
    } else if (kind == "s") {
      const auto v = ints(2, "<n> <h>");
      g = make_S(v[0], v[1]);
    } else if (kind == "splus") {
      const auto v = ints(2, "<n> <h>");
      g = make_S_plus(v[0], v[1]);
    } else if (kind == "kb") {
      const auto v = ints(2, "<a> <b>");
      g = make_complete_bipartite(v[0], v[1]);
    } else if (kind == "joinreg") {
      const auto v = ints(3, "<n> <k> <d>");
      g = make_join_regular(v[0], v[1], v[2]);
    } else if (kind == "nearreg") {
      const auto v = ints(3, "<n> <k> <d>");
      g = make_join_near_regular(v[0], v[1], v[2]);
    } else if (kind == "complete") {
      g = complete_graph(ints(1, "<n>")[0]);
    } else if (kind == "empty") {
      g = empty_graph(ints(1, "<n>")[0]);
    } else if (kind == "path") {
      g = path_graph(ints(1, "<n>")[0]);
    } else if (kind == "cycle") {
      g = cycle_graph(ints(1, "<n>")[0]);
    } else if (kind == "forest") {
      expect_params(p, 1, "construct forest <d1,d2,...>");
      g = star_forest_graph(StarForest::parse(p[0]));
    } else if (kind == "complement") {
      expect_params(p, 1, "construct complement <graph>");
      g = complement(load_graph(p[0]));
    } else if (kind == "join" || kind == "union") {
      expect_params(p, 2, "construct " + kind + " <graph> <graph>");
      const Graph a = load_graph(p[0]);
      const Graph b = load_graph(p[1]);
      g = kind == "join" ? join(a, b) : graph_union(a, b);
    } else if (kind == "copies") {
      expect_params(p, 2, "construct copies <t> <graph>");
      g = disjoint_copies(to_int(p[0], "t"), load_graph(p[1]));
    } else {
      throw UsageError("unknown construction '" + kind + "'");
    }
    const std::string g6 = graph6_encode(g);
    emit({{"kind", kind}, {"graph6", g6}, {"order", g.order()}, {"edges", g.edge_count()}}, g6 + "\n");
    return kExitOk;
  }

  int info(const std::string& arg) {
    const Graph g = load_graph(arg);
    const auto deg = degrees(g);
    const auto parts = bipartition(g);
    json j = {
        {"graph6", graph6_encode(g)},
        {"order", g.order()},
        {"edges", g.edge_count()},
        {"degrees", deg},
        {"components", components(g).size()},
        {"connected", is_connected(g)},
        {"bipartite", parts.has_value()},
        {"triangle_free", is_triangle_free(g)},
    };
    std::ostringstream t;
    t << "graph6        " << graph6_encode(g) << '\n'
      << "order         " << g.order() << '\n'
      << "edges         " << g.edge_count() << '\n'
      << "degrees      ";
    for (int d : deg) t << ' ' << d;
    t << '\n'
      << "components    " << components(g).size() << '\n'
      << "connected     " << (is_connected(g) ? "true" : "false") << '\n'
      << "bipartite     " << (parts ? "true" : "false") << '\n'
      << "triangle_free " << (is_triangle_free(g) ? "true" : "false") << '\n';
    emit(j, t.str());
    return kExitOk;
  }

  int canon(const std::string& arg) {
    const Graph g = load_graph(arg);
    const Graph c = canonical_form(g, kCanonicalMaxOrder);
    const std::string code = canonical_code(g, kCanonicalMaxOrder).to_hex();
    emit({{"graph6", graph6_encode(c)}, {"code", code}}, graph6_encode(c) + "\n");
    return kExitOk;
  }

  int scalar(const std::string& which, const std::string& arg) {
    const Graph g = load_graph(arg);
    double v = 0.0;
    if (which == "rho") {
      v = spectral_radius(g);
    } else if (which == "leig") {
      v = least_eigenvalue(g);
    } else {
      v = signless_laplacian_radius(g);
    }
    emit({{"graph6", graph6_encode(g)}, {"quantity", which}, {"value", v}}, fmt(v) + "\n");
    return kExitOk;
  }

  int spectrum(const std::string& arg, bool signless) {
    const Graph g = load_graph(arg);
    const SpectrumResult s = signless ? signless_laplacian_spectrum(g) : adjacency_spectrum(g);
    emit({{"graph6", graph6_encode(g)},
          {"matrix", signless ? "signless_laplacian" : "adjacency"},
          {"eigenvalues", vector_json(s.eigenvalues)},
          {"method", s.method},
          {"sweeps", s.sweeps},
          {"max_residual", s.max_residual}},
         join_values(s.eigenvalues) + "\n");
    return kExitOk;
  }

  int perron(const std::string& arg) {
    const Graph g = load_graph(arg);
    const PerronData p = perron_vector(g);
    const PerronFloor f = check_perron_floor(g);
    json j = {
        {"graph6", graph6_encode(g)},
        {"rho", p.rho},
        {"vector", vector_json(p.vector)},
        {"min_entry", p.min_entry},
        {"residual", p.residual},
        {"floor", p.rho > 0.0 ? json(1.0 / p.rho) : json(nullptr)},
        {"floor_margin", f.margin},
        {"floor_holds", f.holds},
    };
    std::ostringstream t;
    t << "rho          " << fmt(p.rho) << '\n'
      << "vector       " << join_values(p.vector) << '\n'
      << "min_entry    " << fmt(p.min_entry) << '\n'
      << "floor        " << (p.rho > 0.0 ? fmt(1.0 / p.rho) : std::string("none")) << '\n'
      << "floor_margin " << fmt(f.margin) << '\n'
      << "floor_holds  " << (f.holds ? "true" : "false") << '\n';
    emit(j, t.str());
    return kExitOk;
  }

  int free(const std::string& arg, const std::string& forest, bool oracle) {
    const Graph g = load_graph(arg);
    const StarForest f = StarForest::parse(forest);
    const bool contains = oracle ? contains_star_forest_oracle(g, f) : contains_star_forest(g, f);
    emit({{"graph6", graph6_encode(g)}, {"forest", f.to_string()}, {"f_free", !contains}, {"contains", contains}},
         std::string(contains ? "false" : "true") + "\n");
    return kExitOk;
  }

  int bound(const std::string& name, const std::vector<std::string>& p) {
    BoundReport r;
    auto ints = [&](std::size_t count, const std::string& usage) {
      expect_params(p, count, "bound " + name + " " + usage);
      std::vector<int> v;
      for (const auto& s : p) v.push_back(to_int(s, "parameter"));
      return v;
    };
    if (name == "t17") {
      const auto v = ints(3, "<n> <k> <dk>");
      r = report_spectral_bound(v[0], v[1], v[2]);
    } else if (name == "t18") {
      const auto v = ints(2, "<n> <k>");
      r = report_bipartite_bound(v[0], v[1]);
    } else if (name == "c19") {
      const auto v = ints(2, "<n> <k>");
      r = report_least_eigenvalue_bound(v[0], v[1]);
    } else if (name == "conj32") {
      const auto v = ints(3, "<n> <k> <dk>");
      r = report_signless_bound(v[0], v[1], v[2]);
    } else if (name == "l21" || name == "t12") {
      expect_params(p, 2, "bound " + name + " <n> <forest>");
      const int n = to_int(p[0], "n");
      const StarForest f = StarForest::parse(p[1]);
      r = name == "l21" ? report_edge_bound_coarse(n, f) : report_edge_bound_large_order(n, f);
    } else {
      throw UsageError("unknown bound '" + name + "'");
    }
    std::ostringstream t;
    t << r.name << ' ' << format_value(r) << '\n';
    if (r.attained_by) t << "attained_by " << *r.attained_by << '\n';
    emit(to_json(r), t.str());
    return kExitOk;
  }

  int threshold(const std::string& kind, const std::string& forest) {
    const BoundReport r = report_threshold(parse_threshold_kind(kind), StarForest::parse(forest));
    emit(to_json(r), format_value(r) + "\n");
    return kExitOk;
  }

  int enumerate(int n, const std::string& cls) {
    const auto graphs = enumerate_graphs(n, parse_graph_class(cls));
    json list = json::array();
    std::string t;
    for (const Graph& g : graphs) {
      const std::string g6 = graph6_encode(g);
      list.push_back(g6);
      t += g6 + '\n';
    }
    emit({{"n", n}, {"class", cls}, {"count", graphs.size()}, {"graphs", list}}, t);
    return kExitOk;
  }

  int search(int n, const std::string& forest, const std::string& cls) {
    const SearchRecord rec = extremal_search(n, StarForest::parse(forest), parse_graph_class(cls), opt_.threads);
    if (opt_.out_path) write_records(std::span<const SearchRecord>(&rec, 1), *opt_.out_path);
    auto opt_num = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string("none"); };
    std::ostringstream t;
    t << "n                " << rec.n << '\n'
      << "class            " << graph_class_name(rec.cls) << '\n'
      << "forest           " << rec.forest.to_string() << '\n'
      << "count_enumerated " << rec.count_enumerated << '\n'
      << "count_f_free     " << rec.count_f_free << '\n'
      << "max_rho          " << fmt(rec.max_rho) << '\n'
      << "argmax          ";
    for (const auto& g6 : rec.argmax) t << ' ' << g6;
    t << '\n'
      << "bound_value      " << opt_num(rec.bound_value) << '\n'
      << "bound_applicable " << (rec.bound_applicable ? "true" : "false") << '\n'
      << "gap              " << opt_num(rec.gap) << '\n'
      << "family_graph6    " << rec.family_graph6.value_or("none") << '\n'
      << "family_rho       " << opt_num(rec.family_rho) << '\n';
    emit(to_json(rec), t.str());
    return kExitOk;
  }

  int conjecture(int n, const std::string& forest, const std::string& cls, std::size_t top) {
    const ConjectureReport rep =
        test_conjecture_q(n, StarForest::parse(forest), parse_graph_class(cls), top, opt_.threads);
    std::ostringstream t;
    t << "bound " << fmt(rep.bound) << "  f_free " << rep.count_f_free << "  max_margin "
      << fmt(rep.max_margin) << "  exceeding " << rep.exceeding.size() << '\n';
    t << "graph6              q                   margin\n";
    auto row = [&](const MarginRow& r, const char* tag) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-19s %-19s %-19s%s\n", r.graph6.c_str(), fmt(r.q).c_str(),
                    fmt(r.margin).c_str(), tag);
      t << buf;
    };
    for (const auto& r : rep.top) row(r, "");
    if (rep.family) row(*rep.family, " family");
    emit(to_json(rep), t.str());
    return kExitOk;
  }

  int verify_edge(int n, const std::string& forest, const std::string& cls) {
    const StarForest f = StarForest::parse(forest);
    const auto bad = verify_edge_bound(n, f, parse_graph_class(cls), opt_.threads);
    json rows = json::array();
    std::ostringstream t;
    for (const auto& v : bad) {
      rows.push_back({{"graph6", v.graph6}, {"edges", v.edges}, {"bound", v.bound}});
      t << v.graph6 << " edges " << v.edges << " > " << v.bound << '\n';
    }
    t << "violations " << bad.size() << '\n';
    emit({{"suite", "edge"}, {"n", n}, {"forest", f.to_string()}, {"class", cls}, {"violations", rows}}, t.str());
    return bad.empty() ? kExitOk : kExitViolation;
  }

  int verify_join(int n, int k, int d) {
    const JoinCheck c = check_join_bound(n, k, d);
    const bool ok = c.equality_holds && c.deletion_strict;
    json j = {
        {"suite", "lemma23"},
        {"n", c.n},
        {"k", c.k},
        {"d", c.d},
        {"bound", c.bound},
        {"rho_regular", c.rho_regular},
        {"rho_deleted", c.rho_deleted ? json(*c.rho_deleted) : json(nullptr)},
        {"equality_holds", c.equality_holds},
        {"deletion_strict", c.deletion_strict},
    };
    std::ostringstream t;
    t << "bound           " << fmt(c.bound) << '\n'
      << "rho_regular     " << fmt(c.rho_regular) << '\n'
      << "rho_deleted     " << (c.rho_deleted ? fmt(*c.rho_deleted) : std::string("none")) << '\n'
      << "equality_holds  " << (c.equality_holds ? "true" : "false") << '\n'
      << "deletion_strict " << (c.deletion_strict ? "true" : "false") << '\n';
    emit(j, t.str());
    return ok ? kExitOk : kExitViolation;
  }

  int verify_bip(int n, const std::string& forest, const std::string& cls) {
    const StarForest f = StarForest::parse(forest);
    const auto bad = verify_bipartite(n, f, parse_graph_class(cls), opt_.threads);
    json rows = json::array();
    std::ostringstream t;
    for (const auto& v : bad) {
      rows.push_back({{"graph6", v.graph6}, {"property", v.property}, {"value", v.value}, {"limit", v.limit}});
      t << v.graph6 << ' ' << v.property << ' ' << fmt(v.value) << " > " << fmt(v.limit) << '\n';
    }
    t << "violations " << bad.size() << '\n';
    emit({{"suite", "bipartite"}, {"n", n}, {"forest", f.to_string()}, {"class", cls}, {"violations", rows}},
         t.str());
    return bad.empty() ? kExitOk : kExitViolation;
  }

 private:
  std::ostream& out_;
  const Options& opt_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal tools for star-forest-free graphs", "starspec"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print JSON instead of a table");

  std::function<int(Runner&)> action;
  std::string a, b, c;
  std::vector<std::string> params;
  int n = 0;
  bool flag = false;
  std::string cls = "all";
  std::size_t top = 10;

  auto* construct = app.add_subcommand("construct", "Build a named graph and print its graph6");
  construct->add_option("kind", a, "f|s|splus|kb|joinreg|nearreg|complete|empty|path|cycle|forest|"
                                   "complement|join|union|copies")
      ->required();
  construct->add_option("params", params, "Construction parameters");
  construct->callback([&] { action = [&](Runner& r) { return r.construct(a, params); }; });

  auto* info = app.add_subcommand("info", "Basic structure of a graph");
  info->add_option("graph", a, "graph6 string or file")->required();
  info->callback([&] { action = [&](Runner& r) { return r.info(a); }; });

  auto* canon = app.add_subcommand("canon", "Canonical form of a graph");
  canon->add_option("graph", a, "graph6 string or file")->required();
  canon->callback([&] { action = [&](Runner& r) { return r.canon(a); }; });

  for (const char* name : {"rho", "leig", "q"}) {
    auto* sub = app.add_subcommand(name, name == std::string("rho")    ? "Spectral radius"
                                         : name == std::string("leig") ? "Least adjacency eigenvalue"
                                                                       : "Signless Laplacian radius");
    sub->add_option("graph", a, "graph6 string or file")->required();
    sub->callback([&, name] { action = [&, name](Runner& r) { return r.scalar(name, a); }; });
  }

  auto* spectrum = app.add_subcommand("spectrum", "All eigenvalues, descending");
  spectrum->add_option("graph", a, "graph6 string or file")->required();
  spectrum->add_flag("--signless", flag, "Use Q = D + A instead of A");
  spectrum->callback([&] { action = [&](Runner& r) { return r.spectrum(a, flag); }; });

  auto* perron = app.add_subcommand("perron", "Perron vector and its 1/rho floor");
  perron->add_option("graph", a, "graph6 string or file")->required();
  perron->callback([&] { action = [&](Runner& r) { return r.perron(a); }; });

  auto* free = app.add_subcommand("free", "Print true when the graph is F-free");
  free->add_option("graph", a, "graph6 string or file")->required();
  free->add_option("forest", b, "Star forest, e.g. 2,1")->required();
  free->add_flag("--oracle", flag, "Use exhaustive search instead of flows");
  free->callback([&] { action = [&](Runner& r) { return r.free(a, b, flag); }; });

  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form bound");
  bound->add_option("name", a, "t17|t18|c19|conj32|l21|t12")->required();
  bound->add_option("params", params, "Bound parameters");
  bound->callback([&] { action = [&](Runner& r) { return r.bound(a, params); }; });

  auto* threshold = app.add_subcommand("threshold", "Exact order threshold");
  threshold->add_option("kind", a, "thm_1_7|thm_3_1|f_value|thm_1_8_and_cor_1_9")->required();
  threshold->add_option("forest", b, "Star forest")->required();
  threshold->callback([&] { action = [&](Runner& r) { return r.threshold(a, b); }; });

  auto* enumerate = app.add_subcommand("enumerate", "List a graph class up to isomorphism");
  enumerate->add_option("n", n, "Order")->required();
  enumerate->add_option("class", cls, "all|connected|bipartite|connected_bipartite")->required();
  enumerate->callback([&] { action = [&](Runner& r) { return r.enumerate(n, cls); }; });

  auto* search = app.add_subcommand("search", "Maximum spectral radius over F-free graphs");
  search->add_option("n", n, "Order")->required();
  search->add_option("forest", b, "Star forest")->required();
  search->add_option("class", cls, "Graph class")->required();
  search->add_option("--out", opt.out_path, "Append the record as a JSON line to this file");
  search->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
  search->callback([&] { action = [&](Runner& r) { return r.search(n, b, cls); }; });

  auto* conjecture = app.add_subcommand("conjecture", "Signless Laplacian margins against the conjectured bound");
  conjecture->add_option("n", n, "Order")->required();
  conjecture->add_option("forest", b, "Star forest")->required();
  conjecture->add_option("class", cls, "Graph class")->required();
  conjecture->add_option("--top", top, "Rows to print");
  conjecture->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
  conjecture->callback([&] { action = [&](Runner& r) { return r.conjecture(n, b, cls, top); }; });

  auto* verify = app.add_subcommand("verify", "Run a property suite; exit 3 on violations");
  verify->add_option("suite", a, "edge|lemma23|bipartite")->required();
  verify->add_option("params", params, "edge/bipartite: <n> <forest> [class]; lemma23: <n> <k> <d>");
  verify->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
  verify->callback([&] {
    action = [&](Runner& r) {
      if (a == "lemma23") {
        expect_params(params, 3, "verify lemma23 <n> <k> <d>");
        return r.verify_join(to_int(params[0], "n"), to_int(params[1], "k"), to_int(params[2], "d"));
      }
      if (a != "edge" && a != "bipartite") throw UsageError("unknown suite '" + a + "'");
      if (params.size() < 2 || params.size() > 3) {
        throw UsageError("expected: verify " + a + " <n> <forest> [class]");
      }
      const std::string suite_cls = params.size() == 3 ? params[2] : (a == "edge" ? "all" : "bipartite");
      const int order = to_int(params[0], "n");
      return a == "edge" ? r.verify_edge(order, params[1], suite_cls) : r.verify_bip(order, params[1], suite_cls);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  Runner runner(out, opt);
  try {
    return action(runner);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error " << errc_name(e.code()) << ": " << e.what();
    if (e.position() != Error::npos) err << " (at " << e.position() << ')';
    err << '\n';
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "error ParseError: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace starspec::cli
