// Command-line front end. The machine-readable report goes to stdout in the
// chosen format, the human table to stderr.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gss/canonical.hpp"
#include "gss/complexes.hpp"
#include "gss/enumerate.hpp"
#include "gss/forms.hpp"
#include "gss/hopf.hpp"
#include "gss/series.hpp"
#include "gss/spectral.hpp"
#include "gss/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gss;

namespace {

enum Exit { kPass = 0, kFailure = 1, kUsage = 2, kInfeasible = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string cache_dir;
  int max_edges = 5;
  int max_isolated = 0;
  int b1 = -1;  // -1: unset
  std::uint64_t seed = 20240611;
  int threads = 1;
  std::string format = "json";
};

json header(const std::string& command, const std::string& target, const std::string& truncation) {
  json h;
  h["tool"] = "gss";
  h["version"] = kVersion;
  h["command"] = command;
  h["target"] = target;
  h["truncation"] = truncation;
  return h;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// A report is a header plus a table; csv keeps the header as comment lines.
struct Report {
  json head;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  json extra = json::object();

  void emit(const std::string& format) const {
    if (format == "csv") {
      for (const auto& [k, v] : head.items()) std::cout << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      for (const auto& [k, v] : extra.items()) std::cout << "# " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << columns[i];
      std::cout << "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          std::cout << (i ? "," : "") << csv_cell(row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
        }
        std::cout << "\n";
      }
      return;
    }
    json out;
    out["header"] = head;
    for (const auto& [k, v] : extra.items()) out[k] = v;
    json table = json::array();
    for (const auto& row : rows) {
      json r;
      for (std::size_t i = 0; i < columns.size(); ++i) r[columns[i]] = row[i];
      table.push_back(r);
    }
    out["rows"] = table;
    std::cout << out.dump(2) << "\n";
  }

  void table() const {
    std::vector<std::size_t> width(columns.size());
    auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], text(row[i]).size());
    }
    std::cerr << head["target"].get<std::string>() << " [" << head["truncation"].get<std::string>() << "]\n";
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::cerr << (i ? "  " : "") << cells[i] << std::string(width[i] - cells[i].size(), ' ');
      }
      std::cerr << "\n";
    };
    line(columns);
    for (const auto& row : rows) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(text(v));
      line(cells);
    }
  }
};

ComplexSpec make_spec(const std::string& kind, const RunConfig& cfg, int filtration) {
  ComplexSpec spec;
  try {
    spec.kind = parse_kind(kind);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  spec.truncation = {cfg.max_edges, cfg.max_isolated};
  spec.filtration = filtration;
  if (cfg.b1 >= 0) spec.b1 = cfg.b1;
  return spec;
}

// "a..b" or a comma list.
std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int d = lo; d <= hi; ++d) out.push_back(d);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw UsageError("bad degree list: " + text);
  }
  for (int d : out) {
    if (d < 0) throw UsageError("degrees must be nonnegative");
  }
  if (out.empty()) throw UsageError("empty degree list");
  return out;
}

int cmd_enumerate(const RunConfig& cfg, bool connected, int min_valence, bool no_tadpoles) {
  EnumerationConstraints c;
  c.max_edges = cfg.max_edges;
  c.max_isolated = cfg.max_isolated;
  c.connected = connected;
  c.min_valence = min_valence;
  c.no_tadpoles = no_tadpoles;
  if (cfg.b1 >= 0) c.fixed_b1 = cfg.b1;
  Report r;
  r.head = header("enumerate", "isomorphism classes of graphs", c.describe());
  r.columns = {"edges", "b1", "odd_automorphism", "graph"};
  for (const Graph& g : enumerate_graphs(c, cfg.cache_dir)) {
    const bool zero = OrderedGenerator::normalize(g).is_zero();
    r.rows.push_back({g.num_edges(), first_betti(g), zero, format_graph(g)});
  }
  r.extra["count"] = r.rows.size();
  r.emit(cfg.format);
  std::cerr << r.rows.size() << " graphs\n";
  return kPass;
}

int cmd_homology(const RunConfig& cfg, const std::string& kind, const std::string& degrees, int filtration) {
  const ComplexSpec spec = make_spec(kind, cfg, filtration);
  const auto h = homology(spec, parse_degrees(degrees), cfg.cache_dir);
  Report r;
  r.head = header("homology", "homology of " + kind_name(spec.kind), spec.describe());
  r.columns = {"degree", "dim", "reliable"};
  bool reliable = true;
  for (const auto& x : h) {
    r.rows.push_back({x.degree, x.dim, x.reliable});
    reliable = reliable && x.reliable;
  }
  r.emit(cfg.format);
  r.table();
  if (!reliable) {
    std::cerr << "warning: some degrees change under a larger truncation\n";
    return kInfeasible;
  }
  return kPass;
}

int cmd_pages(const RunConfig& cfg, const std::string& kind, int r_max, int filtration) {
  const ComplexSpec spec = make_spec(kind, cfg, filtration);
  const ChainComplex cx = build_complex(spec, cfg.cache_dir);
  const int complete = spec.kind == ComplexKind::FilteredC ? filtration : cfg.max_edges;
  FilteredComplex fc;
  try {
    fc = FilteredComplex::from_chain_complex(cx, complete);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("complex is not filtered by the first Betti number: ") + e.what());
  }
  SpectralSequence ss(fc);
  Report r;
  r.head = header("pages", "spectral sequence of the first Betti number filtration on " + kind_name(spec.kind),
                  spec.describe());
  r.columns = {"r", "s", "t", "dim", "reliable", "differential_rank"};
  bool reliable = true;
  for (const Page& p : ss.pages(r_max)) {
    for (const auto& [st, c] : p.cells) {
      auto d = p.differential.find(st);
      const int rk = d == p.differential.end() ? 0 : rank(d->second);
      r.rows.push_back({p.r, st.first, st.second, c.dim, c.reliable, rk});
      reliable = reliable && c.reliable;
    }
  }
  r.emit(cfg.format);
  r.table();
  return reliable ? kPass : kInfeasible;
}

int cmd_coproduct(const RunConfig& cfg, const std::string& text, bool localized) {
  Graph g;
  try {
    g = parse_graph(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const TensorLinComb t = localized ? reduced_coproduct_localized(LinComb::of(g)) : coproduct(g);
  Report r;
  r.head = header("coproduct",
                  localized ? "reduced coproduct after setting the vertex class to 1" : "subset coproduct",
                  format_graph(g));
  r.columns = {"coefficient", "left", "right"};
  for (const auto& [key, term] : t.terms()) {
    r.rows.push_back({term.coeff.get_str(), format_graph(term.left), format_graph(term.right)});
  }
  r.extra["terms"] = t.size();
  r.emit(cfg.format);
  r.table();
  return kPass;
}

Report series_table(const std::string& target, const std::string& trunc, const BivariateSeries& s) {
  Report r;
  r.head = header("series", target, trunc);
  r.columns = {"genus", "degree", "dim"};
  for (int g = 0; g <= s.max_genus(); ++g) {
    for (int n = 0; n <= s.max_degree(); ++n) {
      if (s.at(g, n) != 0) r.rows.push_back({g, n, s.at(g, n)});
    }
  }
  return r;
}

int cmd_series(const RunConfig& cfg, const std::string& which, int max_genus, int max_degree) {
  const std::string trunc = "genus <= " + std::to_string(max_genus) + ", degree <= " + std::to_string(max_degree);
  std::vector<BigradedGenerator> forms = omega_generators(max_genus);
  forms.push_back(epsilon_generator());
  Report r;
  if (which == "tensor") {
    r = series_table("tensor algebra on the shifted forms", trunc, tensor_series(max_genus, max_degree));
  } else if (which == "sym") {
    r = series_table("free graded-commutative algebra on shifted forms and epsilon", trunc,
                     pbw_dims(forms, AlgebraKind::Sym, max_genus, max_degree));
  } else if (which == "free-lie") {
    r = series_table("free graded Lie algebra on shifted forms and epsilon", trunc,
                     pbw_dims(forms, AlgebraKind::FreeLie, max_genus, max_degree));
  } else if (which == "wheels") {
    r = series_table("monomials in the wheel classes", trunc, wheel_monomial_counts(max_genus, max_degree));
  } else if (which == "euler") {
    r.head = header("series", "tensor series at t = -1", "genus <= " + std::to_string(max_genus));
    r.columns = {"genus", "coefficient"};
    const auto chi = euler_characteristics(max_genus);
    for (int g = 0; g <= max_genus; ++g) r.rows.push_back({g, chi[g]});
  } else if (which == "diagonal") {
    const DiagonalSeries d = diagonal_series(max_genus);
    r.head = header("series", "diagonal of the tensor series", "genus <= " + std::to_string(max_genus));
    r.columns = {"genus", "coefficient"};
    for (int g = 0; g <= max_genus; ++g) r.rows.push_back({g, d.closed_form.at(g, 2 * g)});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", growth_root());
    r.extra["alpha"] = buf;
    std::snprintf(buf, sizeof buf, "%.12f", growth_root_approx());
    r.extra["alpha_approx"] = buf;
  } else if (which == "exceptional") {
    const ExceptionalSets e = exceptional_sets();
    r.head = header("series", "exceptional sets of the diagonal refinement", "k <= " + std::to_string(e.bound));
    r.columns = {"set", "k"};
    for (int k : e.s_a) r.rows.push_back({"S_A", k});
    for (int k : e.s_sl) r.rows.push_back({"S_SL", k});
  } else {
    throw UsageError("unknown series: " + which + " (tensor, sym, free-lie, wheels, euler, diagonal, exceptional)");
  }
  r.emit(cfg.format);
  r.table();
  return kPass;
}

int cmd_pair_wheel(const RunConfig& cfg, int k, std::int64_t samples) {
  if (k < 1 || samples < kPairingBatches) throw UsageError("need k >= 1 and samples >= 32");
  const PairingEstimate p = wheel_pairing_mc(k, samples, cfg.seed, {}, cfg.threads);
  Report r;
  r.head = header("pair-wheel", "integral of omega^(4k+1) over the wheel Laplacian cell",
                  "W" + std::to_string(2 * k + 1) + ", seed " + std::to_string(cfg.seed));
  r.columns = {"k", "samples", "estimate", "stderr", "ratio_to_zeta"};
  r.rows.push_back({p.k, p.samples, p.estimate, p.stderr_, p.ratio_to_zeta});
  r.emit(cfg.format);
  r.table();
  return kPass;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::int64_t samples) {
  VerifyOptions opt;
  opt.cache_dir = cfg.cache_dir;
  opt.threads = cfg.threads;
  opt.seed = cfg.seed;
  opt.samples = samples;
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    bool known = false;
    for (const auto& n : suite_names()) known = known || n == suite;
    if (!known) {
      std::string list;
      for (const auto& n : suite_names()) list += " " + n;
      throw UsageError("unknown suite " + suite + "; one of all" + list);
    }
    names = {suite};
  }
  Report r;
  r.head = header("verify", suite == "all" ? "every suite" : suite, "per suite");
  r.columns = {"suite", "check", "pass", "detail"};
  json suites = json::array();
  bool pass = true;
  bool infeasible = false;
  for (const auto& name : names) {
    const SuiteReport s = run_suite(name, opt);
    json js;
    js["suite"] = s.suite;
    js["target"] = s.target;
    js["truncation"] = s.truncation;
    js["passed"] = s.passed();
    js["infeasible"] = s.infeasible;
    json values = json::object();
    for (const auto& [k, v] : s.values) values[k] = v;
    js["values"] = values;
    suites.push_back(js);
    for (const auto& c : s.checks) r.rows.push_back({s.suite, c.name, c.pass, c.detail});
    pass = pass && s.passed();
    infeasible = infeasible || s.infeasible;
    std::cerr << (s.passed() ? "PASS " : "FAIL ") << s.suite << ": " << s.target << "\n";
    for (const auto& [k, v] : s.values) std::cerr << "  " << k << " = " << v << "\n";
    for (const auto& c : s.checks) {
      std::cerr << "  [" << (c.pass ? "ok" : "FAILED") << "] " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                << "\n";
    }
  }
  r.extra["suites"] = suites;
  r.emit(cfg.format);
  if (infeasible) return kInfeasible;
  return pass ? kPass : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph complexes, their spectral sequences and the canonical form series"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for enumeration and complex caches");
  app.add_option("--seed", cfg.seed, "Seed for random checks and Monte Carlo");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  auto truncation = [&](CLI::App* sub) {
    sub->add_option("--max-edges", cfg.max_edges, "Edge bound")->check(CLI::PositiveNumber);
    sub->add_option("--max-isolated", cfg.max_isolated, "Isolated vertex bound")->check(CLI::NonNegativeNumber);
    sub->add_option("--b1", cfg.b1, "Fixed first Betti number")->check(CLI::NonNegativeNumber);
  };

  bool connected = false, no_tadpoles = false;
  int min_valence = 0;
  auto* en = app.add_subcommand("enumerate", "List graphs up to isomorphism");
  truncation(en);
  en->add_flag("--connected", connected);
  en->add_flag("--no-tadpoles", no_tadpoles);
  en->add_option("--min-valence", min_valence)->check(CLI::NonNegativeNumber);

  std::string kind, degrees = "0..4";
  int filtration = 0;
  auto* ho = app.add_subcommand("homology", "Homology of a graph complex");
  truncation(ho);
  ho->add_option("kind", kind, "FullC, FilteredC, GrC, GrCmodX, GrCLocal, IndecC, IndecGrC or GC2")->required();
  ho->add_option("degrees", degrees, "Degree range a..b or list a,b,c");
  ho->add_option("--filtration", filtration, "Betti bound for FilteredC")->check(CLI::NonNegativeNumber);

  int r_max = 3;
  auto* pa = app.add_subcommand("pages", "Pages of the first Betti number spectral sequence");
  truncation(pa);
  pa->add_option("kind", kind)->required();
  pa->add_option("--r-max", r_max)->check(CLI::PositiveNumber);
  pa->add_option("--filtration", filtration)->check(CLI::NonNegativeNumber);

  std::string graph_text;
  bool localized = false;
  auto* co = app.add_subcommand("coproduct", "Coproduct of an edge-ordered graph");
  co->add_option("graph", graph_text, "Graph as V=<core> ISO=<isolated> E=u-w,...")->required();
  co->add_flag("--localized", localized, "Reduced coproduct with the vertex class set to 1");

  std::string which;
  int max_genus = 12, max_degree = 40;
  auto* se = app.add_subcommand("series", "Dimension series of the form algebras");
  se->add_option("which", which, "tensor, sym, free-lie, wheels, euler, diagonal or exceptional")->required();
  se->add_option("--max-genus", max_genus)->check(CLI::PositiveNumber);
  se->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber);

  int k = 1;
  std::int64_t samples = 1000000;
  auto* pw = app.add_subcommand("pair-wheel", "Monte Carlo pairing of a wheel with its canonical form");
  pw->add_option("--k", k)->check(CLI::PositiveNumber);
  pw->add_option("--samples", samples);

  std::string suite = "all";
  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("suite", suite, "Suite name or all");
  ve->add_option("--samples", samples, "Monte Carlo draws for wheel-pairing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) return cmd_enumerate(cfg, connected, min_valence, no_tadpoles);
    if (*ho) return cmd_homology(cfg, kind, degrees, filtration);
    if (*pa) return cmd_pages(cfg, kind, r_max, filtration);
    if (*co) return cmd_coproduct(cfg, graph_text, localized);
    if (*se) return cmd_series(cfg, which, max_genus, max_degree);
    if (*pw) return cmd_pair_wheel(cfg, k, samples);
    if (*ve) return cmd_verify(cfg, suite, samples);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
