// hardy-lab: command-line front end. One experiment per invocation.
//
// Exit codes: 0 all asserted invariants held, 1 mathematical violation,
// 2 usage error (nothing written to the output).

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "hardy/identities.hpp"
#include "hardy/lattice.hpp"
#include "hardy/lp.hpp"
#include "hardy/sharpness.hpp"
#include "hardy/suites.hpp"
#include "hardy/weights.hpp"

using json = nlohmann::ordered_json;
using namespace hardy;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "a..b", "a,b,c" or "a".
std::vector<Index> parse_index_list(const std::string& s) {
  std::vector<Index> out;
  auto to_index = [&](const std::string& t) {
    std::size_t pos = 0;
    Index v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (t.empty() || pos != t.size()) throw UsageError("malformed integer '" + t + "' in list '" + s + "'");
    return v;
  };
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    const Index a = to_index(s.substr(0, dots)), b = to_index(s.substr(dots + 2));
    if (b < a) throw UsageError("empty range '" + s + "'");
    if (b - a > 10000000) throw UsageError("range '" + s + "' too long");
    for (Index n = a; n <= b; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_index(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

std::string cell(const json& v) {
  if (v.is_number_float()) return num(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

struct Report {
  json config = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  json extra = json::object();  // non-tabular results
  json violations = json::array();

  void row(std::vector<json> r) { rows.push_back(std::move(r)); }
  void violation(json v) { violations.push_back(std::move(v)); }
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json results = r.extra;
    json table = json::array();
    for (const auto& row : r.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < r.columns.size(); ++i) o[r.columns[i]] = row[i];
      table.push_back(o);
    }
    results["rows"] = table;
    json doc = {{"config", r.config},
                {"results", results},
                {"violations", r.violations},
                {"metadata", {{"version", HARDY_LAB_VERSION}, {"generated_at", utc_now()}}}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << "# hardy-lab " << HARDY_LAB_VERSION << "\n";
  out << "# config: " << r.config.dump() << "\n";
  for (const auto& [k, v] : r.extra.items()) out << "# " << k << ": " << (v.is_number_float() ? num(v.get<double>()) : v.dump()) << "\n";
  for (const auto& v : r.violations) out << "# violation: " << v.dump() << "\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i]);
    out << "\n";
  }
}

// ---- subcommands -------------------------------------------------------------------------

struct WeightsOpts {
  std::string family = "kpp", n = "1..20", mode = "auto";
  double param = 0.0;
};

// NaN when an evaluation path is undefined at this n.
template <class Fn>
double optional_value(Fn fn) {
  try {
    return fn();
  } catch (const std::domain_error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

Report run_weights(const WeightsOpts& o) {
  WeightModel base = WeightModel::parse(o.family, o.param);
  const EvalMode mode = parse_eval_mode(o.mode);
  const WeightModel model(base.family(), base.param(), mode);
  const auto ns = parse_index_list(o.n);
  for (Index n : ns)
    if (n < model.min_n()) throw UsageError(model.name() + " is defined for n >= " + std::to_string(model.min_n()));
  Report r;
  r.config = {{"subcommand", "weights"}, {"family", model.name()}, {"param", o.param}, {"mode", to_string(mode)}, {"n", o.n}};
  r.columns = {"n", "family", "direct", "series", "bound", "margin"};
  for (Index n : ns) {
    const double w = model(n), b = model.bound(n);
    r.row({n, model.name(), optional_value([&] { return model.direct(n); }), optional_value([&] { return model.series(n); }),
           b, w - b});
    if (w < b - 1e-14 * std::abs(b)) r.violation({{"n", n}, {"value", w}, {"bound", b}, {"detail", "weight below its proven bound"}});
  }
  return r;
}

struct IdentityOpts {
  std::string kind = "first";
  int m = 1;
  std::size_t instances = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::size_t max_vertices = 200;
  std::string graph;
};

Report run_identity(const IdentityOpts& o, int threads) {
  Report r;
  r.config = {{"subcommand", "identity"}, {"kind", o.kind},          {"m", o.m},
              {"instances", o.instances}, {"seed", o.seed},          {"tol", o.tol},
              {"max_vertices", o.max_vertices}};
  if (o.max_vertices < 2) throw UsageError("--max-vertices must be >= 2");
  IdentitySpec spec;
  if (o.kind != "lemma21" && o.kind != "green") {
    try {
      spec = IdentitySpec::parse(o.kind, o.m);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  SuiteSummary s;
  if (!o.graph.empty()) {
    Graph g;
    try {
      g = Graph::read_file(o.graph);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (g.num_vertices() == 0) throw UsageError("graph file '" + o.graph + "' has no edges");
    r.config["graph"] = o.graph;
    r.config["graph_vertices"] = g.num_vertices();
    r.config["graph_edges"] = g.num_edges();
    if (o.kind == "lemma21") s = lemma21_suite_on(g, o.instances, o.seed, o.tol, threads);
    else if (o.kind == "green") s = green_leibniz_suite_on(g, o.instances, o.seed, o.tol, threads);
    else s = identity_suite_on(g, spec, o.instances, o.seed, o.tol, threads);
  } else if (o.kind == "lemma21") {
    s = lemma21_suite(o.instances, o.seed, o.tol, o.max_vertices, threads);
  } else if (o.kind == "green") {
    s = green_leibniz_suite(o.instances, o.seed, o.tol, o.max_vertices, threads);
  } else {
    s = identity_suite(spec, o.instances, o.seed, o.tol, o.max_vertices, threads);
  }
  r.columns = {"suite", "instances", "max_relative_residual", "worst_instance", "worst_seed", "tolerance", "pass"};
  r.row({s.name, s.instances, s.worst, s.worst_instance, o.seed + s.worst_instance, s.tolerance, s.pass});
  if (!s.pass)
    r.violation({{"suite", s.name}, {"instance", s.worst_instance}, {"seed", o.seed + s.worst_instance}, {"relative_residual", s.worst}});
  return r;
}

struct SharpnessOpts {
  int ell = 1;
  std::string n_list = "100,1000";
  std::uint64_t seed = 0;
  double tol = 1e-12;
  int max_iter = 2000;
};

Report run_sharpness(const SharpnessOpts& o, int threads) {
  if (o.ell < 1) throw UsageError("--ell must be >= 1");
  const auto Ns = parse_index_list(o.n_list);
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    if (Ns[i] < o.ell) throw UsageError("every N must be >= ell");
    if (i && Ns[i] <= Ns[i - 1]) throw UsageError("--n-list must be strictly increasing");
  }
  Report r;
  r.config = {{"subcommand", "sharpness"}, {"ell", o.ell}, {"n_list", o.n_list}, {"seed", o.seed}, {"tol", o.tol}, {"max_iter", o.max_iter}};
  const SweepReport sw = eig_sweep(o.ell, Ns, EigOptions{o.tol, o.max_iter, o.seed}, threads);
  const double C = sharp_constant(o.ell);
  r.columns = {"N", "lambda_min", "sharp_constant", "gap", "iterations", "residual_rel"};
  for (const auto& row : sw.rows) {
    const auto& res = row.result;
    r.row({row.N, res.lambda_min, C, res.lambda_min - C, res.iterations, res.residual_rel});
    if (!(res.lambda_min > C)) r.violation({{"N", row.N}, {"lambda_min", res.lambda_min}, {"detail", "lambda_min <= sharp constant"}});
  }
  r.extra["nonincreasing"] = sw.nonincreasing;
  r.extra["strictly_decreasing"] = sw.strictly_decreasing;
  if (!sw.nonincreasing) r.violation({{"detail", "lambda_min increased with N"}});
  return r;
}

Report run_counterexample(const std::string& m_list) {
  const auto Ms = parse_index_list(m_list);
  for (Index M : Ms)
    if (M < 2) throw UsageError("every M must be >= 2");
  Report r;
  r.config = {{"subcommand", "counterexample"}, {"m_list", m_list}};
  r.columns = {"M", "sum_W", "lhs", "K", "rhs_partial", "ratio"};
  for (Index M : Ms) {
    const auto c = counterexample_build(M);
    r.row({M, c.sum_W, c.lhs, c.lhs * static_cast<double>(M), c.rhs_partial, c.ratio()});
    if (c.sum_W != 0) r.violation({{"M", M}, {"sum_W", c.sum_W}, {"detail", "sum of w_n is not zero"}});
  }
  return r;
}

struct ContinuumOpts {
  int ell = 2;
  std::string m_list = "256,512,1024", phi = "bump";
};

Report run_continuum(const ContinuumOpts& o) {
  TestFunction phi;
  try {
    phi = TestFunction::parse(o.phi);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto Ms = parse_index_list(o.m_list);
  Report r;
  r.config = {{"subcommand", "continuum"}, {"ell", o.ell}, {"m_list", o.m_list}, {"phi", phi.name()}};
  r.columns = {"M", "discrete_lhs", "continuous_lhs", "lhs_error", "discrete_rhs", "continuous_rhs", "rhs_error", "discrete_ratio"};
  for (Index M : Ms) {
    const auto c = continuum_probe(phi, M, o.ell);
    const double ratio = c.discrete_rhs != 0.0 ? c.discrete_lhs / c.discrete_rhs : 0.0;
    r.row({M, c.discrete_lhs, c.continuous_lhs, c.discrete_lhs - c.continuous_lhs, c.discrete_rhs, c.continuous_rhs,
           c.discrete_rhs - c.continuous_rhs, ratio});
    if (c.discrete_rhs != 0.0 && ratio < sharp_constant(o.ell) * (1.0 - 1e-12))
      r.violation({{"M", M}, {"ratio", ratio}, {"detail", "discrete Rayleigh quotient below the sharp constant"}});
  }
  return r;
}

struct ZdOpts {
  int d = 2;
  double alpha = 1.0;
  std::int64_t radius = 15;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
};

Report run_zd(const ZdOpts& o, int threads) {
  if (o.d < 2) throw UsageError("--d must be >= 2");
  if (!(o.alpha > 2.0 - o.d)) throw UsageError("--alpha must exceed 2 - d");
  if (o.radius < 5) throw UsageError("--radius must be >= 5");
  Report r;
  r.config = {{"subcommand", "zd"}, {"d", o.d}, {"alpha", o.alpha}, {"radius", o.radius}, {"trials", o.trials}, {"seed", o.seed}};
  const ZdReport rep = zd_inequality_check(o.alpha, o.d, o.radius, o.trials, o.seed, threads);
  r.extra["params"] = {{"d", o.d}, {"alpha", o.alpha}, {"gamma", zd_gamma(o.alpha, o.d)}, {"radius", o.radius}};
  r.extra["min_margin"] = rep.min_margin_rel;
  r.extra["max_identity_residual"] = rep.max_identity_residual;
  json table = json::array();
  for (const auto& row : leading_ratio_table(o.alpha, o.d, {5, 10, 20, 50, 100, 200}))
    table.push_back({{"t", row.t}, {"w_exact", row.exact}, {"leading_ratio", row.ratio}, {"remainder", row.remainder}});
  r.extra["leading_ratio_table"] = table;
  r.columns = {"trial", "seed", "lhs", "rhs", "margin", "relative_margin", "f_functional", "origin_term", "identity_residual"};
  for (const auto& t : rep.trials) {
    r.row({t.trial, t.seed, t.lhs, t.rhs, t.margin, t.scale > 0 ? t.margin / t.scale : 0.0, t.f_functional, t.origin_term,
           t.identity_residual});
    if (t.margin < -1e-12 * t.scale) r.violation({{"trial", t.trial}, {"seed", t.seed}, {"margin", t.margin}, {"scale", t.scale}});
  }
  return r;
}

struct LpOpts {
  double p = 2.0;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

Report run_lp(const LpOpts& o, int threads) {
  if (!(o.p > 1.0)) throw UsageError("--p must be > 1");
  Report r;
  r.config = {{"subcommand", "lp"}, {"p", o.p}, {"trials", o.trials}, {"seed", o.seed}};
  r.columns = {"suite", "instances", "worst", "worst_instance", "tolerance", "pass"};
  std::vector<SuiteSummary> suites = {picone_suite(o.p, o.trials, o.seed),
                                      landau_suite(o.p, o.trials, o.seed, 1e-12, threads),
                                      lp_hardy_suite(o.p, std::max<std::size_t>(1, o.trials / 10), o.seed)};
  if (o.p == 2.0) suites.push_back(p2_reduction_suite(std::max<std::size_t>(1, o.trials / 10), o.seed));
  for (const auto& s : suites) {
    r.row({s.name, s.instances, s.worst, s.worst_instance, s.tolerance, s.pass});
    if (!s.pass) r.violation({{"suite", s.name}, {"instance", s.worst_instance}, {"seed", o.seed + s.worst_instance}, {"worst", s.worst}});
  }
  r.extra["note"] = "the weighted l^p inequality is checked for nonnegative u, pairing the weight with u^p";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hardy-lab: numerical laboratory for discrete Hardy and Rellich inequalities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(HARDY_LAB_VERSION));
  std::string format = "csv", output;
  int threads = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", output, "Output path (default: standard output)");
    sub->add_option("--threads", threads, "Worker threads (0 = all; HARDY_LAB_THREADS caps)")->check(CLI::NonNegativeNumber);
  };

  WeightsOpts wo;
  auto* w = app.add_subcommand("weights", "Tabulate a weight family with its proven lower bound");
  w->add_option("--family", wo.family, "kpp, gks_reference, shifted_hardy, direct_hardy, leray, improved_rellich2, landau_constant")
      ->required();
  w->add_option("--param,--alpha,--p", wo.param, "Family parameter (alpha or p)");
  w->add_option("--n", wo.n, "Indices: a..b or a,b,c");
  w->add_option("--mode", wo.mode, "auto, direct or series")->check(CLI::IsMember({"auto", "direct", "series"}));
  add_common(w);

  IdentityOpts io;
  auto* id = app.add_subcommand("identity", "Random-instance residuals of the graph identities");
  id->add_option("--kind", io.kind, "first, second, iterated, odd, lemma21, green")
      ->check(CLI::IsMember({"first", "second", "iterated", "odd", "lemma21", "green"}));
  id->add_option("--m", io.m, "Order parameter for iterated/odd");
  id->add_option("--instances", io.instances, "Number of random instances")->check(CLI::PositiveNumber);
  id->add_option("--seed", io.seed, "Master seed");
  id->add_option("--tol", io.tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
  id->add_option("--max-vertices", io.max_vertices, "Largest random graph");
  id->add_option("--graph", io.graph, "Fixed graph in the 'x y b' edge-list format (random functions only)");
  add_common(id);

  SharpnessOpts so;
  auto* sh = app.add_subcommand("sharpness", "Smallest generalized eigenvalue of the truncated Rellich form");
  sh->add_option("--ell", so.ell, "Order")->required();
  sh->add_option("--n-list", so.n_list, "Truncations N (increasing)");
  sh->add_option("--seed", so.seed, "Start-vector seed");
  sh->add_option("--tol", so.tol, "Relative eigenvalue tolerance")->check(CLI::PositiveNumber);
  sh->add_option("--max-iter", so.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  add_common(sh);

  std::string m_list = "100,1000,10000";
  auto* ce = app.add_subcommand("counterexample", "Boundary-condition counterexample family");
  ce->add_option("--m-list", m_list, "Values of M");
  add_common(ce);

  ContinuumOpts co;
  auto* cn = app.add_subcommand("continuum", "Discrete vs continuous Rellich quotients for a scaled test function");
  cn->add_option("--ell", co.ell, "Order")->check(CLI::PositiveNumber);
  cn->add_option("--m-list", co.m_list, "Scales M (>= 32)");
  cn->add_option("--phi", co.phi, "bump, zero or poly:P,Q");
  add_common(cn);

  ZdOpts zo;
  auto* zd = app.add_subcommand("zd", "Weighted Hardy inequality on Z^d");
  zd->add_option("--d", zo.d, "Dimension");
  zd->add_option("--alpha", zo.alpha, "Exponent of V = |x|^alpha");
  zd->add_option("--radius", zo.radius, "Box radius R");
  zd->add_option("--trials", zo.trials, "Random trials");
  zd->add_option("--seed", zo.seed, "Master seed");
  add_common(zd);

  LpOpts lo;
  auto* lp = app.add_subcommand("lp", "l^p Picone, Landau and weighted Hardy checks");
  lp->add_option("--p", lo.p, "Exponent p > 1");
  lp->add_option("--trials", lo.trials, "Random trials")->check(CLI::PositiveNumber);
  lp->add_option("--seed", lo.seed, "Master seed");
  add_common(lp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report rep;
  try {
    if (w->parsed()) rep = run_weights(wo);
    else if (id->parsed()) rep = run_identity(io, threads);
    else if (sh->parsed()) rep = run_sharpness(so, threads);
    else if (ce->parsed()) rep = run_counterexample(m_list);
    else if (cn->parsed()) rep = run_continuum(co);
    else if (zd->parsed()) rep = run_zd(zo, threads);
    else if (lp->parsed()) rep = run_lp(lo, threads);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (output.empty()) {
    write_report(rep, format, std::cout);
  } else {
    std::ofstream f(output);
    if (!f) {
      std::cerr << "cannot open " << output << "\n";
      return 2;
    }
    write_report(rep, format, f);
  }
  for (const auto& v : rep.violations) std::cerr << "violation: " << v.dump() << "\n";
  return rep.violations.empty() ? 0 : 1;
}
