#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "toricfano/fanobundle.hpp"
#include "toricfano/numcheck.hpp"

namespace toricfano::cli {

using nlohmann::json;

namespace {

json rationals(const RationalVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

json matrix_json(const RationalMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(rationals(m.row(i)));
  return a;
}

json flag_json(const FlagManifold& flag) {
  const auto& rs = flag.root_system();
  json f;
  json types = json::array();
  for (const auto& t : rs.components()) types.push_back(t.name());
  f["components"] = types;
  f["rank"] = rs.rank();
  json crossed = json::array();
  for (std::size_t i : flag.painting().crossed) crossed.push_back(i + 1);
  f["crossed"] = crossed;
  f["zk_dim"] = flag.zk_dim();
  f["root_count"] = rs.roots().size();
  f["r_m_plus_count"] = flag.r_m_plus().size();
  json roots = json::array();
  for (std::size_t k : flag.r_m_plus()) roots.push_back(rs.roots()[k]);
  f["r_m_plus"] = roots;
  f["h_v"] = rationals(flag.h_v().coords);
  json margins = json::array();
  bool in_chamber = true;
  for (const auto& m : flag.chamber_margins(flag.h_v())) {
    margins.push_back({{"root", rs.roots()[m.root]}, {"value", to_string(m.value)}});
    in_chamber = in_chamber && m.value > 0;
  }
  f["h_v_margins"] = margins;
  f["h_v_in_chamber"] = in_chamber;
  return f;
}

json fiber_json(const FiberConfig& fiber, json& warnings) {
  json f;
  f["description"] = fiber.description;
  f["dim"] = fiber.fan.dim;
  const auto d = validate_fan(fiber.fan);
  f["smooth"] = d.smooth;
  f["complete"] = d.complete;
  f["effective"] = d.effective;
  f["diagnostics"] = d.messages;
  if (!d.smooth || !d.complete) {
    f["fano"] = false;
    return f;
  }
  const bool fano = is_fano(fiber.fan);
  f["fano"] = fano;
  if (!fano) warnings.push_back("fan is not Fano");
  json vertices = json::array();
  for (const auto& v : canonical_polytope(fiber.fan).vertices) vertices.push_back(rationals(v));
  f["vertices"] = vertices;
  return f;
}

const FiberConfig& require_fiber(const BundleConfig& config) {
  if (!config.fiber) throw ConfigError("fiber", "missing field");
  return *config.fiber;
}

void require_smooth_complete(const FiberConfig& fiber) {
  const auto d = validate_fan(fiber.fan);
  if (!d.smooth || !d.complete) {
    std::string msg = "fan must be smooth and complete";
    for (const auto& m : d.messages) msg += "; " + m;
    throw ConfigError("fiber", msg);
  }
}

std::string integrality_name(IntegralityStatus s) {
  switch (s) {
    case IntegralityStatus::integral: return "integral";
    case IntegralityStatus::not_integral: return "not_integral";
    case IntegralityStatus::not_checked: return "not_checked";
  }
  return "not_checked";
}

TauMap make_tau(const FlagManifold& flag, const BundleConfig& config, const RationalMatrix& matrix) {
  try {
    return TauMap::make(flag, matrix, resolve_zk_basis(flag, config.zk_basis, "zk_basis"));
  } catch (const ConfigError&) {
    throw;
  } catch (const InputError& e) {
    throw ConfigError("tau", e.what());
  }
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

}  // namespace

json oracle_report(std::size_t m) {
  const Fan fan = projective_space(m);
  const Polytope poly = canonical_polytope(fan);
  json report;
  bool pass = true;

  json fixed = json::array();
  for (std::size_t idx = 0; idx <= m; ++idx) {
    std::vector<std::complex<double>> z(m + 1, 0.0);
    z[idx] = 1.0;
    const numcheck::SamplePoint p(z);
    const auto delta = numcheck::fs_delta(m, p);
    const auto div = numcheck::divergence_delta(m, p);
    const auto exact = numcheck::fixed_point_delta(m, idx);
    double err = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      err = std::max(err, std::abs(delta[j] - to_double(poly.vertices[idx][j])));
      err = std::max(err, std::abs(div[j] - to_double(poly.vertices[idx][j])));
    }
    const bool exact_ok = exact == poly.vertices[idx];
    pass = pass && exact_ok && err < 1e-8;
    fixed.push_back({{"index", idx},
                     {"vertex", rationals(poly.vertices[idx])},
                     {"exact_trace", rationals(exact)},
                     {"exact_matches_vertex", exact_ok},
                     {"fs_delta", delta},
                     {"divergence_delta", div},
                     {"max_abs_error", err}});
  }
  report["fixed_points"] = fixed;

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  constexpr std::size_t sample_count = 200;
  for (std::size_t s = 0; s < sample_count; ++s) {
    std::vector<std::complex<double>> z(m + 1);
    for (auto& c : z) c = {gauss(rng), gauss(rng)};
    const auto delta = numcheck::fs_delta(m, numcheck::SamplePoint(z));
    for (const auto& ray : fan.rays) {
      double pairing = 0.0;
      for (std::size_t j = 0; j < m; ++j) pairing += delta[j] * static_cast<double>(ray[j]);
      worst = std::max(worst, -1.0 - pairing);
    }
  }
  const bool inside = worst <= 1e-6;
  pass = pass && inside;
  report["samples"] = {{"count", sample_count}, {"max_halfspace_violation", worst}, {"within_tolerance", inside}};

  const std::size_t samples = m == 1 ? 10000 : m == 2 ? 100000 : 1000000;
  const double tolerance = m == 1 ? 1e-4 : 1e-3;
  const auto bary = numcheck::barycenter_integral(m, samples);
  double norm = 0.0;
  for (double b : bary) norm += b * b;
  norm = std::sqrt(norm);
  pass = pass && norm < tolerance;
  report["barycenter"] = {
      {"samples", samples}, {"value", bary}, {"norm", norm}, {"tolerance", tolerance}, {"pass", norm < tolerance}};
  report["pass"] = pass;
  return report;
}

json cmd_flag_info(const BundleConfig& config, const Options&) {
  json report;
  report["command"] = "flag-info";
  json warnings = json::array();
  const auto flag = build_flag(config);
  if (flag.zk_dim() == 0) warnings.push_back("empty painting: no bundle possible (m>0)");
  report["flag"] = flag_json(flag);
  report["warnings"] = warnings;
  return report;
}

json cmd_polytope(const BundleConfig& config, const Options& options) {
  const auto& fiber = require_fiber(config);
  require_smooth_complete(fiber);
  json report;
  report["command"] = "polytope";
  json warnings = json::array();
  report["fiber"] = fiber_json(fiber, warnings);
  if (options.oracle) {
    if (fiber.projective_dim)
      report["oracle"] = oracle_report(*fiber.projective_dim);
    else
      warnings.push_back("--oracle applies only to projective_space fibers; skipped");
  }
  report["warnings"] = warnings;
  return report;
}

json cmd_check(const BundleConfig& config, const Options& options) {
  const auto& fiber = require_fiber(config);
  require_smooth_complete(fiber);
  if (!config.tau) throw ConfigError("tau", "missing field");
  const auto flag = build_flag(config);
  if (fiber.fan.dim > 0 && flag.zk_dim() == 0)
    throw ConfigError("base.crossed", "empty painting: z(k) = 0 cannot map onto a rank " +
                                          std::to_string(fiber.fan.dim) + " torus");
  const TauMap tau = make_tau(flag, config, *config.tau);
  std::optional<std::vector<VectorH>> cochar;
  cochar = resolve_zk_basis(flag, config.cocharacter_basis, "cocharacter_basis");

  json report;
  report["command"] = "check";
  report["config"] = config.raw;
  json warnings = json::array();
  report["flag"] = flag_json(flag);
  report["fiber"] = fiber_json(fiber, warnings);

  json basis = json::array();
  for (const auto& b : tau.basis()) basis.push_back(rationals(b.coords));
  report["tau"] = {{"matrix", matrix_json(tau.matrix())},
                   {"basis", basis},
                   {"surjective", tau.surjective()},
                   {"integrality", integrality_name(check_tau_integrality(flag, tau, cochar))}};
  if (!tau.surjective()) warnings.push_back("tau is not surjective onto the fiber torus (rank < m)");

  const auto verdict = fano_check(flag, fiber.fan, tau);
  const auto polytope = canonical_polytope(fiber.fan);
  const auto& roots = flag.root_system().roots();
  auto margin_json = [&](const Margin& m) {
    return json{{"vertex", m.vertex},
                {"vertex_coords", rationals(polytope.vertices[m.vertex])},
                {"root", roots[m.root]},
                {"value", to_string(m.value)}};
  };
  json margins = json::array();
  for (const auto& m : verdict.margins) margins.push_back(margin_json(m));
  json violations = json::array();
  for (const auto& m : verdict.violations) violations.push_back(margin_json(m));
  report["margins"] = margins;
  json v{{"is_fano", verdict.is_fano},
         {"fiber_fano", verdict.fiber_fano},
         {"violations", violations},
         {"margin_count", verdict.margins.size()}};
  if (!verdict.margins.empty()) {
    const auto min = std::min_element(verdict.margins.begin(), verdict.margins.end(),
                                      [](const Margin& a, const Margin& b) { return a.value < b.value; });
    v["min_margin"] = to_string(min->value);
  }
  report["verdict"] = v;
  if (options.oracle) {
    if (fiber.projective_dim)
      report["oracle"] = oracle_report(*fiber.projective_dim);
    else
      warnings.push_back("--oracle applies only to projective_space fibers; skipped");
  }
  report["warnings"] = warnings;
  return report;
}

json cmd_scan(const BundleConfig& config, const Options& options) {
  const auto& fiber = require_fiber(config);
  require_smooth_complete(fiber);
  if (!config.scan) throw ConfigError("scan", "missing field");
  const auto flag = build_flag(config);
  const std::size_t m = fiber.fan.dim;
  const std::size_t k = config.zk_basis ? config.zk_basis->size() : flag.zk_dim();
  if (m > 0 && flag.zk_dim() == 0)
    throw ConfigError("base.crossed", "empty painting: z(k) = 0 cannot map onto a positive-rank torus");
  auto scan = *config.scan;
  if (options.max) {
    if (scan.mode == ScanConfig::Mode::scalar)
      scan.to = *options.max;
    else
      scan.bound = *options.max;
    if (scan.mode == ScanConfig::Mode::box && scan.bound < 0) throw ConfigError("--max", "must be nonnegative");
  }

  // Work list in canonical lexicographic order.
  std::vector<RationalMatrix> items;
  double count = 0.0;
  if (scan.mode == ScanConfig::Mode::scalar) {
    if (!config.tau) throw ConfigError("tau", "scalar scan needs a base tau");
    count = scan.to >= scan.from ? static_cast<double>(scan.to - scan.from + 1) : 0.0;
  } else {
    count = std::pow(2.0 * static_cast<double>(scan.bound) + 1.0, static_cast<double>(m * k));
  }
  if (count > static_cast<double>(options.cap)) {
    std::ostringstream msg;
    msg << "scan would evaluate " << std::setprecision(0) << std::fixed << count << " instances, above the cap of "
        << options.cap << "; raise --cap or shrink the range";
    throw ConfigError("scan", msg.str());
  }
  if (scan.mode == ScanConfig::Mode::scalar) {
    for (long long s = scan.from; s <= scan.to; ++s) {
      RationalMatrix t = *config.tau;
      for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) *= s;
      items.push_back(std::move(t));
    }
  } else {
    const std::size_t cells = m * k;
    std::vector<long long> digits(cells, -scan.bound);
    for (;;) {
      RationalMatrix t(m, k);
      for (std::size_t c = 0; c < cells; ++c) t(c / k, c % k) = digits[c];
      items.push_back(std::move(t));
      std::size_t pos = cells;
      while (pos > 0 && digits[pos - 1] == scan.bound) digits[--pos] = -scan.bound;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }

  const bool fiber_fano = is_fano(fiber.fan);
  const Polytope polytope = canonical_polytope(fiber.fan);
  const auto basis = resolve_zk_basis(flag, config.zk_basis, "zk_basis");
  struct Outcome {
    bool is_fano = false;
    bool surjective = false;
    std::optional<Rational> min_margin;
  };
  auto evaluate_item = [&](const RationalMatrix& matrix) {
    const TauMap tau = TauMap::make(flag, matrix, basis);
    Outcome o;
    o.surjective = tau.surjective();
    bool positive = true;
    for (const auto& mg : fano_margins(flag, tau, polytope)) {
      if (!o.min_margin || mg.value < *o.min_margin) o.min_margin = mg.value;
      positive = positive && mg.value > 0;
    }
    o.is_fano = fiber_fano && positive;
    return o;
  };

  std::vector<Outcome> outcomes(items.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads ? options.threads : std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(std::max<std::size_t>(items.size(), 1))));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < items.size(); i += workers) outcomes[i] = evaluate_item(items[i]);
    }));
  for (auto& j : jobs) j.get();

  json results = json::array();
  std::size_t fano_count = 0;
  json fano_scales = json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    json row{{"tau", matrix_json(items[i])},
             {"is_fano", outcomes[i].is_fano},
             {"tau_surjective", outcomes[i].surjective}};
    if (outcomes[i].min_margin) row["min_margin"] = to_string(*outcomes[i].min_margin);
    if (scan.mode == ScanConfig::Mode::scalar) row["scale"] = scan.from + static_cast<long long>(i);
    if (outcomes[i].is_fano) {
      ++fano_count;
      if (scan.mode == ScanConfig::Mode::scalar) fano_scales.push_back(scan.from + static_cast<long long>(i));
    }
    results.push_back(std::move(row));
  }
  json report;
  report["command"] = "scan";
  report["mode"] = scan.mode == ScanConfig::Mode::scalar ? "scalar" : "box";
  report["fiber_fano"] = fiber_fano;
  report["results"] = results;
  json summary{{"total", items.size()}, {"fano", fano_count}, {"not_fano", items.size() - fano_count}};
  if (scan.mode == ScanConfig::Mode::scalar) summary["fano_scales"] = fano_scales;
  report["summary"] = summary;
  json warnings = json::array();
  if (!fiber_fano) warnings.push_back("fan is not Fano");
  report["warnings"] = warnings;
  return report;
}

namespace {

std::string join(const json& arr, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string tuple(const json& arr) { return "(" + join(arr) + ")"; }

void render_flag(std::ostream& os, const json& f) {
  os << "flag: " << join(f["components"], " x ") << ", crossed {" << join(f["crossed"]) << "}, dim z(k) = "
     << f["zk_dim"].get<std::size_t>() << "\n";
  os << "  roots: " << f["root_count"].get<std::size_t>() << ", |R_m+| = " << f["r_m_plus_count"].get<std::size_t>()
     << "\n";
  os << "  h_V = " << tuple(f["h_v"]) << (f["h_v_in_chamber"].get<bool>() ? "  (in chamber)" : "  (NOT in chamber)")
     << "\n";
  for (const auto& m : f["h_v_margins"]) os << "    root " << tuple(m["root"]) << "  margin " << m["value"].get<std::string>() << "\n";
}

void render_fiber(std::ostream& os, const json& f) {
  os << "fiber: " << f["description"].get<std::string>() << ", rank " << f["dim"].get<std::size_t>()
     << ", smooth " << (f["smooth"].get<bool>() ? "yes" : "no") << ", complete "
     << (f["complete"].get<bool>() ? "yes" : "no") << ", fano " << (f["fano"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& d : f["diagnostics"]) os << "  note: " << d.get<std::string>() << "\n";
  if (f.contains("vertices"))
    for (std::size_t i = 0; i < f["vertices"].size(); ++i)
      os << "  vertex " << i << ": " << tuple(f["vertices"][i]) << "\n";
}

void render_oracle(std::ostream& os, const json& o) {
  os << "oracle: " << (o["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  for (const auto& p : o["fixed_points"])
    os << "  fixed point " << p["index"].get<std::size_t>() << ": vertex " << tuple(p["vertex"]) << ", exact trace "
       << tuple(p["exact_trace"]) << ", numeric error " << fmt_double(p["max_abs_error"].get<double>()) << "\n";
  os << "  samples: " << o["samples"]["count"].get<std::size_t>() << ", worst halfspace violation "
     << fmt_double(o["samples"]["max_halfspace_violation"].get<double>()) << "\n";
  os << "  barycenter norm " << fmt_double(o["barycenter"]["norm"].get<double>()) << " over "
     << o["barycenter"]["samples"].get<std::size_t>() << " samples (tolerance "
     << fmt_double(o["barycenter"]["tolerance"].get<double>()) << ")\n";
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  const auto command = report["command"].get<std::string>();
  if (report.contains("flag")) render_flag(os, report["flag"]);
  if (report.contains("fiber")) render_fiber(os, report["fiber"]);
  if (command == "check") {
    const auto& t = report["tau"];
    os << "tau: [" << join([&] {
      json rows = json::array();
      for (const auto& r : t["matrix"]) rows.push_back(tuple(r));
      return rows;
    }()) << "], surjective " << (t["surjective"].get<bool>() ? "yes" : "no") << ", integrality "
       << t["integrality"].get<std::string>() << "\n";
    os << "margins:\n";
    for (const auto& m : report["margins"])
      os << "  vertex " << m["vertex"].get<std::size_t>() << " " << tuple(m["vertex_coords"]) << "  root "
         << tuple(m["root"]) << "  " << m["value"].get<std::string>() << "\n";
    const auto& v = report["verdict"];
    os << "verdict: " << (v["is_fano"].get<bool>() ? "FANO" : "NOT FANO") << " (fiber fano "
       << (v["fiber_fano"].get<bool>() ? "yes" : "no") << ", " << v["violations"].size() << " violation(s)";
    if (v.contains("min_margin")) os << ", min margin " << v["min_margin"].get<std::string>();
    os << ")\n";
  }
  if (command == "scan") {
    for (const auto& r : report["results"]) {
      os << "tau [";
      for (std::size_t i = 0; i < r["tau"].size(); ++i) os << (i ? ", " : "") << tuple(r["tau"][i]);
      os << "]  " << (r["is_fano"].get<bool>() ? "fano" : "not fano");
      if (r.contains("min_margin")) os << "  min margin " << r["min_margin"].get<std::string>();
      os << "\n";
    }
    const auto& s = report["summary"];
    os << "summary: " << s["total"].get<std::size_t>() << " evaluated, " << s["fano"].get<std::size_t>()
       << " fano, " << s["not_fano"].get<std::size_t>() << " not fano";
    if (s.contains("fano_scales")) os << "; fano scales {" << join(s["fano_scales"]) << "}";
    os << "\n";
  }
  if (report.contains("oracle")) render_oracle(os, report["oracle"]);
  for (const auto& w : report["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fano test for homogeneous toric bundles over flag manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options options;
  std::string file;
  app.add_flag("--json", options.json, "Emit the report as JSON");
  app.add_flag("--oracle", options.oracle, "Run the numerical CP^m oracle when the fiber is projective space");

  auto* check = app.add_subcommand("check", "Decide whether the bundle is Fano and print all margins");
  auto* polytope = app.add_subcommand("polytope", "Print the canonical polytope of the fiber");
  auto* flag_info = app.add_subcommand("flag-info", "Print R_m+, h_V and its chamber margins");
  auto* scan = app.add_subcommand("scan", "Classify a family of tau maps");
  for (auto* sub : {check, polytope, flag_info, scan})
    sub->add_option("file", file, "JSON bundle configuration")->required()->check(CLI::ExistingFile);
  long long max_value = 0;
  auto* max_opt = scan->add_option("--max", max_value, "Range bound N (scalar: last scale; box: entries in [-N, N])");
  scan->add_option("--cap", options.cap, "Refuse scans with more instances than this")->check(CLI::PositiveNumber);
  scan->add_option("--threads", options.threads, "Worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (max_opt->count() > 0) options.max = max_value;

  try {
    const auto config = load_config(file);
    json report;
    if (check->parsed())
      report = cmd_check(config, options);
    else if (polytope->parsed())
      report = cmd_polytope(config, options);
    else if (flag_info->parsed())
      report = cmd_flag_info(config, options);
    else
      report = cmd_scan(config, options);
    if (options.json)
      out << report.dump(2) << "\n";
    else
      out << render_text(report);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace toricfano::cli
