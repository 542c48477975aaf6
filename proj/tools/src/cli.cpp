#include "pfsum_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfsum/errors.hpp"
#include "pfsum/identities.hpp"
#include "pfsum/product_engine.hpp"
#include "pfsum/special_functions.hpp"

namespace pfsum::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  int digits = 50;
  std::optional<double> tol;
  std::int64_t n_max = 20000;
  std::vector<std::string> suite{"all"};
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 0;
  bool timing = false;

  Precision precision() const {
    Precision p;
    p.digits = digits;
    p.n_max = n_max;
    p.tol = tol ? *tol : std::max(1e-20, std::pow(10.0, 10 - digits));
    p.validate();
    return p;
  }
  int places() const { return std::max(digits - 10, 1); }
};

struct Range {
  int lo = 1;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw std::invalid_argument("bad range: " + text);
    }
    return v;
  };
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(std::string_view(text).substr(0, dots)), to_int(std::string_view(text).substr(dots + 2))};
}

std::string sci(const BigReal& x) { return to_scientific(x, 6); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

std::string join_params(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) {
      out += ";";
    }
    out += k + "=" + v;
  }
  return out;
}

int exit_for(const std::vector<IdentityReport>& reports) {
  bool fail = false;
  bool nonconv = false;
  for (const auto& r : reports) {
    fail = fail || r.status == ReportStatus::Fail;
    nonconv = nonconv || r.status == ReportStatus::NonConvergent;
  }
  return fail ? kFailure : nonconv ? kNonConvergent : kAllPass;
}

// -- verify ----------------------------------------------------------------------

std::string render_reports(const std::vector<IdentityReport>& reports, const RunConfig& cfg) {
  std::ostringstream os;
  const auto elapsed = [&](const IdentityReport& r) { return cfg.timing ? r.elapsed_ms : 0; };
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      json params = json::object();
      for (const auto& [k, v] : r.params) {
        params[k] = v;
      }
      arr.push_back({{"identity_id", r.identity_id},
                     {"params", params},
                     {"lhs", to_scientific(r.lhs, cfg.digits)},
                     {"rhs", to_scientific(r.rhs, cfg.digits)},
                     {"abs_residual", sci(r.abs_residual)},
                     {"rel_residual", sci(r.rel_residual)},
                     {"terms_used", r.terms_used},
                     {"elapsed_ms", elapsed(r)},
                     {"status", std::string(to_string(r.status))}});
    }
    os << arr.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "identity_id,params,lhs,rhs,abs_residual,rel_residual,terms_used,elapsed_ms,status\n";
    for (const auto& r : reports) {
      os << csv_field(r.identity_id) << "," << csv_field(join_params(r.params)) << ","
         << to_scientific(r.lhs, cfg.digits) << "," << to_scientific(r.rhs, cfg.digits) << "," << sci(r.abs_residual)
         << "," << sci(r.rel_residual) << "," << r.terms_used << "," << elapsed(r) << "," << to_string(r.status)
         << "\n";
    }
  } else {
    int pass = 0;
    for (const auto& r : reports) {
      pass += r.status == ReportStatus::Pass ? 1 : 0;
      os << to_string(r.status) << "  " << r.identity_id;
      if (!r.params.empty()) {
        os << "  " << join_params(r.params);
      }
      os << "\n  lhs " << to_fixed(r.lhs, cfg.places()) << "\n  rhs " << to_fixed(r.rhs, cfg.places())
         << "\n  abs_residual " << sci(r.abs_residual) << "  rel_residual " << sci(r.rel_residual) << "  terms "
         << r.terms_used;
      if (cfg.timing) {
        os << "  " << r.elapsed_ms << " ms";
      }
      os << "\n";
    }
    os << pass << "/" << reports.size() << " pass\n";
  }
  return os.str();
}

int cmd_verify(const RunConfig& cfg, std::string& text, std::ostream& err) {
  const Precision prec = cfg.precision();
  std::vector<std::string> ids;
  for (const auto& s : cfg.suite) {
    if (s == "all") {
      ids = catalog_ids();
      break;
    }
    if (std::find(catalog_ids().begin(), catalog_ids().end(), s) == catalog_ids().end()) {
      err << "unknown identity: " << s << "\n";
      return kBadInput;
    }
    if (std::find(ids.begin(), ids.end(), s) == ids.end()) {
      ids.push_back(s);
    }
  }
  const auto reports = run_suite(ids, cfg.seed, prec);
  text = render_reports(reports, cfg);
  return exit_for(reports);
}

// -- compute ---------------------------------------------------------------------

struct ComputeArgs {
  std::string series;
  std::string spec = "hurwitz";
  std::string a = "1";
  std::string b = "1";
  std::string scale = "1";
  std::vector<std::string> nodes;
  std::string s = "2";
  int m = 2;
  int J = 0;
};

SequenceSpec build_spec(const ComputeArgs& args) {
  if (args.spec == "hurwitz") {
    return SequenceSpec::hurwitz(BigComplex::parse(args.a), args.m);
  }
  if (args.spec == "interleaved") {
    return SequenceSpec::interleaved(BigComplex::parse(args.a), BigComplex::parse(args.b), BigReal(args.scale));
  }
  if (args.spec == "example1") {
    return SequenceSpec::example_one();
  }
  if (args.spec == "finite") {
    std::vector<BigComplex> nodes;
    for (const auto& n : args.nodes) {
      nodes.push_back(BigComplex::parse(n));
    }
    return SequenceSpec::finite(nodes, args.m);
  }
  throw std::invalid_argument("unknown spec kind: " + args.spec);
}

int integer_order(const std::string& s) {
  const BigReal v(s);
  if (!v.is_integer()) {
    throw std::invalid_argument("--s must be an integer for this series");
  }
  return static_cast<int>(v.to_long());
}

int cmd_compute(const RunConfig& cfg, const ComputeArgs& args, std::string& text) {
  const Precision prec = cfg.precision();
  PrecisionScope scope(prec);
  SeriesResult r;
  std::map<std::string, std::string> params;
  const std::string& id = args.series;
  if (id == "hurwitz-pfs" || id == "hurwitz-direct") {
    const BigComplex a = BigComplex::parse(args.a);
    params = {{"m", std::to_string(args.m)}, {"a", param_string(a)}};
    r = id == "hurwitz-pfs" ? pfs_coeff(SequenceSpec::hurwitz(a, args.m), args.m, prec)
                            : hurwitz_zeta(args.m, a, prec);
  } else if (id == "zeta3-apery") {
    const auto rep = zeta3_apery(prec);
    r.value = rep.rhs;
    r.terms_used = rep.terms_used;
    r.tail_estimate = rep.abs_residual;
    r.status = rep.status == ReportStatus::NonConvergent ? SeriesStatus::HitTermCap : SeriesStatus::Converged;
  } else if (id == "beta") {
    params = {{"s", args.s}};
    const BigReal s(args.s);
    r = dirichlet_beta(s, prec);
  } else if (id == "beta-h") {
    params = {{"s", args.s}};
    r = beta_H(integer_order(args.s), prec);
  } else if (id == "zeta-ah") {
    params = {{"s", args.s}};
    r = zeta_AH(integer_order(args.s), prec);
  } else if (id == "pfs-coeff" || id == "taylor-coeff") {
    const SequenceSpec spec = build_spec(args);
    params = {{"spec", spec.describe()}, {"J", std::to_string(args.J)}};
    if (args.J < 0) {
      throw DomainError("--J must be >= 0");
    }
    if (id == "pfs-coeff") {
      r = pfs_coeff(spec, args.J, prec);
    } else {
      r.value = taylor_coeffs_inverse(spec, args.J, prec)[static_cast<std::size_t>(args.J)];
    }
  } else {
    throw std::invalid_argument("unknown series: " + id);
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    json obj{{"series", id}};
    json p = json::object();
    for (const auto& [k, v] : params) {
      p[k] = v;
    }
    obj["params"] = p;
    obj["value"] = to_scientific(r.value, cfg.digits);
    obj["terms_used"] = r.terms_used;
    obj["tail_estimate"] = sci(r.tail_estimate);
    obj["status"] = std::string(to_string(r.status));
    os << obj.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "series,params,value,terms_used,tail_estimate,status\n"
       << id << "," << csv_field(join_params(params)) << "," << to_scientific(r.value, cfg.digits) << ","
       << r.terms_used << "," << sci(r.tail_estimate) << "," << to_string(r.status) << "\n";
  } else {
    os << "value " << to_fixed(r.value, cfg.places()) << "\nterms_used " << r.terms_used << "\ntail_estimate "
       << sci(r.tail_estimate) << "\nstatus " << to_string(r.status) << "\n";
  }
  text = os.str();
  return r.converged() ? kAllPass : kNonConvergent;
}

// -- table -----------------------------------------------------------------------

int cmd_table(const RunConfig& cfg, const std::string& table, const std::string& range_text, const std::string& a_text,
              std::string& text) {
  const Precision prec = cfg.precision();
  PrecisionScope scope(prec);
  const Range range = parse_range(range_text);
  std::string index_name;
  std::function<IdentityReport(int)> row;
  if (table == "zeta-even-recursion") {
    index_name = "m";
    row = [&](int i) { return zeta_even_recursion(i, prec); };
  } else if (table == "zetaAH") {
    index_name = "n";
    row = [&](int i) { return zetaAH_recursion(i, prec); };
  } else if (table == "betaH") {
    index_name = "n";
    row = [&](int i) { return betaH_recursion(i, prec); };
  } else if (table == "hurwitz-recursion") {
    index_name = "m";
    const BigComplex a = BigComplex::parse(a_text);
    row = [&, a](int i) { return hurwitz_even_recursion(i, a, prec); };
  } else {
    throw std::invalid_argument("unknown table: " + table);
  }
  if (range.lo <= range.hi && range.lo < 1) {
    throw std::invalid_argument("range must start at 1 or above");
  }
  std::vector<std::pair<int, IdentityReport>> rows;
  for (int i = range.lo; i <= range.hi; ++i) {
    rows.emplace_back(i, row(i));
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& [i, r] : rows) {
      arr.push_back({{index_name, i},
                     {"lhs", to_scientific(r.lhs, cfg.digits)},
                     {"rhs", to_scientific(r.rhs, cfg.digits)},
                     {"residual", sci(r.abs_residual)},
                     {"status", std::string(to_string(r.status))}});
    }
    os << arr.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << index_name << ",lhs,rhs,residual,status\n";
    for (const auto& [i, r] : rows) {
      os << i << "," << to_scientific(r.lhs, cfg.digits) << "," << to_scientific(r.rhs, cfg.digits) << ","
         << sci(r.abs_residual) << "," << to_string(r.status) << "\n";
    }
  } else {
    os << index_name << "  lhs  rhs  residual  status\n";
    for (const auto& [i, r] : rows) {
      os << i << "  " << to_fixed(r.lhs, cfg.places()) << "  " << to_fixed(r.rhs, cfg.places()) << "  "
         << sci(r.abs_residual) << "  " << to_string(r.status) << "\n";
    }
  }
  text = os.str();
  std::vector<IdentityReport> reports;
  for (auto& [i, r] : rows) {
    reports.push_back(r);
  }
  return exit_for(reports);
}

// -- probe -----------------------------------------------------------------------

int cmd_probe(const RunConfig& cfg, int L, const std::string& a_text, int count, std::string& text) {
  const Precision prec = cfg.precision();
  PrecisionScope scope(prec);
  if (count < 0) {
    throw std::invalid_argument("--samples must be >= 0");
  }
  const BigComplex a = BigComplex::parse(a_text);
  const auto report = conjecture_probe(a, L, probe_samples(a, count, cfg.seed), prec);

  std::vector<BigReal> residuals;
  for (const auto& s : report.samples) {
    if (s.converged) {
      residuals.push_back(s.residual);
    }
  }
  std::sort(residuals.begin(), residuals.end(), [](const BigReal& x, const BigReal& y) { return x < y; });
  const std::string max_res = residuals.empty() ? "n/a" : sci(residuals.back());
  const std::string median_res = residuals.empty() ? "n/a" : sci(residuals[residuals.size() / 2]);
  const std::string constant = to_scientific(report.constant, cfg.digits);
  const auto converged_text = [](bool c) { return c ? "Converged" : "NonConvergent"; };

  std::ostringstream os;
  if (cfg.format == "json") {
    json samples = json::array();
    for (const auto& s : report.samples) {
      samples.push_back({{"z", param_string(s.z)},
                         {"lhs", to_scientific(s.lhs, cfg.digits)},
                         {"rhs", to_scientific(s.rhs, cfg.digits)},
                         {"residual", sci(s.residual)},
                         {"terms_used", s.terms_used},
                         {"status", converged_text(s.converged)}});
    }
    json obj{{"a", param_string(a)},
             {"L", L},
             {"constant", constant},
             {"constant_variance", sci(report.constant_variance)},
             {"samples", samples},
             {"max_residual", max_res},
             {"median_residual", median_res}};
    os << obj.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "z,lhs,rhs,residual,terms_used,status\n";
    for (const auto& s : report.samples) {
      os << param_string(s.z) << "," << to_scientific(s.lhs, cfg.digits) << "," << to_scientific(s.rhs, cfg.digits)
         << "," << sci(s.residual) << "," << s.terms_used << "," << converged_text(s.converged) << "\n";
    }
  } else {
    os << "L=" << L << " a=" << param_string(a) << "\n";
    os << "z  lhs  rhs  residual  status\n";
    for (const auto& s : report.samples) {
      os << param_string(s.z) << "  " << to_fixed(s.lhs, cfg.places()) << "  " << to_fixed(s.rhs, cfg.places())
         << "  " << sci(s.residual) << "  " << converged_text(s.converged) << "\n";
    }
    os << "constant " << to_fixed(report.constant, cfg.places()) << "\nconstant_variance "
       << sci(report.constant_variance) << "\nmax_residual " << max_res << "\nmedian_residual " << median_res << "\n";
  }
  text = os.str();
  return kAllPass;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--digits", cfg.digits, "working precision in decimal digits")->envname("PFSUM_DIGITS");
  sub->add_option("--tol", cfg.tol, "residual tolerance");
  sub->add_option("--n-max", cfg.n_max, "summation term cap");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output", cfg.output, "write output to PATH");
  sub->add_option("--seed", cfg.seed, "seed for random parameter draws");
  sub->add_flag("--timing", cfg.timing, "report elapsed_ms (breaks byte-identical output)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial fraction summation: identity checks and series evaluation", "pfsum"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "run identity checks");
  add_common(verify, cfg);
  verify->add_option("--suite", cfg.suite, "identity ids (comma separated) or all")->delimiter(',');

  ComputeArgs cargs;
  auto* compute = app.add_subcommand("compute", "evaluate one series");
  add_common(compute, cfg);
  compute->add_option("series", cargs.series, "series id")->required();
  compute->add_option("--spec", cargs.spec, "hurwitz, interleaved, example1 or finite");
  compute->add_option("--a", cargs.a, "parameter a (re[+im i])");
  compute->add_option("--b", cargs.b, "parameter b of an interleaved spec");
  compute->add_option("--scale", cargs.scale, "scale of an interleaved spec");
  compute->add_option("--nodes", cargs.nodes, "nodes of a finite spec")->delimiter(',');
  compute->add_option("--m", cargs.m, "power m");
  compute->add_option("--s", cargs.s, "order s");
  compute->add_option("--J", cargs.J, "coefficient index");

  std::string table_id;
  std::string range_m;
  std::string range_n;
  std::string table_a = "1";
  auto* table = app.add_subcommand("table", "tabulate a recursion over a range");
  add_common(table, cfg);
  table->add_option("table", table_id, "zeta-even-recursion, zetaAH, betaH or hurwitz-recursion")->required();
  table->add_option("--m", range_m, "range lo..hi");
  table->add_option("--n", range_n, "range lo..hi");
  table->add_option("--a", table_a, "parameter a for hurwitz-recursion");

  int probe_L = 3;
  std::string probe_a = "1";
  int probe_count = 8;
  auto* probe = app.add_subcommand("probe", "numerical probe of the higher-order relation");
  add_common(probe, cfg);
  probe->add_option("--L", probe_L, "derivative order")->required();
  probe->add_option("--a", probe_a, "parameter a");
  probe->add_option("--samples", probe_count, "number of sample points");

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAllPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAllPass;
  } catch (const CLI::ParseError& e) {
    err << "pfsum: " << e.what() << "\n";
    return kBadInput;
  }

  std::string text;
  int code = kAllPass;
  try {
    if (verify->parsed()) {
      code = cmd_verify(cfg, text, err);
    } else if (compute->parsed()) {
      code = cmd_compute(cfg, cargs, text);
    } else if (table->parsed()) {
      const std::string& range = range_m.empty() ? range_n : range_m;
      if (range.empty()) {
        throw std::invalid_argument("table needs --m or --n lo..hi");
      }
      code = cmd_table(cfg, table_id, range, table_a, text);
    } else {
      code = cmd_probe(cfg, probe_L, probe_a, probe_count, text);
    }
  } catch (const DivergenceError& e) {
    err << "pfsum: " << e.what() << "\n";
    return kNonConvergent;
  } catch (const DomainError& e) {
    err << "pfsum: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "pfsum: " << e.what() << "\n";
    return kBadInput;
  }
  if (code == kBadInput) {
    return code;
  }

  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "pfsum: cannot write " << cfg.output << "\n";
      return kBadInput;
    }
    file << text;
  }
  return code;
}

}  // namespace pfsum::cli
