#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cotpi/cli.hpp"
#include "cotpi/errors.hpp"
#include "cotpi/pi_engine.hpp"

namespace cotpi {

namespace {

// pi for the S_k evaluation routes, computed here rather than taken from
// the embedded reference digits: those are reserved for verification.
Fixed self_pi(int p) {
  PiResult r = pi_iterative_refine(8, p, 400);
  return fx_widen(r.value, r.total_error_rational());
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

int print_sk(const ComputeConfig& cfg, std::ostream& out, std::ostream& err) {
  SeriesResult r;
  if (cfg.method == SkMethod::direct) {
    // Term count grows 10x per extra digit here, so the direct route runs
    // at the requested precision and reports whatever that certifies.
    Fixed half_ulp(Int(5), cfg.digits + 1, Int(0));
    r = sk_direct(cfg.k, cfg.digits, half_ulp, cfg.term_cap);
  } else {
    // Two guard digits: the certification scan needs the interval to clear
    // a digit-cell boundary, and the requested precision alone straddles it
    // whenever the true value sits within an ulp of a cell edge.
    int wp = cfg.digits + 2;
    Fixed pi_v = self_pi(wp + 8);
    r = cfg.method == SkMethod::zeta_series ? sk_zeta_series(cfg.k, wp, pi_v, cfg.term_cap)
                                            : sk_closed_form(cfg.k, wp, pi_v);
  }
  CertifiedDecimal cd = certified_decimal(r.widened(), Rational(0), cfg.digits);
  if (cd.digits < 1) {
    err << "error: no digits could be certified at the requested precision\n";
    return kExitResource;
  }
  out << "S_" << cfg.k << " = " << cd.text << "\n";
  out << "certified_digits = " << cd.digits << "\n";
  out << "error_bound <= " << bound_sci_str(r.total_error_rational()) << "\n";
  out << "terms_used = " << r.terms_used << "\n";
  out << "method = " << sk_method_name(r.method) << "\n";
  return kExitOk;
}

int print_pi(const ComputeConfig& cfg, std::ostream& out, std::ostream& err) {
  PiResult r;
  const char* route_name;
  if (cfg.method == SkMethod::direct) {
    r = pi_from_sk(cfg.j, cfg.digits);
    route_name = "pi_from_sk";
  } else {
    r = pi_iterative_refine(cfg.j, cfg.digits + 2, 400);
    route_name = "pi_iterative_refine";
  }
  // PiResult.value carries its complete bound in err_ulps already.
  CertifiedDecimal cd = certified_decimal(r.value, Rational(0), cfg.digits);
  if (cd.digits < 1) {
    err << "error: no digits could be certified at the requested precision\n";
    return kExitResource;
  }
  out << "pi = " << cd.text << "\n";
  out << "certified_digits = " << cd.digits << "\n";
  out << "error_bound <= " << bound_sci_str(r.total_error_rational()) << "\n";
  out << "terms_used = " << r.route.sk_terms << "\n";
  out << "method = " << route_name << " (j=" << r.route.j << ", k=" << r.route.k
      << ", rounds=" << r.route.refinement_rounds << ")\n";
  return kExitOk;
}

struct CsvRow {
  std::string method;
  long k = 0;
  std::uint64_t terms = 0;
  int certified = 0;
  long long ms = 0;
};

void write_csv(const std::vector<CsvRow>& rows, std::ostream& os) {
  os << "method,k,terms,certified_digits,wall_time_ms\n";
  for (const auto& r : rows) {
    os << r.method << "," << r.k << "," << r.terms << "," << r.certified << "," << r.ms << "\n";
  }
}

}  // namespace

int run_compute(const ComputeConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return cfg.target == ComputeConfig::Target::sk ? print_sk(cfg, out, err)
                                                   : print_pi(cfg, out, err);
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const numerical_error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<VerifyItem> items;
  try {
    items = run_verify_battery(opt);
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (items.empty()) {
    err << "usage error: no verify items match '" << opt.only << "'\n";
    return kExitUsage;
  }
  int failed = 0;
  for (const auto& item : items) {
    out << (item.pass ? "[PASS] " : "[FAIL] ") << item.name;
    if (!item.pass && !item.detail.empty()) out << " -- " << item.detail;
    out << "\n";
    if (!item.pass) ++failed;
  }
  out << items.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int run_report(const ReportConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<CsvRow> rows;
  try {
    if (cfg.preset == ReportConfig::Preset::sk_convergence) {
      if (cfg.k_values.empty()) {
        err << "usage error: sk-convergence needs --k\n";
        return kExitUsage;
      }
      Fixed pi_v = self_pi(cfg.digits + 8);
      for (long k : cfg.k_values) {
        for (SkMethod m : {SkMethod::direct, SkMethod::zeta_series, SkMethod::closed_form}) {
          auto t0 = std::chrono::steady_clock::now();
          SeriesResult r = m == SkMethod::direct ? sk_direct(k, cfg.digits)
                           : m == SkMethod::zeta_series
                               ? sk_zeta_series(k, cfg.digits, pi_v)
                               : sk_closed_form(k, cfg.digits, pi_v);
          CertifiedDecimal cd = certified_decimal(r.widened(), Rational(0));
          rows.push_back(
              {sk_method_name(m), k, r.terms_used, cd.digits, elapsed_ms(t0)});
        }
      }
    } else {
      if (cfg.j_end < cfg.j_begin) {
        err << "usage error: pi-routes needs a nonempty --j range\n";
        return kExitUsage;
      }
      for (int j = cfg.j_begin; j <= cfg.j_end; ++j) {
        {
          auto t0 = std::chrono::steady_clock::now();
          PiResult r = pi_from_sk(j, cfg.digits);
          CertifiedDecimal cd = certified_decimal(r.value, Rational(0));
          rows.push_back({"pi_from_sk", r.route.k, r.route.sk_terms, cd.digits, elapsed_ms(t0)});
        }
        {
          auto t0 = std::chrono::steady_clock::now();
          PiResult r = pi_iterative_refine(j, cfg.digits, 400);
          CertifiedDecimal cd = certified_decimal(r.value, Rational(0));
          rows.push_back(
              {"pi_iterative_refine", r.route.k, r.route.sk_terms, cd.digits, elapsed_ms(t0)});
        }
      }
    }
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    write_csv(rows, out);
  } else {
    std::ofstream f(cfg.out_path);
    if (!f) {
      err << "resource error: cannot open " << cfg.out_path << "\n";
      return kExitResource;
    }
    write_csv(rows, f);
    out << "wrote " << rows.size() << " rows to " << cfg.out_path << "\n";
  }
  return kExitOk;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"S_k series and pi, in certified decimal fixed point"};
  app.require_subcommand(1);

  ComputeConfig ccfg;
  std::string method_str = "zeta";
  std::uint64_t term_cap = kDefaultTermCap;

  CLI::App* compute = app.add_subcommand("compute", "evaluate S_k or pi");
  compute->require_subcommand(1);
  CLI::App* sk = compute->add_subcommand("sk", "S_k = sum 1/((kn)^2-1)");
  long k_arg = 0;
  int digits = 0, j_arg = 0;
  sk->add_option("--k", k_arg, "series parameter, k >= 2")->required();
  sk->add_option("--digits", digits, "fractional digits requested")->required();
  sk->add_option("--method", method_str, "direct | zeta | closed")
      ->check(CLI::IsMember({"direct", "zeta", "closed"}));
  sk->add_option("--term-cap", term_cap, "abort direct summation beyond this many terms");

  CLI::App* pi = compute->add_subcommand("pi", "pi via k tan(pi/k) (1 - 2 S_k), k = 6*2^j");
  pi->add_option("--j", j_arg, "halving depth, k = 6*2^j")->required();
  pi->add_option("--digits", digits, "fractional digits requested")->required();
  std::string pi_method_str = "direct";
  pi->add_option("--method", pi_method_str, "direct (single shot) | zeta (refined)")
      ->check(CLI::IsMember({"direct", "zeta"}));

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "run the self-check battery");
  verify->add_option("--only", vopt.only, "run only items with this name prefix");
  verify->add_option("--n", vopt.n, "override the default sweep size");

  ReportConfig rcfg;
  std::string preset_str;
  std::string j_range;
  CLI::App* report = app.add_subcommand("report", "emit a CSV benchmark table");
  report->add_option("preset", preset_str, "sk-convergence | pi-routes")
      ->required()
      ->check(CLI::IsMember({"sk-convergence", "pi-routes"}));
  report->add_option("--k", rcfg.k_values, "comma-separated k list")->delimiter(',');
  report->add_option("--j", j_range, "j range, e.g. 0..4");
  report->add_option("--digits", rcfg.digits, "fractional digits per row")->required();
  report->add_option("--out", rcfg.out_path, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (compute->parsed()) {
    ccfg.digits = digits;
    ccfg.term_cap = term_cap;
    if (sk->parsed()) {
      ccfg.target = ComputeConfig::Target::sk;
      ccfg.k = k_arg;
      ccfg.method = method_str == "direct" ? SkMethod::direct
                    : method_str == "zeta" ? SkMethod::zeta_series
                                           : SkMethod::closed_form;
    } else {
      ccfg.target = ComputeConfig::Target::pi;
      ccfg.j = j_arg;
      ccfg.method = pi_method_str == "direct" ? SkMethod::direct : SkMethod::zeta_series;
    }
    return run_compute(ccfg, out, err);
  }
  if (verify->parsed()) return run_verify(vopt, out, err);

  rcfg.preset = preset_str == "sk-convergence" ? ReportConfig::Preset::sk_convergence
                                               : ReportConfig::Preset::pi_routes;
  if (rcfg.preset == ReportConfig::Preset::pi_routes) {
    auto sep = j_range.find("..");
    bool ok = !j_range.empty();
    if (sep == std::string::npos) {
      // single value
      ok = ok && j_range.find_first_not_of("0123456789") == std::string::npos;
      if (ok) rcfg.j_begin = rcfg.j_end = std::stoi(j_range);
    } else {
      std::string a = j_range.substr(0, sep), b = j_range.substr(sep + 2);
      ok = !a.empty() && !b.empty() &&
           a.find_first_not_of("0123456789") == std::string::npos &&
           b.find_first_not_of("0123456789") == std::string::npos;
      if (ok) {
        rcfg.j_begin = std::stoi(a);
        rcfg.j_end = std::stoi(b);
      }
    }
    if (!ok) {
      err << "usage error: --j expects N or A..B\n";
      return kExitUsage;
    }
  }
  return run_report(rcfg, out, err);
}

}  // namespace cotpi
