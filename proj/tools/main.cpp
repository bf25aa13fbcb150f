#include "config.hpp"
#include "plot.hpp"

#include "hyperchow/numerics/covers.hpp"
#include "hyperchow/numerics/regulator.hpp"
#include "hyperchow/report.hpp"
#include "hyperchow/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace hyperchow;
using hyperchow::cli::UsageError;
using json = nlohmann::ordered_json;
using report::Record;
using report::Report;
using report::Status;

constexpr int kUsageError = 64;

struct Settings {
  double tol = 1e-8;
  std::size_t budget = 400000;
  std::uint64_t seed = 20240607;
  std::size_t samples = 200000;
  std::string format;
  std::string out;
  bool timing = false;
  bool serial = false;

  report::SuiteOptions suite() const {
    report::SuiteOptions o;
    o.quadrature.tol = tol;
    o.quadrature.max_cells = budget;
    o.quadrature.parallel = !serial;
    o.seed = seed;
    o.monte_carlo_samples = samples;
    o.timing = timing;
    return o;
  }
};

void emit(const Settings& s, const std::string& text) {
  if (s.out.empty() || s.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(s.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + s.out + "'");
  file << text;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "text") return report::to_text(r);
  if (format == "csv") return report::to_csv(r);
  return report::to_json(r).dump(2) + "\n";
}

int finish(const Settings& s, const Report& r) {
  emit(s, render(r, s.format.empty() ? "json" : s.format));
  return r.exit_code();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    const auto a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

std::vector<numerics::cplx> lambda_list(const std::string& text) {
  std::vector<numerics::cplx> out;
  for (const auto& item : split(text, ',')) out.push_back(cli::parse_lambda(item));
  if (out.empty()) throw UsageError("empty lambda list");
  return out;
}

void apply_config_settings(Settings& s, const cli::CurveConfig& cfg, const CLI::App& app) {
  if (cfg.tolerance && app.count("--tol") == 0) s.tol = *cfg.tolerance;
  if (cfg.budget && app.count("--budget") == 0) s.budget = *cfg.budget;
  if (cfg.seed && app.count("--seed") == 0) s.seed = *cfg.seed;
}

// "2*branch 0; -2*infinity; x 3"
Divisor parse_divisor(const HyperellipticCurve& c, const std::string& text) {
  Divisor d(c);
  for (const auto& item : split(text, ';')) {
    int multiplicity = 1;
    std::string point = item;
    if (const auto star = item.find('*'); star != std::string::npos) {
      try {
        multiplicity = std::stoi(item.substr(0, star));
      } catch (const std::exception&) {
        throw UsageError("bad multiplicity in '" + item + "'");
      }
      point = item.substr(star + 1);
    } else if (item.front() == '-' || item.front() == '+') {
      multiplicity = item.front() == '-' ? -1 : 1;
      point = item.substr(1);
    }
    d += Divisor::point(c, cli::parse_point(c, point), multiplicity);
  }
  return d;
}

Record i_lambda_record(numerics::cplx lambda, const report::SuiteOptions& o) {
  Record r;
  r.name = "I(lambda), lambda = " + std::to_string(lambda.real()) +
           (lambda.imag() != 0 ? (lambda.imag() > 0 ? "+" : "-") + std::to_string(std::abs(lambda.imag())) + "i" : "");
  r.anchor = "average of log|x| against the unit-mass invariant form on E_lambda";
  const auto li = numerics::lambda_integrals(lambda, o.quadrature);
  r.value = li.value.value;
  r.error = li.value.error_estimate;
  r.cells = li.value.cells_used;
  r.status = li.value.converged ? Status::pass : Status::indeterminate;
  r.data = {{"lambda", {lambda.real(), lambda.imag()}},
            {"mass", li.mass.value},
            {"log_integral", li.log_int.value},
            {"verdict", li.value.converged ? "converged" : "not converged"}};
  return r;
}

int run_scan(const Settings& s, const std::string& grid, bool paired, const std::string& svg) {
  const auto o = s.suite();
  Report rep;
  rep.command = "scan-i";
  std::ostringstream csv;
  csv << "lambda_re,lambda_im,I,error,cells,status";
  if (paired) csv << ",I_inverse,difference,log_abs_lambda,residual";
  csv << "\n";
  std::vector<cli::PlotPoint> plot;
  for (const auto& l : lambda_list(grid)) {
    csv << std::setprecision(17) << l.real() << "," << l.imag() << ",";
    if (l == 0.0 || l == 1.0) {
      Record r;
      r.name = "I(lambda) at a degenerate lambda";
      r.anchor = "lambda outside {0, 1}";
      r.status = Status::fail;
      r.note = "invalid: lambda in {0, 1}";
      r.data = {{"lambda", {l.real(), l.imag()}}};
      rep.records.push_back(r);
      csv << ",,,invalid" << (paired ? ",,,," : "") << "\n";
      continue;
    }
    Record r = i_lambda_record(l, o);
    csv << *r.value << "," << *r.error << "," << *r.cells << "," << report::to_string(r.status);
    if (paired) {
      const auto inv = numerics::I_of_lambda(1.0 / l, o.quadrature);
      const double difference = *r.value - inv.value, target = std::log(std::abs(l));
      const double residual = std::abs(difference - target);
      csv << "," << inv.value << "," << difference << "," << target << "," << residual;
      r.data["I_inverse"] = inv.value;
      r.data["difference"] = difference;
      r.data["residual"] = residual;
      if (!inv.converged) r.status = Status::indeterminate;
      else if (residual > std::max(1e-6, 3.0 * (*r.error + inv.error_estimate))) r.status = Status::fail;
    }
    csv << "\n";
    if (l.imag() == 0.0) plot.push_back({l.real(), *r.value, *r.error});
    rep.records.push_back(r);
  }
  if (!svg.empty()) {
    std::ofstream file(svg, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + svg + "'");
    file << cli::svg_plot(plot, "lambda (real grid points)", "I(lambda)");
  }
  const std::string format = s.format.empty() ? "csv" : s.format;
  emit(s, format == "csv" ? csv.str() : render(rep, format));
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact higher Chow precycles on hyperelliptic Jacobians and their real regulators"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--tol", s.tol, "requested quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--budget", s.budget, "quadrature cell budget")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "seed for randomized suites and Monte Carlo");
  app.add_option("--samples", s.samples, "Monte Carlo samples")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", s.out, "output file (default stdout)");
  app.add_flag("--timing", s.timing, "add wall-clock seconds to records (reports then differ between runs)");
  app.add_flag("--serial", s.serial, "disable OpenMP in the quadrature");

  std::function<int()> action;

  // verify-cycles
  std::string config;
  auto* verify = app.add_subcommand("verify-cycles", "boundary, specialization and decomposition suites on one curve");
  verify->add_option("--config", config, "curve configuration (YAML or JSON)")->required();
  verify->callback([&] {
    action = [&] {
      const auto cfg = cli::load_curve_config(config);
      Report r;
      r.command = "verify-cycles";
      r.append(report::timed_suite(s.timing, [&] { return report::verify_cycles(cfg.data); }));
      r.append(report::timed_suite(s.timing, [&] { return report::specializations(cfg.data); }));
      if (cfg.data.curve.genus() == 2) r.append(report::timed_suite(s.timing, [&] { return report::genus2_decomposition(cfg.data); }));
      return finish(s, r);
    };
  });

  // scan-i
  std::string grid, svg;
  bool paired = false;
  auto* scan = app.add_subcommand("scan-i", "tabulate I(lambda) over a grid (CSV by default)");
  scan->add_option("--grid", grid, "comma-separated lambda values (p/q, decimals, a+bi)")->required();
  scan->add_flag("--paired", paired, "also compute I(1/lambda) and the functional-equation residual");
  scan->add_option("--svg", svg, "write an SVG plot of the real grid points");
  scan->callback([&] { action = [&] { return run_scan(s, grid, paired, svg); }; });

  // numerics group and its top-level aliases
  std::string lambdas = "2,3,5,3/2", curve_file;
  double l1 = 0, l2 = 0;
  auto add_functional = [&](CLI::App* parent) {
    auto* cmd = parent->add_subcommand("functional-eq", "I(lambda) - I(1/lambda) against log|lambda|");
    cmd->add_option("--lambda", lambdas, "comma-separated lambda values");
    cmd->callback([&] {
      action = [&] {
        Report r;
        r.command = "functional-eq";
        // one timing per lambda
        for (const auto& l : lambda_list(lambdas))
          r.append(report::timed_suite(s.timing, [&] { return report::functional_equation({l}, s.suite()); }));
        return finish(s, r);
      };
    });
  };
  auto add_bielliptic = [&](CLI::App* parent) {
    auto* cmd = parent->add_subcommand("bielliptic", "splitting identity on the bielliptic genus-2 curve");
    cmd->add_option("--l1", l1, "first critical value");
    cmd->add_option("--l2", l2, "second critical value");
    cmd->callback([&, cmd] {
      action = [&, cmd] {
        if ((cmd->count("--l1") == 0) != (cmd->count("--l2") == 0)) throw UsageError("give both --l1 and --l2");
        std::vector<std::pair<double, double>> pairs = {{2, 3}, {2, 5}, {3, 5}};
        if (cmd->count("--l1")) pairs = {{l1, l2}};
        Report r;
        r.command = "bielliptic";
        r.append(report::timed_suite(s.timing, [&] { return report::bielliptic(pairs, s.suite()); }));
        return finish(s, r);
      };
    });
  };
  auto add_pairing = [&](CLI::App* parent) {
    auto* cmd = parent->add_subcommand("pairing-k", "<R(K), tau> for a curve with Weierstrass points w1, w2");
    cmd->add_option("--curve", curve_file, "curve configuration with w1, w2")->required();
    cmd->callback([&] {
      action = [&] {
        auto cfg = cli::load_curve_config(curve_file);
        apply_config_settings(s, cfg, app);
        const auto o = s.suite();
        Report r;
        r.command = "pairing-k";
        r.append(report::timed_suite(s.timing, [&] {
          Record rec;
          rec.name = "pairing <R(K), tau>, " + cfg.data.name;
          rec.anchor = "pairing of the regulator current of K with tau";
          try {
            const auto k = numerics::regulator_pairing_K(cfg.data.curve, cfg.data.w1, cfg.data.w2, o.quadrature);
            const auto verdict = numerics::nonzero_verdict(k.value, k.error_estimate);
            rec.value = k.value;
            rec.error = k.error_estimate;
            rec.cells = k.cells_used;
            rec.status = !k.converged ? Status::indeterminate
                                      : verdict.status == "nonzero" ? Status::pass : Status::indeterminate;
            rec.note = "Cholesky gauge of the monomial basis; verdict " + verdict.status;
            rec.data = {{"verdict", verdict.status}, {"curve", io::to_json(cfg.data.curve)}};
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
          return std::vector<Record>{rec};
        }));
        return finish(s, r);
      };
    });
  };
  add_functional(&app);
  add_bielliptic(&app);
  add_pairing(&app);
  auto* numerics_group = app.add_subcommand("numerics", "numerical evaluation commands");
  numerics_group->require_subcommand(1);
  add_functional(numerics_group);
  add_bielliptic(numerics_group);
  add_pairing(numerics_group);
  std::string lambda_text;
  auto* ilambda = numerics_group->add_subcommand("i-lambda", "I(lambda) by quadrature");
  ilambda->add_option("--lambda", lambda_text, "lambda (p/q, decimal or a+bi)")->required();
  ilambda->callback([&] {
    action = [&] {
      const auto l = cli::parse_lambda(lambda_text);
      if (l == 0.0 || l == 1.0) throw UsageError("lambda must avoid {0, 1}");
      Report r;
      r.command = "numerics i-lambda";
      r.append(report::timed_suite(s.timing, [&] { return std::vector<Record>{i_lambda_record(l, s.suite())}; }));
      return finish(s, r);
    };
  });

  // full-report
  std::string genus2_file, genus3_file;
  auto* full = app.add_subcommand("full-report", "every acceptance suite in one run");
  full->add_option("--genus2", genus2_file, "genus-2 curve configuration (default: built-in test curve)");
  full->add_option("--genus3", genus3_file, "genus-3 curve configuration (default: built-in test curve)");
  full->callback([&] {
    action = [&] {
      const auto g2 = genus2_file.empty() ? report::default_genus2_data() : cli::load_curve_config(genus2_file).data;
      const auto g3 = genus3_file.empty() ? report::default_genus3_data() : cli::load_curve_config(genus3_file).data;
      return finish(s, report::full_report(g2, g3, s.suite()));
    };
  });

  // cycles group
  std::string cycles_config, t_grid;
  auto* cycles = app.add_subcommand("cycles", "configuration reports");
  cycles->require_subcommand(1);
  auto* cycles_verify = cycles->add_subcommand("verify", "ConfigurationReport for a datum (or for Z_t at each t)");
  cycles_verify->add_option("--config", cycles_config, "configuration (YAML or JSON)")->required();
  cycles_verify->callback([&] {
    action = [&] {
      const auto cfg = cli::load_curve_config(cycles_config);
      const JacobianContext j(cfg.data.curve, cfg.data.w1);
      json out = json::array();
      bool ok = true;
      if (!cfg.datum.empty()) {
        const auto fc = four_configuration(j, cfg.datum[0], cfg.datum[1], cfg.datum[2], cfg.datum[3]);
        out.push_back({{"configuration", "four-curve"}, {"epsilon", io::to_json(fc.epsilon)}, {"report", io::to_json(fc.report)}});
        ok = fc.report.is_cycle;
      }
      for (const auto& t : cfg.data.ts) {
        const auto rep = configuration_report(j, hyperelliptic_configuration(j, cfg.data.w2, t));
        out.push_back({{"configuration", "Z_t"}, {"t", io::to_json(t)}, {"report", io::to_json(rep)}});
        ok = ok && rep.is_cycle;
      }
      emit(s, out.dump(2) + "\n");
      return ok ? 0 : 1;
    };
  });
  auto* sweep = cycles->add_subcommand("sweep-t", "Z_t over a grid of x-coordinates for t");
  sweep->add_option("--config", cycles_config, "curve configuration")->required();
  sweep->add_option("--grid", t_grid, "comma-separated rational x-coordinates")->required();
  sweep->callback([&] {
    action = [&] {
      const auto cfg = cli::load_curve_config(cycles_config);
      const JacobianContext j(cfg.data.curve, cfg.data.w1);
      Report r;
      r.command = "cycles sweep-t";
      for (const auto& x : split(t_grid, ',')) {
        Record rec;
        rec.name = "Z_t boundary, t over x = " + x;
        rec.anchor = "cycle condition: the divisors of the functions cancel on the Jacobian";
        CurvePoint t;
        try {
          t = cli::parse_point(cfg.data.curve, "x " + x);
        } catch (const UsageError& e) {
          rec.status = Status::indeterminate;
          rec.note = e.what();
          r.records.push_back(rec);
          continue;
        }
        const auto rep = configuration_report(j, hyperelliptic_configuration(j, cfg.data.w2, t));
        rec.status = rep.is_cycle ? Status::pass : Status::fail;
        rec.value = rep.points_total;
        rec.data = {{"t", io::to_json(t)}, {"points_total", rep.points_total}, {"boundary", io::to_json(rep.boundary)}};
        r.records.push_back(rec);
      }
      return finish(s, r);
    };
  });

  // jacobian group
  std::string jac_config;
  std::vector<std::string> divisors;
  auto* jac = app.add_subcommand("jacobian", "Mumford-pair arithmetic for debugging");
  jac->require_subcommand(1);
  auto jac_command = [&](const std::string& name, const std::string& help, std::size_t count,
                         std::function<json(const JacobianContext&, const std::vector<Divisor>&)> body) {
    auto* cmd = jac->add_subcommand(name, help);
    cmd->add_option("--config", jac_config, "curve configuration; w1 is the basepoint")->required();
    cmd->add_option("--divisor", divisors, "divisor like \"2*branch 0; -2*infinity\"")->required()->expected(
        static_cast<int>(count));
    cmd->callback([&, body] {
      action = [&, body] {
        const auto cfg = cli::load_curve_config(jac_config);
        const JacobianContext j(cfg.data.curve, cfg.data.w1);
        std::vector<Divisor> ds;
        for (const auto& d : divisors) ds.push_back(parse_divisor(cfg.data.curve, d));
        emit(s, body(j, ds).dump(2) + "\n");
        return 0;
      };
    });
  };
  jac_command("reduce", "reduced class of a divisor in Pic^deg", 1, [](const JacobianContext& j, const std::vector<Divisor>& d) {
    return json{{"divisor", io::to_json(d[0])}, {"class", io::to_json(j.class_of(d[0], d[0].degree()))}};
  });
  jac_command("add", "sum of the classes of two divisors", 2, [](const JacobianContext& j, const std::vector<Divisor>& d) {
    const auto a = j.class_of(d[0], d[0].degree()), b = j.class_of(d[1], d[1].degree());
    return json{{"a", io::to_json(a)}, {"b", io::to_json(b)}, {"sum", io::to_json(j.add(a, b))}};
  });
  jac_command("is-principal", "principality of a degree-0 divisor with a witness", 1,
              [](const JacobianContext& j, const std::vector<Divisor>& d) {
                if (d[0].degree() != 0) throw UsageError("divisor must have degree 0");
                const auto p = j.is_principal(d[0]);
                json out{{"principal", p.principal}, {"note", p.note}};
                out["witness"] = p.witness ? io::to_json(*p.witness) : json(nullptr);
                return out;
              });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  try {
    if (const char* mode = std::getenv("HYPERCHOW_PRECISION");
        mode != nullptr && std::string(mode) != "standard" && std::string(mode) != "extended")
      throw UsageError("HYPERCHOW_PRECISION must be 'standard' or 'extended'");
    if (!action) {
      std::cerr << app.help();
      return kUsageError;
    }
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
