// One PASS/FAIL line per acceptance criterion; exit status 1 if any line fails.
#include "hyperchow/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using hyperchow::report::Record;
using hyperchow::report::Report;
using hyperchow::report::Status;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_of(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Records tagged with `criterion`, summarized; indeterminate is not a pass.
Outcome tally(const std::vector<Record>& records, int criterion) {
  Report r;
  r.records = records;
  int pass = 0, total = 0;
  std::string first_bad;
  for (const auto& rec : records) {
    if (rec.criterion != criterion) continue;
    ++total;
    if (rec.status == Status::pass) ++pass;
    else if (first_bad.empty()) first_bad = rec.name + " [" + hyperchow::report::to_string(rec.status) + "] " + rec.note;
  }
  Outcome o;
  o.pass = r.criterion_status(criterion) == Status::pass;
  o.detail = std::to_string(pass) + "/" + std::to_string(total) + " records pass";
  if (!first_bad.empty()) o.detail += "; first problem: " + first_bad;
  return o;
}

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

int main() {
  namespace rep = hyperchow::report;
  rep::SuiteOptions options;
  options.quadrature.tol = 1e-8;
  const auto genus2 = rep::default_genus2_data();
  const auto genus3 = rep::default_genus3_data();

  int failures = 0;
  auto line = [&](int criterion, const std::string& title, const Outcome& o) {
    std::printf("%s criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", criterion, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  {
    std::vector<Record> records;
    const double secs = seconds_of([&] {
      for (auto&& part : {rep::verify_cycles(genus2), rep::verify_cycles(genus3),
                          rep::random_four_configurations(options.seed, 20)})
        records.insert(records.end(), part.begin(), part.end());
    });
    Outcome o = tally(records, 1);
    o.pass = o.pass && secs < 10.0;
    o.detail += ", " + fixed(secs) + " s (limit 10 s)";
    line(1, "exact cycle condition for K, K_t, Z_t and 20 random 4-configurations", o);
  }
  {
    std::vector<Record> records;
    double slowest = 0;
    for (const double lambda : {2.0, 3.0, 5.0, 1.5}) {
      const double secs = seconds_of([&] {
        const auto part = rep::functional_equation({lambda}, options);
        records.insert(records.end(), part.begin(), part.end());
      });
      slowest = std::max(slowest, secs);
    }
    Outcome o = tally(records, 2);
    o.pass = o.pass && slowest < 60.0;
    o.detail += ", slowest lambda " + fixed(slowest) + " s (limit 60 s)";
    line(2, "functional equation at lambda = 2, 3, 5, 3/2 within 1e-6", o);
  }
  line(3, "AGM covolume vs quadrature mass and Monte Carlo vs quadrature", tally(rep::cross_oracles(options), 3));
  line(4, "bielliptic splitting, mass difference and tau_C verdict",
       tally(rep::bielliptic({{2.0, 3.0}, {2.0, 5.0}, {3.0, 5.0}}, options), 4));
  line(5, "intersection combinatorics of the generic and specialized configurations",
       tally(rep::intersection_combinatorics(genus3), 5));
  line(6, "specialize_and_compare at 5 random rational t", tally(rep::random_specializations(options.seed, 5), 6));
  line(7, "genus-2 decomposition with constant remainder", tally(rep::genus2_decomposition(genus2), 7));
  line(8, "divisor degree, Weil reciprocity, Cantor laws, 2-torsion (fixed seed)",
       tally(rep::algebraic_properties(options.seed), 8));

  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
  return failures == 0 ? 0 : 1;
}
