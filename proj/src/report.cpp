#include "hyperchow/report.hpp"

#include "hyperchow/numerics/covers.hpp"
#include "hyperchow/numerics/periods.hpp"
#include "hyperchow/numerics/regulator.hpp"
#include "hyperchow/samples.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace hyperchow::report {

using hyperchow::to_string;
using io::to_json;
using numerics::cplx;
using json = nlohmann::ordered_json;

namespace {

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

Record make(std::string name, std::string anchor, int criterion) {
  Record r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.criterion = criterion;
  return r;
}

Record failure(std::string name, std::string anchor, int criterion, const std::exception& e) {
  Record r = make(std::move(name), std::move(anchor), criterion);
  const bool budget = dynamic_cast<const numerics::not_converged*>(&e) != nullptr;
  r.status = budget ? Status::indeterminate : Status::fail;
  r.note = std::string(budget ? "not converged: " : "exception: ") + e.what();
  return r;
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << v;
  return out.str();
}

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::ostringstream out;
  out << std::setprecision(10) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return out.str();
}

CurvePoint positive_point_over(const HyperellipticCurve& c, const Rational& x) {
  for (const auto& p : points_over(c, x))
    if (p.kind == PointKind::affine && p.y > 0) return p;
  throw std::invalid_argument("no rational point with y > 0 over x = " + to_string(x));
}

HyperellipticCurve consecutive_roots(int n, const Rational& scale) {
  std::vector<Rational> roots;
  for (int k = 0; k < n; ++k) roots.emplace_back(k);
  return HyperellipticCurve(Polynomial::from_roots(roots) * scale);
}

bool all_incidences(const ConfigurationReport& r, std::size_t k) {
  return std::all_of(r.points.begin(), r.points.end(), [&](const IncidencePoint& p) { return p.curves.size() == k; });
}

std::vector<CurvePoint> branch_points_except(const HyperellipticCurve& c, const CurvePoint& w) {
  std::vector<CurvePoint> out;
  for (const auto& b : rational_branch_points(c))
    if (b != w) out.push_back(b);
  return out;
}

// the quadrature status: indeterminate when the budget ran out
Status numeric_status(bool converged, bool ok) {
  if (!converged) return Status::indeterminate;
  return status_of(ok);
}

void set_quadrature(Record& r, double value, double error, std::size_t cells) {
  r.value = value;
  r.error = error;
  r.cells = cells;
}


}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::indeterminate: return "indeterminate";
  }
  return "fail";
}

void Report::append(std::vector<Record> more) {
  for (auto& r : more) records.push_back(std::move(r));
}

int Report::exit_code() const {
  bool indeterminate = false;
  for (const auto& r : records) {
    if (r.status == Status::fail) return 1;
    if (r.status == Status::indeterminate) indeterminate = true;
  }
  return indeterminate ? 2 : 0;
}

Status Report::criterion_status(int criterion) const {
  bool any = false, indeterminate = false;
  for (const auto& r : records) {
    if (r.criterion != criterion) continue;
    any = true;
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::indeterminate) indeterminate = true;
  }
  if (!any) return Status::fail;
  return indeterminate ? Status::indeterminate : Status::pass;
}

json to_json(const Report& r) {
  json out;
  out["command"] = r.command;
  json records = json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& rec : r.records) {
    json j;
    j["name"] = rec.name;
    j["anchor"] = rec.anchor;
    j["criterion"] = rec.criterion;
    j["status"] = to_string(rec.status);
    j["value"] = rec.value ? json(*rec.value) : json(nullptr);
    j["error"] = rec.error ? json(*rec.error) : json(nullptr);
    j["cells"] = rec.cells ? json(*rec.cells) : json(nullptr);
    j["note"] = rec.note;
    j["data"] = rec.data;
    if (rec.runtime_seconds) j["runtime"] = *rec.runtime_seconds;  // seconds
    records.push_back(j);
    ++counts[static_cast<int>(rec.status)];
  }
  out["records"] = records;
  out["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"indeterminate", counts[2]}, {"exit_code", r.exit_code()}};
  return out;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    std::string tag = to_string(rec.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << "[" << tag << "] " << rec.name;
    if (rec.value) {
      out << ": " << format_double(*rec.value);
      if (rec.error) out << " +- " << format_double(*rec.error);
    }
    if (rec.cells) out << " (" << *rec.cells << " cells)";
    if (!rec.note.empty()) out << " -- " << rec.note;
    if (rec.runtime_seconds) out << " [" << format_double(*rec.runtime_seconds) << " s]";
    out << "\n";
  }
  const int code = r.exit_code();
  out << "summary: " << (code == 0 ? "all pass" : code == 1 ? "failures present" : "indeterminate results") << "\n";
  return out.str();
}

std::string to_csv(const Report& r) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "name,anchor,criterion,status,value,error,cells,note\n";
  for (const auto& rec : r.records) {
    out << quote(rec.name) << "," << quote(rec.anchor) << "," << rec.criterion << "," << to_string(rec.status) << ","
        << (rec.value ? format_double(*rec.value) : "") << "," << (rec.error ? format_double(*rec.error) : "") << ","
        << (rec.cells ? std::to_string(*rec.cells) : "") << "," << quote(rec.note) << "\n";
  }
  return out.str();
}

CycleData default_genus2_data() {
  const auto c = consecutive_roots(5, 105);
  CycleData d{"genus 2: y^2 = 105 x(x-1)(x-2)(x-3)(x-4)", c, CurvePoint::branch(0), CurvePoint::infinity(), {}};
  for (const char* x : {"8", "9", "2/3", "9/4", "14/5"}) d.ts.push_back(positive_point_over(c, parse_rational(x)));
  return d;
}

CycleData default_genus3_data() {
  const auto c = consecutive_roots(7, 13090);
  CycleData d{"genus 3: y^2 = 13090 x(x-1)...(x-6)", c, CurvePoint::branch(0), CurvePoint::infinity(), {}};
  for (const char* x : {"22/5", "32/5", "18/7", "33/8"}) d.ts.push_back(positive_point_over(c, parse_rational(x)));
  return d;
}

std::vector<Record> verify_cycles(const CycleData& data) {
  const std::string anchor = "cycle condition: the divisors of the functions cancel on the Jacobian";
  std::vector<Record> out;
  try {
    const JacobianContext j(data.curve, data.w1);
    const PreCycle k = basic_cycle(j, data.w2);
    {
      Record r = make("K boundary, " + data.name, anchor, 1);
      const auto b = boundary(j, k);
      r.status = status_of(b.is_zero());
      r.data["boundary"] = to_string(b);
      r.data["w1"] = to_json(data.w1);
      r.data["w2"] = to_json(data.w2);
      out.push_back(r);
    }
    Record kt = make("K_t boundary, " + data.name, anchor, 1);
    Record zt = make("Z_t boundary, " + data.name, anchor, 1);
    int kt_ok = 0, zt_ok = 0;
    kt.data["t"] = json::array();
    zt.data["t"] = json::array();
    std::vector<std::string> notes;
    for (const auto& t : data.ts) {
      const bool kt_zero = boundary(j, translate_cycle(j, k, t)).is_zero();
      kt_ok += kt_zero;
      kt.data["t"].push_back({{"point", to_json(t)}, {"zero", kt_zero}});
      const PreCycle z = hyperelliptic_configuration(j, data.w2, t);
      const auto rep = configuration_report(j, z);
      zt_ok += rep.is_cycle;
      json entry{{"point", to_json(t)}, {"zero", rep.is_cycle}, {"points_total", rep.points_total}};
      if (canonical_form(j, z).empty()) {
        entry["note"] = "zero precycle";
        notes.push_back("zero precycle at t = " + to_string(t));
      }
      zt.data["t"].push_back(entry);
    }
    const int n = static_cast<int>(data.ts.size());
    kt.value = kt_ok;
    kt.status = status_of(kt_ok == n);
    kt.note = std::to_string(kt_ok) + "/" + std::to_string(n) + " translates closed";
    zt.value = zt_ok;
    zt.status = status_of(zt_ok == n);
    zt.note = std::to_string(zt_ok) + "/" + std::to_string(n) + " configurations closed";
    for (const auto& s : notes) zt.note += "; " + s;
    out.push_back(kt);
    out.push_back(zt);

    const auto branch = branch_points_except(data.curve, data.w1);
    if (branch.size() >= 4) {
      Record r = make("4-configuration boundary, " + data.name, anchor, 1);
      const auto cfg = four_configuration(j, branch[0], branch[1], branch[2], branch[3]);
      r.status = status_of(cfg.report.is_cycle && j.multiply(2, cfg.epsilon) == j.zero());
      r.data["datum"] = json::array({to_json(branch[0]), to_json(branch[1]), to_json(branch[2]), to_json(branch[3])});
      r.data["epsilon"] = to_json(cfg.epsilon);
      r.data["report"] = to_json(cfg.report);
      out.push_back(r);
    }
  } catch (const std::exception& e) {
    out.push_back(failure("cycle suite, " + data.name, anchor, 1, e));
  }
  return out;
}

std::vector<Record> random_four_configurations(std::uint64_t seed, int count) {
  const std::string anchor = "cycle condition for the four-curve configuration";
  Record r = make("4-configuration boundary, " + std::to_string(count) + " random admissible data", anchor, 1);
  std::mt19937_64 rng(seed);
  int closed = 0;
  json cases = json::array();
  try {
    for (int trial = 0; trial < count; ++trial) {
      const int genus = 2 + trial % 2;
      const bool even = (trial / 2) % 2 == 1;
      const auto c = samples::random_branch_rich_curve(rng, genus, even);
      auto branch = rational_branch_points(c);
      std::shuffle(branch.begin(), branch.end(), rng);
      const JacobianContext j(c, branch[4 % branch.size()]);
      std::vector<CurvePoint> affine;
      for (const auto& p : samples::some_points(c, 6))
        if (p.kind == PointKind::affine) affine.push_back(p);
      std::array<CurvePoint, 4> datum = {branch[0], branch[1], branch[2], branch[3]};
      const int kind = trial % 3;
      if (kind == 1 && !affine.empty()) {
        const CurvePoint p = affine[static_cast<std::size_t>(trial) % affine.size()];
        datum = {p, conjugate(c, p), branch[0], branch[1]};
      } else if (kind == 2 && !affine.empty()) {
        const CurvePoint t = affine[static_cast<std::size_t>(trial) % affine.size()];
        datum = {t, branch[0], t, branch[1]};
      }
      const auto cfg = four_configuration(j, datum[0], datum[1], datum[2], datum[3]);
      const bool ok = cfg.report.is_cycle && j.multiply(2, cfg.epsilon) == j.zero();
      closed += ok;
      cases.push_back({{"h", to_string(c.h())},
                       {"basepoint", to_json(j.basepoint())},
                       {"datum", json::array({to_json(datum[0]), to_json(datum[1]), to_json(datum[2]), to_json(datum[3])})},
                       {"closed", ok}});
    }
  } catch (const std::exception& e) {
    return {failure(r.name, anchor, 1, e)};
  }
  r.value = closed;
  r.status = status_of(closed == count);
  r.note = std::to_string(closed) + "/" + std::to_string(count) + " closed, seed " + std::to_string(seed);
  r.data["cases"] = cases;
  return {r};
}

std::vector<Record> intersection_combinatorics(const CycleData& genus3) {
  const std::string anchor = "intersection pattern of the configuration curves";
  std::vector<Record> out;
  try {
    const JacobianContext j(genus3.curve, genus3.w1);
    const auto branch = branch_points_except(genus3.curve, genus3.w1);
    if (branch.size() < 4) throw std::invalid_argument("needs four rational branch points besides w1");
    {
      Record r = make("generic 4-configuration: 8 points on 2 curves each, " + genus3.name, anchor, 5);
      const auto cfg = four_configuration(j, branch[0], branch[1], branch[2], branch[3]);
      r.value = cfg.report.points_total;
      r.status = status_of(cfg.report.points_total == 8 && all_incidences(cfg.report, 2) &&
                           cfg.report.irrational_points == 0);
      r.note = "validated on a hyperelliptic model; disjointness for non-hyperelliptic curves is not modelled";
      r.data = to_json(cfg.report);
      out.push_back(r);
    }
    for (const auto& t : genus3.ts) {
      Record r = make("hyperelliptic specialization: 4 points on 3 curves each, t = " + to_string(t), anchor, 5);
      const auto s = specialize_and_compare_detailed(j, t, genus3.w2);
      const auto& rep = s.configuration.report;
      r.value = rep.points_total;
      r.status = status_of(rep.points_total == 4 && all_incidences(rep, 3) && rep.irrational_points == 0);
      r.data = to_json(rep);
      out.push_back(r);
    }
  } catch (const std::exception& e) {
    out.push_back(failure("intersection combinatorics, " + genus3.name, anchor, 5, e));
  }
  return out;
}

std::vector<Record> random_specializations(std::uint64_t seed, int count) {
  const std::string anchor = "specialization of the four-curve family to the hyperelliptic configuration";
  std::vector<Record> out;
  std::mt19937_64 rng(seed);
  std::vector<Rational> roots;
  for (int k = 0; k < 7; ++k) roots.emplace_back(k);
  const Polynomial h0 = Polynomial::from_roots(roots);
  std::set<Rational> used;
  while (static_cast<int>(out.size()) < count) {
    const Rational x0 = samples::small_rational(rng, 30, 7);
    if (h0(x0) == 0 || !used.insert(x0).second) continue;
    // y^2 = h0(x0) h0(x) has the rational point (x0, h0(x0))
    const Rational twist = h0(x0);
    const HyperellipticCurve c(h0 * twist);
    const CurvePoint t = CurvePoint::affine(x0, twist);
    Record r = make("specialize_and_compare, t = (" + to_string(x0) + ", " + to_string(twist) + ")", anchor, 6);
    try {
      const JacobianContext j(c, CurvePoint::branch(0));
      r.status = status_of(specialize_and_compare(j, t, CurvePoint::infinity()));
      r.data["h"] = to_string(c.h());
      r.data["t"] = to_json(t);
    } catch (const std::exception& e) {
      r = failure(r.name, anchor, 6, e);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Record> specializations(const CycleData& data) {
  const std::string anchor = "specialization of the four-curve family to the hyperelliptic configuration";
  std::vector<Record> out;
  for (const auto& t : data.ts) {
    Record r = make("specialize_and_compare, t = " + to_string(t), anchor, 0);
    if (t == data.w1 || t == data.w2) {
      r.status = Status::pass;
      r.note = "zero precycle: t is a defining Weierstrass point";
      out.push_back(r);
      continue;
    }
    try {
      const JacobianContext j(data.curve, data.w1);
      const auto s = specialize_and_compare_detailed(j, t, data.w2);
      const auto& rep = s.configuration.report;
      r.status = status_of(s.equal && rep.is_cycle);
      r.value = rep.points_total;
      r.note = std::to_string(rep.points_total) + " intersection points";
      r.data = to_json(rep);
    } catch (const std::exception& e) {
      r = failure(r.name, anchor, 0, e);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Record> genus2_decomposition(const CycleData& genus2) {
  const std::string anchor = "genus-2 decomposition of the hyperelliptic configuration";
  std::vector<Record> out;
  try {
    const JacobianContext j(genus2.curve, genus2.w1);
    for (const auto& t : genus2.ts) {
      Record r = make("genus-2 decomposition, t = " + to_string(t), anchor, 7);
      if (t == genus2.w1 || t == genus2.w2) {
        r.status = Status::pass;
        r.note = "zero precycle: t is a defining Weierstrass point";
        out.push_back(r);
        continue;
      }
      const Genus2Check check = genus2_decomposition_check(j, genus2.w2, t);
      // a second gauge for the restriction functions: the remainder must stay constant
      PreCycle rescaled = check.symbol_cycle;
      for (auto& term : rescaled.terms) term.function = Rational(7, 3) * term.function;
      PreCycle twice = hyperelliptic_configuration(j, genus2.w2, t);
      for (auto& term : twice.terms) term.multiplicity *= 2;
      const auto rest = canonical_form(j, rescaled - twice);
      const bool constant = std::all_of(rest.begin(), rest.end(), [](const auto& kv) { return kv.second.is_constant(); });
      r.status = status_of(check.passed() && check.report.is_cycle && constant);
      r.data["restriction_divisors_match"] = check.restriction_divisors_match;
      r.data["symmetric_restrictions"] = check.symmetric_restrictions;
      r.data["remainder_terms"] = check.remainder.size();
      r.data["rescaled_remainder_terms"] = rest.size();
      r.data["c_t"] = to_json(check.c_t);
      r.data["k_t"] = to_json(check.k_t);
      json divisors = json::array();
      for (const auto& d : check.restriction_divisors) divisors.push_back(to_string(d));
      r.data["restriction_divisors"] = divisors;
      out.push_back(r);
    }
  } catch (const std::exception& e) {
    out.push_back(failure("genus-2 decomposition, " + genus2.name, anchor, 7, e));
  }
  return out;
}

std::vector<Record> algebraic_properties(std::uint64_t seed) {
  std::vector<Record> out;
  std::mt19937_64 rng(seed);

  {
    Record degree = make("principal divisors have degree 0 and div is a homomorphism", "degree of principal divisors", 8);
    Record weil = make("Weil reciprocity product equals 1", "Weil reciprocity", 8);
    int checked = 0, degree_ok = 0, weil_ok = 0;
    try {
      for (int deg = 3; deg <= 8; ++deg)
        for (int trial = 0; trial < 10; ++trial) {
          const auto c = samples::random_curve(rng, deg);
          const auto f = samples::random_function(rng, c), g = samples::random_function(rng, c);
          const auto df = divisor_of(f), dg = divisor_of(g);
          ++checked;
          degree_ok += df.degree() == 0 && divisor_of(f * g) == df + dg && divisor_of(f.inverse()) == -df;
          weil_ok += weil_reciprocity_product(f, g) == 1;
        }
      degree.value = degree_ok;
      degree.status = status_of(degree_ok == checked);
      degree.note = std::to_string(degree_ok) + "/" + std::to_string(checked);
      weil.value = weil_ok;
      weil.status = status_of(weil_ok == checked);
      weil.note = std::to_string(weil_ok) + "/" + std::to_string(checked);
      out.push_back(degree);
      out.push_back(weil);
    } catch (const std::exception& e) {
      out.push_back(failure(degree.name, degree.anchor, 8, e));
    }
  }

  {
    Record laws = make("Cantor group laws: associativity, commutativity, inverses", "group law on the Jacobian", 8);
    int checked = 0, ok = 0;
    try {
      const std::vector<HyperellipticCurve> curves = {
          consecutive_roots(3, 1), consecutive_roots(4, 3),  consecutive_roots(5, 1), consecutive_roots(6, -2),
          consecutive_roots(7, 1), consecutive_roots(7, 13090),
          HyperellipticCurve(consecutive_roots(6, 5).h() * Polynomial({Rational(1), Rational(0), Rational(1)}))};
      for (const auto& c : curves) {
        const auto pool = samples::some_points(c, 5);
        std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1);
        const JacobianContext j(c, pool[which(rng)]);
        for (int trial = 0; trial < 30; ++trial) {
          const Divisor da = samples::random_divisor(rng, c, pool), db = samples::random_divisor(rng, c, pool),
                        dc = samples::random_divisor(rng, c, pool);
          const PicPoint a = j.class_of(da, da.degree()), b = j.class_of(db, db.degree()),
                         cc = j.class_of(dc, dc.degree());
          ++checked;
          ok += j.add(j.add(a, b), cc) == j.add(a, j.add(b, cc)) && j.add(a, b) == j.add(b, a) &&
                j.add(a, j.neg(a)) == j.zero() && j.add(a, j.zero()) == a &&
                j.multiply(3, a) == j.add(a, j.add(a, a)) &&
                j.class_of(da + db, da.degree() + db.degree()) == j.add(a, b);
        }
      }
      laws.value = ok;
      laws.status = status_of(ok == checked);
      laws.note = std::to_string(ok) + "/" + std::to_string(checked);
      out.push_back(laws);
    } catch (const std::exception& e) {
      out.push_back(failure(laws.name, laws.anchor, 8, e));
    }
  }

  {
    Record torsion = make("2-torsion relations from branch-point partitions", "2-torsion of the Jacobian", 8);
    bool ok = true;
    json sizes = json::array();
    try {
      for (int n : {5, 6, 7, 8}) {
        const auto c = consecutive_roots(n, 1);
        const auto branch = rational_branch_points(c);
        const JacobianContext j(c, branch.front());
        ok = ok && j.two_torsion_from_branch_partition(branch) == j.zero();
        std::set<PicPoint> seen;
        const int m = static_cast<int>(branch.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
          if (__builtin_popcount(mask) % 2 != 0) continue;
          std::vector<CurvePoint> subset;
          for (int k = 0; k < m; ++k)
            if (mask & (1 << k)) subset.push_back(branch[static_cast<std::size_t>(k)]);
          const PicPoint t = j.two_torsion_from_branch_partition(subset);
          ok = ok && j.add(t, t) == j.zero();
          seen.insert(t);
        }
        ok = ok && static_cast<int>(seen.size()) == (1 << (2 * c.genus()));
        sizes.push_back({{"genus", c.genus()}, {"classes", seen.size()}});
      }
      torsion.status = status_of(ok);
      torsion.data["classes"] = sizes;
      out.push_back(torsion);
    } catch (const std::exception& e) {
      out.push_back(failure(torsion.name, torsion.anchor, 8, e));
    }
  }
  return out;
}

std::vector<Record> functional_equation(const std::vector<cplx>& lambdas, const SuiteOptions& o) {
  const std::string anchor = "functional equation I(lambda) - I(1/lambda) = log|lambda|";
  std::vector<Record> out;
  for (const cplx& l : lambdas) {
    Record r = make("functional equation, lambda = " + format_complex(l), anchor, 2);
    try {
      const auto a = numerics::I_of_lambda(l, o.quadrature), b = numerics::I_of_lambda(1.0 / l, o.quadrature);
      const double difference = a.value - b.value, target = std::log(std::abs(l));
      const double residual = std::abs(difference - target), error = a.error_estimate + b.error_estimate;
      set_quadrature(r, difference, error, a.cells_used + b.cells_used);
      r.status = numeric_status(a.converged && b.converged, residual <= 1e-6);
      r.note = "residual " + format_double(residual) + " (accept <= 1e-6)";
      r.data = {{"I_lambda", a.value}, {"I_inverse", b.value}, {"log_abs_lambda", target}, {"residual", residual}};
    } catch (const std::exception& e) {
      r = failure(r.name, anchor, 2, e);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Record> cross_oracles(const SuiteOptions& o) {
  std::vector<Record> out;
  const auto precision = numerics::precision_from_environment();
  for (cplx l : {cplx(2.0), cplx(3.0), cplx(5.0), cplx(1.5), cplx(2.0, 1.0)}) {
    const std::string anchor = "normalization of the invariant volume form";
    Record r = make("AGM covolume vs quadrature mass, lambda = " + format_complex(l), anchor, 3);
    try {
      const double covolume = numerics::elliptic_periods(l, precision).covolume;
      const auto mass = numerics::lambda_integrals(l, o.quadrature).mass;
      const double relative = std::abs(mass.value - covolume) / covolume;
      set_quadrature(r, mass.value, mass.error_estimate, mass.cells_used);
      r.status = numeric_status(mass.converged, relative <= 1e-8);
      r.note = "relative difference " + format_double(relative) + " (accept <= 1e-8), periods in " +
               numerics::to_string(precision) + " precision";
      r.data = {{"covolume", covolume}, {"relative_difference", relative}};
    } catch (const std::exception& e) {
      r = failure(r.name, anchor, 3, e);
    }
    out.push_back(r);
  }
  for (cplx l : {cplx(2.0), cplx(5.0), cplx(2.0, 1.0)}) {
    const std::string anchor = "I(lambda) as an average of log|x| over the elliptic curve";
    Record r = make("Monte Carlo vs quadrature I(lambda), lambda = " + format_complex(l), anchor, 3);
    try {
      const auto q = numerics::I_of_lambda(l, o.quadrature);
      const auto mc = numerics::monte_carlo_I(l, o.monte_carlo_samples, o.seed);
      const double gap = std::abs(mc.mean - q.value);
      set_quadrature(r, q.value, q.error_estimate, q.cells_used);
      r.status = numeric_status(q.converged, gap <= 3.0 * mc.standard_error);
      r.note = "Monte Carlo " + format_double(mc.mean) + " +- " + format_double(mc.standard_error) + ", " +
               format_double(gap / mc.standard_error) + " standard errors apart";
      r.data = {{"monte_carlo_mean", mc.mean},
                {"standard_error", mc.standard_error},
                {"samples", mc.samples},
                {"seed", o.seed}};
    } catch (const std::exception& e) {
      r = failure(r.name, anchor, 3, e);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Record> bielliptic(const std::vector<std::pair<double, double>>& pairs, const SuiteOptions& o) {
  const std::string anchor = "bielliptic genus-2 curve: splitting identity and non-vanishing of I(f, tau)";
  std::vector<Record> out;
  int nonzero = 0;
  json verdicts = json::array();
  for (const auto& [l1, l2] : pairs) {
    const std::string tag = "(" + format_double(l1) + ", " + format_double(l2) + ")";
    try {
      const auto rep = numerics::bielliptic_identity_check(l1, l2, o.quadrature);
      const auto& d = rep.data;
      const std::size_t cells = rep.integrals[0][0].cells_used;

      Record build = make("bielliptic construction " + tag, anchor, 0);
      build.value = d.commutativity_residual;
      build.status = status_of(d.commutativity_residual < 1e-10 && d.curve_residual < 1e-10 && d.c_spread < 1e-10 &&
                               std::abs(d.c) > 0 && d.g.degree_on_curve() == 4);
      build.note = "diagram residual " + format_double(d.commutativity_residual) + ", f fbar / g spread " +
                   format_double(d.c_spread) + ", deg g = " + std::to_string(d.g.degree_on_curve());
      build.data = {{"c", {d.c.real(), d.c.imag()}},
                    {"c1", {d.h.c1().real(), d.h.c1().imag()}},
                    {"c2", {d.h.c2().real(), d.h.c2().imag()}}};
      out.push_back(build);

      Record split = make("splitting identity " + tag, anchor, 4);
      set_quadrature(split, rep.splitting_residual, rep.splitting_error, cells);
      split.status = numeric_status(rep.converged, std::abs(rep.splitting_residual) <= 1e-5);
      split.note = "I(f,D) + I(fbar,D) - I(g,D), accept <= 1e-5";
      out.push_back(split);

      Record mass = make("mass difference of the pulled-back forms " + tag, anchor, 4);
      set_quadrature(mass, rep.mass_difference, rep.mass_difference_error, cells);
      mass.status = numeric_status(rep.converged, std::abs(rep.mass_difference) <= 1e-6);
      mass.note = "accept <= 1e-6";
      out.push_back(mass);

      Record factor = make("measured constant I(g, D) / (I(l1) - I(l2)) " + tag, anchor, 0);
      factor.value = rep.difference_factor;
      factor.status = numeric_status(rep.converged, std::isfinite(rep.difference_factor));
      factor.note = "measured, not asserted; degree factors " + format_double(rep.degree_factor[0]) + ", " +
                    format_double(rep.degree_factor[1]);
      factor.data = {{"I_lambda", {rep.lambda_values[0], rep.lambda_values[1]}},
                     {"degree_factor", {rep.degree_factor[0], rep.degree_factor[1]}}};
      out.push_back(factor);

      Record tau = make("I(f, tau_C) " + tag, anchor, 0);
      set_quadrature(tau, rep.tau_value.value, rep.tau_value.error, cells);
      tau.status = rep.tau_value.status == "nonzero" ? Status::pass : Status::indeterminate;
      tau.note = "verdict: " + rep.tau_value.status + " (|value| > 5 error), numerical evidence only";
      out.push_back(tau);
      nonzero += rep.tau_value.status == "nonzero";
      verdicts.push_back({{"pair", {l1, l2}}, {"verdict", rep.tau_value.status}});
    } catch (const std::exception& e) {
      out.push_back(failure("bielliptic check " + tag, anchor, 4, e));
    }
  }
  Record any = make("I(f, tau_C) nonzero for at least one pair", anchor, 4);
  any.value = nonzero;
  any.status = nonzero > 0 ? Status::pass : Status::indeterminate;
  any.data["verdicts"] = verdicts;
  out.push_back(any);
  return out;
}

std::vector<Record> numerics_extras(const SuiteOptions& o) {
  std::vector<Record> out;
  const auto& q = o.quadrature;
  auto guarded = [&](const std::string& name, const std::string& anchor, const std::function<void(Record&)>& body) {
    Record r = make(name, anchor, 0);
    try {
      body(r);
    } catch (const std::exception& e) {
      r = failure(name, anchor, 0, e);
    }
    out.push_back(r);
  };
  guarded("I(2) differs from I(1/2)", "I(lambda) is not constant", [&](Record& r) {
    const auto a = numerics::I_of_lambda(2.0, q), b = numerics::I_of_lambda(0.5, q);
    const double err = a.error_estimate + b.error_estimate;
    set_quadrature(r, a.value - b.value, err, a.cells_used + b.cells_used);
    r.status = numeric_status(a.converged && b.converged, std::abs(a.value - b.value) > 5.0 * err);
  });
  guarded("I(2+i) equals I(2-i)", "conjugation symmetry of I(lambda)", [&](Record& r) {
    const auto a = numerics::I_of_lambda(cplx(2.0, 1.0), q), b = numerics::I_of_lambda(cplx(2.0, -1.0), q);
    const double err = a.error_estimate + b.error_estimate;
    set_quadrature(r, a.value - b.value, err, a.cells_used + b.cells_used);
    r.status = numeric_status(a.converged && b.converged, std::abs(a.value - b.value) <= std::max(q.tol, 3.0 * err));
  });
  guarded("I(lambda) = log|lambda| / 2 at lambda = 2 + i", "x -> lambda / x is an automorphism of E_lambda",
          [&](Record& r) {
            const cplx l(2.0, 1.0);
            const auto a = numerics::I_of_lambda(l, q);
            set_quadrature(r, a.value - 0.5 * std::log(std::abs(l)), a.error_estimate, a.cells_used);
            r.status = numeric_status(a.converged, std::abs(*r.value) <= std::max(q.tol, 3.0 * a.error_estimate));
          });
  guarded("Gram self-consistency, genus 2", "orthonormal basis of holomorphic differentials", [&](Record& r) {
    const auto c = numerics::ComplexCurveModel::from_polynomial(Polynomial{0, 24, -50, 35, -10, 1});
    const auto g = numerics::gram_normalize(c, q);
    const double defect = numerics::orthonormality_defect(c, g, q);
    r.value = defect;
    r.cells = g.cells_used;
    r.status = numeric_status(g.converged, defect <= 10.0 * q.tol);
    r.note = "accept <= 10 tol";
  });
  guarded("pairing <R(K), tau> matches 2 I(f, tau_C) on the bielliptic model (2, 5)",
          "pairing of the regulator current with tau", [&](Record& r) {
            const auto rep = numerics::bielliptic_identity_check(2.0, 5.0, q);
            const auto g = numerics::gram_normalize(rep.data.curve, q, rep.data.elliptic_rows);
            const auto k = numerics::regulator_pairing_K(rep.data.curve, rep.data.f, g, q);
            const auto swapped = numerics::regulator_pairing_K(rep.data.curve, rep.data.f, numerics::swap_basis(g, 0, 1), q);
            const double gap = std::abs(k.value - 2.0 * rep.tau_value.value);
            const double tolerance = std::max(q.tol, 3.0 * (k.error_estimate + 2.0 * rep.tau_value.error)) + 1e-7;
            set_quadrature(r, k.value, k.error_estimate, k.cells_used);
            r.status = numeric_status(k.converged && swapped.converged,
                                      gap <= tolerance && std::abs(swapped.value + k.value) <= 1e-12 + 1e-12 * std::abs(k.value));
            r.note = "two code paths differ by " + format_double(gap) + "; swapped basis gives " +
                     format_double(swapped.value);
          });
  guarded("genus-3 unramified double cover", "genus-3 double cover of a genus-2 curve", [&](Record& r) {
    const auto cover = numerics::build_genus3_cover(3.0, cplx(-2.0, 0.5), cplx(4.0, 1.0));
    const auto [up, down] = numerics::cover_masses(cover, q);
    const double ratio = up.value / down.value;
    r.value = ratio;
    r.error = (up.error_estimate + 2.0 * down.error_estimate) / down.value;
    r.cells = up.cells_used + down.cells_used;
    r.status = numeric_status(up.converged && down.converged,
                              cover.genus_cover == 3 && cover.genus_base == 2 && cover.ramification == 0 &&
                                  cover.commutativity_residual < 1e-10 && cover.branch_residual < 1e-10 &&
                                  std::abs(ratio - 2.0) <= std::max(1e-6, 3.0 * *r.error));
    r.note = "mass ratio upstairs / downstairs; diagram residual " + format_double(cover.commutativity_residual);
  });
  return out;
}

std::vector<Record> timed_suite(bool timing, const std::function<std::vector<Record>()>& suite) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Record> out = suite();
  if (timing) {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : out) r.runtime_seconds = seconds;
  }
  return out;
}

Report full_report(const CycleData& genus2, const CycleData& genus3, const SuiteOptions& o) {
  Report r;
  r.command = "full-report";
  const bool timing = o.timing;
  r.append(timed_suite(timing, [&] { return verify_cycles(genus2); }));
  r.append(timed_suite(timing, [&] { return verify_cycles(genus3); }));
  r.append(timed_suite(timing, [&] { return random_four_configurations(o.seed); }));
  r.append(timed_suite(timing, [&] { return functional_equation({2.0, 3.0, 5.0, 1.5}, o); }));
  r.append(timed_suite(timing, [&] { return cross_oracles(o); }));
  r.append(timed_suite(timing, [&] { return bielliptic({{2.0, 3.0}, {2.0, 5.0}, {3.0, 5.0}}, o); }));
  r.append(timed_suite(timing, [&] { return intersection_combinatorics(genus3); }));
  r.append(timed_suite(timing, [&] { return random_specializations(o.seed); }));
  r.append(timed_suite(timing, [&] { return genus2_decomposition(genus2); }));
  r.append(timed_suite(timing, [&] { return algebraic_properties(o.seed); }));
  r.append(timed_suite(timing, [&] { return numerics_extras(o); }));
  return r;
}

}  // namespace hyperchow::report
