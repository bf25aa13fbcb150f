#pragma once

#include "hyperchow/cycles.hpp"
#include "hyperchow/serialize.hpp"
#include "hyperchow/numerics/quadrature.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hyperchow::report {

enum class Status { pass, fail, indeterminate };
std::string to_string(Status s);

/// One check. `anchor` names the mathematical statement being exercised;
/// `criterion` ties the record to an acceptance item (0 for extra checks).
struct Record {
  std::string name;
  std::string anchor;
  int criterion = 0;
  Status status = Status::fail;
  std::optional<double> value, error;
  std::optional<std::size_t> cells;
  std::string note;
  nlohmann::ordered_json data;  // exact payload: rationals as "p/q", classes as (u, v)
  std::optional<double> runtime_seconds;
};

struct Report {
  std::string command;
  std::vector<Record> records;

  void append(std::vector<Record> more);
  /// 0 all pass, 1 any fail, 2 no fail but some indeterminate.
  int exit_code() const;
  /// Aggregate status of the records tagged with `criterion`.
  Status criterion_status(int criterion) const;
};

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);
std::string to_csv(const Report& r);


/// Curve, basepoint w1, second Weierstrass point w2 and translation points t.
struct CycleData {
  std::string name;
  HyperellipticCurve curve;
  CurvePoint w1, w2;
  std::vector<CurvePoint> ts;
};

/// Built-in test curves: y^2 = 105 x(x-1)...(x-4) and y^2 = 13090 x(x-1)...(x-6),
/// twists that carry rational points off the branch locus.
CycleData default_genus2_data();
CycleData default_genus3_data();

struct SuiteOptions {
  numerics::QuadratureOptions quadrature;
  std::uint64_t seed = 20240607;
  std::size_t monte_carlo_samples = 200000;
  /// Attach wall-clock seconds to records; off by default so that reports
  /// are byte-identical across runs.
  bool timing = false;
};

/// K, K_t, Z_t boundaries and, given four rational branch points besides
/// w1, the 4-configuration boundary.
std::vector<Record> verify_cycles(const CycleData& data);
/// Boundary of the 4-configuration on `count` random admissible data.
std::vector<Record> random_four_configurations(std::uint64_t seed, int count = 20);
/// Generic 4-configuration: 8 points on 2 curves each; specialization: 4
/// points on 3 curves each.
std::vector<Record> intersection_combinatorics(const CycleData& genus3);
/// specialize_and_compare on `count` random rational t, each on the twist
/// y^2 = h0(t) h0(x) of a fixed genus-3 curve so that t is a rational point.
std::vector<Record> random_specializations(std::uint64_t seed, int count = 5);
/// specialize_and_compare at every t of the data; t in {w1, w2} is reported
/// as a degenerate (zero) precycle.
std::vector<Record> specializations(const CycleData& data);
/// Skips t in {w1, w2} (zero precycle) with a note.
std::vector<Record> genus2_decomposition(const CycleData& genus2);
/// Divisor degree 0, Weil reciprocity, Cantor group laws and 2-torsion
/// relations on seeded random inputs.
std::vector<Record> algebraic_properties(std::uint64_t seed);

std::vector<Record> functional_equation(const std::vector<numerics::cplx>& lambdas, const SuiteOptions& o);
std::vector<Record> cross_oracles(const SuiteOptions& o);
std::vector<Record> bielliptic(const std::vector<std::pair<double, double>>& pairs, const SuiteOptions& o);
/// Non-constancy of I, conjugation symmetry, pairing paths, genus-3 cover.
std::vector<Record> numerics_extras(const SuiteOptions& o);

/// Runs a suite; with `timing`, each record gets the suite's wall-clock seconds.
std::vector<Record> timed_suite(bool timing, const std::function<std::vector<Record>()>& suite);

/// Every suite in a fixed order.
Report full_report(const CycleData& genus2, const CycleData& genus3, const SuiteOptions& o);

}  // namespace hyperchow::report
