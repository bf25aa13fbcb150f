#include "config.hpp"

#include <yaml-cpp/yaml.h>

#include <regex>
#include <sstream>

namespace hyperchow::cli {

namespace {

Rational rational_of(const YAML::Node& node, const std::string& what) {
  try {
    return parse_rational(node.as<std::string>());
  } catch (const std::exception& e) {
    throw UsageError("bad rational for " + what + ": " + e.what());
  }
}

HyperellipticCurve curve_of(const YAML::Node& node) {
  if (!node || !node.IsMap()) throw UsageError("missing 'curve' section");
  Polynomial h;
  if (node["coefficients"]) {
    std::vector<Rational> coeffs;
    for (const auto& c : node["coefficients"]) coeffs.push_back(rational_of(c, "curve.coefficients"));
    h = Polynomial(coeffs);
  } else if (node["roots"]) {
    std::vector<Rational> roots;
    for (const auto& c : node["roots"]) roots.push_back(rational_of(c, "curve.roots"));
    h = Polynomial::from_roots(roots);
  } else {
    throw UsageError("curve needs 'coefficients' or 'roots'");
  }
  if (node["scale"]) h = h * rational_of(node["scale"], "curve.scale");
  try {
    return HyperellipticCurve(h);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid curve: ") + e.what());
  }
}

}  // namespace

CurvePoint parse_point(const HyperellipticCurve& curve, const std::string& text) {
  std::istringstream in(text);
  std::string kind, a, b;
  in >> kind >> a >> b;
  CurvePoint p;
  try {
    if (kind == "infinity") {
      p = CurvePoint::infinity(a == "+" ? InfinitySheet::plus : a == "-" ? InfinitySheet::minus : InfinitySheet::single);
    } else if (kind == "branch") {
      p = CurvePoint::branch(parse_rational(a));
    } else if (kind == "affine") {
      p = CurvePoint::affine(parse_rational(a), parse_rational(b));
    } else if (kind == "x") {
      const Rational x = parse_rational(a);
      bool found = false;
      for (const auto& q : points_over(curve, x))
        if (q.kind == PointKind::affine && q.y > 0) {
          p = q;
          found = true;
        }
      if (!found) throw UsageError("no rational point with y > 0 over x = " + a);
    } else {
      throw UsageError("unknown point kind '" + kind + "'");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad point '" + text + "': " + e.what());
  }
  if (!on_curve(curve, p)) throw UsageError("point '" + text + "' is not on the curve");
  return p;
}

CurveConfig load_curve_config(const std::string& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const std::exception& e) {
    throw UsageError("cannot read config '" + path + "': " + e.what());
  }
  if (!root.IsMap()) throw UsageError("config '" + path + "' is empty or not a mapping");
  CurveConfig cfg{report::CycleData{root["name"] ? root["name"].as<std::string>() : path, curve_of(root["curve"]),
                                    CurvePoint::infinity(), CurvePoint::infinity(), {}},
                  {}, {}, {}, {}};
  auto& d = cfg.data;
  if (!root["w1"] || !root["w2"]) throw UsageError("config needs explicit 'w1' and 'w2'");
  d.w1 = parse_point(d.curve, root["w1"].as<std::string>());
  d.w2 = parse_point(d.curve, root["w2"].as<std::string>());
  if (root["t"])
    for (const auto& t : root["t"]) d.ts.push_back(parse_point(d.curve, t.as<std::string>()));
  if (root["datum"]) {
    for (const auto& p : root["datum"]) cfg.datum.push_back(parse_point(d.curve, p.as<std::string>()));
    if (cfg.datum.size() != 4) throw UsageError("datum needs exactly four points a', a'', p', p''");
  }
  try {
    if (root["tolerance"]) cfg.tolerance = root["tolerance"].as<double>();
    if (root["budget"]) cfg.budget = root["budget"].as<std::size_t>();
    if (root["seed"]) cfg.seed = root["seed"].as<std::uint64_t>();
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad numeric setting: ") + e.what());
  }
  return cfg;
}

numerics::cplx parse_lambda(const std::string& text) {
  try {
    if (text.find('/') != std::string::npos) return parse_rational(text).get_d();
  } catch (const std::exception&) {
    throw UsageError("bad lambda '" + text + "'");
  }
  static const std::regex real(R"(\s*([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)\s*)");
  static const std::regex complex(
      R"(\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*)");
  static const std::regex imaginary(R"(\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*)");
  std::smatch m;
  if (std::regex_match(text, m, real)) return std::stod(m[1]);
  if (std::regex_match(text, m, complex)) {
    const double re = m[1].matched ? std::stod(m[1]) : 0.0;
    const double im = m[3].matched ? std::stod(m[3]) : 1.0;
    return {re, m[2] == "-" ? -im : im};
  }
  if (std::regex_match(text, m, imaginary)) {
    const double im = m[2].matched ? std::stod(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -im : im};
  }
  throw UsageError("bad lambda '" + text + "'");
}

}  // namespace hyperchow::cli
