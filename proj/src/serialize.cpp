#include "hyperchow/serialize.hpp"

#include <stdexcept>

namespace hyperchow::io {

namespace {

const char* atom_name(AtomKind k) {
  switch (k) {
    case AtomKind::branch: return "branch";
    case AtomKind::fiber: return "fiber";
    case AtomKind::one_sided: return "one_sided";
    case AtomKind::infinity_pair: return "infinity_pair";
  }
  return "branch";
}

AtomKind atom_kind(const std::string& s) {
  if (s == "branch") return AtomKind::branch;
  if (s == "fiber") return AtomKind::fiber;
  if (s == "one_sided") return AtomKind::one_sided;
  if (s == "infinity_pair") return AtomKind::infinity_pair;
  throw std::invalid_argument("unknown atom kind '" + s + "'");
}

const char* embedding_name(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::translate: return "translate";
    case EmbeddingKind::sum: return "sum";
    case EmbeddingKind::flip: return "flip";
    case EmbeddingKind::shifted: return "shifted";
  }
  return "translate";
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const Rational& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const HyperellipticCurve& c) { return {{"h", to_json(c.h())}, {"genus", c.genus()}}; }

json to_json(const CurvePoint& p) {
  switch (p.kind) {
    case PointKind::affine: return {{"kind", "affine"}, {"x", to_json(p.x)}, {"y", to_json(p.y)}};
    case PointKind::branch: return {{"kind", "branch"}, {"x", to_json(p.x)}};
    case PointKind::infinity:
      return {{"kind", "infinity"},
              {"sheet", p.sheet == InfinitySheet::single ? "single" : p.sheet == InfinitySheet::plus ? "plus" : "minus"}};
  }
  return {};
}

json to_json(const FunctionFieldElement& f) { return {{"a", to_json(f.a())}, {"b", to_json(f.b())}, {"d", to_json(f.d())}}; }

json to_json(const Divisor& d) {
  json points = json::array(), atoms = json::array();
  for (const auto& [p, n] : d.points()) points.push_back({{"point", to_json(p)}, {"multiplicity", n}});
  for (const auto& [a, n] : d.atoms()) {
    json atom{{"kind", atom_name(a.kind)}, {"u", to_json(a.u)}};
    if (a.kind == AtomKind::one_sided) atom["v"] = to_json(a.v);
    atom["multiplicity"] = n;
    atoms.push_back(atom);
  }
  return {{"points", points}, {"atoms", atoms}, {"degree", d.degree()}};
}

json to_json(const MumfordPair& m) { return json::array({to_json(m.u), to_json(m.v)}); }

json to_json(const PicPoint& p) { return {{"degree", p.degree}, {"class", to_json(p.cls)}}; }

json to_json(const EmbeddedCurve& e) {
  json params = json::array();
  for (const auto& p : e.params) params.push_back(to_json(p));
  return {{"label", e.label}, {"kind", embedding_name(e.kind)}, {"sign", e.sign}, {"params", params}, {"offset", to_json(e.offset)}};
}

json to_json(const ZeroCycleOnJ& z) {
  json out = json::array();
  for (const auto& [p, n] : z.terms()) out.push_back({{"point", to_json(p)}, {"multiplicity", n}});
  return out;
}

json to_json(const PreCycle& z) {
  json terms = json::array();
  for (const auto& t : z.terms)
    terms.push_back({{"curve", to_json(t.curve)}, {"function", to_json(t.function)}, {"multiplicity", t.multiplicity}});
  return {{"ambient", z.ambient == Ambient::pic1 ? "pic1" : "pic3"}, {"terms", terms}};
}

json to_json(const ConfigurationReport& r) {
  json table = json::array();
  for (const auto& row : r.intersection_table) {
    json points = json::array();
    for (const auto& p : row.points) points.push_back(to_json(p));
    table.push_back({{"pair", json::array({row.first, row.second})},
                     {"same_curve", row.same_curve},
                     {"points", points},
                     {"irrational_points", row.irrational_points}});
  }
  json points = json::array();
  for (const auto& p : r.points) points.push_back({{"point", to_json(p.point)}, {"curves", p.curves}});
  return {{"is_cycle", r.is_cycle},
          {"boundary", to_json(r.boundary)},
          {"curves", r.curve_labels},
          {"intersection_table", table},
          {"points", points},
          {"points_total", r.points_total},
          {"irrational_points", r.irrational_points},
          {"notes", r.notes}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(coeffs);
}

HyperellipticCurve curve_from_json(const json& j) { return HyperellipticCurve(polynomial_from_json(field(j, "h"))); }

CurvePoint point_from_json(const HyperellipticCurve& c, const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  CurvePoint p;
  if (kind == "affine") {
    p = CurvePoint::affine(rational_from_json(field(j, "x")), rational_from_json(field(j, "y")));
  } else if (kind == "branch") {
    p = CurvePoint::branch(rational_from_json(field(j, "x")));
  } else if (kind == "infinity") {
    const std::string sheet = j.value("sheet", "single");
    p = CurvePoint::infinity(sheet == "plus" ? InfinitySheet::plus : sheet == "minus" ? InfinitySheet::minus
                                                                                     : InfinitySheet::single);
  } else {
    throw std::invalid_argument("unknown point kind '" + kind + "'");
  }
  require_on_curve(c, p);
  return p;
}

FunctionFieldElement function_from_json(const HyperellipticCurve& c, const json& j) {
  const Polynomial d = j.contains("d") ? polynomial_from_json(j.at("d")) : Polynomial::constant(1);
  return FunctionFieldElement(c, polynomial_from_json(field(j, "a")),
                              j.contains("b") ? polynomial_from_json(j.at("b")) : Polynomial(), d);
}

Divisor divisor_from_json(const HyperellipticCurve& c, const json& j) {
  Divisor d(c);
  if (j.contains("points"))
    for (const auto& t : j.at("points")) d += Divisor::point(c, point_from_json(c, field(t, "point")), field(t, "multiplicity").get<int>());
  if (j.contains("atoms"))
    for (const auto& t : j.at("atoms")) {
      ClosedAtom a;
      a.kind = atom_kind(field(t, "kind").get<std::string>());
      a.u = polynomial_from_json(field(t, "u"));
      if (t.contains("v")) a.v = polynomial_from_json(t.at("v"));
      d += Divisor::atom(c, a, field(t, "multiplicity").get<int>());
    }
  return d;
}

MumfordPair mumford_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("Mumford pair must be [u, v]");
  return MumfordPair{polynomial_from_json(j[0]), polynomial_from_json(j[1])};
}

}  // namespace hyperchow::io
