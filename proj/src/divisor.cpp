#include "hyperchow/divisor.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperchow {

int ClosedAtom::degree() const {
  switch (kind) {
    case AtomKind::branch: return u.degree();
    case AtomKind::fiber: return 2 * u.degree();
    case AtomKind::one_sided: return u.degree();
    case AtomKind::infinity_pair: return 2;
  }
  return 0;
}

std::string to_string(const ClosedAtom& atom) {
  switch (atom.kind) {
    case AtomKind::branch: return "branch[" + to_string(atom.u) + "]";
    case AtomKind::fiber: return "fiber[" + to_string(atom.u) + "]";
    case AtomKind::one_sided: return "place[" + to_string(atom.u) + "; y = " + to_string(atom.v) + "]";
    case AtomKind::infinity_pair: return "infinity-pair";
  }
  return "?";
}

namespace detail {

std::vector<Polynomial> coprime_basis(const std::vector<Polynomial>& inputs) {
  std::vector<Polynomial> basis;
  std::vector<Polynomial> todo;
  for (const auto& p : inputs)
    if (p.degree() > 0) todo.push_back(p.monic());
  while (!todo.empty()) {
    Polynomial p = std::move(todo.back());
    todo.pop_back();
    if (p.degree() <= 0) continue;
    bool split = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Polynomial g = gcd(p, basis[k]);
      if (g.degree() <= 0) continue;
      if (g == p && g == basis[k]) {
        split = true;
        break;
      }
      Polynomial q = basis[k];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(k));
      todo.push_back(exact_div(q, g));
      todo.push_back(exact_div(p, g));
      todo.push_back(g);
      split = true;
      break;
    }
    if (!split) basis.push_back(std::move(p));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<Piece> refine(const std::vector<const Divisor*>& divisors) {
  const std::size_t n = divisors.size();
  struct Entry {
    std::size_t index;
    int mult;
    const ClosedAtom* atom;
  };
  std::vector<Entry> branch, other;
  std::vector<Polynomial> branch_polys, other_polys;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [atom, mult] : divisors[i]->atoms()) {
      if (atom.kind == AtomKind::infinity_pair) continue;
      if (atom.kind == AtomKind::branch) {
        branch.push_back({i, mult, &atom});
        branch_polys.push_back(atom.u);
      } else {
        other.push_back({i, mult, &atom});
        other_polys.push_back(atom.u);
      }
    }
  }
  std::vector<Piece> pieces;
  for (const auto& b : coprime_basis(branch_polys)) {
    Piece piece;
    piece.kind = AtomKind::branch;
    piece.p = b;
    piece.plus.assign(n, 0);
    piece.minus.assign(n, 0);
    for (const auto& e : branch)
      if (divides(b, e.atom->u)) {
        piece.plus[e.index] += e.mult;
        piece.minus[e.index] += e.mult;
      }
    pieces.push_back(std::move(piece));
  }
  for (const auto& b : coprime_basis(other_polys)) {
    std::vector<Piece> local(1);
    local[0].kind = AtomKind::fiber;
    local[0].p = b;
    local[0].plus.assign(n, 0);
    local[0].minus.assign(n, 0);
    for (const auto& e : other) {
      if (!divides(b, e.atom->u)) continue;
      if (e.atom->kind == AtomKind::fiber) {
        for (auto& sp : local) {
          sp.plus[e.index] += e.mult;
          sp.minus[e.index] += e.mult;
        }
        continue;
      }
      std::vector<Piece> next;
      for (auto& sp : local) {
        const Polynomial vj = e.atom->v % sp.p;
        if (sp.kind == AtomKind::fiber) {
          sp.kind = AtomKind::one_sided;
          sp.v = vj;
          sp.plus[e.index] += e.mult;
          next.push_back(std::move(sp));
          continue;
        }
        const Polynomial same = gcd(sp.p, vj - sp.v);
        const Polynomial opposite = gcd(sp.p, vj + sp.v);
        if (same.degree() > 0) {
          Piece a = sp;
          a.p = same;
          a.v = sp.v % same;
          a.plus[e.index] += e.mult;
          next.push_back(std::move(a));
        }
        if (opposite.degree() > 0) {
          Piece a = sp;
          a.p = opposite;
          a.v = sp.v % opposite;
          a.minus[e.index] += e.mult;
          next.push_back(std::move(a));
        }
      }
      local = std::move(next);
    }
    for (auto& sp : local) pieces.push_back(std::move(sp));
  }
  return pieces;
}

}  // namespace detail

namespace {

// Polynomial that is v1 mod u1 and v2 mod u2 (u1, u2 coprime).
Polynomial crt(const Polynomial& u1, const Polynomial& v1, const Polynomial& u2, const Polynomial& v2) {
  const Polynomial t = ((v2 - v1) * inverse_mod(u1, u2)) % u2;
  return (v1 + u1 * t) % (u1 * u2);
}

}  // namespace

Divisor Divisor::point(const HyperellipticCurve& c, const CurvePoint& p, int multiplicity) {
  require_on_curve(c, p);
  Divisor d(c);
  d.add_point(p, multiplicity);
  return d;
}

void Divisor::add_point(const CurvePoint& p, int n) {
  if (n == 0) return;
  auto it = points_.find(p);
  if (it == points_.end()) {
    points_.emplace(p, n);
    return;
  }
  it->second += n;
  if (it->second == 0) points_.erase(it);
}

Divisor Divisor::atom(const HyperellipticCurve& c, ClosedAtom atom, int multiplicity) {
  Divisor out(c);
  if (multiplicity == 0) return out;
  const Polynomial& h = c.h();
  if (atom.kind == AtomKind::infinity_pair) {
    if (c.odd_model() || c.split_infinity()) throw std::invalid_argument("infinity pair atom on a curve with rational points at infinity");
    out.atoms_.push_back({ClosedAtom{AtomKind::infinity_pair, Polynomial::constant(1), Polynomial{}}, multiplicity});
    return out;
  }
  if (atom.u.degree() <= 0) return out;
  atom.u = atom.u.monic();
  if (!is_squarefree(atom.u)) throw std::invalid_argument("atom polynomial is not squarefree");
  if (atom.kind == AtomKind::branch) {
    if (!divides(atom.u, h)) throw std::invalid_argument("branch atom does not divide h");
  } else if (gcd(atom.u, h).degree() > 0) {
    throw std::invalid_argument("fiber/one-sided atom meets the branch locus");
  }
  if (atom.kind == AtomKind::one_sided) {
    atom.v = atom.v % atom.u;
    if (!divides(atom.u, atom.v * atom.v - h)) throw std::invalid_argument("one-sided atom: v^2 != h mod u");
  } else {
    atom.v = Polynomial{};
  }
  for (const auto& r : rational_roots(atom.u)) {
    switch (atom.kind) {
      case AtomKind::branch:
        out.add_point(CurvePoint::branch(r), multiplicity);
        break;
      case AtomKind::one_sided:
        out.add_point(CurvePoint::affine(r, atom.v(r)), multiplicity);
        break;
      case AtomKind::fiber: {
        const auto pts = points_over(c, r);
        if (pts.empty()) continue;  // degree-2 place over a rational x stays symbolic
        for (const auto& p : pts) out.add_point(p, multiplicity);
        break;
      }
      case AtomKind::infinity_pair: break;
    }
    atom.u = exact_div(atom.u, Polynomial::linear(r));
    if (atom.kind == AtomKind::one_sided) atom.v = atom.v % atom.u;
  }
  if (atom.u.degree() > 0) out.atoms_.push_back({std::move(atom), multiplicity});
  return out;
}

Divisor combine(const std::vector<std::pair<const Divisor*, int>>& terms) {
  if (terms.empty()) throw std::invalid_argument("combine needs at least one divisor");
  const HyperellipticCurve& c = terms.front().first->curve();
  Divisor out(c);
  int infinity_pair = 0;
  std::vector<const Divisor*> divisors;
  for (const auto& [d, k] : terms) {
    if (d->curve() != c) throw std::invalid_argument("divisors on different curves");
    divisors.push_back(d);
    for (const auto& [p, n] : d->points()) out.add_point(p, k * n);
    for (const auto& [atom, n] : d->atoms())
      if (atom.kind == AtomKind::infinity_pair) infinity_pair += k * n;
  }
  std::map<int, Polynomial> branch, fiber;
  std::map<int, std::pair<Polynomial, Polynomial>> one_sided;
  auto add_product = [](std::map<int, Polynomial>& m, int mult, const Polynomial& p) {
    if (mult == 0) return;
    auto it = m.find(mult);
    if (it == m.end()) m.emplace(mult, p);
    else it->second *= p;
  };
  auto add_one_sided = [&](int mult, const Polynomial& u, const Polynomial& v) {
    if (mult == 0) return;
    auto it = one_sided.find(mult);
    if (it == one_sided.end()) {
      one_sided.emplace(mult, std::make_pair(u, v));
      return;
    }
    Polynomial merged_v = crt(it->second.first, it->second.second, u, v);
    it->second.first *= u;
    it->second.second = std::move(merged_v);
  };
  for (const auto& piece : detail::refine(divisors)) {
    int plus = 0, minus = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      plus += terms[i].second * piece.plus[i];
      minus += terms[i].second * piece.minus[i];
    }
    if (piece.kind == AtomKind::branch) {
      add_product(branch, plus, piece.p);
    } else if (piece.kind == AtomKind::fiber || plus == minus) {
      add_product(fiber, plus, piece.p);
    } else {
      add_one_sided(plus, piece.p, piece.v);
      add_one_sided(minus, piece.p, (-piece.v) % piece.p);
    }
  }
  for (auto& [m, u] : branch) out.atoms_.push_back({ClosedAtom{AtomKind::branch, u, Polynomial{}}, m});
  for (auto& [m, u] : fiber) out.atoms_.push_back({ClosedAtom{AtomKind::fiber, u, Polynomial{}}, m});
  for (auto& [m, uv] : one_sided) out.atoms_.push_back({ClosedAtom{AtomKind::one_sided, uv.first, uv.second}, m});
  if (infinity_pair != 0)
    out.atoms_.push_back({ClosedAtom{AtomKind::infinity_pair, Polynomial::constant(1), Polynomial{}}, infinity_pair});
  return out;
}

int Divisor::degree() const {
  int deg = 0;
  for (const auto& [p, n] : points_) deg += n;
  for (const auto& [a, n] : atoms_) deg += n * a.degree();
  return deg;
}

int Divisor::multiplicity(const CurvePoint& p) const {
  auto it = points_.find(p);
  return it == points_.end() ? 0 : it->second;
}

Divisor Divisor::operator-() const { return (-1) * *this; }

Divisor& Divisor::operator+=(const Divisor& other) { return *this = combine({{this, 1}, {&other, 1}}); }

Divisor& Divisor::operator-=(const Divisor& other) { return *this = combine({{this, 1}, {&other, -1}}); }

Divisor operator*(int k, const Divisor& d) {
  Divisor out(d.curve_);
  if (k == 0) return out;
  for (const auto& [p, n] : d.points_) out.points_.emplace(p, k * n);
  out.atoms_ = d.atoms_;
  for (auto& [a, n] : out.atoms_) n *= k;
  if (k < 0) {
    // keep atoms ordered by (kind, multiplicity)
    std::stable_sort(out.atoms_.begin(), out.atoms_.end(), [](const auto& x, const auto& y) {
      if (x.first.kind != y.first.kind) return x.first.kind < y.first.kind;
      return x.second < y.second;
    });
  }
  return out;
}

Divisor Divisor::positive_part() const {
  Divisor out(curve_);
  for (const auto& [p, n] : points_)
    if (n > 0) out.points_.emplace(p, n);
  for (const auto& [a, n] : atoms_)
    if (n > 0) out.atoms_.push_back({a, n});
  return out;
}

Divisor Divisor::negative_part() const { return (-*this).positive_part(); }

std::string to_string(const Divisor& d) {
  if (d.is_zero()) return "0";
  std::string s;
  bool first = true;
  auto term = [&](int n, const std::string& what) {
    if (!first) s += n < 0 ? " - " : " + ";
    else if (n < 0) s += "-";
    first = false;
    const int m = n < 0 ? -n : n;
    if (m != 1) s += std::to_string(m) + "*";
    s += what;
  };
  for (const auto& [p, n] : d.points()) term(n, to_string(p));
  for (const auto& [a, n] : d.atoms()) term(n, to_string(a));
  return s;
}

namespace {

Divisor polynomial_divisor(const HyperellipticCurve& c, const Polynomial& p, int sign) {
  Divisor out(c);
  for (const auto& [q, k] : squarefree_decomposition(p)) {
    const Polynomial br = gcd(q, c.h());
    const Polynomial rest = exact_div(q, br.degree() < 0 ? Polynomial::constant(1) : br);
    if (br.degree() > 0) out += Divisor::atom(c, ClosedAtom{AtomKind::branch, br, Polynomial{}}, 2 * k * sign);
    if (rest.degree() > 0) out += Divisor::atom(c, ClosedAtom{AtomKind::fiber, rest, Polynomial{}}, k * sign);
  }
  return out;
}

}  // namespace

Divisor divisor_of(const FunctionFieldElement& f) {
  if (f.is_zero()) throw std::domain_error("divisor of the zero function");
  const HyperellipticCurve& c = f.curve();
  const auto s = detail::strip(f);
  Divisor out = polynomial_divisor(c, s.content, 1);
  out += polynomial_divisor(c, f.d(), -1);
  if (!s.b1.is_zero()) {
    for (const auto& [q, k] : squarefree_decomposition(s.norm1)) {
      const Polynomial br = gcd(q, c.h());
      const Polynomial rest = exact_div(q, br);
      if (br.degree() > 0) out += Divisor::atom(c, ClosedAtom{AtomKind::branch, br, Polynomial{}}, k);
      if (rest.degree() > 0) {
        const Polynomial v = (-(s.a1 * inverse_mod(s.b1, rest))) % rest;
        out += Divisor::atom(c, ClosedAtom{AtomKind::one_sided, rest, v}, k);
      }
    }
  }
  for (const auto& p : points_at_infinity(c)) out += Divisor::point(c, p, valuation(f, p));
  if (!c.odd_model() && !c.split_infinity()) {
    const int v = detail::valuation_at_infinity_pair(f);
    if (v != 0) out += Divisor::atom(c, ClosedAtom{AtomKind::infinity_pair, Polynomial::constant(1), Polynomial{}}, v);
  }
  if (out.degree() != 0) throw std::logic_error("divisor of a function has nonzero degree");
  return out;
}

namespace {

// Split p into parts on which ord(f) is constant.
std::vector<std::pair<Polynomial, int>> split_by_order(const Polynomial& p, const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial rest = p, cur = f;
  int k = 0;
  while (rest.degree() > 0) {
    const Polynomial g = gcd(rest, cur);
    const Polynomial q = exact_div(rest, g.degree() < 0 ? Polynomial::constant(1) : g);
    if (q.degree() > 0) out.emplace_back(q, k);
    if (g.degree() <= 0) break;
    cur = exact_div(cur, g);
    rest = g;
    ++k;
  }
  return out;
}

struct OrderedPiece {
  Polynomial q;
  int kc, kd, kn;
};

std::vector<OrderedPiece> split_for(const Polynomial& p, const Polynomial& c, const Polynomial& d, const Polynomial& n) {
  std::vector<OrderedPiece> out;
  for (const auto& [q1, kc] : split_by_order(p, c))
    for (const auto& [q2, kd] : split_by_order(q1, d))
      for (const auto& [q3, kn] : split_by_order(q2, n)) out.push_back({q3, kc, kd, kn});
  return out;
}

// N_{Q[x]/(q)/Q} of r mod q, for monic squarefree q.
Rational residue_norm(const Polynomial& q, const Polynomial& r) { return resultant(q, r % q); }

Rational norm_one_sided(const FunctionFieldElement& t, const Polynomial& p, const Polynomial& v) {
  const auto s = detail::strip(t);
  Rational norm = 1;
  for (const auto& piece : split_for(p, s.content, t.d(), s.norm1)) {
    const Polynomial& q = piece.q;
    const Polynomial at_sheet = (s.a1 + s.b1 * v) % q;
    const Polynomial vanish = gcd(q, at_sheet);
    const Polynomial keep = exact_div(q, vanish.degree() < 0 ? Polynomial::constant(1) : vanish);
    const Polynomial cq = exact_div(s.content, pow(q, piece.kc));
    const Polynomial dq = exact_div(t.d(), pow(q, piece.kd));
    if (keep.degree() > 0) {
      if (piece.kc != piece.kd) throw std::logic_error("tame symbol is not a unit on a cluster");
      const Polynomial value = (cq * at_sheet * inverse_mod(dq, keep)) % keep;
      norm *= residue_norm(keep, value);
    }
    if (vanish.degree() > 0) {
      if (piece.kc + piece.kn != piece.kd) throw std::logic_error("tame symbol is not a unit on a cluster");
      const Polynomial nq = exact_div(s.norm1, pow(q, piece.kn));
      const Polynomial conj = (s.a1 - s.b1 * v) % vanish;
      const Polynomial value = (cq * nq * inverse_mod(conj, vanish) * inverse_mod(dq, vanish)) % vanish;
      norm *= residue_norm(vanish, value);
    }
  }
  return norm;
}

Rational norm_branch(const FunctionFieldElement& t, const Polynomial& p) {
  const auto s = detail::strip(t);
  Rational norm = 1;
  for (const auto& piece : split_for(p, s.content, t.d(), Polynomial::constant(1))) {
    if (piece.kc != piece.kd) throw std::logic_error("tame symbol is not a unit on a branch cluster");
    const Polynomial cq = exact_div(s.content, pow(piece.q, piece.kc));
    const Polynomial dq = exact_div(t.d(), pow(piece.q, piece.kd));
    const Polynomial value = (cq * s.a1 * inverse_mod(dq, piece.q)) % piece.q;
    norm *= residue_norm(piece.q, value);
  }
  return norm;
}

std::pair<Polynomial, Polynomial> reduced_norm(const FunctionFieldElement& t) {
  auto [num, den] = t.norm();
  const Polynomial g = gcd(num, den);
  return {exact_div(num, g), exact_div(den, g)};
}

Rational norm_fiber(const FunctionFieldElement& t, const Polynomial& p) {
  const auto [num, den] = reduced_norm(t);
  return residue_norm(p, num) / residue_norm(p, den);
}

Rational norm_infinity_pair(const FunctionFieldElement& t) {
  const auto [num, den] = reduced_norm(t);
  if (num.degree() != den.degree()) throw std::logic_error("tame symbol is not a unit at infinity");
  return num.leading() / den.leading();
}

FunctionFieldElement symbol_function(const FunctionFieldElement& a, const FunctionFieldElement& b, int va, int vb) {
  FunctionFieldElement t = pow(a, vb) / pow(b, va);
  if ((va * vb) % 2 != 0) t = -t;
  return t;
}

}  // namespace

ResidueValue evaluate_at_place(const FunctionFieldElement& f, const ClosedAtom& place) {
  if (place.kind == AtomKind::infinity_pair) throw std::domain_error("evaluation at the infinite place pair is not supported");
  const Polynomial& u = place.u;
  if (gcd(f.d(), u).degree() > 0) throw std::domain_error("function has a pole or indeterminacy on " + to_string(place));
  const Polynomial dinv = inverse_mod(f.d(), u);
  ResidueValue out{place, {}, {}};
  switch (place.kind) {
    case AtomKind::branch: out.a = (f.a() * dinv) % u; break;
    case AtomKind::one_sided: out.a = ((f.a() + f.b() * place.v) * dinv) % u; break;
    case AtomKind::fiber:
      out.a = (f.a() * dinv) % u;
      out.b = (f.b() * dinv) % u;
      break;
    case AtomKind::infinity_pair: break;
  }
  return out;
}

Rational weil_reciprocity_product(const FunctionFieldElement& a, const FunctionFieldElement& b) {
  const Divisor da = divisor_of(a), db = divisor_of(b);
  Rational product = 1;
  std::map<CurvePoint, int> support = da.points();
  for (const auto& [p, n] : db.points()) support.emplace(p, n);
  for (const auto& [p, n] : support) product *= tame_symbol(a, b, p);
  for (const auto& piece : detail::refine({&da, &db})) {
    if (piece.kind == AtomKind::branch || piece.kind == AtomKind::fiber) {
      const int va = piece.plus[0], vb = piece.plus[1];
      if (va == 0 && vb == 0) continue;
      const auto t = symbol_function(a, b, va, vb);
      product *= piece.kind == AtomKind::branch ? norm_branch(t, piece.p) : norm_fiber(t, piece.p);
      continue;
    }
    for (int sheet = 0; sheet < 2; ++sheet) {
      const int va = sheet == 0 ? piece.plus[0] : piece.minus[0];
      const int vb = sheet == 0 ? piece.plus[1] : piece.minus[1];
      if (va == 0 && vb == 0) continue;
      const auto t = symbol_function(a, b, va, vb);
      const Polynomial v = sheet == 0 ? piece.v : (-piece.v) % piece.p;
      product *= norm_one_sided(t, piece.p, v);
    }
  }
  auto pair_mult = [](const Divisor& d) {
    for (const auto& [atom, n] : d.atoms())
      if (atom.kind == AtomKind::infinity_pair) return n;
    return 0;
  };
  const int va = pair_mult(da), vb = pair_mult(db);
  if (va != 0 || vb != 0) product *= norm_infinity_pair(symbol_function(a, b, va, vb));
  return product;
}

}  // namespace hyperchow
