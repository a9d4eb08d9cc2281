#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <numbers>

#include "hyperk/earthquake.hpp"
#include "hyperk/errors.hpp"

namespace hyperk {
namespace {

// rho_v = coef * t_comp^exp while the component is free, coef * value^exp
// once its parameter is fixed.
struct Assignment {
  int comp = -1;
  Rational coef;
  int exp = 1;
};

struct Component {
  bool fixed = false;
  QuadraticReal value;
};

QuadraticReal power(const QuadraticReal& x, int e) { return e > 0 ? x : QuadraticReal(1) / x; }
Rational power(const Rational& x, int e) { return e > 0 ? x : 1 / x; }

Rational ipow(const Rational& x, long e) {
  Rational out(1);
  Rational base = e >= 0 ? x : 1 / x;
  unsigned long n = static_cast<unsigned long>(e >= 0 ? e : -e);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
  out.canonicalize();
  return out;
}

long double log_of(const Rational& x) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log(static_cast<long double>(mn) / md) + static_cast<long double>(en - ed) * std::numbers::ln2_v<long double>;
}

// One "prod t^exps < prod B_j^weights_j" constraint, where B_j are the bounds
// of the squared input inequalities. Exponents are kept coprime.
struct Row {
  std::vector<long> exps;
  std::vector<Rational> weights;
  long double log_bound = 0;
};

long gcd_of(const std::vector<long>& v) {
  long g = 0;
  for (long e : v) g = std::gcd(g, e < 0 ? -e : e);
  return g;
}

Row normalized(Row r) {
  const long g = gcd_of(r.exps);
  if (g > 1) {
    for (auto& e : r.exps) e /= g;
    for (auto& w : r.weights) w /= g;
    r.log_bound /= g;
  }
  return r;
}

// Drops rows whose exponents repeat with a clearly looser bound.
void prune(std::vector<Row>& rows) {
  std::map<std::vector<long>, std::size_t> best;
  std::vector<Row> kept;
  for (auto& r : rows) {
    auto [it, fresh] = best.emplace(r.exps, kept.size());
    if (fresh) {
      kept.push_back(std::move(r));
      continue;
    }
    Row& old = kept[it->second];
    const long double tol = 1e-9L * (std::fabs(old.log_bound) + std::fabs(r.log_bound) + 1);
    if (r.log_bound < old.log_bound - tol) {
      old = std::move(r);
    } else if (r.log_bound <= old.log_bound + tol) {
      kept.push_back(std::move(r));
    }
  }
  rows = std::move(kept);
}

struct Inequality {
  std::size_t u;
  std::size_t v;
  int sigma;       // +1: rho_u rho_v, -1: rho_u / rho_v
  Rational K;      // the tangency value of rho_u rho_v^sigma
  bool less;       // required rho_u rho_v^sigma < K (else >)
  std::string text;
};

class Solver {
 public:
  Solver(const RealizabilityInstance& inst) : inst_(inst), n_(inst.relabeled_centers.size()), rho_(n_) {}

  RealizabilityResult run();

 private:
  std::string name(std::size_t v) const { return "rho(" + to_string(inst_.relabeled_centers[v]) + ")"; }
  bool at_infinity(std::size_t v) const { return inst_.relabeled_centers[v].is_infinity(); }
  const Rational& center(std::size_t v) const { return inst_.relabeled_centers[v].rational(); }

  std::optional<QuadraticReal> value(std::size_t v) const {
    const Assignment& a = rho_[v];
    if (a.comp < 0 || !comps_[a.comp].fixed) return std::nullopt;
    return QuadraticReal(a.coef) * power(comps_[a.comp].value, a.exp);
  }

  std::string describe(std::size_t v) const {
    const Assignment& a = rho_[v];
    if (auto x = value(v)) return to_string(*x);
    const std::string t = "t" + std::to_string(a.comp);
    const std::string c = to_string(a.coef);
    return a.exp > 0 ? c + "·" + t : c + "/" + t;
  }

  // Relation rho_u * rho_v^sigma = K for a tangent pair (u at inf when sigma = -1).
  void relation(std::size_t u, std::size_t v, int& sigma, Rational& K, Rational& lhs) const {
    if (at_infinity(u)) {
      sigma = -1;
      K = 2;
      lhs = 0;
    } else {
      sigma = 1;
      const Rational gap = center(u) - center(v);
      lhs = gap * gap;
      K = lhs / 4;
    }
  }

  std::string equation_text(std::size_t u, std::size_t v, int sigma, const Rational& lhs) const {
    if (sigma < 0) return name(u) + " = 2·" + name(v);
    return to_string(lhs) + " = 4·" + name(u) + "·" + name(v);
  }

  std::string contradiction(std::size_t u, std::size_t v, int sigma, const Rational& lhs) const {
    if (sigma < 0) return "(" + describe(u) + ") ≠ 2·(" + describe(v) + ")";
    return to_string(lhs) + " ≠ 4·(" + describe(u) + ")·(" + describe(v) + ")";
  }

  void fix(int comp, const QuadraticReal& t) {
    comps_[comp].fixed = true;
    comps_[comp].value = t;
  }

  bool tangent(std::size_t u, std::size_t v, RealizabilityResult& out);
  int new_comp() {
    comps_.push_back({});
    return static_cast<int>(comps_.size()) - 1;
  }

  const RealizabilityInstance& inst_;
  std::size_t n_;
  std::vector<Assignment> rho_;
  std::vector<Component> comps_;
};

bool Solver::tangent(std::size_t u, std::size_t v, RealizabilityResult& out) {
  int sigma = 1;
  Rational K;
  Rational lhs;
  relation(u, v, sigma, K, lhs);
  const std::string eq = equation_text(u, v, sigma, lhs);
  Assignment& au = rho_[u];
  Assignment& av = rho_[v];
  if (au.comp < 0 && av.comp < 0) {
    const int c = new_comp();
    au = {c, Rational(1), 1};
    av = {c, power(K, sigma), -sigma};
    out.derivation.push_back(eq + ": " + name(u) + " = " + describe(u) + ", " + name(v) + " = " + describe(v));
    return true;
  }
  if (av.comp < 0) {
    // rho_v = K^sigma rho_u^-sigma
    av = {au.comp, power(K, sigma) * power(au.coef, -sigma), -sigma * au.exp};
    out.derivation.push_back(eq + ": " + name(v) + " = " + describe(v));
    return true;
  }
  if (au.comp < 0) {
    // rho_u = K rho_v^-sigma
    au = {av.comp, K * power(av.coef, -sigma), -sigma * av.exp};
    out.derivation.push_back(eq + ": " + name(u) + " = " + describe(u));
    return true;
  }
  const auto vu = value(u);
  const auto vv = value(v);
  if (vu && vv) {
    // rho_u == K * rho_v^-sigma, compared across radicands.
    if (compare(*vu, QuadraticReal(K) * power(*vv, -sigma)) != 0) {
      out.certificate = contradiction(u, v, sigma, lhs);
      out.derivation.push_back(eq + " fails: " + out.certificate);
      return false;
    }
    out.derivation.push_back(eq + " holds");
    return true;
  }
  if (au.comp == av.comp) {
    // coef_u coef_v^sigma t^(e_u + sigma e_v) = K
    const int e = au.exp + sigma * av.exp;
    const Rational c = au.coef * power(av.coef, sigma);
    if (e == 0) {
      if (c != K) {
        out.certificate = contradiction(u, v, sigma, lhs);
        out.derivation.push_back(eq + " fails: " + out.certificate);
        return false;
      }
      out.derivation.push_back(eq + " holds for every t" + std::to_string(au.comp));
      return true;
    }
    const Rational Q = e > 0 ? K / c : c / K;
    const int comp = au.comp;
    fix(comp, QuadraticReal::sqrt(Q));
    out.derivation.push_back(eq + ": t" + std::to_string(comp) + "^2 = " + to_string(Q) + ", so t" +
                             std::to_string(comp) + " = " + to_string(comps_[comp].value));
    return true;
  }
  // Different components: solve one parameter in terms of the other.
  const bool u_side_known = vu.has_value();
  const std::size_t a = u_side_known || !vv ? u : v;  // kept component
  const std::size_t b = a == u ? v : u;               // merged component
  const int keep = rho_[a].comp;
  const int gone = rho_[b].comp;
  // rho_b = Kb * rho_a^s: rho_v = K^sigma rho_u^-sigma, rho_u = K rho_v^-sigma.
  const Rational Kb = b == v ? power(K, sigma) : K;
  const int s = -sigma;
  const Assignment ab = rho_[b];
  // rho_b = coef_b t_gone^e_b = Kb (coef_a t_keep^e_a)^s
  // => t_gone = (Kb coef_a^s / coef_b)^(e_b) * t_keep^(s e_a e_b)
  const Rational R = power(Kb * power(rho_[a].coef, s) / ab.coef, ab.exp);
  const int shift = s * rho_[a].exp * ab.exp;
  if (comps_[keep].fixed) {
    fix(gone, QuadraticReal(R) * power(comps_[keep].value, shift));
    out.derivation.push_back(eq + ": t" + std::to_string(gone) + " = " + to_string(comps_[gone].value));
    return true;
  }
  for (auto& w : rho_) {
    if (w.comp != gone) continue;
    w.coef *= power(R, w.exp);
    w.exp *= shift;
    w.comp = keep;
  }
  out.derivation.push_back(eq + ": t" + std::to_string(gone) + " = " + to_string(R) + (shift > 0 ? "·t" : "/t") +
                           std::to_string(keep));
  return true;
}

RealizabilityResult Solver::run() {
  RealizabilityResult out;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<Inequality> ineqs;
  std::vector<std::pair<std::size_t, std::size_t>> distinct;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Relation r = inst_.pattern[i][j];
      const bool same = inst_.relabeled_centers[i] == inst_.relabeled_centers[j];
      if (same) {
        if (r != Relation::Disjoint) {
          throw InvalidInput("relabeled centers " + std::to_string(i) + " and " + std::to_string(j) +
                             " coincide but the pattern asks for " + to_string(r));
        }
        distinct.emplace_back(i, j);
        continue;
      }
      if (r == Relation::Tangent) order.emplace_back(i, j);
    }
  }
  auto infinite_edge = [&](const std::pair<std::size_t, std::size_t>& e) {
    return at_infinity(e.first) || at_infinity(e.second);
  };
  std::stable_partition(order.begin(), order.end(), infinite_edge);
  for (auto [i, j] : order) {
    const std::size_t u = at_infinity(j) ? j : i;
    const std::size_t v = u == i ? j : i;
    if (!tangent(u, v, out)) return out;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    if (rho_[v].comp < 0) rho_[v] = {new_comp(), Rational(1), 1};
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Relation r = inst_.pattern[i][j];
      if (r == Relation::Tangent || inst_.relabeled_centers[i] == inst_.relabeled_centers[j]) continue;
      const std::size_t u = at_infinity(j) ? j : i;
      const std::size_t v = u == i ? j : i;
      int sigma = 1;
      Rational K;
      Rational lhs;
      relation(u, v, sigma, K, lhs);
      Inequality q{u, v, sigma, K, false, {}};
      // Finite: disjoint means 4 rho rho < gap^2. Against inf: disjoint means S > 2 r.
      q.less = sigma > 0 ? r == Relation::Disjoint : r == Relation::Crossing;
      if (sigma > 0) {
        q.text = to_string(lhs) + (q.less ? " > " : " < ") + "4·" + name(u) + "·" + name(v);
      } else {
        q.text = name(u) + (q.less ? " < " : " > ") + "2·" + name(v);
      }
      ineqs.push_back(q);
    }
  }

  // Free components become variables; squared constraints are monomial bounds.
  std::map<int, std::size_t> var;
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    const bool used = std::any_of(rho_.begin(), rho_.end(), [&](const Assignment& a) { return a.comp == static_cast<int>(c); });
    if (!comps_[c].fixed && used) var.emplace(static_cast<int>(c), var.size());
  }
  const std::size_t m = var.size();
  auto squared_part = [&](std::size_t w, int power_sign, Rational& coef2, std::vector<long>& exps) {
    const Assignment& a = rho_[w];
    if (comps_[a.comp].fixed) {
      const QuadraticReal x = *value(w);
      coef2 *= power((x * x).as_rational(), power_sign);
    } else {
      coef2 *= power(a.coef * a.coef, power_sign);
      exps[var.at(a.comp)] += 2L * a.exp * power_sign;
    }
  };
  std::vector<Rational> bounds;
  std::vector<long double> log_bounds;
  std::vector<Row> rows;
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    const Inequality& q = ineqs[k];
    Rational coef2(1);
    std::vector<long> exps(m, 0);
    squared_part(q.u, 1, coef2, exps);
    squared_part(q.v, q.sigma, coef2, exps);
    Rational bound = q.K * q.K / coef2;
    if (!q.less) {
      for (auto& e : exps) e = -e;
      bound = 1 / bound;
    }
    bounds.push_back(bound);
    log_bounds.push_back(log_of(bound));
    Row row{exps, std::vector<Rational>(ineqs.size()), log_bounds.back()};
    row.weights[k] = 1;
    rows.push_back(normalized(std::move(row)));
  }
  // prod B_j^w_j > 1, decided exactly when the floating value is close.
  auto positive = [&](const Row& row) {
    long double mag = 0;
    for (std::size_t j = 0; j < bounds.size(); ++j) mag += std::fabs(to_long_double(row.weights[j]) * log_bounds[j]);
    if (std::fabs(row.log_bound) > 1e-9L * (mag + 1)) return row.log_bound > 0;
    Integer L(1);
    for (const auto& w : row.weights) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), w.get_den_mpz_t());
    Rational prod(1);
    for (std::size_t j = 0; j < bounds.size(); ++j) {
      if (sgn(row.weights[j]) == 0) continue;
      const Rational e = row.weights[j] * L;
      prod *= ipow(bounds[j], e.get_num().get_si());
    }
    return prod > 1;
  };
  auto unsat = [&](const Row& row) {
    std::string cert;
    for (std::size_t k = 0; k < ineqs.size(); ++k) {
      if (sgn(row.weights[k]) != 0) cert += (cert.empty() ? "" : " and ") + ineqs[k].text;
    }
    out.certificate = "no positive sizes satisfy " + cert;
    out.derivation.push_back(out.certificate);
    return out;
  };
  // Fourier-Motzkin elimination, keeping each stage for back-substitution.
  std::vector<std::vector<Row>> stages{rows};
  for (std::size_t k = 0; k < m; ++k) {
    const auto& cur = stages.back();
    std::vector<Row> next;
    std::vector<const Row*> pos;
    std::vector<const Row*> neg;
    for (const auto& r : cur) {
      if (r.exps[k] > 0) {
        pos.push_back(&r);
      } else if (r.exps[k] < 0) {
        neg.push_back(&r);
      } else {
        next.push_back(r);
      }
    }
    for (const Row* p : pos) {
      for (const Row* q : neg) {
        const long a = p->exps[k];
        const long b = -q->exps[k];
        Row r;
        r.exps.resize(m);
        r.weights.resize(ineqs.size());
        for (std::size_t i = 0; i < m; ++i) r.exps[i] = b * p->exps[i] + a * q->exps[i];
        for (std::size_t j = 0; j < ineqs.size(); ++j) r.weights[j] = b * p->weights[j] + a * q->weights[j];
        r.log_bound = b * p->log_bound + a * q->log_bound;
        next.push_back(normalized(std::move(r)));
        if (next.size() > 20000) throw SizeGuard("realizability: too many derived constraints");
      }
    }
    prune(next);
    stages.push_back(std::move(next));
  }
  for (const auto& r : stages.back()) {
    if (!positive(r)) return unsat(r);
  }

  // Back-substitution with rational parameters in log space, then an exact
  // recheck of every input inequality.
  for (int attempt = 0; attempt < 6; ++attempt) {
    static const long double fractions[] = {0.5L, 0.3L, 0.7L, 0.15L, 0.85L, 0.45L};
    std::vector<Rational> t(m, Rational(1));
    std::vector<long double> log_t(m, 0);
    for (std::size_t k = m; k-- > 0;) {
      long double lo = -INFINITY;
      long double hi = INFINITY;
      for (const auto& r : stages[k]) {
        if (r.exps[k] == 0) continue;
        long double V = r.log_bound;
        for (std::size_t j = k + 1; j < m; ++j) V -= r.exps[j] * log_t[j];
        const long double b = V / static_cast<long double>(r.exps[k]);
        if (r.exps[k] > 0) {
          hi = std::min(hi, b);
        } else {
          lo = std::max(lo, b);
        }
      }
      long double pick = 0;
      const long double f = fractions[attempt];
      if (std::isfinite(lo) && std::isfinite(hi)) {
        pick = lo + f * (hi - lo);
      } else if (std::isfinite(lo)) {
        pick = lo + 1 + attempt;
      } else if (std::isfinite(hi)) {
        pick = hi - 1 - attempt;
      } else {
        pick = attempt * 0.125L;
      }
      t[k] = rational_from_long_double(std::exp(pick));
      log_t[k] = log_of(t[k]);
    }
    bool ok = true;
    std::vector<QuadraticReal> radii(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      const Assignment& a = rho_[v];
      radii[v] = comps_[a.comp].fixed ? *value(v) : QuadraticReal(a.coef * ipow(t[var.at(a.comp)], a.exp));
    }
    auto sq = [&](std::size_t v) { return (radii[v] * radii[v]).as_rational(); };
    for (const auto& q : ineqs) {
      const Rational lhs2 = q.sigma > 0 ? Rational(sq(q.u) * sq(q.v)) : Rational(sq(q.u) / sq(q.v));
      const Rational k2 = q.K * q.K;
      if (q.less ? !(lhs2 < k2) : !(lhs2 > k2)) ok = false;
    }
    for (auto [i, j] : distinct) {
      if (sq(i) == sq(j)) ok = false;
    }
    if (!ok) continue;
    out.satisfiable = true;
    out.radii = std::move(radii);
    return out;
  }
  out.certificate = "sizes at a shared center are forced to coincide";
  out.derivation.push_back(out.certificate);
  return out;
}

}  // namespace

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::Tangent: return "Tangent";
    case Relation::Disjoint: return "Disjoint";
    case Relation::Crossing: return "Crossing";
  }
  return "?";
}

RealizabilityResult tangency_realizability(const RealizabilityInstance& inst) {
  const std::size_t n = inst.relabeled_centers.size();
  if (!inst.centers.empty() && inst.centers.size() != n) {
    throw InvalidInput("realizability: centers and relabeled centers differ in length");
  }
  if (inst.pattern.size() != n) throw InvalidInput("realizability: pattern matrix has the wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.pattern[i].size() != n) throw InvalidInput("realizability: pattern row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < i; ++j) {
      if (inst.pattern[i][j] != inst.pattern[j][i]) throw InvalidInput("realizability: pattern matrix is not symmetric");
    }
    const auto& c = inst.relabeled_centers[i];
    if (c.is_finite() && !c.is_rational()) throw InvalidInput("realizability needs rational centers");
  }
  Solver solver(inst);
  return solver.run();
}

RealizabilityInstance instance_from_configuration(const std::vector<Curve>& horocycles,
                                                  const std::function<BoundaryPoint(const BoundaryPoint&)>& map) {
  RealizabilityInstance inst;
  const std::size_t n = horocycles.size();
  for (const auto& h : horocycles) {
    if (!h.is_horocycle()) throw InvalidInput("realizability configurations are made of horocycles");
    inst.centers.push_back(*h.center());
    inst.relabeled_centers.push_back(map(*h.center()));
  }
  inst.pattern.assign(n, std::vector<Relation>(n, Relation::Disjoint));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto p = intersection_pattern(horocycles[i], horocycles[j]);
      const Relation r = p.tangent ? Relation::Tangent : (p.interior_count > 0 ? Relation::Crossing : Relation::Disjoint);
      inst.pattern[i][j] = r;
      inst.pattern[j][i] = r;
    }
  }
  return inst;
}

}  // namespace hyperk
