#include "catoric/hoca.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace catoric {

HocaRule validate_rule(const Poly2& p) {
  if (p.is_zero()) throw DomainError("rule polynomial is zero");
  if (!p.has_term(0, 0)) throw DomainError("rule polynomial lacks the constant term");
  int32_t order = 0;
  int32_t radius = 0;
  for (const Mono& t : p.terms()) {
    if (t.j < 0) throw DomainError("rule polynomial has a negative y exponent");
    order = std::max(order, t.j);
    radius = std::max(radius, std::abs(t.i));
  }
  if (order < 1) throw DomainError("rule polynomial has order zero");
  HocaRule r;
  r.f = p;
  r.order = static_cast<int>(order);
  r.radius = static_cast<int>(radius);
  r.circuit_realizable = p.term_count() % 2 == 0;
  return r;
}

Poly2 rule_row(const HocaRule& rule, int k) {
  std::vector<Mono> out;
  for (const Mono& t : rule.f.terms()) {
    if (t.j == k) out.push_back({t.i, 0});
  }
  return Poly2(std::move(out));
}

InitialCondition make_initial(std::vector<Poly2> rows) {
  for (const Poly2& r : rows) {
    for (const Mono& t : r.terms()) {
      if (t.j != 0) throw DomainError("initial-condition row is not univariate in x");
    }
  }
  return InitialCondition{std::move(rows)};
}

SpacetimePattern evolve(const HocaRule& rule, const InitialCondition& w,
                        int depth) {
  const int n = rule.order;
  if (depth < n) throw DomainError("evolution depth is smaller than the rule order");
  if (static_cast<int>(w.rows.size()) > n)
    throw DomainError("initial condition has more rows than the rule order");
  SpacetimePattern p;
  p.order = n;
  p.rows.resize(depth);
  for (size_t j = 0; j < w.rows.size(); ++j) p.rows[j] = w.rows[j];
  std::vector<Poly2> fk(n + 1);
  for (int k = 1; k <= n; ++k) fk[k] = rule_row(rule, k);
  for (int j = n; j < depth; ++j) {
    Poly2 acc;
    for (int k = 1; k <= n; ++k) acc = add(acc, mul(fk[k], p.rows[j - k]));
    p.rows[j] = std::move(acc);
  }
  return p;
}

std::vector<Poly2> evolution_operator(const HocaRule& rule, int k) {
  if (k < 1) throw DomainError("evolution-operator step count must be positive");
  const int n = rule.order;
  std::vector<Poly2> fk(n + 1);
  for (int i = 1; i <= n; ++i) fk[i] = rule_row(rule, i);
  // column i tracks the coefficient of w_i in successive rows
  std::vector<std::vector<Poly2>> rows(n, std::vector<Poly2>(n));
  for (int j = 0; j < n; ++j) rows[j][j] = Poly2::one();
  std::vector<Poly2> cur(n);
  for (int step = 0; step < k; ++step) {
    for (int i = 0; i < n; ++i) {
      Poly2 acc;
      for (int d = 1; d <= n; ++d) acc = add(acc, mul(fk[d], rows[n - d][i]));
      cur[i] = std::move(acc);
    }
    rows.erase(rows.begin());
    rows.push_back(cur);
  }
  return cur;
}

Poly2 pattern_poly(const SpacetimePattern& pattern) {
  Poly2 acc;
  for (size_t j = 0; j < pattern.rows.size(); ++j) {
    acc = add(acc, mul(pattern.rows[j], Poly2::monomial(0, static_cast<int32_t>(j))));
  }
  return acc;
}

namespace {

// image of (i,j) under translate-then-basis
Mono map_point(const RuleTransform& t, const Mono& m) {
  int64_t a = int64_t{m.i} + t.translation[0];
  int64_t b = int64_t{m.j} + t.translation[1];
  int64_t ni = int64_t{t.basis[0][0]} * a + int64_t{t.basis[0][1]} * b;
  int64_t nj = int64_t{t.basis[1][0]} * a + int64_t{t.basis[1][1]} * b;
  if (ni < INT32_MIN || ni > INT32_MAX || nj < INT32_MIN || nj > INT32_MAX)
    throw DomainError("exponent overflow while transforming polynomial");
  return Mono{static_cast<int32_t>(ni), static_cast<int32_t>(nj)};
}

bool valid_normal(int64_t c1, int64_t c2, const std::vector<Mono>& pts) {
  for (const Mono& p : pts) {
    int64_t dot = c1 * p.i + c2 * p.j;
    if (dot <= 0) return false;
  }
  return true;
}

}  // namespace

Poly2 apply_transform(const RuleTransform& t, const Poly2& p) {
  std::vector<Mono> out;
  out.reserve(p.term_count());
  for (const Mono& m : p.terms()) out.push_back(map_point(t, m));
  return Poly2(std::move(out));
}

RuleTransform normalize_rule(const Poly2& p) {
  if (p.is_zero()) throw DomainError("cannot normalize the zero polynomial");

  RuleTransform t;
  // fast path: already a valid rule under the identity map
  try {
    HocaRule r = validate_rule(p);
    t.transformed = p;
    t.rule = r;
    return t;
  } catch (const DomainError&) {
  }

  if (p.is_monomial()) {
    const Mono& m = p.terms().front();
    t.translation = {-m.i, -m.j};
    t.transformed = Poly2::one();
    return t;
  }

  NewtonPolygon hull = newton(p);
  // lexicographically smallest hull vertex (min i, then min j)
  Mono v = hull.vertices.front();
  for (const Mono& w : hull.vertices) {
    if (w.i < v.i || (w.i == v.i && w.j < v.j)) v = w;
  }
  t.translation = {-v.i, -v.j};

  std::vector<Mono> others;
  int32_t spread = 1;
  for (const Mono& m : p.terms()) {
    Mono s{m.i - v.i, m.j - v.j};
    if (s.i != 0 || s.j != 0) others.push_back(s);
    spread = std::max({spread, std::abs(s.i), std::abs(s.j)});
  }

  /* Find a coprime (c1,c2) with c.q > 0 for every other support point q,
     minimizing |c1|+|c2| with lexicographic tie-break. A strictly
     supporting normal always exists at a polygon vertex; its components
     are bounded by the coordinate spread. */
  int64_t c1 = 0, c2 = 0;
  bool found = false;
  for (int32_t s = 1; !found && s <= 4 * spread + 4; ++s) {
    for (int32_t a = -s; !found && a <= s; ++a) {
      int32_t rem = s - std::abs(a);
      for (int32_t b : {-rem, rem}) {
        if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
        if (valid_normal(a, b, others)) {
          c1 = a;
          c2 = b;
          found = true;
          break;
        }
      }
    }
  }
  if (!found) throw std::logic_error("no supporting normal found at hull vertex");

  /* Complete (c1,c2) to a determinant-one matrix [[d2,-d1],[c1,c2]] with
     d1 c1 + d2 c2 = 1, taking the d of smallest |d1|+|d2| (lex ties). */
  int64_t best_d1 = 0, best_d2 = 0;
  bool have_d = false;
  for (int64_t s = 0; !have_d; ++s) {
    for (int64_t a = -s; a <= s; ++a) {
      for (int64_t b : {-(s - std::abs(a)), s - std::abs(a)}) {
        if (a * c1 + b * c2 != 1) continue;
        if (!have_d) {
          best_d1 = a;
          best_d2 = b;
          have_d = true;
        }
        break;
      }
      if (have_d) break;
    }
    if (s > 2 * (std::abs(c1) + std::abs(c2)) + 2 && !have_d)
      throw std::logic_error("no unimodular completion found");
  }

  t.basis = {{{static_cast<int32_t>(best_d2), static_cast<int32_t>(-best_d1)},
              {static_cast<int32_t>(c1), static_cast<int32_t>(c2)}}};
  t.transformed = apply_transform(t, p);
  t.rule = validate_rule(t.transformed);
  return t;
}

}  // namespace catoric
