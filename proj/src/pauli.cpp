#include "catoric/pauli.hpp"

#include <algorithm>
#include <functional>

namespace catoric {

PauliVector pauli_scale(const Poly2& d, const PauliVector& op) {
  PauliVector out;
  for (int s = 0; s < 3; ++s) {
    out.x[s] = mul(d, op.x[s]);
    out.z[s] = mul(d, op.z[s]);
  }
  return out;
}

PauliVector pauli_add(const PauliVector& a, const PauliVector& b) {
  PauliVector out;
  for (int s = 0; s < 3; ++s) {
    out.x[s] = add(a.x[s], b.x[s]);
    out.z[s] = add(a.z[s], b.z[s]);
  }
  return out;
}

Poly2 symplectic(const PauliVector& o1, const PauliVector& o2) {
  Poly2 acc;
  for (int s = 0; s < 3; ++s) {
    acc = add(acc, mul(antipode(o1.x[s]), o2.z[s]));
    acc = add(acc, mul(antipode(o1.z[s]), o2.x[s]));
  }
  return acc;
}

namespace {

const Poly2& one_plus_x() {
  static const Poly2 p = add(Poly2::one(), Poly2::monomial(1, 0));
  return p;
}

const Poly2& one_plus_y() {
  static const Poly2 p = add(Poly2::one(), Poly2::monomial(0, 1));
  return p;
}

/* Staircase split of x^A + x^B (A before B in (j,i) order): a horizontal
   run absorbed into P followed by a vertical run absorbed into Q. */
void staircase(const Mono& a, const Mono& b, Poly2& p, Poly2& q) {
  int32_t i0 = b.i - a.i;
  int32_t j0 = b.j - a.j;
  std::vector<Mono> pt, qt;
  for (int32_t i = std::min<int32_t>(0, i0); i < std::max<int32_t>(0, i0); ++i)
    pt.push_back({a.i + i, a.j});
  for (int32_t j = 0; j < j0; ++j) qt.push_back({a.i + i0, a.j + j});
  p = add(p, Poly2(std::move(pt)));
  q = add(q, Poly2(std::move(qt)));
}

std::pair<Poly2, Poly2> pairing_pq(const std::vector<Mono>& pts,
                                   const std::vector<int>& mate) {
  Poly2 p, q;
  for (size_t k = 0; k < pts.size(); ++k) {
    if (mate[k] > static_cast<int>(k)) staircase(pts[k], pts[mate[k]], p, q);
  }
  return {p, q};
}

bool coprime(const Poly2& p, const Poly2& q) {
  if (p.is_zero() && q.is_zero()) return false;
  return gcd2(p, q) == Poly2::one();
}

}  // namespace

std::pair<Poly2, Poly2> decompose_pq(const Poly2& f, size_t matching_cap) {
  if (f.is_zero()) throw DomainError("cannot decompose the zero polynomial");
  if (f.term_count() % 2 != 0)
    throw DomainError("polynomial has an odd number of terms");

  const std::vector<Mono> pts(f.terms().begin(), f.terms().end());
  const size_t n = pts.size();

  std::pair<Poly2, Poly2> first;
  bool have_first = false;
  std::pair<Poly2, Poly2> found;
  bool ok = false;
  size_t tried = 0;

  /* Enumerate perfect matchings: repeatedly mate the lowest unmatched
     point with each later unmatched point. The first matching produced is
     the adjacent pairing in (j,i) order. */
  std::vector<int> mate(n, -1);
  std::function<void(size_t)> rec = [&](size_t lo) {
    if (ok || tried >= matching_cap) return;
    while (lo < n && mate[lo] >= 0) ++lo;
    if (lo == n) {
      ++tried;
      auto cand = pairing_pq(pts, mate);
      if (!have_first) {
        first = cand;
        have_first = true;
      }
      if (coprime(cand.first, cand.second)) {
        found = cand;
        ok = true;
      }
      return;
    }
    for (size_t hi = lo + 1; hi < n && !ok && tried < matching_cap; ++hi) {
      if (mate[hi] >= 0) continue;
      mate[lo] = static_cast<int>(hi);
      mate[hi] = static_cast<int>(lo);
      rec(lo + 1);
      mate[lo] = -1;
      mate[hi] = -1;
    }
  };
  rec(0);
  if (ok) return found;

  /* Correction sweep: (P,Q) -> (P+(1+y)t, Q+(1+x)t) leaves (1+x)P+(1+y)Q
     unchanged, so any t that fixes the gcd gives a valid split. Try small
     monomials starting with nonnegative exponents, then nearby pairs. */
  int32_t ilo = 0, ihi = 0, jlo = 0, jhi = 0;
  for (const Mono& t : pts) {
    ilo = std::min(ilo, t.i);
    ihi = std::max(ihi, t.i);
    jlo = std::min(jlo, t.j);
    jhi = std::max(jhi, t.j);
  }
  std::vector<Mono> phase1, phase2;
  for (int32_t j = 0; j <= jhi + 1; ++j)
    for (int32_t i = 0; i <= ihi + 1; ++i) phase1.push_back({i, j});
  for (int32_t j = jlo - 1; j <= jhi + 1; ++j)
    for (int32_t i = ilo - 1; i <= ihi + 1; ++i) {
      if (i >= 0 && j >= 0) continue;
      phase2.push_back({i, j});
    }
  std::vector<Poly2> corrections;
  for (const Mono& t : phase1) corrections.push_back(Poly2::monomial(t.i, t.j));
  for (const Mono& t : phase2) corrections.push_back(Poly2::monomial(t.i, t.j));
  std::vector<Mono> all = phase1;
  all.insert(all.end(), phase2.begin(), phase2.end());
  size_t budget = 20000;
  for (size_t a = 0; a < all.size() && corrections.size() < budget; ++a)
    for (size_t b = a + 1; b < all.size() && corrections.size() < budget; ++b)
      corrections.push_back(add(Poly2::monomial(all[a].i, all[a].j),
                                Poly2::monomial(all[b].i, all[b].j)));
  for (const Poly2& t : corrections) {
    Poly2 p = add(first.first, mul(one_plus_y(), t));
    Poly2 q = add(first.second, mul(one_plus_x(), t));
    if (coprime(p, q)) return {p, q};
  }
  throw DomainError("no coprime split found within the search budget");
}

std::pair<Poly2, Poly2> decompose_pq(const HocaRule& rule,
                                     size_t matching_cap) {
  if (!rule.circuit_realizable)
    throw DomainError("rule has an odd number of terms");
  return decompose_pq(rule.f, matching_cap);
}

CzCircuit synthesize_circuit(const Poly2& P, const Poly2& Q) {
  CzCircuit c;
  c.P = P;
  c.Q = Q;
  for (const Mono& t : P.terms()) c.gates.push_back({2, t.i, t.j - 1});
  for (const Mono& t : Q.terms()) c.gates.push_back({3, t.i, t.j - 1});
  return c;
}

namespace {

StabilizerSet assemble(const Poly2& f, const Poly2& P, const Poly2& Q) {
  StabilizerSet s;
  s.f = f;
  s.P = P;
  s.Q = Q;
  const Poly2 y = Poly2::monomial(0, 1);
  const Poly2 ybar = Poly2::monomial(0, -1);
  s.A.x[1] = add(Poly2::one(), Poly2::monomial(-1, 0));
  s.A.x[2] = add(Poly2::one(), Poly2::monomial(0, -1));
  s.A.z[0] = mul(y, antipode(f));
  s.B.z[1] = one_plus_y();
  s.B.z[2] = one_plus_x();
  s.C.x[0] = Poly2::one();
  s.C.z[1] = mul(ybar, P);
  s.C.z[2] = mul(ybar, Q);
  s.D.x[1] = antipode(Q);
  s.D.x[2] = antipode(P);
  return s;
}

}  // namespace

StabilizerSet build_stabilizers(const HocaRule& rule) {
  auto [p, q] = decompose_pq(rule);
  return assemble(rule.f, p, q);
}

StabilizerSet build_stabilizers_poly(const Poly2& f) {
  auto [p, q] = decompose_pq(f);
  return assemble(f, p, q);
}

Excitation excitation_map(const StabilizerSet& stabs, const PauliVector& op) {
  Excitation ex;
  ex.e = symplectic(stabs.A, op);
  ex.m = symplectic(stabs.B, op);
  ex.c = symplectic(stabs.C, op);
  return ex;
}

PauliVector symmetry_operator(const HocaRule& rule, const InitialCondition& w,
                              int depth) {
  PauliVector v;
  v.x[0] = pattern_poly(evolve(rule, w, depth));
  return v;
}

}  // namespace catoric
