#include "catoric/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catoric {

namespace {

struct Box {
  int32_t ilo = 0, ihi = 0, jlo = 0, jhi = 0;
};

Box bounding_box(const Poly2& p) {
  const Mono& first = p.terms().front();
  Box b{first.i, first.i, first.j, first.j};
  for (const Mono& t : p.terms()) {
    b.ilo = std::min(b.ilo, t.i);
    b.ihi = std::max(b.ihi, t.i);
    b.jlo = std::min(b.jlo, t.j);
    b.jhi = std::max(b.jhi, t.j);
  }
  return b;
}

int32_t spread(const Poly2& p) {
  Box b = bounding_box(p);
  return std::max(b.ihi - b.ilo, b.jhi - b.jlo);
}

/* Solve d * f = rhs_k with d supported in [-window, window]^2, one shared
   elimination for the whole batch. f must be nonzero and canonical. The
   equation set covers every exponent the product can reach plus the full
   support of every right-hand side, so a returned solution is exact and a
   miss within the window is conclusive. */
std::vector<std::optional<Poly2>> solve_strings(
    const Poly2& f, const std::vector<Poly2>& rhs_list, int window) {
  const int64_t W = window;
  const int64_t side = 2 * W + 1;
  const Box fb = bounding_box(f);

  int64_t plo = -W, phi = W + fb.ihi, qlo = -W, qhi = W + fb.jhi;
  for (const Poly2& rhs : rhs_list) {
    if (rhs.is_zero()) continue;
    Box rb = bounding_box(rhs);
    plo = std::min<int64_t>(plo, rb.ilo);
    phi = std::max<int64_t>(phi, rb.ihi);
    qlo = std::min<int64_t>(qlo, rb.jlo);
    qhi = std::max<int64_t>(qhi, rb.jhi);
  }
  const int64_t qspan = qhi - qlo + 1;
  const int64_t equations = (phi - plo + 1) * qspan;

  BatchSolverF2 solver(static_cast<size_t>(side * side), rhs_list.size());
  for (int64_t e = 0; e < equations; ++e) solver.add_equation();
  auto eq_at = [&](int64_t p, int64_t q) {
    return static_cast<size_t>((p - plo) * qspan + (q - qlo));
  };

  for (int64_t a = -W; a <= W; ++a) {
    for (int64_t b = -W; b <= W; ++b) {
      size_t unknown = static_cast<size_t>((a + W) * side + (b + W));
      for (const Mono& t : f.terms())
        solver.set_coeff(eq_at(a + t.i, b + t.j), unknown);
    }
  }
  for (size_t k = 0; k < rhs_list.size(); ++k) {
    for (const Mono& t : rhs_list[k].terms()) solver.set_rhs(eq_at(t.i, t.j), k);
  }

  solver.solve();

  std::vector<std::optional<Poly2>> out(rhs_list.size());
  for (size_t k = 0; k < rhs_list.size(); ++k) {
    auto labels = solver.solution(k);
    if (!labels) continue;
    std::vector<Mono> terms;
    terms.reserve(labels->size());
    for (size_t u : *labels) {
      terms.push_back({static_cast<int32_t>(static_cast<int64_t>(u) / side - W),
                       static_cast<int32_t>(static_cast<int64_t>(u) % side - W)});
    }
    Poly2 d(std::move(terms));
    if (mul(d, f) != rhs_list[k])
      throw std::logic_error("string witness failed re-verification");
    out[k] = std::move(d);
  }
  return out;
}

Poly2 one_step_rhs(const Poly2& canonical_m, int32_t i, int32_t j) {
  return mul(add(Poly2::one(), Poly2::monomial(i, j)), canonical_m);
}

}  // namespace

std::optional<Poly2> string_operator_exists(const HocaRule& rule,
                                            const Poly2& m,
                                            std::pair<int32_t, int32_t> shift,
                                            int window) {
  if (m.is_zero())
    throw DomainError("string oracle needs a nonzero excitation pattern");
  if (window < 1) throw DomainError("search window must be at least 1");
  Poly2 fc = canonicalize(rule.f);
  Poly2 rhs = one_step_rhs(canonicalize(m), shift.first, shift.second);
  return solve_strings(fc, {rhs}, window)[0];
}

std::set<std::pair<int32_t, int32_t>> mobility_bruteforce(const HocaRule& rule,
                                                          const Poly2& m,
                                                          int shift_bound,
                                                          int window) {
  if (m.is_zero())
    throw DomainError("mobility oracle needs a nonzero excitation pattern");
  if (shift_bound < 0) throw DomainError("shift bound must be nonnegative");
  Poly2 fc = canonicalize(rule.f);
  Poly2 mc = canonicalize(m);
  const int need = shift_bound + spread(fc) + spread(mc) + 2;
  if (window < need) {
    throw DomainError("window " + std::to_string(window) +
                      " too small for a conclusive search: need at least " +
                      std::to_string(need));
  }

  std::vector<Poly2> rhs;
  std::vector<std::pair<int32_t, int32_t>> shifts;
  for (int32_t i = -shift_bound; i <= shift_bound; ++i) {
    for (int32_t j = -shift_bound; j <= shift_bound; ++j) {
      shifts.emplace_back(i, j);
      rhs.push_back(one_step_rhs(mc, i, j));
    }
  }
  std::vector<std::optional<Poly2>> witnesses = solve_strings(fc, rhs, window);

  std::set<std::pair<int32_t, int32_t>> out;
  for (size_t k = 0; k < shifts.size(); ++k) {
    if (witnesses[k].has_value()) out.insert(shifts[k]);
  }
  return out;
}

std::vector<Poly2> divisors_bruteforce(const Poly2& p, uint64_t candidate_cap) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no divisors");
  Poly2 pc = canonicalize(p);
  Box b = bounding_box(pc);  // canonical: ilo = jlo = 0
  const int64_t cols = b.jhi + 1;
  const int64_t points = (b.ihi + 1) * cols;
  const uint64_t cap = std::min(candidate_cap, uint64_t{1} << 20);
  if (points > 62 || (uint64_t{1} << points) > cap) {
    throw DomainError("divisor search over 2^" + std::to_string(points) +
                      " candidate supports exceeds the cap of " +
                      std::to_string(cap));
  }

  // a canonical candidate must touch both the i = 0 column and the
  // j = 0 row of the bounding box
  uint64_t col0 = 0, row0 = 0;
  for (int64_t j = 0; j < cols; ++j) col0 |= uint64_t{1} << j;
  for (int64_t i = 0; i <= b.ihi; ++i) row0 |= uint64_t{1} << (i * cols);

  std::vector<Poly2> out;
  const uint64_t total = uint64_t{1} << points;
  for (uint64_t mask = 1; mask < total; ++mask) {
    if (!(mask & col0) || !(mask & row0)) continue;
    std::vector<Mono> terms;
    for (uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      int64_t t = std::countr_zero(bits);
      terms.push_back({static_cast<int32_t>(t / cols),
                       static_cast<int32_t>(t % cols)});
    }
    Poly2 d(std::move(terms));
    if (divides(d, pc)) out.push_back(std::move(d));
  }

  std::sort(out.begin(), out.end(), [](const Poly2& a, const Poly2& c) {
    if (a.term_count() != c.term_count())
      return a.term_count() < c.term_count();
    return std::lexicographical_compare(a.terms().begin(), a.terms().end(),
                                        c.terms().begin(), c.terms().end(),
                                        term_less);
  });
  return out;
}

namespace {

Poly2 reduce_mod_torus(const Poly2& p, int L) {
  std::vector<Mono> terms;
  terms.reserve(p.term_count());
  for (const Mono& t : p.terms()) {
    terms.push_back({static_cast<int32_t>(((t.i % L) + L) % L),
                     static_cast<int32_t>(((t.j % L) + L) % L)});
  }
  return Poly2(std::move(terms));
}

TorusCode wrap_torus(const std::vector<PauliVector>& generators, int L) {
  // wrapped translates of two generators commute exactly when the reduced
  // commutation polynomial vanishes; a failure is an internal bug, so it is
  // not reported as a domain error
  for (size_t a = 0; a < generators.size(); ++a) {
    for (size_t b = a; b < generators.size(); ++b) {
      if (!reduce_mod_torus(symplectic(generators[a], generators[b]), L)
               .is_zero())
        throw std::logic_error("torus stabilizers do not commute");
    }
  }

  const size_t cells = static_cast<size_t>(L) * static_cast<size_t>(L);
  Gf2Matrix matrix(6 * cells);
  auto cell_of = [&](int64_t i, int64_t j) {
    return static_cast<size_t>(((i % L) + L) % L) * static_cast<size_t>(L) +
           static_cast<size_t>(((j % L) + L) % L);
  };
  for (const PauliVector& g : generators) {
    for (int32_t u = 0; u < L; ++u) {
      for (int32_t v = 0; v < L; ++v) {
        size_t r = matrix.add_row();
        for (size_t s = 0; s < 3; ++s) {
          for (const Mono& t : g.x[s].terms())
            matrix.flip(r, s * cells + cell_of(u + t.i, v + t.j));
          for (const Mono& t : g.z[s].terms())
            matrix.flip(r, (3 + s) * cells + cell_of(u + t.i, v + t.j));
        }
      }
    }
  }

  Gf2Matrix work = matrix;
  size_t rank = work.rank();
  size_t qubits = 3 * cells;
  int gsd_log2 = static_cast<int>(qubits - rank);
  if (gsd_log2 < 0 || gsd_log2 > 62)
    throw std::logic_error("ground-state degeneracy exponent out of range");
  return TorusCode{L,    qubits,
                   rank, gsd_log2,
                   uint64_t{1} << gsd_log2, std::move(matrix)};
}

}  // namespace

TorusCode torus_code(const HocaRule& rule, int L) {
  const int reach = 2 * std::max(rule.radius, rule.order);
  if (L <= reach) {
    throw DomainError("torus size " + std::to_string(L) +
                      " is too small for this rule: need L >= " +
                      std::to_string(reach + 1));
  }
  StabilizerSet stabs = build_stabilizers(rule);
  return wrap_torus({stabs.A, stabs.B, stabs.C}, L);
}

uint64_t gsd(const HocaRule& rule, int L) { return torus_code(rule, L).gsd; }

TorusCode torus_code_bare(int L) {
  if (L <= 2)
    throw DomainError("torus size " + std::to_string(L) +
                      " is too small: need L >= 3");
  PauliVector vertex, plaquette, bare_x;
  vertex.x[1] = add(Poly2::one(), Poly2::monomial(-1, 0));
  vertex.x[2] = add(Poly2::one(), Poly2::monomial(0, -1));
  plaquette.z[1] = add(Poly2::one(), Poly2::monomial(0, 1));
  plaquette.z[2] = add(Poly2::one(), Poly2::monomial(1, 0));
  bare_x.x[0] = Poly2::one();
  return wrap_torus({vertex, plaquette, bare_x}, L);
}

uint64_t gsd_bare(int L) { return torus_code_bare(L).gsd; }

bool verify_symmetry_pattern(const HocaRule& rule, const Poly2& history,
                             int depth, int width) {
  if (depth < rule.order)
    throw DomainError("slab depth must be at least the rule order");
  if (width < rule.radius + 2)
    throw DomainError("slab width " + std::to_string(width) +
                      " leaves no interior columns: need at least " +
                      std::to_string(rule.radius + 2));

  // commutation defect against the vertex family: y^-1 * f * history;
  // a term at (i, j) marks the interior translate it anticommutes with
  Poly2 defect = mul(Poly2::monomial(0, -1), mul(rule.f, history));
  const int32_t jmin = rule.order - 1;
  const int32_t jmax = depth - 2;
  const int32_t imax = width - rule.radius - 1;
  for (const Mono& t : defect.terms()) {
    if (t.j >= jmin && t.j <= jmax && t.i >= -imax && t.i <= imax)
      return false;
  }
  return true;
}

bool verify_symmetry_slab(const HocaRule& rule, const InitialCondition& w,
                          int depth, int width) {
  return verify_symmetry_pattern(
      rule, pattern_poly(evolve(rule, w, depth)), depth, width);
}

}  // namespace catoric
