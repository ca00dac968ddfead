#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "catoric/gf2.hpp"
#include "catoric/hoca.hpp"
#include "catoric/pauli.hpp"
#include "catoric/poly.hpp"

namespace catoric {

/* Brute-force ground truth, independent of the classifier: finite-window
   linear solves, divisor enumeration, torus rank counts, slab symmetry. */

/* Search for a string coefficient d with support in [-W,W]^2 such that
   d * f = (monomial) * (1 + x^i y^j) * m, i.e. the string operator d*D
   separates a copy of m by the requested shift. Exact GF(2) elimination;
   every witness is re-verified by multiplication before being returned.
   none-within-window is a legitimate negative, not an error. */
std::optional<Poly2> string_operator_exists(const HocaRule& rule,
                                            const Poly2& m,
                                            std::pair<int32_t, int32_t> shift,
                                            int window);

/* All shifts (i,j) with |i|,|j| <= S admitting a witness. Requires the
   margin window >= S + diam(f) + diam(m) + 2 (diam = max coordinate spread
   of the Newton polygon) so a negative inside the window is conclusive. */
std::set<std::pair<int32_t, int32_t>> mobility_bruteforce(const HocaRule& rule,
                                                          const Poly2& m,
                                                          int shift_bound,
                                                          int window);

/* Every canonical divisor of p (up to monomial units), found by enumerating
   candidate supports inside the bounding box of canonicalize(p) and testing
   exact division. Includes 1 and canonicalize(p). The number of candidate
   supports (2^box_points) must not exceed candidate_cap (hard cap 2^20). */
std::vector<Poly2> divisors_bruteforce(const Poly2& p,
                                       uint64_t candidate_cap = uint64_t{1}
                                                                << 20);

struct TorusCode {
  int L = 0;
  size_t qubits = 0;  // 3 L^2
  size_t rank = 0;
  int gsd_log2 = 0;  // 3 L^2 - rank
  uint64_t gsd = 0;
  Gf2Matrix matrix;  // one row per stabilizer translate, 6 L^2 columns
};

/* Wrap the stabilizer families A, B, C onto an L x L torus (exponents
   reduced mod x^L+1, y^L+1), one row per translate, verify that all rows
   pairwise commute (a failure here is an internal-consistency error, not a
   domain error), and compute gsd = 2^(3L^2 - rank).
   Requires L > 2 * max(radius, order) so no single term wraps onto itself. */
TorusCode torus_code(const HocaRule& rule, int L);
uint64_t gsd(const HocaRule& rule, int L);

// undecorated baseline: vertex term with empty Z part, plaquette term, and
// the bare vertex X; same torus counting
TorusCode torus_code_bare(int L);
uint64_t gsd_bare(int L);

/* True iff the depth-R symmetry generator of w commutes with every
   stabilizer translate fully supported in the slab interior
   (rows order-1 .. R-2, columns |i| <= width - radius - 1). */
bool verify_symmetry_slab(const HocaRule& rule, const InitialCondition& w,
                          int depth, int width);

// same check against an explicit history polynomial (e.g. a perturbed one)
bool verify_symmetry_pattern(const HocaRule& rule, const Poly2& history,
                             int depth, int width);

}  // namespace catoric
