#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "catoric/hoca.hpp"
#include "catoric/poly.hpp"

namespace catoric {

/* A translation-invariant Pauli operator family on the three-qubit unit
   cell, written as polynomial coefficient vectors: x[s] / z[s] collect the
   X / Z actions on sublattice s (0 = vertex qubit, 1 = horizontal-edge
   qubit, 2 = vertical-edge qubit). Term (i,j) of x[s] means an X on the
   sublattice-s qubit of cell (i,j). */
struct PauliVector {
  std::array<Poly2, 3> x;
  std::array<Poly2, 3> z;
};

// d * O: translate-and-multiply the whole operator family
PauliVector pauli_scale(const Poly2& d, const PauliVector& op);
PauliVector pauli_add(const PauliVector& a, const PauliVector& b);

/* Commutation pairing: sum_s bar(x1[s]) z2[s] + bar(z1[s]) x2[s].
   The coefficient of x^i y^j is 1 iff O1 anticommutes with O2 translated
   by (i,j); the zero polynomial means they commute at every shift. */
Poly2 symplectic(const PauliVector& o1, const PauliVector& o2);

/* Split an even-term polynomial as f = (1+x) P + (1+y) Q with gcd(P,Q)=1.
   Deterministic search: staircase paths over a perfect matching of the
   terms (adjacent pairs in (j,i) order first, then all matchings up to
   matching_cap), then a sweep of corrections (P,Q) -> (P+(1+y)t, Q+(1+x)t)
   over small t. Errors when the input has an odd number of terms or every
   candidate within the caps fails the gcd condition. */
std::pair<Poly2, Poly2> decompose_pq(const Poly2& f,
                                     size_t matching_cap = 10000);
std::pair<Poly2, Poly2> decompose_pq(const HocaRule& rule,
                                     size_t matching_cap = 10000);

struct CzGate {
  int target_sublattice = 2;  // 2 or 3 (edge qubits), 1-based like reports
  int32_t dx = 0;             // cell offset relative to the control vertex
  int32_t dy = 0;
};

/* The vertex-controlled CZ pattern realizing the model: one gate onto the
   sublattice-2 qubit of cell (i, j-1) per term x^i y^j of P and one onto
   the sublattice-3 qubit of cell (i, j-1) per term of Q (both families
   sit one cell below their generating term; conjugating the bare vertex
   operators by this pattern reproduces build_stabilizers exactly). */
struct CzCircuit {
  std::vector<CzGate> gates;
  Poly2 P, Q;
};

CzCircuit synthesize_circuit(const Poly2& P, const Poly2& Q);

/* The four operator families of the model:
     A = (0, 1+x^-1, 1+y^-1 | y f^-bar, 0, 0)   vertex term
     B = (0, 0, 0 | 0, 1+y, 1+x)                plaquette term
     C = (1, 0, 0 | 0, y^-1 P, y^-1 Q)          decorated vertex X
     D = (0, Q-bar, P-bar | 0, 0, 0)            elementary string block
   A, B, C pairwise commute at every shift and D commutes with C. */
struct StabilizerSet {
  PauliVector A, B, C, D;
  Poly2 f, P, Q;
};

StabilizerSet build_stabilizers(const HocaRule& rule);
// even-term polynomials that are not rules (used by synthetic models)
StabilizerSet build_stabilizers_poly(const Poly2& f);

/* Violation pattern of an operator against the three stabilizer families:
   coefficient (i,j) of e / m / c is 1 iff op anticommutes with the A / B / C
   term at cell (i,j). For string blocks: excitation_map(d*D) =
   (0, d*antipode(f), 0). */
struct Excitation {
  Poly2 e, m, c;
};

Excitation excitation_map(const StabilizerSet& stabs, const PauliVector& op);

/* The symmetry generator attached to an initial condition: vertex-X on the
   support of the evolved history, truncated at the given depth. */
PauliVector symmetry_operator(const HocaRule& rule, const InitialCondition& w,
                              int depth);

}  // namespace catoric
