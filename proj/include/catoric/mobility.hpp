#pragma once

#include <cstdint>
#include <vector>

#include "catoric/hoca.hpp"
#include "catoric/poly.hpp"

namespace catoric {

enum class MobilityTag { FullyMobile, Lineon, Fracton };

/* Lineons carry an unsigned axis (canonical PrimitiveDirection; reports list
   both signs) and a step period T >= 1. The vacuum flag marks the m = 0
   convention: classified FullyMobile but never a real excitation. */
struct MobilityClass {
  MobilityTag tag = MobilityTag::Fracton;
  PrimitiveDirection axis;
  uint64_t period = 0;
  bool vacuum = false;

  friend bool operator==(const MobilityClass&, const MobilityClass&) = default;
};

/* Symbolic shift-set polynomial: One = {(0,0)} only, LineSum = all integer
   multiples of period*(u,v), FullPlane = every shift. */
struct MobilityPolynomial {
  enum class Form { One, LineSum, FullPlane };
  Form form = Form::One;
  PrimitiveDirection axis;  // LineSum only
  uint64_t period = 0;      // LineSum only
};

// canonicalize(f / gcd2(f, m)); m = 0 is an error (vacuum handled upstream)
Poly2 characteristic_poly(const HocaRule& rule, const Poly2& m);

struct Classification {
  MobilityClass cls;
  MobilityPolynomial shifts;
  Poly2 g;  // the canonical characteristic polynomial (empty for vacuum)
};

Classification classify(const HocaRule& rule, const Poly2& m);

// classification from a raw nonzero polynomial in place of a validated rule
// (used for invariance checks where the companion polynomial of a rule is
// itself not in rule form)
Classification classify_poly(const Poly2& f, const Poly2& m);

/* Minimal T >= 1 with t(q) dividing 1 + q^T, for t given as its coefficient
   list t[0..N] with t[0] = 1 (and t[N] = 1 after trimming). Errors when
   t[0] != 1, when N > 30, or when the search cap (2^26 steps) is exceeded. */
uint64_t period(const std::vector<uint8_t>& t);

// true iff the symbolic shift set contains (i,j)
bool shifts_contain(const MobilityPolynomial& p, int64_t i, int64_t j);

}  // namespace catoric
