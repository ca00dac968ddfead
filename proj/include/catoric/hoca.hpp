#pragma once

#include <array>
#include <optional>
#include <vector>

#include "catoric/poly.hpp"

namespace catoric {

/* A cellular-automaton update rule encoded as a bivariate polynomial
   f = 1 + f_1(x) y + ... + f_n(x) y^n: row j of a history is determined by
   the n rows above it. Requirements checked by validate_rule: the constant
   term is present, no negative y exponents, and the maximal y exponent
   (the order n) is at least 1. Extra x-terms on row 0 are tolerated for
   stabilizer-model polynomials; evolution uses rows 1..n only. */
struct HocaRule {
  Poly2 f;
  int order = 0;                    // n = max y exponent
  int radius = 0;                   // max |x exponent|
  bool circuit_realizable = false;  // even number of terms
};

HocaRule validate_rule(const Poly2& p);

// row k of f (y^k coefficient) as a univariate-in-x Poly2
Poly2 rule_row(const HocaRule& rule, int k);

/* The first n rows of a history, one univariate-in-x polynomial per row
   (row index = time step 0..n-1). */
struct InitialCondition {
  std::vector<Poly2> rows;
};

// rows must be univariate in x (every y exponent zero)
InitialCondition make_initial(std::vector<Poly2> rows);

struct SpacetimePattern {
  std::vector<Poly2> rows;  // rows 0..R-1, univariate in x
  int order = 0;            // the generating rule's order
};

/* Rows 0..n-1 copied from w (padded with empty rows if w is short), each
   later row r_j = sum_{k=1..n} f_k * r_{j-k}. depth >= order required. */
SpacetimePattern evolve(const HocaRule& rule, const InitialCondition& w,
                        int depth);

/* The k-step evolution operator: a vector E with n entries such that
   row (n-1+k) of any history equals sum_i w_i * E[i].
   E for k=1 is (f_n, f_{n-1}, ..., f_1). */
std::vector<Poly2> evolution_operator(const HocaRule& rule, int k);

// flatten a pattern into one bivariate polynomial: row j contributes y^j r_j
Poly2 pattern_poly(const SpacetimePattern& pattern);

/* Result of normalizing an arbitrary nonzero polynomial into rule form:
   first translate exponents by `translation`, then apply the unimodular
   basis matrix (row-major, determinant +1). `transformed` is the image;
   `rule` is present unless the input was a monomial (whose image is the
   constant 1, which has order 0 and is not a rule). */
struct RuleTransform {
  std::array<int32_t, 2> translation{0, 0};
  std::array<std::array<int32_t, 2>, 2> basis{{{1, 0}, {0, 1}}};
  Poly2 transformed;
  std::optional<HocaRule> rule;
};

RuleTransform normalize_rule(const Poly2& p);

// apply a RuleTransform's affine map to any polynomial (shared basis change)
Poly2 apply_transform(const RuleTransform& t, const Poly2& p);

}  // namespace catoric
