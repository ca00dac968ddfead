#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catoric {

/* Raised for every domain-level failure: malformed input, precondition
   violations, unsatisfiable requests. The CLI maps it to exit code 1. */
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mono {
  int32_t i = 0;  // x exponent
  int32_t j = 0;  // y exponent
  friend bool operator==(const Mono&, const Mono&) = default;
};

// canonical term order: j ascending, then i ascending
inline bool term_less(const Mono& a, const Mono& b) {
  return a.j != b.j ? a.j < b.j : a.i < b.i;
}

/* Bivariate Laurent polynomial over GF(2). The support set IS the
   polynomial: a pair (i,j) present means coefficient 1 of x^i y^j.
   Terms are stored sorted by term_less and duplicate-free, so equality
   is plain vector equality. The zero polynomial has no terms. */
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(std::vector<Mono> terms);  // cancels duplicates mod 2

  static Poly2 one() { return monomial(0, 0); }
  static Poly2 monomial(int32_t i, int32_t j);

  const std::vector<Mono>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }
  bool has_term(int32_t i, int32_t j) const;

  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  std::vector<Mono> terms_;
};

// exponents beyond this magnitude are rejected at parse time and whenever an
// arithmetic result would exceed it
inline constexpr int64_t kMaxExponent = int64_t{1} << 30;

/* Grammar:
     poly   := ws term (ws '+' ws term)* ws | '0'
     term   := '1' | factor ('*'? factor)*
     factor := ('x'|'y') ('^' '-'? digits)?
   Errors carry the byte offset of the offending character. */
Poly2 parse(const std::string& text);

/* Canonical rendering: terms sorted (j asc, i asc), exponent 1 omitted,
   '*' between the x and y factors, single spaces around '+', "0" for zero.
   parse(render(p)) == p for every p. */
std::string render(const Poly2& p);

Poly2 add(const Poly2& a, const Poly2& b);
Poly2 mul(const Poly2& a, const Poly2& b);

// f(x,y) -> f(x^-1, y^-1)
Poly2 antipode(const Poly2& p);

// multiply by the unique monomial making min x-exponent and min y-exponent
// both 0; errors on zero input
Poly2 canonicalize(const Poly2& p);

// whether a divides b in the Laurent ring (a nonzero); b == a * div_exact(b,a)
bool divides(const Poly2& a, const Poly2& b);
Poly2 div_exact(const Poly2& b, const Poly2& a);

/* Canonical greatest common divisor in the Laurent ring: divides both
   inputs, every common divisor divides it, result is canonical.
   gcd2(a,0) = canonicalize(a); both zero is an error. */
Poly2 gcd2(const Poly2& a, const Poly2& b);

/* A primitive lattice direction with the two antipodal signs identified.
   Canonical sign: u > 0, or (u == 0 and v > 0). */
struct PrimitiveDirection {
  int32_t u = 0;
  int32_t v = 0;
  friend bool operator==(const PrimitiveDirection&,
                         const PrimitiveDirection&) = default;
};

// reduce (du,dv) != (0,0) to the canonical primitive representative
PrimitiveDirection make_direction(int64_t du, int64_t dv);

// reporting-friendly sign of the same axis: v > 0, or (v == 0 and u > 0)
std::pair<int32_t, int32_t> display_axis(const PrimitiveDirection& d);

struct NewtonPolygon {
  // hull extreme points, counterclockwise (j up), starting at the
  // lexicographically smallest vertex (min i, then min j)
  std::vector<Mono> vertices;
  int dim = 0;  // 0: point, 1: segment, 2: polygon
};

// convex hull of the support; errors on zero input
NewtonPolygon newton(const Poly2& p);

struct CollinearProfile {
  PrimitiveDirection direction;
  // t[0..N] along the support line, read so that t[0] = t[N] = 1;
  // a point (dim 0) yields direction (1,0) and t = [1]
  std::vector<uint8_t> t;
};

// profile of a polynomial whose Newton polygon has dim <= 1;
// nullopt when dim == 2, error on zero input
std::optional<CollinearProfile> collinear_profile(const Poly2& p);

}  // namespace catoric
