#include "catoric/mobility.hpp"

#include <algorithm>

namespace catoric {

namespace {

Poly2 reduced_g(const Poly2& f, const Poly2& m) {
  return canonicalize(div_exact(f, gcd2(f, m)));
}

}  // namespace

Poly2 characteristic_poly(const HocaRule& rule, const Poly2& m) {
  if (m.is_zero())
    throw DomainError("the empty excitation has no characteristic polynomial");
  return reduced_g(rule.f, m);
}

uint64_t period(const std::vector<uint8_t>& t) {
  std::vector<uint8_t> c = t;
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.empty() || c[0] != 1)
    throw DomainError("period requires a unit constant coefficient");
  const size_t n = c.size() - 1;
  if (n == 0) return 1;
  if (n > 30) throw DomainError("period modulus degree above the supported cap");
  uint64_t mask = 0;
  for (size_t i = 0; i <= n; ++i)
    if (c[i]) mask |= uint64_t{1} << i;
  const uint64_t cap = uint64_t{1} << 26;
  uint64_t s = 1;  // q^0 reduced modulo t
  for (uint64_t k = 1; k <= cap; ++k) {
    s <<= 1;
    if (s >> n & 1) s ^= mask;
    if (s == 1) return k;
  }
  throw DomainError("period exceeds the step cap");
}

Classification classify_poly(const Poly2& f, const Poly2& m) {
  Classification out;
  if (m.is_zero()) {
    out.cls.tag = MobilityTag::FullyMobile;
    out.cls.vacuum = true;
    out.shifts.form = MobilityPolynomial::Form::FullPlane;
    return out;
  }
  out.g = reduced_g(f, m);
  NewtonPolygon hull = newton(out.g);
  switch (hull.dim) {
    case 0:
      out.cls.tag = MobilityTag::FullyMobile;
      out.shifts.form = MobilityPolynomial::Form::FullPlane;
      break;
    case 1: {
      CollinearProfile prof = *collinear_profile(out.g);
      out.cls.tag = MobilityTag::Lineon;
      out.cls.axis = prof.direction;
      out.cls.period = period(prof.t);
      out.shifts.form = MobilityPolynomial::Form::LineSum;
      out.shifts.axis = out.cls.axis;
      out.shifts.period = out.cls.period;
      break;
    }
    default:
      out.cls.tag = MobilityTag::Fracton;
      out.shifts.form = MobilityPolynomial::Form::One;
      break;
  }
  return out;
}

Classification classify(const HocaRule& rule, const Poly2& m) {
  return classify_poly(rule.f, m);
}

bool shifts_contain(const MobilityPolynomial& p, int64_t i, int64_t j) {
  switch (p.form) {
    case MobilityPolynomial::Form::FullPlane:
      return true;
    case MobilityPolynomial::Form::One:
      return i == 0 && j == 0;
    case MobilityPolynomial::Form::LineSum: {
      const int64_t u = p.axis.u, v = p.axis.v;
      const int64_t lead = u != 0 ? i : j;
      const int64_t denom = u != 0 ? u : v;
      if (denom == 0 || lead % denom != 0) return false;
      const int64_t steps = lead / denom;
      if (steps % static_cast<int64_t>(p.period) != 0) return false;
      return steps * u == i && steps * v == j;
    }
  }
  return false;
}

}  // namespace catoric
