#include "catoric/fusion.hpp"

#include <algorithm>
#include <numeric>

namespace catoric {

namespace {

int bbox_diameter(const Poly2& p) {
  if (p.is_zero()) return 0;
  int32_t ilo = p.terms().front().i, ihi = ilo;
  int32_t jlo = p.terms().front().j, jhi = jlo;
  for (const Mono& t : p.terms()) {
    ilo = std::min(ilo, t.i);
    ihi = std::max(ihi, t.i);
    jlo = std::min(jlo, t.j);
    jhi = std::max(jhi, t.j);
  }
  return static_cast<int>(ihi - ilo) + static_cast<int>(jhi - jlo);
}

MobilityClass strip_vacuum(const MobilityClass& c) {
  MobilityClass out = c;
  out.vacuum = false;
  return out;
}

}  // namespace

int default_fusion_window(const HocaRule& rule, const Poly2& m1,
                          const Poly2& m2) {
  int w = 2 * (bbox_diameter(rule.f) + bbox_diameter(m1) + bbox_diameter(m2));
  return std::max(w, 2);
}

FusionChannelSet fuse(const HocaRule& rule, const Poly2& m1, const Poly2& m2,
                      int window) {
  if (m1.is_zero() || m2.is_zero())
    throw DomainError("fusion inputs must be nonzero excitation patterns");
  FusionChannelSet out;
  out.window = window;
  for (int32_t a = -window; a <= window; ++a) {
    for (int32_t b = -window; b <= window; ++b) {
      Poly2 sum = add(m1, mul(Poly2::monomial(a, b), m2));
      if (sum.is_zero()) {
        out.vacuum_placements.emplace_back(a, b);
        continue;
      }
      MobilityClass cls = classify(rule, sum).cls;
      auto it = std::find_if(out.channels.begin(), out.channels.end(),
                             [&](const FusionChannel& ch) { return ch.cls == cls; });
      if (it == out.channels.end()) {
        out.channels.push_back({cls, {{a, b}}});
      } else {
        it->witnesses.emplace_back(a, b);
      }
    }
  }
  out.includes_vacuum = !out.vacuum_placements.empty();
  return out;
}

ChannelPredicate allowed_channels(const HocaRule& rule, const MobilityClass& c1,
                                  const MobilityClass& c2) {
  (void)rule;  // the algebra below does not depend on the generating rule
  const MobilityClass a = strip_vacuum(c1);
  const MobilityClass b = strip_vacuum(c2);

  // fully mobile composites act as the identity
  if (a.tag == MobilityTag::FullyMobile)
    return [b](const MobilityClass& c) { return strip_vacuum(c) == b; };
  if (b.tag == MobilityTag::FullyMobile)
    return [a](const MobilityClass& c) { return strip_vacuum(c) == a; };

  if (a.tag == MobilityTag::Lineon && b.tag == MobilityTag::Lineon) {
    if (a.axis == b.axis) {
      const uint64_t l = std::lcm(a.period, b.period);
      const PrimitiveDirection axis = a.axis;
      return [l, axis](const MobilityClass& c) {
        MobilityClass n = strip_vacuum(c);
        if (n.tag == MobilityTag::FullyMobile) return true;
        return n.tag == MobilityTag::Lineon && n.axis == axis &&
               n.period != 0 && l % n.period == 0;
      };
    }
    return [](const MobilityClass& c) {
      return strip_vacuum(c).tag == MobilityTag::Fracton;
    };
  }

  if (a.tag == MobilityTag::Fracton && b.tag == MobilityTag::Fracton)
    return [](const MobilityClass&) { return true; };

  // lineon with fracton: the lineon may turn, but never keeps its axis and
  // never becomes fully mobile
  const PrimitiveDirection axis =
      a.tag == MobilityTag::Lineon ? a.axis : b.axis;
  return [axis](const MobilityClass& c) {
    MobilityClass n = strip_vacuum(c);
    if (n.tag == MobilityTag::Fracton) return true;
    return n.tag == MobilityTag::Lineon && !(n.axis == axis);
  };
}

FusionReport check_fusion(const HocaRule& rule, const Poly2& m1,
                          const Poly2& m2, int window) {
  FusionReport rep;
  rep.class1 = classify(rule, m1).cls;
  rep.class2 = classify(rule, m2).cls;
  rep.observed = fuse(rule, m1, m2, window);
  ChannelPredicate ok = allowed_channels(rule, rep.class1, rep.class2);
  for (const FusionChannel& ch : rep.observed.channels) {
    if (!ok(ch.cls)) rep.violations.push_back(ch);
  }
  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace catoric
