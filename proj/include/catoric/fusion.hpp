#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "catoric/hoca.hpp"
#include "catoric/mobility.hpp"
#include "catoric/poly.hpp"

namespace catoric {

struct FusionChannel {
  MobilityClass cls;
  // relative placements (a,b) whose composite m1 + x^a y^b m2 lands in cls
  std::vector<std::pair<int32_t, int32_t>> witnesses;
};

struct FusionChannelSet {
  std::vector<FusionChannel> channels;  // deterministic order, >=1 witness each
  std::vector<std::pair<int32_t, int32_t>> vacuum_placements;
  bool includes_vacuum = false;
  int window = 0;
};

/* Classify m1 + x^a y^b m2 for every placement (a,b) in [-W,W]^2 and group
   equal classes (lineons keyed by canonical axis and period). Placements
   with a vanishing composite are collected separately as vacuum. Both
   inputs must be nonzero. */
FusionChannelSet fuse(const HocaRule& rule, const Poly2& m1, const Poly2& m2,
                      int window);

// 2 * (x-diameter + y-diameter) summed over the Newton polygons of f, m1, m2
// (clamped to at least 2)
int default_fusion_window(const HocaRule& rule, const Poly2& m1,
                          const Poly2& m2);

/* Membership test for the composite classes allowed by the fusion algebra:
   fully-mobile is the identity; same-axis lineon pairs give fully-mobile or
   a same-axis lineon whose period divides lcm(T,T'); different-axis lineon
   pairs give only fractons; lineon with fracton gives a fracton or a lineon
   on any other axis; fracton pairs are unconstrained. */
using ChannelPredicate = std::function<bool(const MobilityClass&)>;
ChannelPredicate allowed_channels(const HocaRule& rule, const MobilityClass& c1,
                                  const MobilityClass& c2);

struct FusionReport {
  MobilityClass class1, class2;
  FusionChannelSet observed;
  std::vector<FusionChannel> violations;  // observed but not allowed
  bool pass = true;
};

// fuse, then check every observed channel (vacuum excluded) against
// allowed_channels(classify(m1), classify(m2))
FusionReport check_fusion(const HocaRule& rule, const Poly2& m1,
                          const Poly2& m2, int window);

}  // namespace catoric
