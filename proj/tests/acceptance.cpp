/* Acceptance suite: one pass/fail line per criterion. Exit status equals the
   number of failed criteria. `--seed N` reseeds every randomized section. */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catoric/fusion.hpp"
#include "catoric/hoca.hpp"
#include "catoric/mobility.hpp"
#include "catoric/oracle.hpp"
#include "catoric/pauli.hpp"
#include "catoric/poly.hpp"
#include "test_util.hpp"

using namespace catoric;
using testutil::pick;
using testutil::random_even_rule;
using testutil::random_nonzero;
using testutil::random_poly;
using testutil::random_rule;

namespace {

const char* kRuleA = "1 + x^-1*y + y + x*y + y^2 + x^-1*y^2";
const char* kRuleB = "1 + y + x*y^2 + x^2*y^2";
const char* kRuleC = "1 + y + x*y + x^-2*y^2 + x^-2*y^3 + x^-1*y^3";
const char* kCheckerboard = "1 + x + y + x*y";

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& msg) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = msg;
  }
}

int32_t spread(const Poly2& p) {
  int32_t ilo = p.terms()[0].i, ihi = ilo;
  int32_t jlo = p.terms()[0].j, jhi = jlo;
  for (const Mono& t : p.terms()) {
    ilo = std::min(ilo, t.i), ihi = std::max(ihi, t.i);
    jlo = std::min(jlo, t.j), jhi = std::max(jhi, t.j);
  }
  return std::max(ihi - ilo, jhi - jlo);
}

bool lineon_is(const Classification& c, int32_t u, int32_t v,
               uint64_t period) {
  return c.cls.tag == MobilityTag::Lineon &&
         c.cls.axis == make_direction(u, v) && c.cls.period == period;
}

// --- criterion 1: worked classification examples -------------------------

Outcome ac1(uint64_t) {
  Outcome o;
  HocaRule a = validate_rule(parse(kRuleA));
  HocaRule b = validate_rule(parse(kRuleB));
  HocaRule c = validate_rule(parse(kRuleC));
  Poly2 three = parse("1 + y + x*y");

  expect(o, classify(a, Poly2::one()).cls.tag == MobilityTag::Fracton,
         "point excitation of rule a must be a fracton");
  expect(o, lineon_is(classify(a, three), -1, 1, 1),
         "rule a three-site excitation must be a unit lineon on (-1,1)");
  expect(o, lineon_is(classify(b, three), 1, 1, 1),
         "rule b three-site excitation must be a unit lineon on (1,1)");
  expect(o, lineon_is(classify(c, three), -1, 1, 2),
         "rule c three-site excitation must be a period-2 lineon on (-1,1)");
  for (const HocaRule* r : {&a, &b, &c}) {
    expect(o, classify(*r, r->f).cls.tag == MobilityTag::FullyMobile,
           "a rule pattern must be fully mobile under its own rule");
  }
  return o;
}

// --- criterion 2: classifier vs brute-force mobility ----------------------

Outcome ac2(uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed ^ 0xac2);
  const int S = 3;
  for (int iter = 0; iter < 200 && o.ok; ++iter) {
    HocaRule rule = random_rule(rng, 8, 3, 3);
    Poly2 m = random_nonzero(rng, 5, -2, 2, -2, 2);
    int W = S + spread(rule.f) + spread(m) + 2;
    std::set<std::pair<int32_t, int32_t>> brute =
        mobility_bruteforce(rule, m, S, W);
    Classification cls = classify(rule, m);
    for (int32_t i = -S; i <= S; ++i) {
      for (int32_t j = -S; j <= S; ++j) {
        bool want = shifts_contain(cls.shifts, i, j);
        expect(o, brute.count({i, j}) == (want ? 1u : 0u),
               "shift-set mismatch for rule " + render(rule.f) + ", m " +
                   render(m) + " at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
      }
    }
  }
  return o;
}

// --- criterion 3: decomposition and circuit ------------------------------

Outcome ac3(uint64_t seed) {
  Outcome o;
  const Poly2 one_x = parse("1 + x"), one_y = parse("1 + y");
  auto check_split = [&](const Poly2& f) {
    auto [p_part, q_part] = decompose_pq(f);
    bool id = add(mul(one_x, p_part), mul(one_y, q_part)) == f;
    bool co = gcd2(p_part, q_part) == Poly2::one();
    expect(o, id, "split identity failed for " + render(f));
    expect(o, co, "split coprimality failed for " + render(f));
  };

  HocaRule a = validate_rule(parse(kRuleA));
  check_split(a.f);

  std::mt19937_64 rng(seed ^ 0xac3);
  for (int iter = 0; iter < 100 && o.ok; ++iter)
    check_split(random_even_rule(rng, 8, 2, 2).f);

  auto [p_part, q_part] = decompose_pq(a);
  expect(o, synthesize_circuit(p_part, q_part).gates.size() == 4,
         "rule a must compile to exactly 4 gates per vertex");
  return o;
}

// --- criterion 4: stabilizer algebra -------------------------------------

Outcome ac4(uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed ^ 0xac4);
  for (int iter = 0; iter < 100 && o.ok; ++iter) {
    HocaRule rule = random_even_rule(rng, 8, 2, 2);
    StabilizerSet st = build_stabilizers(rule);
    const PauliVector* fams[] = {&st.A, &st.B, &st.C};
    for (const PauliVector* o1 : fams) {
      for (const PauliVector* o2 : fams) {
        expect(o, symplectic(*o1, *o2).is_zero(),
               "stabilizer families must commute for " + render(rule.f));
      }
    }
    expect(o, symplectic(st.C, st.D).is_zero(),
           "string block must commute with the decorated vertex for " +
               render(rule.f));
    Poly2 fbar = antipode(rule.f);
    for (int k = 0; k < 20 && o.ok; ++k) {
      Poly2 d = random_poly(rng, 4, -2, 2, -2, 2);
      Excitation ex = excitation_map(st, pauli_scale(d, st.D));
      expect(o,
             ex.e.is_zero() && ex.c.is_zero() && ex.m == mul(d, fbar),
             "string excitation map wrong for " + render(rule.f) +
                 " with d = " + render(d));
    }
  }
  return o;
}

// --- criterion 5: torus degeneracy ----------------------------------------

Outcome ac5(uint64_t) {
  Outcome o;
  HocaRule a = validate_rule(parse(kRuleA));
  HocaRule cb = validate_rule(parse(kCheckerboard));
  for (int L : {6, 7, 8}) {
    expect(o, gsd(a, L) == 4,
           "rule a degeneracy must be 4 at L=" + std::to_string(L));
  }
  for (int L : {5, 6, 7, 8}) {
    expect(o, gsd(cb, L) == 4,
           "checkerboard degeneracy must be 4 at L=" + std::to_string(L));
  }
  expect(o, gsd_bare(4) == 4, "undecorated code degeneracy must be 4 at L=4");
  return o;
}

// --- criterion 6: fusion channels -----------------------------------------

const FusionChannel* find_channel(const FusionChannelSet& s,
                                  const MobilityClass& cls) {
  for (const FusionChannel& ch : s.channels)
    if (ch.cls == cls) return &ch;
  return nullptr;
}

bool channel_at(const FusionChannelSet& s, const MobilityClass& cls,
                int32_t a, int32_t b) {
  const FusionChannel* ch = find_channel(s, cls);
  if (!ch) return false;
  return std::find(ch->witnesses.begin(), ch->witnesses.end(),
                   std::make_pair(a, b)) != ch->witnesses.end();
}

MobilityClass lineon_class(int32_t u, int32_t v, uint64_t period) {
  MobilityClass c;
  c.tag = MobilityTag::Lineon;
  c.axis = make_direction(u, v);
  c.period = period;
  return c;
}

MobilityClass plain_class(MobilityTag tag) {
  MobilityClass c;
  c.tag = tag;
  return c;
}

// same-axis rule: no fracton channel, observed periods divide lcm(T1, T2)
void check_same_axis(Outcome& o, const FusionReport& rep, const char* label) {
  uint64_t l = std::lcm(rep.class1.period, rep.class2.period);
  expect(o, rep.pass, std::string(label) + ": fusion check must pass");
  for (const FusionChannel& ch : rep.observed.channels) {
    expect(o, ch.cls.tag != MobilityTag::Fracton,
           std::string(label) + ": same-axis pair must not yield a fracton");
    if (ch.cls.tag == MobilityTag::Lineon) {
      expect(o, ch.cls.axis == rep.class1.axis,
             std::string(label) + ": composite lineon must keep the axis");
      expect(o, ch.cls.period != 0 && l % ch.cls.period == 0,
             std::string(label) + ": composite period must divide the lcm");
    }
  }
}

Outcome ac6(uint64_t seed) {
  Outcome o;
  HocaRule cb = validate_rule(parse(kCheckerboard));

  // (a) worked point-pair examples
  FusionChannelSet points = fuse(cb, Poly2::one(), Poly2::one(), 3);
  expect(o, channel_at(points, lineon_class(0, 1, 1), 1, 0),
         "point pair must reach a vertical-axis lineon via (1,0)");
  expect(o, channel_at(points, lineon_class(1, 0, 1), 0, 1),
         "point pair must reach a horizontal-axis lineon via (0,1)");
  expect(o, channel_at(points, plain_class(MobilityTag::Fracton), 1, 1),
         "point pair must reach a fracton via (1,1)");
  expect(o,
         points.includes_vacuum &&
             points.vacuum_placements ==
                 std::vector<std::pair<int32_t, int32_t>>{{0, 0}},
         "point pair must annihilate exactly at (0,0)");
  expect(o,
         channel_at(fuse(cb, parse("x + y"), parse("1 + x*y"), 2),
                    plain_class(MobilityTag::FullyMobile), 0, 0),
         "diagonal fracton pair must reach full mobility at (0,0)");
  expect(o,
         channel_at(fuse(cb, Poly2::one(), parse("x*y"), 3),
                    plain_class(MobilityTag::Fracton), 0, 0),
         "offset point pair must land on a fracton at (0,0)");

  // (b) randomized compatibility with the channel algebra
  std::mt19937_64 rng(seed ^ 0xac6);
  for (int iter = 0; iter < 100 && o.ok; ++iter) {
    HocaRule rule = random_rule(rng, 8, 3, 3);
    Poly2 m1 = random_nonzero(rng, 4, -2, 2, -2, 2);
    Poly2 m2 = random_nonzero(rng, 4, -2, 2, -2, 2);
    FusionReport rep = check_fusion(rule, m1, m2, 4);
    expect(o, rep.pass, "fusion channels must stay inside the allowed set");

    bool both_lineon = rep.class1.tag == MobilityTag::Lineon &&
                       rep.class2.tag == MobilityTag::Lineon;
    if (both_lineon && rep.class1.axis == rep.class2.axis) {
      check_same_axis(o, rep, "random same-axis pair");
    }
    if (both_lineon && !(rep.class1.axis == rep.class2.axis)) {
      for (const FusionChannel& ch : rep.observed.channels) {
        expect(o, ch.cls.tag == MobilityTag::Fracton,
               "different-axis lineons must fuse to fractons only");
      }
    }
  }

  // (c) constructed same-axis pairs
  check_same_axis(o,
                  check_fusion(validate_rule(parse(kRuleB)),
                               parse("1 + y + x*y"), parse("1 + y + x*y"), 4),
                  "rule b pair");
  check_same_axis(o,
                  check_fusion(validate_rule(parse(kRuleC)),
                               parse("1 + y + x*y"), parse(kRuleA), 4),
                  "rule c mixed-period pair");
  check_same_axis(
      o,
      check_fusion(validate_rule(parse("1 + x^2 + y + x^2*y")),
                   parse("1 + y"), parse("1 + x + y + x*y"), 4),
      "period 2 x period 1 pair");

  // (d) constructed different-axis pair
  FusionReport crossed = check_fusion(cb, parse("1 + x"), parse("1 + y"), 4);
  expect(o, crossed.pass && !crossed.observed.channels.empty(),
         "crossed lineon fusion must pass");
  for (const FusionChannel& ch : crossed.observed.channels) {
    expect(o, ch.cls.tag == MobilityTag::Fracton,
           "crossed lineons must fuse to fractons only");
  }
  return o;
}

// --- criterion 7: slab symmetry generators --------------------------------

Outcome ac7(uint64_t seed) {
  Outcome o;
  HocaRule a = validate_rule(parse(kRuleA));
  const int depth = 7, width = 15;

  const std::vector<InitialCondition> seeds = {
      make_initial({parse("1"), parse("x^-1")}),
      make_initial({parse("1"), parse("1 + x")}),
      make_initial({Poly2(), parse("1")}),
  };
  for (const InitialCondition& w : seeds) {
    expect(o, verify_symmetry_slab(a, w, depth, width),
           "valid history must commute with the slab interior");
  }

  std::mt19937_64 rng(seed ^ 0xac7);
  Poly2 history = pattern_poly(evolve(a, seeds[0], depth));
  for (int iter = 0; iter < 20 && o.ok; ++iter) {
    auto p = static_cast<int32_t>(pick(rng, -12, 12));
    auto q = static_cast<int32_t>(pick(rng, a.order, depth - 1 - a.order));
    Poly2 flipped = add(history, Poly2::monomial(p, q));
    expect(o, !verify_symmetry_pattern(a, flipped, depth, width),
           "an interior flip at (" + std::to_string(p) + "," +
               std::to_string(q) + ") must break the symmetry");
  }
  return o;
}

// --- criterion 8: algebra kernel properties --------------------------------

Outcome ac8(uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed ^ 0xac8);

  // hull of a product is the Minkowski sum of the hulls
  for (int iter = 0; iter < 200 && o.ok; ++iter) {
    Poly2 a = random_nonzero(rng, 5, -3, 3, -3, 3);
    Poly2 b = random_nonzero(rng, 5, -3, 3, -3, 3);
    NewtonPolygon na = newton(a), nb = newton(b), nab = newton(mul(a, b));
    std::vector<Mono> sums;
    for (const Mono& va : na.vertices)
      for (const Mono& vb : nb.vertices)
        sums.push_back({va.i + vb.i, va.j + vb.j});
    std::sort(sums.begin(), sums.end(), term_less);
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    NewtonPolygon hull_of_sums = newton(Poly2(std::move(sums)));
    expect(o, hull_of_sums.vertices == nab.vertices,
           "product hull mismatch for " + render(a) + " and " + render(b));
    expect(o, nab.dim >= std::max(na.dim, nb.dim),
           "hull dimension must not shrink under multiplication");
  }

  // gcd equals the divisibility-maximal brute-force common divisor
  for (int iter = 0; iter < 200 && o.ok; ++iter) {
    Poly2 p = random_nonzero(rng, 5, 0, 2, 0, 2);
    Poly2 q = random_nonzero(rng, 5, 0, 2, 0, 2);
    std::vector<Poly2> dp = divisors_bruteforce(p);
    std::vector<Poly2> dq = divisors_bruteforce(q);
    Poly2 g = gcd2(p, q);
    bool found = false;
    for (const Poly2& d : dp) {
      if (std::find(dq.begin(), dq.end(), d) == dq.end()) continue;
      if (d == g) found = true;
      expect(o, divides(d, g),
             "common divisor " + render(d) + " must divide gcd of " +
                 render(p) + " and " + render(q));
    }
    expect(o, found, "gcd of " + render(p) + " and " + render(q) +
                         " missing from the brute-force divisors");
  }

  // classification is invariant under translations and the antipode
  for (int iter = 0; iter < 200 && o.ok; ++iter) {
    HocaRule rule = random_rule(rng, 6, 2, 2);
    Poly2 m = random_nonzero(rng, 4, -2, 2, -2, 2);
    Classification base = classify(rule, m);

    auto a = static_cast<int32_t>(pick(rng, -4, 4));
    auto b = static_cast<int32_t>(pick(rng, -4, 4));
    Classification moved = classify(rule, mul(Poly2::monomial(a, b), m));
    expect(o, moved.cls == base.cls && moved.g == base.g,
           "classification must be translation invariant for " +
               render(rule.f) + ", m " + render(m));

    Classification mirrored = classify_poly(antipode(rule.f), antipode(m));
    expect(o,
           mirrored.cls.tag == base.cls.tag &&
               mirrored.cls.period == base.cls.period &&
               (base.cls.tag != MobilityTag::Lineon ||
                mirrored.cls.axis == base.cls.axis),
           "classification must be antipode invariant for " + render(rule.f) +
               ", m " + render(m));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t seed = testutil::kSeed;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) {
      seed = std::stoull(argv[++i]);
    } else if (a.rfind("--seed=", 0) == 0) {
      seed = std::stoull(a.substr(7));
    } else {
      std::cerr << "usage: acceptance [--seed N]\n";
      return 2;
    }
  }

  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome(uint64_t)> run;
  };
  const std::vector<Criterion> criteria = {
      {"worked classification examples", 1.0, ac1},
      {"classifier agrees with brute-force mobility", 60.0, ac2},
      {"rule decomposition and gate synthesis", 1.0, ac3},
      {"stabilizer commutation and string excitations", 5.0, ac4},
      {"torus ground-state degeneracy", 30.0, ac5},
      {"fusion channel algebra", 60.0, ac6},
      {"slab symmetry generators", 5.0, ac7},
      {"algebra kernel properties", 10.0, ac8},
  };

  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run(seed);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("unexpected error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool in_budget = secs < criteria[k].budget_s;
    bool pass = o.ok && in_budget;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << (k + 1)
              << ": " << criteria[k].name << " (" << std::fixed
              << std::setprecision(2) << secs << " s)";
    if (!o.ok) std::cout << " -- " << o.detail;
    if (o.ok && !in_budget)
      std::cout << " -- over the " << criteria[k].budget_s << " s budget";
    std::cout << "\n";
    failures += pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all acceptance criteria pass"
                              : std::to_string(failures) +
                                    " acceptance criteria failed")
            << "\n";
  return failures;
}
