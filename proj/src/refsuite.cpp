#include "catoric/refsuite.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "catoric/fusion.hpp"
#include "catoric/hoca.hpp"
#include "catoric/mobility.hpp"
#include "catoric/oracle.hpp"
#include "catoric/pauli.hpp"
#include "catoric/poly.hpp"
#include "catoric/render.hpp"

namespace catoric {

namespace {

const char* kRuleA = "1 + x^-1*y + y + x*y + y^2 + x^-1*y^2";
const char* kRuleB = "1 + y + x*y^2 + x^2*y^2";
const char* kRuleC = "1 + y + x*y + x^-2*y^2 + x^-2*y^3 + x^-1*y^3";
const char* kCheckerboard = "1 + x + y + x*y";

class Suite {
 public:
  explicit Suite(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok,
             const std::string& detail = "") {
    if (ok) {
      out_ << "ok " << name << "\n";
    } else {
      out_ << "FAIL " << name << (detail.empty() ? "" : ": " + detail)
           << "\n";
      ++failures_;
    }
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

bool is_lineon(const Classification& c, int32_t u, int32_t v,
               uint64_t period) {
  return c.cls.tag == MobilityTag::Lineon &&
         c.cls.axis == make_direction(u, v) && c.cls.period == period;
}

const FusionChannel* find_channel(const FusionChannelSet& s,
                                  const MobilityClass& cls) {
  for (const FusionChannel& ch : s.channels)
    if (ch.cls == cls) return &ch;
  return nullptr;
}

bool has_witness(const FusionChannel* ch, int32_t a, int32_t b) {
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

void run_all(Suite& s) {
  const HocaRule a = validate_rule(parse(kRuleA));
  const HocaRule b = validate_rule(parse(kRuleB));
  const HocaRule c = validate_rule(parse(kRuleC));
  const HocaRule cb = validate_rule(parse(kCheckerboard));
  const Poly2 three = parse("1 + y + x*y");

  // --- polynomial layer ---
  s.check("parse-render round trip",
          render(parse("y + 1 + x*y")) == "1 + y + x*y");
  s.check("canonical form strips monomial units",
          render(canonicalize(parse("1 + x^-1*y"))) == "x + y");
  s.check("gcd of rule and excitation", gcd2(a.f, three) == three);

  // --- rule layer ---
  s.check("rule a shape",
          a.order == 2 && a.radius == 1 && a.circuit_realizable);
  {
    SpacetimePattern tri =
        evolve(validate_rule(three), make_initial({parse("1")}), 3);
    s.check("triangle evolution",
            render(tri.rows[0]) == "1" && render(tri.rows[1]) == "1 + x" &&
                render(tri.rows[2]) == "1 + x^2");
  }
  {
    SpacetimePattern p =
        evolve(a, make_initial({parse("1"), parse("x^-1")}), 3);
    s.check("two-row seed evolution", render(p.rows[2]) == "x^-2");
  }
  {
    std::vector<Poly2> e1 = evolution_operator(a, 1);
    s.check("one-step evolution operator",
            e1.size() == 2 && render(e1[0]) == "x^-1 + 1" &&
                render(e1[1]) == "x^-1 + 1 + x");
  }
  {
    RuleTransform t1 = normalize_rule(parse("1 + x^-1*y^-1"));
    RuleTransform t2 = normalize_rule(parse("x^2*y^3"));
    RuleTransform t3 = normalize_rule(parse("1 + x"));
    s.check("normalization of a reflected rule",
            t1.transformed == parse("1 + x*y") && t1.rule.has_value());
    s.check("normalization of a monomial",
            t2.transformed == Poly2::one() && !t2.rule.has_value());
    s.check("normalization of a horizontal pair",
            t3.transformed == parse("1 + y"));
  }

  // --- classification ---
  {
    Classification f1 = classify(a, Poly2::one());
    s.check("point excitation of rule a is immobile",
            f1.cls.tag == MobilityTag::Fracton);
  }
  {
    Classification l = classify(a, three);
    s.check("three-site excitation of rule a is a unit-step lineon",
            is_lineon(l, -1, 1, 1));
    s.check("characteristic polynomial of the lineon",
            render(l.g) == "x + y");
    s.check("lineon report shape",
            classification_json(l) ==
                "{\"schema\":\"1\",\"class\":\"lineon\",\"axis\":[-1,1],"
                "\"period\":1,\"g\":\"x + y\"}");
  }
  s.check("rule b lineon", is_lineon(classify(b, three), 1, 1, 1));
  s.check("rule c period-2 lineon", is_lineon(classify(c, three), -1, 1, 2));
  for (const HocaRule* r : {&a, &b, &c}) {
    s.check("rule pattern fuses to full mobility (" + render(r->f) + ")",
            classify(*r, r->f).cls.tag == MobilityTag::FullyMobile);
  }
  s.check("step period of 1 + q", period({1, 1}) == 1);
  s.check("step period of 1 + q^2", period({1, 0, 1}) == 2);
  s.check("step period of 1 + q + q^2", period({1, 1, 1}) == 3);
  s.check("step period of 1 + q + q^4", period({1, 1, 0, 0, 1}) == 15);

  // --- decomposition and circuit ---
  {
    auto [P, Q] = decompose_pq(a);
    Poly2 rebuilt = add(mul(parse("1 + x"), P), mul(parse("1 + y"), Q));
    s.check("split identity for rule a", rebuilt == a.f);
    s.check("split coprimality for rule a", gcd2(P, Q) == Poly2::one());
    CzCircuit circ = synthesize_circuit(P, Q);
    s.check("four gates per vertex for rule a", circ.gates.size() == 4);
    nlohmann::json j = nlohmann::json::parse(circuit_json(circ));
    s.check("gate template export",
            j["schema"] == "1" && j["gates"].size() == 4 &&
                j["gates"][0].contains("target_sublattice") &&
                j["gates"][0].contains("dx") && j["gates"][0].contains("dy"));
  }

  // --- stabilizer algebra ---
  {
    StabilizerSet st = build_stabilizers(a);
    bool commute = true;
    const PauliVector* fams[] = {&st.A, &st.B, &st.C};
    for (const PauliVector* o1 : fams)
      for (const PauliVector* o2 : fams)
        commute = commute && symplectic(*o1, *o2).is_zero();
    s.check("stabilizer families commute", commute);
    s.check("string block commutes with the decorated vertex",
            symplectic(st.C, st.D).is_zero());
    Poly2 d = parse("1 + x");
    Excitation ex = excitation_map(st, pauli_scale(d, st.D));
    s.check("string block excitation",
            ex.e.is_zero() && ex.c.is_zero() &&
                ex.m == mul(d, antipode(a.f)));
  }

  // --- torus degeneracy ---
  {
    TorusCode tc = torus_code(a, 6);
    s.check("torus counts for rule a at L=6",
            tc.qubits == 108 && tc.rank == 106 && tc.gsd == 4);
    s.check("torus degeneracy of the checkerboard rule", gsd(cb, 5) == 4);
    s.check("torus degeneracy of the undecorated code", gsd_bare(4) == 4);
  }

  // --- brute-force oracles ---
  {
    auto d = string_operator_exists(a, three, {-1, 1}, 8);
    s.check("string witness along the lineon axis", d.has_value());
    s.check("no string witness off the axis",
            !string_operator_exists(a, three, {1, 0}, 8).has_value() &&
                !string_operator_exists(a, three, {1, 1}, 8).has_value());
    std::set<std::pair<int32_t, int32_t>> want = {
        {0, 0}, {1, -1}, {-1, 1}, {2, -2}, {-2, 2}, {3, -3}, {-3, 3}};
    s.check("brute-force shift set of the lineon",
            mobility_bruteforce(a, three, 3, 12) == want);
    s.check("brute-force shift set of the fracton",
            mobility_bruteforce(a, Poly2::one(), 3, 12) ==
                std::set<std::pair<int32_t, int32_t>>{{0, 0}});
  }
  {
    std::vector<Poly2> divs = divisors_bruteforce(parse(kCheckerboard));
    s.check("divisors of the checkerboard rule",
            divs.size() == 4 && divs[0] == Poly2::one() &&
                divs[1] == parse("1 + x") && divs[2] == parse("1 + y") &&
                divs[3] == parse(kCheckerboard));
    std::vector<Poly2> seg = divisors_bruteforce(parse("1 + x^-1*y"));
    s.check("divisors of a two-term segment",
            seg.size() == 2 && seg[0] == Poly2::one() &&
                seg[1] == parse("x + y"));
  }

  // --- fusion ---
  {
    FusionChannelSet fs = fuse(cb, Poly2::one(), Poly2::one(), 3);
    s.check("fracton pair: vertical-axis lineon channel",
            has_witness(find_channel(fs, lineon_class(0, 1, 1)), 1, 0));
    s.check("fracton pair: horizontal-axis lineon channel",
            has_witness(find_channel(fs, lineon_class(1, 0, 1)), 0, 1));
    s.check("fracton pair: fracton channel",
            has_witness(find_channel(fs, plain_class(MobilityTag::Fracton)),
                        1, 1));
    s.check("fracton pair: vacuum at the overlap",
            fs.includes_vacuum &&
                fs.vacuum_placements ==
                    std::vector<std::pair<int32_t, int32_t>>{{0, 0}});
  }
  {
    FusionChannelSet fs = fuse(cb, parse("x + y"), parse("1 + x*y"), 2);
    s.check("fracton pair reaching full mobility",
            has_witness(
                find_channel(fs, plain_class(MobilityTag::FullyMobile)), 0,
                0));
  }
  {
    FusionChannelSet fs = fuse(cb, Poly2::one(), parse("x*y"), 3);
    s.check("fracton pair landing on a fracton",
            has_witness(find_channel(fs, plain_class(MobilityTag::Fracton)),
                        0, 0));
  }
  {
    FusionReport r = check_fusion(cb, parse("1 + x"), parse("1 + y"), 4);
    bool all_fracton = true;
    for (const FusionChannel& ch : r.observed.channels)
      all_fracton = all_fracton && ch.cls.tag == MobilityTag::Fracton;
    s.check("crossed lineons fuse to fractons only", r.pass && all_fracton &&
                                                         !r.observed.channels
                                                              .empty());
  }
  {
    FusionReport r = check_fusion(b, three, three, 4);
    bool ok = r.pass;
    for (const FusionChannel& ch : r.observed.channels) {
      if (ch.cls.tag == MobilityTag::Fracton) ok = false;
      if (ch.cls.tag == MobilityTag::Lineon)
        ok = ok && ch.cls.axis == make_direction(1, 1) && ch.cls.period == 1;
    }
    s.check("same-axis lineons keep axis and period", ok);
  }
  {
    FusionChannelSet fs = fuse(a, a.f, a.f, 2);
    s.check("trivial pattern fuses to full mobility",
            fs.channels.size() == 1 &&
                fs.channels[0].cls.tag == MobilityTag::FullyMobile &&
                fs.includes_vacuum);
  }

  // --- symmetry slabs ---
  {
    bool ok = verify_symmetry_slab(
                  a, make_initial({parse("1"), parse("x^-1")}), 7, 15) &&
              verify_symmetry_slab(
                  a, make_initial({parse("1"), parse("1 + x")}), 7, 15) &&
              verify_symmetry_slab(a, make_initial({Poly2(), parse("1")}), 7,
                                   15);
    s.check("slab symmetry for seeded histories", ok);
    Poly2 history = pattern_poly(
        evolve(a, make_initial({parse("1"), parse("x^-1")}), 7));
    s.check("slab symmetry detects a defect",
            !verify_symmetry_pattern(a, add(history, Poly2::monomial(0, 3)),
                                     7, 15));
  }

  // --- rendering ---
  s.check("ascii grid of a diagonal pair",
          render_ascii(parse("1 + x*y")) == "X.\n.X");
  s.check("ascii grid of rule a",
          render_ascii(parse(kRuleA)) == ".X.\nXXX\nXX.");
  s.check("ascii grid of the empty pattern",
          render_ascii(Poly2()) == "(empty)");
}

}  // namespace

int run_reference_examples(std::ostream& out) {
  Suite s(out);
  try {
    run_all(s);
  } catch (const std::exception& e) {
    s.check("reference suite completes", false, e.what());
  }
  out << (s.failures() == 0 ? "all reference examples pass\n"
                            : std::to_string(s.failures()) +
                                  " reference example(s) failed\n");
  return s.failures();
}

}  // namespace catoric
