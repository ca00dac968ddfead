#include "catoric/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "catoric/fusion.hpp"
#include "catoric/hoca.hpp"
#include "catoric/mobility.hpp"
#include "catoric/oracle.hpp"
#include "catoric/pauli.hpp"
#include "catoric/poly.hpp"
#include "catoric/refsuite.hpp"
#include "catoric/render.hpp"

namespace catoric {

namespace {

// command-line misuse, as opposed to a domain-level failure
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/* --config FILE holds key=value lines (keys mirror the long flags, values
   optionally double-quoted, '#' starts a comment); each pair is appended to
   the argument list as "--key value". */
void expand_config_file(const std::string& path,
                        std::vector<std::string>& args) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line is not key=value: " + t);
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw UsageError("config line has an empty key: " + t);
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    args.push_back("--" + key);
    args.push_back(value);
  }
}

std::vector<std::string> expand_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.emplace_back(argc > 0 && argv[0] ? argv[0] : "catoric");
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--config") {
      if (i + 1 >= argc) throw UsageError("--config needs a file path");
      expand_config_file(argv[++i], args);
    } else if (a.rfind("--config=", 0) == 0) {
      expand_config_file(a.substr(9), args);
    } else {
      args.push_back(std::move(a));
    }
  }
  return args;
}

// comma-separated univariate-in-x seed rows, e.g. "1, x^-1"
InitialCondition parse_initial(const std::string& text) {
  std::vector<Poly2> rows;
  if (trim(text).empty()) return InitialCondition{};
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string piece = trim(comma == std::string::npos
                                 ? text.substr(start)
                                 : text.substr(start, comma - start));
    if (piece.empty())
      throw DomainError("empty seed row in initial condition");
    rows.push_back(parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return make_initial(std::move(rows));
}

std::string pair_text(int32_t a, int32_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string class_ascii(const MobilityClass& c) {
  std::string out;
  switch (c.tag) {
    case MobilityTag::FullyMobile: out = "class: fully mobile"; break;
    case MobilityTag::Lineon: {
      auto ax = display_axis(c.axis);
      out = "class: lineon\naxis: " + pair_text(ax.first, ax.second) +
            "\nperiod: " + std::to_string(c.period);
      break;
    }
    case MobilityTag::Fracton: out = "class: fracton"; break;
  }
  if (c.vacuum) out += "\nvacuum: yes";
  return out;
}

std::string channelset_ascii(const FusionChannelSet& s) {
  std::string out = "window: " + std::to_string(s.window);
  for (const FusionChannel& ch : s.channels) {
    out += "\nchannel: ";
    switch (ch.cls.tag) {
      case MobilityTag::FullyMobile: out += "fully mobile"; break;
      case MobilityTag::Lineon: {
        auto ax = display_axis(ch.cls.axis);
        out += "lineon axis " + pair_text(ax.first, ax.second) + " period " +
               std::to_string(ch.cls.period);
        break;
      }
      case MobilityTag::Fracton: out += "fracton"; break;
    }
    out += " via " +
           pair_text(ch.witnesses.front().first, ch.witnesses.front().second);
    out += " (" + std::to_string(ch.witnesses.size()) + " placement(s))";
  }
  if (s.includes_vacuum) {
    out += "\nvacuum at";
    for (const auto& [a, b] : s.vacuum_placements)
      out += " " + pair_text(a, b);
  }
  return out;
}

struct Options {
  std::string rule, m, m1, m2, w;
  std::string format = "json";
  int window = 0;  // 0: derive from the inputs
  int L = 6;
  int depth = 7;
  int width = 15;
};

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"exact engine for automaton-decorated toric-code models"};
  app.require_subcommand(1);
  Options opt;

  auto add_rule = [&](CLI::App* cmd) {
    cmd->add_option("--rule", opt.rule, "update-rule polynomial")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "ascii", "both"}))
        ->capture_default_str();
  };

  CLI::App* c_classify =
      app.add_subcommand("classify", "mobility class of an excitation");
  add_rule(c_classify);
  c_classify->add_option("--m", opt.m, "excitation pattern polynomial")
      ->required();
  add_format(c_classify);

  CLI::App* c_fuse =
      app.add_subcommand("fuse", "fusion channels of two excitations");
  add_rule(c_fuse);
  c_fuse->add_option("--m1", opt.m1, "first excitation pattern")->required();
  c_fuse->add_option("--m2", opt.m2, "second excitation pattern")->required();
  c_fuse->add_option("--window", opt.window,
                     "placement window (default 0: derive from the inputs)")
      ->capture_default_str();
  add_format(c_fuse);

  CLI::App* c_decompose = app.add_subcommand(
      "decompose", "split the rule as (1+x)P + (1+y)Q with coprime P, Q");
  add_rule(c_decompose);
  add_format(c_decompose);

  CLI::App* c_circuit =
      app.add_subcommand("circuit", "per-vertex controlled-Z gate template");
  add_rule(c_circuit);
  add_format(c_circuit);

  CLI::App* c_evolve =
      app.add_subcommand("evolve", "run the automaton on a seed");
  add_rule(c_evolve);
  c_evolve
      ->add_option("--w", opt.w,
                   "seed rows, comma-separated univariate polynomials")
      ->required();
  c_evolve->add_option("--depth", opt.depth, "number of rows to generate")
      ->capture_default_str();
  add_format(c_evolve);

  CLI::App* c_gsd =
      app.add_subcommand("gsd", "ground-state degeneracy on an LxL torus");
  add_rule(c_gsd);
  c_gsd->add_option("--L", opt.L, "torus side length")->capture_default_str();
  add_format(c_gsd);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "check a symmetry generator against the slab interior");
  add_rule(c_verify);
  c_verify
      ->add_option("--w", opt.w,
                   "seed rows, comma-separated univariate polynomials")
      ->required();
  c_verify->add_option("--depth", opt.depth, "slab depth")
      ->capture_default_str();
  c_verify->add_option("--width", opt.width, "slab half-width")
      ->capture_default_str();
  add_format(c_verify);

  CLI::App* c_examples = app.add_subcommand(
      "paper-examples", "run the built-in reference example suite");

  std::vector<std::string> args = expand_args(argc, argv);
  std::vector<const char*> ptrs;
  ptrs.reserve(args.size());
  for (const std::string& s : args) ptrs.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto emit = [&](const std::string& json_line, const std::string& ascii) {
    if (opt.format == "json" || opt.format == "both")
      std::cout << json_line << "\n";
    if (opt.format == "ascii" || opt.format == "both")
      std::cout << ascii << "\n";
  };

  if (*c_classify) {
    HocaRule rule = validate_rule(parse(opt.rule));
    Poly2 m = parse(opt.m);
    if (m.is_zero())
      throw UsageError(
          "--m must be nonzero: the vacuum has no mobility class");
    Classification cls = classify(rule, m);
    emit(classification_json(cls),
         class_ascii(cls.cls) + "\ng: " + render(cls.g));
    return 0;
  }

  if (*c_fuse) {
    HocaRule rule = validate_rule(parse(opt.rule));
    Poly2 m1 = parse(opt.m1), m2 = parse(opt.m2);
    if (opt.window < 0) throw UsageError("--window must be nonnegative");
    int W = opt.window > 0 ? opt.window
                           : default_fusion_window(rule, m1, m2);
    FusionReport report = check_fusion(rule, m1, m2, W);
    std::string ascii = "pattern 1 " + class_ascii(report.class1) +
                        "\npattern 2 " + class_ascii(report.class2) + "\n" +
                        channelset_ascii(report.observed) + "\nverdict: " +
                        (report.pass ? "allowed" : "VIOLATION");
    emit(fusion_json(report), ascii);
    return report.pass ? 0 : 1;
  }

  if (*c_decompose) {
    auto [p_part, q_part] = decompose_pq(validate_rule(parse(opt.rule)));
    emit(decompose_json(p_part, q_part),
         "P: " + render(p_part) + "\nQ: " + render(q_part));
    return 0;
  }

  if (*c_circuit) {
    auto [p_part, q_part] = decompose_pq(validate_rule(parse(opt.rule)));
    CzCircuit circ = synthesize_circuit(p_part, q_part);
    std::string ascii;
    for (const CzGate& g : circ.gates) {
      if (!ascii.empty()) ascii += "\n";
      ascii += "CZ vertex -> sublattice " +
               std::to_string(g.target_sublattice) + " cell " +
               pair_text(g.dx, g.dy);
    }
    if (ascii.empty()) ascii = "(no gates)";
    emit(circuit_json(circ), ascii);
    return 0;
  }

  if (*c_evolve) {
    HocaRule rule = validate_rule(parse(opt.rule));
    SpacetimePattern pattern = evolve(rule, parse_initial(opt.w), opt.depth);
    emit(pattern_json(pattern),
         render_ascii(pattern) + "\n" + grid_legend(pattern_poly(pattern)));
    return 0;
  }

  if (*c_gsd) {
    TorusCode tc = torus_code(validate_rule(parse(opt.rule)), opt.L);
    emit(gsd_json(tc.L, tc.qubits, tc.rank, tc.gsd),
         "L=" + std::to_string(tc.L) +
             " qubits=" + std::to_string(tc.qubits) +
             " rank=" + std::to_string(tc.rank) +
             " gsd=" + std::to_string(tc.gsd));
    return 0;
  }

  if (*c_verify) {
    HocaRule rule = validate_rule(parse(opt.rule));
    bool ok =
        verify_symmetry_slab(rule, parse_initial(opt.w), opt.depth, opt.width);
    nlohmann::ordered_json o;
    o["schema"] = "1";
    o["symmetric"] = ok;
    o["depth"] = opt.depth;
    o["width"] = opt.width;
    emit(o.dump(), std::string("symmetric: ") + (ok ? "yes" : "no"));
    return 0;
  }

  if (*c_examples) return run_reference_examples(std::cout) == 0 ? 0 : 1;

  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cout << error_json(e.what()) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << error_json(std::string("internal error: ") + e.what())
              << "\n";
    return 1;
  }
}

}  // namespace catoric
