#include "catoric/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <string>

namespace catoric {

namespace {

using ordered_json = nlohmann::ordered_json;

struct GridBounds {
  int32_t ilo = 0, ihi = 0, jlo = 0, jhi = 0;
};

// bounding box of the support united with the origin
GridBounds grid_bounds(const Poly2& p) {
  GridBounds b;
  for (const Mono& t : p.terms()) {
    b.ilo = std::min(b.ilo, t.i);
    b.ihi = std::max(b.ihi, t.i);
    b.jlo = std::min(b.jlo, t.j);
    b.jhi = std::max(b.jhi, t.j);
  }
  return b;
}

const char* tag_name(MobilityTag tag) {
  switch (tag) {
    case MobilityTag::FullyMobile: return "fully_mobile";
    case MobilityTag::Lineon: return "lineon";
    case MobilityTag::Fracton: return "fracton";
  }
  return "fracton";
}

void put_class_fields(ordered_json& o, const MobilityClass& c) {
  o["class"] = tag_name(c.tag);
  if (c.tag == MobilityTag::Lineon) {
    auto ax = display_axis(c.axis);
    o["axis"] = {ax.first, ax.second};
    o["period"] = c.period;
  }
  if (c.vacuum) o["vacuum"] = true;
}

ordered_json class_json(const MobilityClass& c) {
  ordered_json o;
  put_class_fields(o, c);
  return o;
}

ordered_json placements_json(
    const std::vector<std::pair<int32_t, int32_t>>& ps) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : ps) arr.push_back({a, b});
  return arr;
}

ordered_json channels_json(const std::vector<FusionChannel>& channels) {
  ordered_json arr = ordered_json::array();
  for (const FusionChannel& ch : channels) {
    ordered_json o = class_json(ch.cls);
    o["witnesses"] = placements_json(ch.witnesses);
    arr.push_back(std::move(o));
  }
  return arr;
}

ordered_json channelset_fields(const FusionChannelSet& s) {
  ordered_json o;
  o["window"] = s.window;
  o["channels"] = channels_json(s.channels);
  o["vacuum_placements"] = placements_json(s.vacuum_placements);
  o["includes_vacuum"] = s.includes_vacuum;
  return o;
}

}  // namespace

std::string render_ascii(const Poly2& p) {
  if (p.is_zero()) return "(empty)";
  GridBounds b = grid_bounds(p);
  std::string out;
  for (int32_t j = b.jlo; j <= b.jhi; ++j) {
    if (j != b.jlo) out += '\n';
    for (int32_t i = b.ilo; i <= b.ihi; ++i)
      out += p.has_term(i, j) ? 'X' : '.';
  }
  return out;
}

std::string grid_legend(const Poly2& p) {
  if (p.is_zero()) return "empty support";
  GridBounds b = grid_bounds(p);
  return "top-left cell (i, j) = (" + std::to_string(b.ilo) + ", " +
         std::to_string(b.jlo) + "); x right, y down";
}

std::string render_ascii(const SpacetimePattern& pattern) {
  int32_t ilo = 0, ihi = 0;
  for (const Poly2& row : pattern.rows) {
    for (const Mono& t : row.terms()) {
      ilo = std::min(ilo, t.i);
      ihi = std::max(ihi, t.i);
    }
  }
  std::string out;
  for (size_t j = 0; j < pattern.rows.size(); ++j) {
    if (j != 0) out += '\n';
    for (int32_t i = ilo; i <= ihi; ++i)
      out += pattern.rows[j].has_term(i, 0) ? 'X' : '.';
  }
  return out;
}

std::string classification_json(const Classification& c) {
  ordered_json o;
  o["schema"] = "1";
  put_class_fields(o, c.cls);
  o["g"] = render(c.g);
  return o.dump();
}

std::string fusion_json(const FusionReport& r) {
  ordered_json o;
  o["schema"] = "1";
  o["class1"] = class_json(r.class1);
  o["class2"] = class_json(r.class2);
  o["observed"] = channelset_fields(r.observed);
  o["violations"] = channels_json(r.violations);
  o["pass"] = r.pass;
  return o.dump();
}

std::string channelset_json(const FusionChannelSet& s) {
  ordered_json o;
  o["schema"] = "1";
  for (auto& [key, value] : channelset_fields(s).items()) o[key] = value;
  return o.dump();
}

std::string decompose_json(const Poly2& P, const Poly2& Q) {
  ordered_json o;
  o["schema"] = "1";
  o["P"] = render(P);
  o["Q"] = render(Q);
  return o.dump();
}

std::string circuit_json(const CzCircuit& c) {
  ordered_json o;
  o["schema"] = "1";
  ordered_json gates = ordered_json::array();
  for (const CzGate& g : c.gates) {
    ordered_json go;
    go["target_sublattice"] = g.target_sublattice;
    go["dx"] = g.dx;
    go["dy"] = g.dy;
    gates.push_back(std::move(go));
  }
  o["gates"] = std::move(gates);
  o["P"] = render(c.P);
  o["Q"] = render(c.Q);
  return o.dump();
}

std::string pattern_json(const SpacetimePattern& pattern) {
  ordered_json o;
  o["schema"] = "1";
  o["order"] = pattern.order;
  o["depth"] = pattern.rows.size();
  ordered_json rows = ordered_json::array();
  for (const Poly2& row : pattern.rows) rows.push_back(render(row));
  o["rows"] = std::move(rows);
  return o.dump();
}

std::string gsd_json(int L, size_t qubits, size_t rank, uint64_t gsd_value) {
  ordered_json o;
  o["schema"] = "1";
  o["L"] = L;
  o["qubits"] = qubits;
  o["rank"] = rank;
  o["gsd"] = gsd_value;
  return o.dump();
}

std::string error_json(const std::string& message) {
  ordered_json o;
  o["schema"] = "1";
  o["error"] = message;
  return o.dump();
}

}  // namespace catoric
