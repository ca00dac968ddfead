#pragma once

#include <string>

#include "catoric/fusion.hpp"
#include "catoric/hoca.hpp"
#include "catoric/mobility.hpp"
#include "catoric/pauli.hpp"
#include "catoric/poly.hpp"

namespace catoric {

/* Origin-anchored character grid: x to the right, y downward, 'X' on
   support cells, '.' elsewhere. The grid covers the bounding box of the
   support united with the origin; "(empty)" for the zero polynomial.
   No legend inside the grid; callers print one separately. */
std::string render_ascii(const Poly2& p);

// one-line description of where the grid's top-left cell sits
std::string grid_legend(const Poly2& p);

std::string render_ascii(const SpacetimePattern& pattern);

// JSON emission (all objects carry "schema":"1")
std::string classification_json(const Classification& c);
std::string fusion_json(const FusionReport& r);
std::string channelset_json(const FusionChannelSet& s);
std::string decompose_json(const Poly2& P, const Poly2& Q);
std::string circuit_json(const CzCircuit& c);
std::string pattern_json(const SpacetimePattern& pattern);
std::string gsd_json(int L, size_t qubits, size_t rank, uint64_t gsd_value);
std::string error_json(const std::string& message);

}  // namespace catoric
