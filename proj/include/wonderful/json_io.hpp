#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wonderful/appendix.hpp"
#include "wonderful/catalog.hpp"
#include "wonderful/connectivity.hpp"
#include "wonderful/dictionary.hpp"
#include "wonderful/error.hpp"
#include "wonderful/spherical_system.hpp"

namespace wonderful {

using Json = nlohmann::ordered_json;

/// Parses text, reporting line and column of a syntax error as ParseError.
Json parse_json(std::string_view text);

// Nodes are written as [component, index] with a 0-based component of the canonical
// diagram and a 1-based Bourbaki index. Weights are lists of [component, index, coeff]
// over their nonzero coefficients.

Json to_json(const DynkinDiagram& d);
/// Accepts {"components":[{"family":"A","rank":3},...]} or a diagram string such as "A3,F4".
DynkinDiagram diagram_from_json(const Json& j);

Json node_to_json(const DynkinDiagram& d, int node);
Json nodes_to_json(const DynkinDiagram& d, NodeSet nodes);
Json weight_to_json(const DynkinDiagram& d, const Weight& w);

/// {"diagram", "sp", "sigma"} plus "require_independence": false when the opt-out is set.
Json to_json(const SphericalSystem& sys);
/// Node references index the components exactly as listed in the input (so "C2" or "D3"
/// can be used with their own numbering); they are mapped onto the canonical diagram.
SphericalSystem system_from_json(const Json& j);

Json to_json(const SphericalSystem& sys, const ValidationReport& r);
ValidationReport report_from_json(const DynkinDiagram& d, const Json& j);

/// Colour subsets are written as lists of colour names ("D1", "D2+4", "D1′").
Json colours_to_json(const SphericalSystem& sys, const ColourSet& cs, ColourSubset subset);
/// Inverse of colours_to_json; ASCII primes are accepted. Throws ParameterError on unknown names.
ColourSubset colours_from_json(const SphericalSystem& sys, const ColourSet& cs, const Json& j);
ColourSubset parse_colour_list(const SphericalSystem& sys, const ColourSet& cs, std::string_view text);

Json to_json(const SphericalSystem& sys, const ColourSet& cs);
ColourSet colour_set_from_json(const SphericalSystem& sys, const Json& j);

Json to_json(const SphericalSystem& sys, const ColourSet& cs, const QuotientResult& q);
QuotientResult quotient_from_json(const SphericalSystem& sys, const ColourSet& cs, const Json& j);

/// Root subsets are written as lists of 0-based positions of Σ.
Json to_json(const SphericalSystem& sys, const ColourSet& cs, const ComponentAnalysis& a);
ComponentAnalysis component_from_json(const SphericalSystem& sys, const ColourSet& cs, const Json& j);

Json to_json(const ExpectedDims& e);
ExpectedDims expected_dims_from_json(const Json& j);

/// {"label", "family", "params"}.
Json to_json(const FamilyInstance& inst);
FamilyInstance family_instance_from_json(const Json& j);

Json to_json(const OrbitDims& o);
OrbitDims orbit_dims_from_json(const Json& j);

/// {"error": {"kind", "message"}}.
Json error_to_json(const Error& e);

}  // namespace wonderful
