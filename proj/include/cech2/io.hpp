#pragma once

// JSON encodings and the coefficient/space specifications used by the CLI.
//
//   group           "S3" | {"name": str, "order": int?, "table": [[int]]}
//   crossed module  {"name": str, "G": group, "H": group, "t": [int], "alpha": [[int]]}
//                   alpha[g][h] is the image of h under g
//   complex         {"vertices": int, "maximal": [[int]]}
//   cocycle         {"g": {"i,j": int}, "h": {"i,j,k": int}}
//   group sequence  {"H": group, "G": group, "K": group, "t": [int], "p": [int], "section": [int]?}
//   2-group seq.    {"xm0": xm, "xm1": xm, "xm2": xm, "f": {"G": [int], "H": [int]}, "p": {...}}

#include <string>

#include <json.hpp>

#include "cech2/cohomology.hpp"
#include "cech2/crossed_module.hpp"
#include "cech2/exactness.hpp"
#include "cech2/nerve.hpp"
#include "cech2/report.hpp"

namespace cech2 {

using Json = nlohmann::ordered_json;

/// Reads a file as JSON; unreadable files and syntax errors are InvalidInput.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

Json to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);

Json to_json(const CrossedModule& xm);
CrossedModule crossed_module_from_json(const Json& j);

Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const Cocycle& c, const SimplicialComplex& complex);
Cocycle cocycle_from_json(const Json& j, const SimplicialComplex& complex);
Json to_json(const CoboundaryWitness& w, const SimplicialComplex& complex);

/// {"classes", "sizes", "base_class", "representatives"}.
Json to_json(const Classification& c);
/// {"suite", "ok", "checks": [{"name", "ok", "detail"}], "figures"}.
Json to_json(const Report& r);

GroupSES group_ses_from_json(const Json& j);
CrossedModuleSES crossed_module_ses_from_json(const Json& j);

/// The builtin Z₂ → Z₄ crossed module, 1 ↦ 2 with trivial action.
CrossedModule z2_to_z4();

/// discrete:<group> | shift:<group> | aut:<group> | hat:<spec> | z2-z4 | path to
/// a crossed-module JSON file.
CrossedModule parse_coefficients(const std::string& spec);
/// Standard space name or path to a complex JSON file.
SimplicialComplex parse_space(const std::string& spec);

/// z2-z4-z2 | z3-z3-1 | path to a group-sequence JSON file.
GroupSES parse_group_ses(const std::string& spec);
/// hat:<coefficients> | z2-z4-z2 | z3-z3-1 (as discrete 2-groups) | path to a
/// group or 2-group sequence JSON file.
CrossedModuleSES parse_crossed_module_ses(const std::string& spec);

}  // namespace cech2
