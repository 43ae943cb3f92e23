#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "coxfan/cone.hpp"
#include "coxfan/coxring.hpp"
#include "coxfan/gitfan.hpp"

namespace coxfan {

using Json = nlohmann::ordered_json;

// Frozen output schema: {"object": kind, "lattice": [labels],
// "rays": [[int,...],...], "meta": {...}}; chamber sets add "chambers".
// Rays are integer arrays, rationals are "p/q" strings.

std::vector<std::string> curve_lattice_labels(int r);
std::vector<std::string> picard_lattice_labels(int r);
std::vector<std::string> del_pezzo_lattice_labels(int degree);

Json rays_to_json(const std::vector<VecZ>& rays);
Json cone_json(const std::string& kind, const std::vector<std::string>& labels,
               const RationalCone& cone, Json meta);
Json ray_list_json(const std::string& kind, const std::vector<std::string>& labels,
                   const std::vector<VecZ>& rays, Json meta);
Json chamber_set_json(const ChamberSet& cs, int n, std::uint64_t seed);
Json presentation_json(const CoxPresentation& pres, std::uint64_t seed);

// Canonical text form used everywhere (2-space indent, trailing newline);
// parsing and re-dumping a document is byte-identical.
std::string dump(const Json& j);

}  // namespace coxfan
