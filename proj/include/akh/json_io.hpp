#pragma once

// JSON export and re-parse for every CLI-visible result.  Schemas are stable
// and round-trip exactly:
//   polynomial      array of {"q","t","z","coeff":"num/den"}, ascending (t,q,z)
//   decomposition   {"W0":[{"t","q","z","dim"}],"staircases":[{"k","t","q","z","dim"}]},
//                   W0 descending in (t,q,z), staircases ascending k then descending grading
//   spectral        {"E": polynomial, "C":[{"k","poly"}]}
//   sl2             [{"n","i","jk","mult"}]
//   reps            {"i","j","basis":[gen ids],"classes":[["num/den",...]]}
//   braid           {"strands","letters"}
//   cube            {"braid","vertices":[{"bits","cycles","nontrivial","depths"}]}
//   report          {"name","seed","cases":[...],"summary"}
//   separation      {"first","second","e_equal","only_in_first","only_in_second",
//                    "z_shift_only","z1_equal","diff"}

#include "json.hpp"

#include <string>
#include <vector>

#include "akh/experiments.hpp"

namespace akh {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly3& p);
Json to_json(const Decomposition& d);
Json to_json(const SpectralOutput& s);
Json to_json(const std::vector<Sl2Summand>& summands);
Json to_json(const RepsResult& r, int i, int j);
Json to_json(const BraidWord& b);
Json to_json(const CubeData& cube);
Json to_json(const ExperimentReport& r);
Json to_json(const SeparationReport& r);

LaurentPoly3 poly_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);
SpectralOutput spectral_from_json(const Json& j);
std::vector<Sl2Summand> sl2_from_json(const Json& j);
RepsResult reps_from_json(const Json& j);
BraidWord braid_from_json(const Json& j);
ExperimentReport report_from_json(const Json& j);

// Two-space indent plus trailing newline.
std::string dump_json(const Json& j);

}  // namespace akh
