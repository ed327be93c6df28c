#pragma once

#include <string>

#include "json.hpp"

#include "minimax/affine.hpp"
#include "minimax/heisenberg.hpp"
#include "minimax/ideals.hpp"
#include "minimax/lattice_count.hpp"

namespace minimax {

inline constexpr const char* kSchemaVersion = "minimax-ideals/1";

using json = nlohmann::json;

json coords_json(const IntVec& v, int rank);
IntVec coords_from_json(const json& j, int rank);

/// {"type": "F4", "rank": 4, "generators": [[...], ...]}
json ideal_to_json(const Ideal& ideal);
/// `rs` must match the record's type and rank.
Ideal ideal_from_json(const RootSystem& rs, const json& j);

/// {"word": [...], "v_matrix": [[row]...], "r_coords": [...], "length": n}
json element_to_json(const RootSystem& rs, const AffineWeylElement& w);
/// Rebuilt from the word; the stored matrix, translation and length must agree.
AffineWeylElement element_from_json(const RootSystem& rs, const json& j);

/// {"nu": [...], "sign": "+" | "-"}
json descriptor_to_json(const RootSystem& rs, const HeisenbergDescriptor& d);
HeisenbergDescriptor descriptor_from_json(const RootSystem& rs, const json& j);

json report_to_json(const CountReport& r);
CountReport report_from_json(const json& j);

/// Full per-ideal record emitted by `minimax enumerate`.
json ideal_record(const Ideal& ideal);

}  // namespace minimax
