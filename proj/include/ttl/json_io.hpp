#pragma once

#include "ttl/chi.hpp"
#include "ttl/jumps.hpp"
#include "ttl/tamechar.hpp"

#include <json.hpp>

namespace ttl {

using nlohmann::json;

json shape_to_json(const ExtShape& E);
ExtShape shape_from_json(const json& j);

// schema 1: {"schema":1, "shape":{...}, "e_chain":[...], "f_chain":[...],
//            "jumps":[...], "zetas":[...]}
json jump_datum_to_json(const JumpDatum& jd);
JumpDatum jump_datum_from_json(const json& j);

json tame_char_to_json(const TameChar& c);
json rot_to_json(const Rot& r);

json chi_datum_to_json(const ChiDatum& x);
json coset_to_json(const DoubleCoset& dc);

} // namespace ttl
