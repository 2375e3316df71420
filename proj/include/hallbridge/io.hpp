#pragma once

#include "hallbridge/bridgeland.hpp"

#include <json.hpp>

namespace hb {

using Json = nlohmann::json;

Json coeff_to_json(const QSqrt& c);
QSqrt coeff_from_json(const Json& j, unsigned q);

Json hall_to_json(const HallElement& x);
HallElement hall_from_json(const Json& j, unsigned q);

Json bkey_to_json(BridgelandSession& s, const BKey& k);
Json bridgeland_to_json(BridgelandSession& s, const BridgelandElement& x);
BridgelandElement bridgeland_from_json(const Json& j, unsigned q);

/// Human-readable renderings (deterministic term order).
std::string hall_str(const HallElement& x);
std::string bridgeland_str(const BridgelandElement& x);
std::string dimvec_str(const DimVec& d);

}  // namespace hb
