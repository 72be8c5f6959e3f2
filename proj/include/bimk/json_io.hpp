#pragma once

#include <string>

#include <json.hpp>

#include "bimk/blocks.hpp"
#include "bimk/covering.hpp"
#include "bimk/numbers.hpp"
#include "bimk/orders.hpp"
#include "bimk/ramsey.hpp"
#include "bimk/spreads.hpp"

namespace bimk {

using json = nlohmann::json;

// shape violations in incoming JSON are usage errors with a path hint

FiniteSeq seq_from_json(const json& j, const std::string& where);
json seq_to_json(const FiniteSeq& s);

Nat nat_from_json(const json& j, const std::string& where);

Rat rat_from_json(const json& j, const std::string& where);
json rat_to_json(const Rat& p);

Segment segment_from_json(const json& j, const std::string& where);
json segment_to_json(const Segment& s);

SegmentCover cover_from_json(const json& j, const std::string& where);
json cover_to_json(const SegmentCover& c);

BarTable bar_from_json(const json& j, const std::string& where);
json bar_to_json(const BarTable& bar);

LawTable law_from_json(const json& j, const std::string& where);
json law_to_json(const LawTable& law);

// raw quadruples without validity checks, for the validation subcommand
BlockCandidate block_candidate_from_json(const json& j, const std::string& where);

Block block_from_json(const json& j, const std::string& where);
json block_to_json(const Block& b);

// accepts {"binary": [...]}, {"rational": "p", "stages": n}, or the explicit
// {"stages": [...], "precision_log": p} form
RealPrefix real_from_json(const json& j, const std::string& where);
json real_to_json(const RealPrefix& x);

// {"all": true} or {"tuples": [[...], ...]}; explicit lists answer false
// outside their listing
SetPredicate predicate_from_json(const json& j, const std::string& where);

std::string order_verdict_name(OrderVerdict v);
std::string real_verdict_name(RealVerdict v);

}  // namespace bimk
