#include "bimk/json_io.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace bimk {

namespace {

const json& expect_field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        fail_usage(where + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

std::uint64_t uint_from_json(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) fail_usage(where + ": expected a natural number");
    return j.get<std::uint64_t>();
}

}  // namespace

FiniteSeq seq_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail_usage(where + ": expected an array of naturals");
    FiniteSeq s;
    s.reserve(j.size());
    for (const json& entry : j) s.push_back(uint_from_json(entry, where));
    return s;
}

json seq_to_json(const FiniteSeq& s) { return json(s); }

Nat nat_from_json(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            Nat value(j.get<std::string>());
            if (value < 0) fail_usage(where + ": expected a natural number");
            return value;
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail_usage(where + ": cannot parse \"" + j.get<std::string>() + "\"");
        }
    }
    fail_usage(where + ": expected a natural number or decimal string");
}

Rat rat_from_json(const json& j, const std::string& where) {
    if (!j.is_string()) fail_usage(where + ": rationals are \"num/den\" strings");
    return parse_rat(j.get<std::string>());
}

json rat_to_json(const Rat& p) { return json(rat_to_string(p)); }

Segment segment_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        fail_usage(where + ": segments are [lo, hi] rational pairs");
    }
    return make_segment(rat_from_json(j[0], where), rat_from_json(j[1], where));
}

json segment_to_json(const Segment& s) {
    return json::array({rat_to_json(s.lo), rat_to_json(s.hi)});
}

SegmentCover cover_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail_usage(where + ": expected an array of segments");
    SegmentCover c;
    for (const json& entry : j) c.push_back(segment_from_json(entry, where));
    return c;
}

json cover_to_json(const SegmentCover& c) {
    json out = json::array();
    for (const Segment& s : c) out.push_back(segment_to_json(s));
    return out;
}

BarTable bar_from_json(const json& j, const std::string& where) {
    const json& members_json = expect_field(j, "members", where);
    if (!members_json.is_array()) fail_usage(where + ": members must be an array");
    std::vector<FiniteSeq> members;
    for (const json& entry : members_json) {
        members.push_back(seq_from_json(entry, where + ".members"));
    }
    std::uint64_t horizon =
        uint_from_json(expect_field(j, "depth_horizon", where), where + ".depth_horizon");
    return make_bar(std::move(members), horizon);
}

json bar_to_json(const BarTable& bar) {
    json members = json::array();
    for (const FiniteSeq& m : bar.members) members.push_back(seq_to_json(m));
    json out;
    out["members"] = std::move(members);
    out["depth_horizon"] = bar.depth_horizon;
    out["thin"] = bar.thin ? json(*bar.thin) : json(nullptr);
    return out;
}

LawTable law_from_json(const json& j, const std::string& where) {
    const json& admitted_json = expect_field(j, "admitted", where);
    if (!admitted_json.is_array()) fail_usage(where + ": admitted must be an array");
    std::vector<FiniteSeq> admitted;
    for (const json& entry : admitted_json) {
        admitted.push_back(seq_from_json(entry, where + ".admitted"));
    }
    std::uint64_t depth =
        uint_from_json(expect_field(j, "depth", where), where + ".depth");
    std::uint64_t width =
        uint_from_json(expect_field(j, "width", where), where + ".width");
    return make_law(std::move(admitted), depth, width);
}

json law_to_json(const LawTable& law) {
    json admitted = json::array();
    for (const FiniteSeq& s : law.admitted) admitted.push_back(seq_to_json(s));
    json out;
    out["admitted"] = std::move(admitted);
    out["depth"] = law.depth;
    out["width"] = law.width;
    return out;
}

BlockCandidate block_candidate_from_json(const json& j, const std::string& where) {
    const json& entries = expect_field(j, "entries", where);
    if (!entries.is_array()) fail_usage(where + ": entries must be an array");
    BlockCandidate candidate;
    for (const json& entry : entries) {
        if (!entry.is_array() || entry.size() != 2) {
            fail_usage(where + ": each entry is a [prime, second] segment pair");
        }
        if (!entry[0].is_array() || entry[0].size() != 2 || !entry[1].is_array() ||
            entry[1].size() != 2) {
            fail_usage(where + ": each entry is a [prime, second] segment pair");
        }
        candidate.push_back({rat_from_json(entry[0][0], where), rat_from_json(entry[0][1], where),
                             rat_from_json(entry[1][0], where), rat_from_json(entry[1][1], where)});
    }
    return candidate;
}

Block block_from_json(const json& j, const std::string& where) {
    return make_block(block_candidate_from_json(j, where));
}

json block_to_json(const Block& b) {
    json entries = json::array();
    for (const BlockEntry& entry : b) {
        entries.push_back(
            json::array({segment_to_json(entry.prime), segment_to_json(entry.second)}));
    }
    json out;
    out["entries"] = std::move(entries);
    return out;
}

RealPrefix real_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) fail_usage(where + ": expected a real-prefix object");
    if (j.contains("binary")) {
        return real_of_binary(seq_from_json(j.at("binary"), where + ".binary"));
    }
    if (j.contains("rational")) {
        Rat p = rat_from_json(j.at("rational"), where + ".rational");
        std::uint64_t stages =
            uint_from_json(expect_field(j, "stages", where), where + ".stages");
        return rational_as_real(p, stages);
    }
    if (j.contains("stages")) {
        const json& stages_json = j.at("stages");
        if (!stages_json.is_array()) fail_usage(where + ": stages must be an array");
        std::vector<Segment> stages;
        for (const json& entry : stages_json) {
            stages.push_back(segment_from_json(entry, where + ".stages"));
        }
        const json& plog = expect_field(j, "precision_log", where);
        if (!plog.is_number_integer()) {
            fail_usage(where + ": precision_log must be an integer");
        }
        return make_real_prefix(std::move(stages), plog.get<std::int64_t>());
    }
    fail_usage(where + ": provide \"binary\", \"rational\"+\"stages\", or explicit stages");
}

json real_to_json(const RealPrefix& x) {
    json stages = json::array();
    for (const Segment& s : x.stages) stages.push_back(segment_to_json(s));
    json out;
    out["stages"] = std::move(stages);
    out["precision_log"] = x.precision_log;
    return out;
}

SetPredicate predicate_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) fail_usage(where + ": expected a predicate object");
    if (j.contains("all")) {
        if (!j.at("all").is_boolean() || !j.at("all").get<bool>()) {
            fail_usage(where + ": \"all\" must be true when present");
        }
        return [](const FiniteSeq&) { return true; };
    }
    if (j.contains("tuples")) {
        const json& tuples = j.at("tuples");
        if (!tuples.is_array()) fail_usage(where + ": tuples must be an array");
        auto listed = std::make_shared<std::set<FiniteSeq>>();
        for (const json& entry : tuples) {
            listed->insert(seq_from_json(entry, where + ".tuples"));
        }
        return [listed](const FiniteSeq& s) { return listed->count(s) > 0; };
    }
    fail_usage(where + ": provide \"all\" or an explicit \"tuples\" list");
}

std::string order_verdict_name(OrderVerdict v) {
    switch (v) {
        case OrderVerdict::LessThan: return "LessThan";
        case OrderVerdict::Equal: return "Equal";
        case OrderVerdict::GreaterThan: return "GreaterThan";
        case OrderVerdict::Incomparable: return "Incomparable";
    }
    fail_usage("unknown order verdict");
}

std::string real_verdict_name(RealVerdict v) {
    switch (v) {
        case RealVerdict::LessThan: return "LessThan";
        case RealVerdict::GreaterThan: return "GreaterThan";
        case RealVerdict::Unknown: return "Unknown";
    }
    fail_usage("unknown real verdict");
}

}  // namespace bimk
