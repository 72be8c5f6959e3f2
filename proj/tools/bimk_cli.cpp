#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "bimk/json_io.hpp"

namespace {

using namespace bimk;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json read_payload() {
    std::string text((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    if (text.empty()) fail_usage("expected a JSON document on stdin");
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail_usage(std::string("stdin is not valid JSON: ") + e.what());
    }
}

json parse_flag_json(const std::string& text, const std::string& flag) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        fail_usage(flag + " is not valid JSON: " + text);
    }
}

FiniteSeq seq_flag(const std::string& text, const std::string& flag) {
    return seq_from_json(parse_flag_json(text, flag), flag);
}

Segment segment_flag(const std::string& text, const std::string& flag) {
    return segment_from_json(parse_flag_json(text, flag), flag);
}

Nat nat_flag(const std::string& text, const std::string& flag) {
    try {
        Nat value(text);
        if (value < 0) fail_usage(flag + " must be a natural number");
        return value;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail_usage(flag + " must be a decimal natural: " + text);
    }
}

json optional_index(const std::optional<std::size_t>& v) {
    return v ? json(*v) : json(nullptr);
}

json optional_seq(const std::optional<FiniteSeq>& v) {
    return v ? seq_to_json(*v) : json(nullptr);
}

void register_codes(CLI::App& app) {
    {
        auto seq = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("encode", "sequence to prime-power numeral");
        cmd->add_option("--seq", *seq)->required();
        cmd->callback([seq] {
            json out;
            out["numeral"] = encode_seq(seq_flag(*seq, "--seq")).str();
            emit(out);
        });
    }
    {
        auto numeral = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("decode", "numeral to sequence");
        cmd->add_option("--numeral", *numeral)->required();
        cmd->callback([numeral] {
            json out;
            out["seq"] = seq_to_json(decode_seq(nat_flag(*numeral, "--numeral")));
            emit(out);
        });
    }
    {
        auto op = std::make_shared<std::string>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand("seq-op", "concatenation and prefix");
        cmd->add_option("--op", *op)->required()->check(CLI::IsMember({"concat", "initial"}));
        cmd->add_option("--a", *a)->required();
        auto* b_opt = cmd->add_option("--b", *b);
        auto* n_opt = cmd->add_option("--n", *n);
        cmd->callback([op, a, b, n, b_opt, n_opt] {
            FiniteSeq left = seq_flag(*a, "--a");
            json out;
            if (*op == "concat") {
                if (b_opt->count() == 0) fail_usage("concat needs --b");
                out["seq"] = seq_to_json(concat(left, seq_flag(*b, "--b")));
            } else {
                if (n_opt->count() == 0) fail_usage("initial needs --n");
                out["seq"] = seq_to_json(initial(left, *n));
            }
            emit(out);
        });
    }
    {
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto rel = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand("seq-relate", "prefix and agreement relations");
        cmd->add_option("--a", *a)->required();
        cmd->add_option("--b", *b)->required();
        cmd->add_option("--rel", *rel)->required()->check(
            CLI::IsMember({"is_initial", "proper_initial", "agree_to", "differ_before"}));
        auto* n_opt = cmd->add_option("--n", *n);
        cmd->callback([a, b, rel, n, n_opt] {
            FiniteSeq left = seq_flag(*a, "--a");
            FiniteSeq right = seq_flag(*b, "--b");
            bool holds = false;
            if (*rel == "is_initial") {
                holds = is_initial(left, right);
            } else if (*rel == "proper_initial") {
                holds = proper_initial(left, right);
            } else {
                if (n_opt->count() == 0) fail_usage(*rel + " needs --n");
                holds = *rel == "agree_to" ? agree_to(left, right, *n)
                                           : differ_before(left, right, *n);
            }
            json out;
            out["holds"] = holds;
            emit(out);
        });
    }
    {
        auto m = std::make_shared<std::string>();
        auto n = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("pair", "Cantor pairing code");
        cmd->add_option("--m", *m)->required();
        cmd->add_option("--n", *n)->required();
        cmd->callback([m, n] {
            json out;
            out["code"] = pair_code(nat_flag(*m, "--m"), nat_flag(*n, "--n")).str();
            emit(out);
        });
    }
    {
        auto code = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("unpair", "inverse of the pairing code");
        cmd->add_option("--code", *code)->required();
        cmd->callback([code] {
            auto [m, n] = unpair_code(nat_flag(*code, "--code"));
            json out;
            out["m"] = m.str();
            out["n"] = n.str();
            emit(out);
        });
    }
    {
        auto seq = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("is-bin", "all entries below 2");
        cmd->add_option("--seq", *seq)->required();
        cmd->callback([seq] {
            json out;
            out["binary"] = is_bin(seq_flag(*seq, "--seq"));
            emit(out);
        });
    }
    {
        auto table = std::make_shared<std::string>();
        auto seq = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("compose-along", "index lookup along a table");
        cmd->add_option("--table", *table)->required();
        cmd->add_option("--seq", *seq)->required();
        cmd->callback([table, seq] {
            json out;
            out["seq"] = seq_to_json(
                compose_along(seq_flag(*table, "--table"), seq_flag(*seq, "--seq")));
            emit(out);
        });
    }
    {
        auto mode = std::make_shared<std::string>();
        auto table = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand("set-member", "decided/enumerated prefix membership");
        cmd->add_option("--mode", *mode)->required()->check(
            CLI::IsMember({"decided", "enumerated"}));
        cmd->add_option("--table", *table)->required();
        cmd->add_option("--n", *n)->required();
        cmd->callback([mode, table, n] {
            SetPrefix prefix;
            prefix.mode = *mode == "decided" ? SetPrefix::Mode::decided
                                             : SetPrefix::Mode::enumerated;
            prefix.table = seq_flag(*table, "--table");
            json out;
            out["member"] = prefix.contains(*n);
            emit(out);
        });
    }
}

void register_orders(CLI::App& app) {
    auto compare = [&app](const char* name, const char* help, bool kb) {
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--a", *a)->required();
        cmd->add_option("--b", *b)->required();
        cmd->callback([a, b, kb] {
            FiniteSeq left = seq_flag(*a, "--a");
            FiniteSeq right = seq_flag(*b, "--b");
            json out;
            out["verdict"] = order_verdict_name(kb ? kb_cmp(left, right)
                                                   : lex_cmp(left, right));
            emit(out);
        });
    };
    compare("kb-compare", "total Kleene-Brouwer comparison", true);
    compare("lex-compare", "partial lexicographic comparison", false);
    {
        auto s = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("below", "no prefix lies in the bar (bar on stdin)");
        cmd->add_option("--s", *s)->required();
        cmd->callback([s] {
            BarTable bar = bar_from_json(read_payload(), "stdin");
            json out;
            out["below"] = below(bar, seq_flag(*s, "--s"));
            emit(out);
        });
    }
    {
        auto order = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(
            "check-descending", "first violation of a strict descent (chain on stdin)");
        cmd->add_option("--order", *order)->required()->check(CLI::IsMember({"kb", "lex"}));
        cmd->callback([order] {
            json payload = read_payload();
            if (!payload.is_object() || !payload.contains("chain")) {
                fail_usage("stdin: missing field \"chain\"");
            }
            std::vector<FiniteSeq> chain;
            for (const json& entry : payload.at("chain")) {
                chain.push_back(seq_from_json(entry, "stdin.chain"));
            }
            std::optional<BarTable> bar;
            if (payload.contains("bar") && !payload.at("bar").is_null()) {
                bar = bar_from_json(payload.at("bar"), "stdin.bar");
            }
            auto violation = check_descending(
                chain, *order == "kb" ? ChainOrder::kb : ChainOrder::lex, bar);
            json out;
            out["violation"] = optional_index(violation);
            emit(out);
        });
    }
    {
        auto horizon = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand("thin-phi", "one thin-bar tower step (bar on stdin)");
        cmd->add_option("--out-horizon", *horizon)->required();
        cmd->callback([horizon] {
            emit(bar_to_json(thinbar_phi(bar_from_json(read_payload(), "stdin"), *horizon)));
        });
    }
    {
        auto level = std::make_shared<std::uint64_t>(0);
        auto horizon = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand("eps0-level", "materialized tower level");
        cmd->add_option("--level", *level)->required();
        cmd->add_option("--horizon", *horizon)->required();
        cmd->callback([level, horizon] {
            emit(bar_to_json(epsilon0_level(*level, *horizon)));
        });
    }
    {
        auto seq = std::make_shared<std::string>();
        auto level = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand(
            "eps0-member", "tower membership: a level with --level, the diagonal without");
        cmd->add_option("--seq", *seq)->required();
        auto* level_opt = cmd->add_option("--level", *level);
        cmd->callback([seq, level, level_opt] {
            FiniteSeq s = seq_flag(*seq, "--seq");
            json out;
            out["member"] = level_opt->count() > 0 ? eps0_level_member(s, *level)
                                                   : eps0_member(s);
            emit(out);
        });
    }
}

void register_numbers(CLI::App& app) {
    {
        auto op = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("rat-arith", "exact rational arithmetic");
        cmd->add_option("--op", *op)->required()->check(CLI::IsMember({"add", "sub", "mul"}));
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->callback([op, p, q] {
            Rat left = parse_rat(*p);
            Rat right = parse_rat(*q);
            Rat value = *op == "add"   ? rat_add(left, right)
                        : *op == "sub" ? rat_sub(left, right)
                                       : rat_mul(left, right);
            json out;
            out["value"] = rat_to_json(value);
            emit(out);
        });
    }
    {
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("rat-cmp", "total rational comparison");
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--q", *q)->required();
        cmd->callback([p, q] {
            json out;
            out["verdict"] = order_verdict_name(rat_cmp(parse_rat(*p), parse_rat(*q)));
            emit(out);
        });
    }
    {
        auto s = std::make_shared<std::string>();
        auto t = std::make_shared<std::string>();
        auto rel = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("seg-relate", "the six segment relations");
        cmd->add_option("--s", *s)->required();
        cmd->add_option("--t", *t)->required();
        cmd->add_option("--rel", *rel)->required()->check(CLI::IsMember(
            {"inside", "strictly_inside", "left_of", "weak_left_of", "apart", "touching"}));
        cmd->callback([s, t, rel] {
            SegRel relation = *rel == "inside"            ? SegRel::inside
                              : *rel == "strictly_inside" ? SegRel::strictly_inside
                              : *rel == "left_of"         ? SegRel::left_of
                              : *rel == "weak_left_of"    ? SegRel::weak_left_of
                              : *rel == "apart"           ? SegRel::apart
                                                          : SegRel::touching;
            json out;
            out["holds"] =
                seg_relate(segment_flag(*s, "--s"), segment_flag(*t, "--t"), relation);
            emit(out);
        });
    }
    {
        auto op = std::make_shared<std::string>();
        auto s = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("seg-geometry", "halves and doubling");
        cmd->add_option("--op", *op)->required()->check(
            CLI::IsMember({"left_half", "right_half", "double"}));
        cmd->add_option("--s", *s)->required();
        cmd->callback([op, s] {
            SegGeom geom = *op == "left_half"    ? SegGeom::left_half
                           : *op == "right_half" ? SegGeom::right_half
                                                 : SegGeom::double_len;
            json out;
            out["segment"] = segment_to_json(seg_geometry(geom, segment_flag(*s, "--s")));
            emit(out);
        });
    }
    {
        auto seq = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("bin-segment", "binary code to nested segment");
        cmd->add_option("--seq", *seq)->required();
        cmd->callback([seq] {
            json out;
            out["segment"] = segment_to_json(bin_to_segment(seq_flag(*seq, "--seq")));
            emit(out);
        });
    }
    {
        auto* cmd = app.add_subcommand("real-make", "build a real prefix (spec on stdin)");
        cmd->callback([] { emit(real_to_json(real_from_json(read_payload(), "stdin"))); });
    }
    {
        auto* cmd = app.add_subcommand("real-cmp", "witnessed comparison ({x, y} on stdin)");
        cmd->callback([] {
            json payload = read_payload();
            if (!payload.is_object() || !payload.contains("x") || !payload.contains("y")) {
                fail_usage("stdin: expected fields \"x\" and \"y\"");
            }
            RealPrefix x = real_from_json(payload.at("x"), "stdin.x");
            RealPrefix y = real_from_json(payload.at("y"), "stdin.y");
            json out;
            out["verdict"] = real_verdict_name(real_cmp(x, y));
            emit(out);
        });
    }
}

void register_covering(CLI::App& app) {
    {
        auto* cmd = app.add_subcommand(
            "cover-check", "chain test for a closed interval ({cover, segment} on stdin)");
        cmd->callback([] {
            json payload = read_payload();
            SegmentCover cover =
                cover_from_json(payload.is_object() && payload.contains("cover")
                                    ? payload.at("cover")
                                    : json(),
                                "stdin.cover");
            if (!payload.contains("segment")) fail_usage("stdin: missing field \"segment\"");
            Segment target = segment_from_json(payload.at("segment"), "stdin.segment");
            auto chain = find_chain(cover, target);
            json out;
            out["covers"] = chain.has_value();
            out["chain"] = chain ? json(chain->indices) : json(nullptr);
            emit(out);
        });
    }
    {
        auto depth = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand(
            "cantor-bar", "bar of binary codes strictly inside the cover ({cover} on stdin)");
        cmd->add_option("--depth", *depth)->required();
        cmd->callback([depth] {
            json payload = read_payload();
            if (!payload.contains("cover")) fail_usage("stdin: missing field \"cover\"");
            emit(bar_to_json(
                cover_to_cantor_bar(cover_from_json(payload.at("cover"), "stdin.cover"),
                                    *depth)));
        });
    }
    {
        auto pad = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("hb-extract", "bar to padded cover (bar on stdin)");
        auto* pad_opt = cmd->add_option("--pad-denominator", *pad);
        cmd->callback([pad, pad_opt] {
            BarTable bar = bar_from_json(read_payload(), "stdin");
            Nat denominator;
            if (pad_opt->count() > 0) {
                denominator = nat_flag(*pad, "--pad-denominator");
            } else {
                denominator = Nat(1) << static_cast<unsigned>(bar.depth_horizon + 2);
            }
            json out;
            out["cover"] = cover_to_json(bar_to_cover(bar, denominator));
            emit(out);
        });
    }
    {
        auto path = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(
            "oi-step", "cover-driven bisection ({stages} on stdin)");
        cmd->add_option("--path", *path)->required();
        cmd->callback([path] {
            json payload = read_payload();
            if (!payload.contains("stages")) fail_usage("stdin: missing field \"stages\"");
            if (!payload.at("stages").is_array()) {
                fail_usage("stdin.stages: expected an array of covers");
            }
            std::vector<SegmentCover> stages;
            for (const json& entry : payload.at("stages")) {
                stages.push_back(cover_from_json(entry, "stdin.stages"));
            }
            OiResult result = oi_delta(stages, seq_flag(*path, "--path"));
            json decisions = json::array();
            for (char c : result.decisions) decisions.push_back(std::string(1, c));
            json out;
            out["segment"] = segment_to_json(result.seg);
            out["decisions"] = std::move(decisions);
            emit(out);
        });
    }
    {
        auto start_hi = std::make_shared<std::string>();
        auto steps = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand(
            "endec-bisect", "membership-driven bisection ({table} on stdin)");
        cmd->add_option("--start-hi", *start_hi)->required();
        cmd->add_option("--steps", *steps)->required();
        cmd->callback([start_hi, steps] {
            json payload = read_payload();
            if (!payload.contains("table")) fail_usage("stdin: missing field \"table\"");
            if (!payload.at("table").is_array()) {
                fail_usage("stdin.table: expected [rational, bool] pairs");
            }
            auto table = std::make_shared<std::vector<std::pair<Rat, bool>>>();
            for (const json& entry : payload.at("table")) {
                if (!entry.is_array() || entry.size() != 2 || !entry[1].is_boolean()) {
                    fail_usage("stdin.table: expected [rational, bool] pairs");
                }
                table->emplace_back(rat_from_json(entry[0], "stdin.table"),
                                    entry[1].get<bool>());
            }
            auto member = [table](const Rat& q) -> std::optional<bool> {
                for (const auto& [key, value] : *table) {
                    if (rat_eq(key, q)) return value;
                }
                return std::nullopt;
            };
            json trajectory = json::array();
            for (const Segment& s : endec_bisect(member, parse_rat(*start_hi), *steps)) {
                trajectory.push_back(segment_to_json(s));
            }
            json out;
            out["trajectory"] = std::move(trajectory);
            emit(out);
        });
    }
}

void register_spreads(CLI::App& app) {
    {
        auto* cmd = app.add_subcommand("law-classify", "box-relative verdict (law on stdin)");
        cmd->callback([] {
            LawVerdict verdict = law_classify(law_from_json(read_payload(), "stdin"));
            json out;
            if (verdict.kind == LawVerdict::Kind::not_spread) {
                out["verdict"] = "not_spread";
                out["witness"] = seq_to_json(verdict.witness);
            } else {
                out["verdict"] = "fan";
                out["child_bound"] = verdict.child_bound;
                out["level_counts"] = verdict.level_counts;
            }
            emit(out);
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "bar-check", "bar catches every admitted path ({law, bar} on stdin)");
        cmd->callback([] {
            json payload = read_payload();
            if (!payload.contains("law") || !payload.contains("bar")) {
                fail_usage("stdin: expected fields \"law\" and \"bar\"");
            }
            json out;
            out["barred"] = bar_check(law_from_json(payload.at("law"), "stdin.law"),
                                      bar_from_json(payload.at("bar"), "stdin.bar"));
            emit(out);
        });
    }
    {
        auto* cmd = app.add_subcommand("thin-check", "members pairwise incomparable (bar on stdin)");
        cmd->callback([] {
            json out;
            out["thin"] = thin_check(bar_from_json(read_payload(), "stdin"));
            emit(out);
        });
    }
    {
        auto map = std::make_shared<std::string>();
        auto seq = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(
            "embed", "binary embeddings (sibling map reads its law from stdin)");
        cmd->add_option("--map", *map)->required()->check(
            CLI::IsMember({"fan", "sibling", "tau"}));
        cmd->add_option("--seq", *seq)->required();
        cmd->callback([map, seq] {
            FiniteSeq s = seq_flag(*seq, "--seq");
            FiniteSeq image;
            if (*map == "fan") {
                image = embed_fan_to_cantor(s);
            } else if (*map == "tau") {
                image = tau_embed(s);
            } else {
                image = embed_sibling_count(law_from_json(read_payload(), "stdin"), s);
            }
            json out;
            out["seq"] = seq_to_json(image);
            emit(out);
        });
    }
    {
        auto q = std::make_shared<std::string>();
        auto n = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand("bin-approx", "least dyadic approximation");
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--n", *n)->required();
        cmd->callback([q, n] {
            json out;
            out["seq"] = seq_to_json(bin_approx(parse_rat(*q), *n));
            emit(out);
        });
    }
    {
        auto seq = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>("i_plus_1");
        auto* cmd = app.add_subcommand("rat-of-bin", "binary code to separated rational");
        cmd->add_option("--seq", *seq)->required();
        cmd->add_option("--base", *base)->check(CLI::IsMember({"i", "i_plus_1"}));
        cmd->callback([seq, base] {
            json out;
            out["value"] = rat_to_json(rat_of_bin(
                seq_flag(*seq, "--seq"),
                *base == "i" ? RatOfBinBase::i : RatOfBinBase::i_plus_1));
            emit(out);
        });
    }
    {
        auto schedule = std::make_shared<std::string>();
        auto mod = std::make_shared<bool>(false);
        auto* cmd = app.add_subcommand(
            "jump-find",
            "least scheduled jump ({values} on stdin, or {seqs} with --mod)");
        cmd->add_option("--schedule", *schedule)->required();
        cmd->add_flag("--mod", *mod);
        cmd->callback([schedule, mod] {
            json payload = read_payload();
            FiniteSeq sched = seq_flag(*schedule, "--schedule");
            std::optional<std::uint64_t> jump;
            if (*mod) {
                if (!payload.contains("seqs")) fail_usage("stdin: missing field \"seqs\"");
                std::vector<FiniteSeq> seqs;
                for (const json& entry : payload.at("seqs")) {
                    seqs.push_back(seq_from_json(entry, "stdin.seqs"));
                }
                jump = find_mod_jump(seqs, sched);
            } else {
                if (!payload.contains("values")) fail_usage("stdin: missing field \"values\"");
                std::vector<Rat> values;
                for (const json& entry : payload.at("values")) {
                    values.push_back(rat_from_json(entry, "stdin.values"));
                }
                jump = find_jump(values, sched);
            }
            json out;
            out["jump"] = jump ? json(*jump) : json(nullptr);
            emit(out);
        });
    }
}

void register_blocks(CLI::App& app) {
    {
        auto* cmd = app.add_subcommand(
            "block-validate", "three-clause validity report (candidate on stdin)");
        cmd->callback([] {
            BlockCheck report =
                check_block(block_candidate_from_json(read_payload(), "stdin"));
            json out;
            out["valid"] = report.valid;
            out["clause"] = report.valid ? json(nullptr) : json(report.clause);
            out["indices"] = report.indices;
            emit(out);
        });
    }
    {
        auto* cmd = app.add_subcommand("block-metrics", "height and mesh (block on stdin)");
        cmd->callback([] {
            auto [height, mesh] = block_metrics(block_from_json(read_payload(), "stdin"));
            json out;
            out["height"] = rat_to_json(height);
            out["mesh"] = rat_to_json(mesh);
            emit(out);
        });
    }
    {
        auto rel = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("block-relate", "refinement or separation ({t, s} on stdin)");
        cmd->add_option("--rel", *rel)->required()->check(
            CLI::IsMember({"refines", "separate"}));
        cmd->callback([rel] {
            json payload = read_payload();
            if (!payload.contains("t") || !payload.contains("s")) {
                fail_usage("stdin: expected fields \"t\" and \"s\"");
            }
            json out;
            out["holds"] = block_relate(
                block_from_json(payload.at("t"), "stdin.t"),
                block_from_json(payload.at("s"), "stdin.s"),
                *rel == "refines" ? BlockRel::refines : BlockRel::separate);
            emit(out);
        });
    }
    {
        auto s = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("canonical-level", "grid level of a segment");
        cmd->add_option("--s", *s)->required();
        cmd->callback([s] {
            auto level = canonical_level(segment_flag(*s, "--s"));
            json out;
            out["level"] = level ? json(*level) : json(nullptr);
            emit(out);
        });
    }
    {
        auto m = std::make_shared<std::uint64_t>(0);
        auto n = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand(
            "cblock-check", "canonical levels of primes and seconds (block on stdin)");
        cmd->add_option("--m", *m)->required();
        cmd->add_option("--n", *n)->required();
        cmd->callback([m, n] {
            json out;
            out["holds"] = is_cblock(block_from_json(read_payload(), "stdin"), *m, *n);
            emit(out);
        });
    }
    {
        auto modulus = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(
            "cdelta-admits", "canonical stage admission ({stages} on stdin)");
        cmd->add_option("--modulus", *modulus)->required();
        cmd->callback([modulus] {
            json payload = read_payload();
            if (!payload.contains("stages")) fail_usage("stdin: missing field \"stages\"");
            std::vector<Block> stages;
            for (const json& entry : payload.at("stages")) {
                stages.push_back(block_from_json(entry, "stdin.stages"));
            }
            json out;
            out["admitted"] = cdelta_admits(seq_flag(*modulus, "--modulus"), stages);
            emit(out);
        });
    }
    {
        auto m = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand(
            "block-apply", "value segment at precision m ({stages, x} on stdin)");
        cmd->add_option("--m", *m)->required();
        cmd->callback([m] {
            json payload = read_payload();
            if (!payload.contains("stages") || !payload.contains("x")) {
                fail_usage("stdin: expected fields \"stages\" and \"x\"");
            }
            std::vector<Block> stages;
            for (const json& entry : payload.at("stages")) {
                stages.push_back(block_from_json(entry, "stdin.stages"));
            }
            RealPrefix x = real_from_json(payload.at("x"), "stdin.x");
            json out;
            out["segment"] = segment_to_json(apply_block_fn(stages, x, *m));
            emit(out);
        });
    }
}

void register_ramsey(CLI::App& app) {
    {
        auto k = std::make_shared<std::uint64_t>(1);
        auto seq = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(
            "homog-check", "extension homogeneity ({A, B} predicates on stdin)");
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--seq", *seq)->required();
        cmd->callback([k, seq] {
            json payload = read_payload();
            SetPredicate A = predicate_from_json(
                payload.is_object() && payload.contains("A") ? payload.at("A") : json(),
                "stdin.A");
            SetPredicate B = predicate_from_json(
                payload.is_object() && payload.contains("B") ? payload.at("B") : json(),
                "stdin.B");
            json out;
            out["homogeneous"] = is_homogeneous_node(seq_flag(*seq, "--seq"), A, B, *k);
            emit(out);
        });
    }
    {
        auto k = std::make_shared<std::uint64_t>(1);
        auto steps = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand(
            "er-grow", "homogeneous attachment tree ({A, B} predicates on stdin)");
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--steps", *steps)->required();
        cmd->callback([k, steps] {
            json payload = read_payload();
            SetPredicate A = predicate_from_json(
                payload.is_object() && payload.contains("A") ? payload.at("A") : json(),
                "stdin.A");
            SetPredicate B = predicate_from_json(
                payload.is_object() && payload.contains("B") ? payload.at("B") : json(),
                "stdin.B");
            ERTree tree = er_tree_grow(A, B, *k, *steps);
            json nodes = json::array();
            for (const FiniteSeq& node : tree.nodes) nodes.push_back(seq_to_json(node));
            json out;
            out["k"] = tree.k;
            out["nodes"] = std::move(nodes);
            emit(out);
        });
    }
    {
        auto n = std::make_shared<std::uint64_t>(0);
        auto k = std::make_shared<std::uint64_t>(1);
        auto* cmd = app.add_subcommand("er-width", "tree width bound gamma(n)");
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--k", *k)->required();
        cmd->callback([n, k] {
            json out;
            out["bound"] = er_width_bound(*n, *k).str();
            emit(out);
        });
    }
    {
        auto k = std::make_shared<std::uint64_t>(1);
        auto N = std::make_shared<std::uint64_t>(0);
        auto L = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand(
            "almostfull", "window counterexample search ({X} predicate on stdin)");
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--N", *N)->required();
        cmd->add_option("--L", *L)->required();
        cmd->callback([k, N, L] {
            json payload = read_payload();
            SetPredicate X = predicate_from_json(
                payload.is_object() && payload.contains("X") ? payload.at("X") : json(),
                "stdin.X");
            json out;
            out["counterexample"] = optional_seq(almostfull_upto(X, *k, *N, *L));
            emit(out);
        });
    }
    {
        auto k = std::make_shared<std::uint64_t>(1);
        auto N = std::make_shared<std::uint64_t>(0);
        auto* cmd = app.add_subcommand(
            "intersection", "least common k-subset ({X, Y} predicates on stdin)");
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--N", *N)->required();
        cmd->callback([k, N] {
            json payload = read_payload();
            SetPredicate X = predicate_from_json(
                payload.is_object() && payload.contains("X") ? payload.at("X") : json(),
                "stdin.X");
            SetPredicate Y = predicate_from_json(
                payload.is_object() && payload.contains("Y") ? payload.at("Y") : json(),
                "stdin.Y");
            json out;
            out["witness"] = optional_seq(intersection_witness(X, Y, *k, *N));
            emit(out);
        });
    }
    {
        auto M = std::make_shared<std::uint64_t>(0);
        auto k = std::make_shared<std::uint64_t>(1);
        auto r = std::make_shared<std::uint64_t>(1);
        auto n = std::make_shared<std::uint64_t>(0);
        auto large = std::make_shared<bool>(false);
        auto table = std::make_shared<bool>(false);
        auto budget = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(
            "ramsey",
            "homogeneous-set search: one table with --table (assignment on stdin), "
            "else all colorings");
        cmd->add_option("--M", *M)->required();
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--r", *r)->required();
        cmd->add_option("--n", *n)->required();
        cmd->add_flag("--large", *large);
        cmd->add_flag("--table", *table);
        auto* budget_opt = cmd->add_option("--budget", *budget)->envname("BIMK_BUDGET");
        cmd->callback([M, k, r, n, large, table, budget, budget_opt] {
            json out;
            if (*table) {
                json payload = read_payload();
                if (!payload.contains("assignment")) {
                    fail_usage("stdin: missing field \"assignment\"");
                }
                std::vector<std::uint64_t> assignment;
                for (const json& entry : payload.at("assignment")) {
                    if (!entry.is_number_unsigned()) {
                        fail_usage("stdin.assignment: expected naturals");
                    }
                    assignment.push_back(entry.get<std::uint64_t>());
                }
                ColoringTable coloring = make_coloring(*M, *k, *r, std::move(assignment));
                out["witness"] = optional_seq(homog_search(coloring, *n, *large));
            } else {
                Nat cap = budget_opt->count() > 0 ? nat_flag(*budget, "--budget")
                                                  : Nat(kDefaultBudget);
                ColoringSweep sweep = sweep_colorings(*M, *n, *k, *r, *large, cap);
                out["all_admit"] = sweep.all_admit;
                out["counterexample"] =
                    sweep.all_admit ? json(nullptr) : json(sweep.counterexample);
                out["colorings_checked"] = sweep.colorings_checked.str();
            }
            emit(out);
        });
    }
    {
        auto n = std::make_shared<std::uint64_t>(0);
        auto k = std::make_shared<std::uint64_t>(1);
        auto r = std::make_shared<std::uint64_t>(1);
        auto budget = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("ph-search", "least universe passing the large check");
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--r", *r)->required();
        auto* budget_opt = cmd->add_option("--budget", *budget)->envname("BIMK_BUDGET");
        cmd->callback([n, k, r, budget, budget_opt] {
            Nat cap = budget_opt->count() > 0 ? nat_flag(*budget, "--budget")
                                              : Nat(kDefaultBudget);
            json out;
            out["witness"] = ph_min_witness(*n, *k, *r, cap);
            emit(out);
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-horizon toolkit for sequence codings, segment "
                 "covers, spread laws, block functions, and finite Ramsey "
                 "combinatorics"};
    app.require_subcommand(1);
    register_codes(app);
    register_orders(app);
    register_numbers(app);
    register_covering(app);
    register_spreads(app);
    register_blocks(app);
    register_ramsey(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        json err;
        err["error"] = e.what();
        err["kind"] = "usage";
        emit(err);
        return 2;
    } catch (const Error& e) {
        json err;
        err["error"] = e.what();
        err["kind"] = e.kind == Error::Kind::domain ? "domain" : "usage";
        emit(err);
        return e.kind == Error::Kind::domain ? 1 : 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        err["kind"] = "usage";
        emit(err);
        return 2;
    }
    return 0;
}
