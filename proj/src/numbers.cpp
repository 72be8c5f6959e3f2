#include "bimk/numbers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace bimk {

Int int_of(long long v) {
    if (v >= 0) return Int{Nat(v), Nat(0)};
    return Int{Nat(0), Nat(-v)};
}

bool int_eq(const Int& a, const Int& b) { return a.pos + b.neg == b.pos + a.neg; }

bool int_lt(const Int& a, const Int& b) { return a.pos + b.neg < b.pos + a.neg; }

Int int_add(const Int& a, const Int& b) { return Int{a.pos + b.pos, a.neg + b.neg}; }

Int int_sub(const Int& a, const Int& b) { return Int{a.pos + b.neg, a.neg + b.pos}; }

Int int_mul(const Int& a, const Int& b) {
    return Int{a.pos * b.pos + a.neg * b.neg, a.pos * b.neg + a.neg * b.pos};
}

Rat make_rat(Int num, Int den) {
    if (!int_lt(int_of(0), den)) fail_domain("rational denominator must be positive");
    return Rat{std::move(num), std::move(den)};
}

Rat rat_of(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return make_rat(int_of(num), int_of(den));
}

Rat rat_add(const Rat& p, const Rat& q) {
    return make_rat(int_add(int_mul(p.num, q.den), int_mul(p.den, q.num)),
                    int_mul(p.den, q.den));
}

Rat rat_sub(const Rat& p, const Rat& q) {
    return make_rat(int_sub(int_mul(p.num, q.den), int_mul(p.den, q.num)),
                    int_mul(p.den, q.den));
}

Rat rat_mul(const Rat& p, const Rat& q) {
    return make_rat(int_mul(p.num, q.num), int_mul(p.den, q.den));
}

OrderVerdict rat_cmp(const Rat& p, const Rat& q) {
    Int left = int_mul(p.num, q.den);
    Int right = int_mul(q.num, p.den);
    if (int_lt(left, right)) return OrderVerdict::LessThan;
    if (int_lt(right, left)) return OrderVerdict::GreaterThan;
    return OrderVerdict::Equal;
}

bool rat_lt(const Rat& p, const Rat& q) { return rat_cmp(p, q) == OrderVerdict::LessThan; }

bool rat_le(const Rat& p, const Rat& q) { return rat_cmp(p, q) != OrderVerdict::GreaterThan; }

bool rat_eq(const Rat& p, const Rat& q) { return rat_cmp(p, q) == OrderVerdict::Equal; }

Rat rat_normalize(const Rat& p) {
    // collapse the pair encodings to plain signed values, then reduce
    Nat num = p.num.pos - p.num.neg;
    Nat den = p.den.pos - p.den.neg;
    bool negative = num < 0;
    if (negative) num = -num;
    Nat g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Int n{negative ? Nat(0) : num, negative ? num : Nat(0)};
    return Rat{std::move(n), Int{den, Nat(0)}};
}

std::string rat_to_string(const Rat& p) {
    Rat r = rat_normalize(p);
    Nat num = r.num.pos - r.num.neg;
    std::string out = num.str();
    if (r.den.pos != 1) out += "/" + r.den.pos.str();
    return out;
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (text.empty() || slash == 0 || slash == text.size() - 1) {
        fail_usage("cannot parse rational: " + text);
    }
    try {
        Nat num(text.substr(0, slash));
        Nat den = slash == std::string::npos ? Nat(1) : Nat(text.substr(slash + 1));
        if (den <= 0) fail_usage("rational denominator must be a positive natural");
        bool negative = num < 0;
        if (negative) num = -num;
        Int n{negative ? Nat(0) : num, negative ? num : Nat(0)};
        return make_rat(std::move(n), Int{den, Nat(0)});
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail_usage("cannot parse rational: " + text);
    }
}

Rat pow2_rat(std::int64_t k) {
    Nat power = Nat(1) << static_cast<unsigned>(k < 0 ? -k : k);
    if (k >= 0) return make_rat(Int{power, Nat(0)}, int_of(1));
    return make_rat(int_of(1), Int{power, Nat(0)});
}

Segment make_segment(Rat lo, Rat hi) {
    if (!rat_lt(lo, hi)) fail_domain("segment needs lo < hi");
    return Segment{std::move(lo), std::move(hi)};
}

Rat seg_length(const Segment& s) { return rat_sub(s.hi, s.lo); }

Rat seg_mid(const Segment& s) { return rat_mul(rat_add(s.lo, s.hi), rat_of(1, 2)); }

bool seg_eq(const Segment& s, const Segment& t) {
    return rat_eq(s.lo, t.lo) && rat_eq(s.hi, t.hi);
}

bool seg_relate(const Segment& s, const Segment& t, SegRel rel) {
    switch (rel) {
        case SegRel::inside:
            return rat_le(t.lo, s.lo) && rat_le(s.hi, t.hi);
        case SegRel::strictly_inside:
            return rat_lt(t.lo, s.lo) && rat_lt(s.hi, t.hi);
        case SegRel::left_of:
            return rat_lt(s.hi, t.lo);
        case SegRel::weak_left_of:
            return rat_lt(s.lo, t.hi);
        case SegRel::apart:
            return rat_lt(s.hi, t.lo) || rat_lt(t.hi, s.lo);
        case SegRel::touching:
            return rat_lt(s.lo, t.hi) && rat_lt(t.lo, s.hi);
    }
    fail_usage("unknown segment relation");
}

Segment seg_geometry(SegGeom op, const Segment& s) {
    Rat mid = seg_mid(s);
    switch (op) {
        case SegGeom::left_half:
            return make_segment(s.lo, mid);
        case SegGeom::right_half:
            return make_segment(mid, s.hi);
        case SegGeom::double_len: {
            Rat len = seg_length(s);
            return make_segment(rat_sub(mid, len), rat_add(mid, len));
        }
    }
    fail_usage("unknown segment operation");
}

Segment bin_to_segment(const FiniteSeq& c) {
    if (!is_bin(c)) fail_domain("binary sequence required");
    Segment s = make_segment(rat_of(0), rat_of(1));
    for (std::uint64_t bit : c) {
        s = seg_geometry(bit == 0 ? SegGeom::left_half : SegGeom::right_half, s);
    }
    return s;
}

RealPrefix make_real_prefix(std::vector<Segment> stages, std::int64_t precision_log) {
    if (stages.empty()) fail_domain("real prefix needs at least one stage");
    for (std::size_t n = 0; n + 1 < stages.size(); ++n) {
        if (!seg_relate(stages[n + 1], stages[n], SegRel::strictly_inside)) {
            fail_domain("real prefix stages must be strictly nested");
        }
    }
    if (!rat_lt(seg_length(stages.back()), pow2_rat(-precision_log))) {
        fail_domain("last stage too long for the claimed precision");
    }
    return RealPrefix{std::move(stages), precision_log};
}

RealPrefix real_of_binary(const FiniteSeq& c) {
    if (!is_bin(c)) fail_domain("binary sequence required");
    std::vector<Segment> stages;
    for (std::size_t n = 0; n <= c.size(); ++n) {
        stages.push_back(
            seg_geometry(SegGeom::double_len, bin_to_segment(initial(c, n))));
    }
    return make_real_prefix(std::move(stages), static_cast<std::int64_t>(c.size()) - 2);
}

RealPrefix rational_as_real(const Rat& p, std::uint64_t n) {
    std::vector<Segment> stages;
    for (std::uint64_t k = 0; k <= n; ++k) {
        Rat window = pow2_rat(-static_cast<std::int64_t>(k));
        stages.push_back(make_segment(rat_sub(p, window), rat_add(p, window)));
    }
    return make_real_prefix(std::move(stages), static_cast<std::int64_t>(n) - 2);
}

RealVerdict real_cmp(const RealPrefix& x, const RealPrefix& y) {
    std::size_t stages = std::min(x.stages.size(), y.stages.size());
    for (std::size_t n = 0; n < stages; ++n) {
        if (seg_relate(x.stages[n], y.stages[n], SegRel::left_of)) return RealVerdict::LessThan;
        if (seg_relate(y.stages[n], x.stages[n], SegRel::left_of)) return RealVerdict::GreaterThan;
    }
    return RealVerdict::Unknown;
}

}  // namespace bimk
