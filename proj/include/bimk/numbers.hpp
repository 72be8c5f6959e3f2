#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bimk/codes.hpp"
#include "bimk/orders.hpp"

namespace bimk {

// pair-encoded integer, value pos - neg; never normalized for comparisons
struct Int {
    Nat pos;
    Nat neg;
};

Int int_of(long long v);
bool int_eq(const Int& a, const Int& b);
bool int_lt(const Int& a, const Int& b);
Int int_add(const Int& a, const Int& b);
Int int_sub(const Int& a, const Int& b);
Int int_mul(const Int& a, const Int& b);

// unreduced rational; den > 0 always, equality by cross-multiplication
struct Rat {
    Int num;
    Int den;
};

Rat make_rat(Int num, Int den);
Rat rat_of(long long num, long long den = 1);

Rat rat_add(const Rat& p, const Rat& q);
Rat rat_sub(const Rat& p, const Rat& q);
Rat rat_mul(const Rat& p, const Rat& q);
OrderVerdict rat_cmp(const Rat& p, const Rat& q);

bool rat_lt(const Rat& p, const Rat& q);
bool rat_le(const Rat& p, const Rat& q);
bool rat_eq(const Rat& p, const Rat& q);

// lowest terms with positive denominator; display form, never required
// internally
Rat rat_normalize(const Rat& p);

// normalized decimal string: "num/den", or bare "num" for integers
std::string rat_to_string(const Rat& p);

// accepts optional leading minus, "a" or "a/b" with b > 0
Rat parse_rat(const std::string& text);

// 2^k as an exact rational; k may be negative
Rat pow2_rat(std::int64_t k);

// rational segment, lo < hi enforced at construction
struct Segment {
    Rat lo;
    Rat hi;
};

Segment make_segment(Rat lo, Rat hi);
Rat seg_length(const Segment& s);
Rat seg_mid(const Segment& s);
bool seg_eq(const Segment& s, const Segment& t);

enum class SegRel { inside, strictly_inside, left_of, weak_left_of, apart, touching };

// relations read left to right: seg_relate(s, t, left_of) asks "s left of t"
bool seg_relate(const Segment& s, const Segment& t, SegRel rel);

enum class SegGeom { left_half, right_half, double_len };

// halves split at the midpoint; double keeps the midpoint and doubles length
Segment seg_geometry(SegGeom op, const Segment& s);

// fold of halves along a binary sequence starting from (0,1)
Segment bin_to_segment(const FiniteSeq& c);

// strictly nested segment stages; the last stage is shorter than
// 2^{-precision_log} (negative logs allow stages longer than 1)
struct RealPrefix {
    std::vector<Segment> stages;
    std::int64_t precision_log = 0;
};

RealPrefix make_real_prefix(std::vector<Segment> stages, std::int64_t precision_log);

// stage n is the doubled binary segment of the length-n prefix of c
RealPrefix real_of_binary(const FiniteSeq& c);

// stage k is the symmetric window (p - 1/2^k, p + 1/2^k), k = 0..n
RealPrefix rational_as_real(const Rat& p, std::uint64_t n);

// strict comparisons are witnessed by a common stage; Unknown is the honest
// verdict when no finite stage separates the prefixes
enum class RealVerdict { LessThan, GreaterThan, Unknown };

RealVerdict real_cmp(const RealPrefix& x, const RealPrefix& y);

}  // namespace bimk
