#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bimk/error.hpp"

namespace bimk {

using Nat = boost::multiprecision::cpp_int;

// entries are unrestricted naturals; uint64 is plenty for every value an
// algorithm here ever stores in a sequence slot
using FiniteSeq = std::vector<std::uint64_t>;

// i-th prime, 0-indexed (nth_prime(0) == 2); grows an internal sieve on demand
std::uint64_t nth_prime(std::size_t i);

// prime-power numeral of a sequence: product of p(i)^entry with the last
// exponent bumped by one, minus one; empty sequence encodes as 0
Nat encode_seq(const FiniteSeq& s);

// inverse of encode_seq; total on naturals (every numeral decodes)
FiniteSeq decode_seq(const Nat& a);

// s(i) with the out-of-range convention: indices past the end read as 0
std::uint64_t seq_at(const FiniteSeq& s, std::size_t i);

FiniteSeq concat(const FiniteSeq& a, const FiniteSeq& b);

// length-n prefix; n > length(a) is an error
FiniteSeq initial(const FiniteSeq& a, std::size_t n);

// a is a (weak/strict) prefix of b
bool is_initial(const FiniteSeq& a, const FiniteSeq& b);
bool proper_initial(const FiniteSeq& a, const FiniteSeq& b);

// a and b differ at some position j < n lying inside both lengths
bool differ_before(const FiniteSeq& a, const FiniteSeq& b, std::uint64_t n);
// negation of differ_before, not prefix agreement
bool agree_to(const FiniteSeq& a, const FiniteSeq& b, std::uint64_t n);

// Cantor pairing (m+n)(m+n+1)/2 + n and its inverse; mutually inverse
// bijections on all naturals
Nat pair_code(const Nat& m, const Nat& n);
std::pair<Nat, Nat> unpair_code(const Nat& c);

bool is_bin(const FiniteSeq& s);

// t with t(i) = table(s(i)); any s(i) >= length(table) is an error
FiniteSeq compose_along(const FiniteSeq& table, const FiniteSeq& s);

// finite prefix of a decided or enumerated set of naturals
struct SetPrefix {
    enum class Mode { decided, enumerated };
    Mode mode = Mode::decided;
    FiniteSeq table;

    std::size_t horizon() const { return table.size(); }

    // decided: table(n) != 0, only answerable for n < horizon;
    // enumerated: some p < horizon has table(p) = n+1 (0 slots are blanks)
    bool contains(std::uint64_t n) const;
};

}  // namespace bimk
