#include "bimk/codes.hpp"

#include <mutex>

namespace bimk {

namespace {

// grow-on-demand prime table; the hard cap keeps decode from chasing a huge
// prime factor forever (decoding such numerals is out of scope at desk scale)
constexpr std::uint64_t kSieveCap = 1u << 26;

std::mutex prime_mutex;
std::vector<std::uint64_t> prime_table;
std::uint64_t sieved_upto = 0;

void grow_primes(std::uint64_t limit) {
    if (limit <= sieved_upto) return;
    std::vector<bool> composite(limit + 1, false);
    prime_table.clear();
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        prime_table.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    sieved_upto = limit;
}

}  // namespace

std::uint64_t nth_prime(std::size_t i) {
    std::lock_guard<std::mutex> lock(prime_mutex);
    std::uint64_t limit = sieved_upto ? sieved_upto : 1u << 16;
    while (prime_table.size() <= i) {
        if (limit >= kSieveCap) fail_domain("prime table cap exceeded");
        limit *= 2;
        grow_primes(limit);
    }
    return prime_table[i];
}

Nat encode_seq(const FiniteSeq& s) {
    Nat product = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::uint64_t exponent = s[i] + (i + 1 == s.size() ? 1 : 0);
        if (exponent > 0xffffffffull) fail_domain("sequence entry too large to encode");
        product *= boost::multiprecision::pow(Nat(nth_prime(i)),
                                              static_cast<unsigned>(exponent));
    }
    return product - 1;
}

FiniteSeq decode_seq(const Nat& a) {
    if (a < 0) fail_usage("numerals are naturals");
    Nat v = a + 1;
    FiniteSeq entries;
    for (std::size_t i = 0; v > 1; ++i) {
        Nat p = nth_prime(i);
        std::uint64_t exponent = 0;
        while (v % p == 0) {
            v /= p;
            ++exponent;
        }
        entries.push_back(exponent);
    }
    // the loop stops right after dividing out the largest prime factor, so the
    // last slot holds a bumped exponent
    if (!entries.empty()) entries.back() -= 1;
    return entries;
}

std::uint64_t seq_at(const FiniteSeq& s, std::size_t i) {
    return i < s.size() ? s[i] : 0;
}

FiniteSeq concat(const FiniteSeq& a, const FiniteSeq& b) {
    FiniteSeq out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

FiniteSeq initial(const FiniteSeq& a, std::size_t n) {
    if (n > a.size()) fail_domain("prefix length exceeds sequence length");
    return FiniteSeq(a.begin(), a.begin() + n);
}

bool is_initial(const FiniteSeq& a, const FiniteSeq& b) {
    if (a.size() > b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

bool proper_initial(const FiniteSeq& a, const FiniteSeq& b) {
    return a.size() < b.size() && is_initial(a, b);
}

bool differ_before(const FiniteSeq& a, const FiniteSeq& b, std::uint64_t n) {
    for (std::uint64_t j = 0; j < n && j < a.size() && j < b.size(); ++j) {
        if (a[j] != b[j]) return true;
    }
    return false;
}

bool agree_to(const FiniteSeq& a, const FiniteSeq& b, std::uint64_t n) {
    return !differ_before(a, b, n);
}

Nat pair_code(const Nat& m, const Nat& n) {
    Nat diagonal = m + n;
    return diagonal * (diagonal + 1) / 2 + n;
}

std::pair<Nat, Nat> unpair_code(const Nat& c) {
    if (c < 0) fail_usage("pair codes are naturals");
    Nat disc = 8 * c + 1;
    Nat w = (boost::multiprecision::sqrt(disc) - 1) / 2;
    Nat n = c - w * (w + 1) / 2;
    return {w - n, n};
}

bool is_bin(const FiniteSeq& s) {
    for (std::uint64_t entry : s) {
        if (entry > 1) return false;
    }
    return true;
}

FiniteSeq compose_along(const FiniteSeq& table, const FiniteSeq& s) {
    FiniteSeq out;
    out.reserve(s.size());
    for (std::uint64_t index : s) {
        if (index >= table.size()) fail_domain("index outside table horizon");
        out.push_back(table[index]);
    }
    return out;
}

bool SetPrefix::contains(std::uint64_t n) const {
    if (mode == Mode::decided) {
        if (n >= table.size()) fail_domain("membership query beyond decided horizon");
        return table[n] != 0;
    }
    for (std::uint64_t slot : table) {
        if (slot == n + 1) return true;
    }
    return false;
}

}  // namespace bimk
