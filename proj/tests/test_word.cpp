#include "doctest.h"

#include <random>

#include "paircode/word.hpp"

using namespace paircode;

namespace {

BinaryWord w(const char* s) { return BinaryWord::from_string(s); }

// Reference pair distance straight from the definition: compare pairs
// (x_i, x_{i+1 mod n}) one by one. Kept independent of the bit-twiddled path.
int dp_naive(const BinaryWord& x, const BinaryWord& y) {
    const std::size_t n = x.size();
    int d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (x.bit(i) != y.bit(i) || x.bit(j) != y.bit(j)) ++d;
    }
    return d;
}

}  // namespace

TEST_CASE("pair_read expands words cyclically") {
    const PairVector a = pair_read(w("000"));
    CHECK(a.to_compact() == "00,00,00");
    const PairVector b = pair_read(w("1100"));
    CHECK(b.to_compact() == "11,10,00,01");
    const PairVector c = pair_read(w("1"));
    CHECK(c.to_compact() == "11");
}

TEST_CASE("consistency and extraction") {
    CHECK(is_consistent(PairVector::from_compact("01,10")));
    CHECK(extract_word(PairVector::from_compact("01,10")) == w("01"));
    CHECK_FALSE(is_consistent(PairVector::from_compact("01,00")));
    CHECK_THROWS_AS(extract_word(PairVector::from_compact("01,00")), Error);
    CHECK(extract_word(PairVector::from_compact("11")) == w("1"));
    for (std::uint64_t v = 0; v < (1u << 10); ++v) {
        const BinaryWord x = BinaryWord::from_value(v, 10);
        CHECK(extract_word(pair_read(x)) == x);
    }
}

TEST_CASE("pair distance examples") {
    CHECK(pair_distance(w("000"), w("000")) == 0);
    CHECK(pair_distance(w("000"), w("010")) == 2);
    CHECK(pair_distance(w("0000"), w("1111")) == 4);
    CHECK_THROWS_AS(pair_distance(w("01"), w("010")), Error);
}

TEST_CASE("pair weight examples") {
    CHECK(pair_weight(w("0000000")) == 0);
    CHECK(pair_weight(w("110000")) == 3);
    CHECK(pair_weight(w("010100")) == 4);
    // w_p(1^i 0^(k-i)) = i + 1 for i >= 1
    for (int i = 1; i < 8; ++i) {
        BinaryWord u(8);
        for (int j = 0; j < i; ++j) u.set_bit(j, true);
        CHECK(pair_weight(u) == i + 1);
    }
}

TEST_CASE("raw pair distance over pair vectors") {
    const PairVector a = pair_read(w("000"));
    CHECK(pair_distance_raw(a, a) == 0);
    CHECK(pair_distance_raw(a, PairVector::from_compact("00,01,00")) == 1);
    CHECK(pair_distance_raw(pair_read(w("1100")), pair_read(w("1000"))) ==
          pair_distance(w("1100"), w("1000")));
}

TEST_CASE("minimum pair distance") {
    const std::vector<BinaryWord> rep{w("00000"), w("11111")};
    CHECK(min_pair_distance(rep) == 5);
    const std::vector<BinaryWord> three{w("00"), w("01"), w("11")};
    CHECK(min_pair_distance(three) == 2);
    const std::vector<BinaryWord> one{w("00")};
    CHECK_THROWS_AS(min_pair_distance(one), Error);
}

TEST_CASE("Hamming sandwich for the pair distance, exhaustively to n = 6") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::uint64_t a = 0; a < (1ULL << n); ++a)
            for (std::uint64_t b = 0; b < (1ULL << n); ++b) {
                const BinaryWord x = BinaryWord::from_value(a, n);
                const BinaryWord y = BinaryWord::from_value(b, n);
                const int dh = hamming_distance(x, y);
                const int dp = pair_distance(x, y);
                CHECK(dp == dp_naive(x, y));
                if (dh == 0 || dh == static_cast<int>(n))
                    CHECK(dp == dh);
                else {
                    CHECK(dp >= dh + 1);
                    CHECK(dp <= 2 * dh);
                }
            }
}

TEST_CASE("sandwich and translation invariance on random long words") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 2 + rng() % 63;
        const std::uint64_t mask = bits::mask(static_cast<unsigned>(n));
        const BinaryWord x = BinaryWord::from_value(rng() & mask, n);
        const BinaryWord y = BinaryWord::from_value(rng() & mask, n);
        const BinaryWord z = BinaryWord::from_value(rng() & mask, n);
        const int dh = hamming_distance(x, y);
        const int dp = pair_distance(x, y);
        if (dh == 0 || dh == static_cast<int>(n))
            CHECK(dp == dh);
        else {
            CHECK(dp >= dh + 1);
            CHECK(dp <= 2 * dh);
        }
        CHECK(pair_distance(xor_words(x, z), xor_words(y, z)) == dp);
    }
}

TEST_CASE("pair distance is a metric (exhaustive n <= 5)") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::uint64_t space = 1ULL << n;
        for (std::uint64_t a = 0; a < space; ++a)
            for (std::uint64_t b = 0; b < space; ++b) {
                const BinaryWord x = BinaryWord::from_value(a, n);
                const BinaryWord y = BinaryWord::from_value(b, n);
                const int dxy = pair_distance(x, y);
                CHECK((dxy == 0) == (a == b));
                CHECK(dxy == pair_distance(y, x));
                for (std::uint64_t c = 0; c < space; ++c) {
                    const BinaryWord z = BinaryWord::from_value(c, n);
                    CHECK(dxy <= pair_distance(x, z) + pair_distance(z, y));
                }
            }
    }
}

TEST_CASE("concatenation changes the pair distance by at most one") {
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t r = 1; r <= 4; ++r)
            for (std::uint64_t a = 0; a < (1ULL << (m + r)); ++a)
                for (std::uint64_t b = 0; b < (1ULL << (m + r)); ++b) {
                    const BinaryWord u = BinaryWord::from_value(a, m + r);
                    const BinaryWord v = BinaryWord::from_value(b, m + r);
                    const BinaryWord u1 = BinaryWord::from_value(a & bits::mask(m), m);
                    const BinaryWord v1 = BinaryWord::from_value(b & bits::mask(m), m);
                    const BinaryWord u2 = BinaryWord::from_value(a >> m, r);
                    const BinaryWord v2 = BinaryWord::from_value(b >> m, r);
                    const int whole = pair_distance(u, v);
                    const int parts = pair_distance(u1, v1) + pair_distance(u2, v2);
                    CHECK(whole >= parts - 1);
                    CHECK(whole <= parts + 1);
                }
}

TEST_CASE("packed multi-limb words agree with the bitwise definition") {
    std::mt19937_64 rng(11);
    for (const std::size_t n : {63u, 64u, 65u, 100u, 128u, 130u}) {
        for (int trial = 0; trial < 50; ++trial) {
            BinaryWord x(n), y(n);
            for (std::size_t i = 0; i < n; ++i) {
                x.set_bit(i, rng() & 1);
                y.set_bit(i, rng() & 1);
            }
            CHECK(pair_distance(x, y) == dp_naive(x, y));
            CHECK(extract_word(pair_read(x)) == x);
            const BinaryWord rot = rotr1(x);
            for (std::size_t i = 0; i < n; ++i) CHECK(rot.bit(i) == x.bit((i + 1) % n));
        }
    }
}

TEST_CASE("word string round trip and ordering") {
    CHECK(w("0110").to_string() == "0110");
    CHECK(BinaryWord::from_value(3, 6).to_string() == "110000");
    CHECK_THROWS_AS(BinaryWord::from_string("01x"), Error);
    CHECK(w("100") < w("010"));  // value order: index 0 is the least significant bit
}
