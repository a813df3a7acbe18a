#include "doctest.h"

#include <algorithm>
#include <set>

#include "paircode/counting.hpp"

using namespace paircode;

namespace {

// Oracle: count weight-l words with L cyclic runs of ones by scanning all 2^n.
int runs_oracle(int n, int l, int L) {
    int count = 0;
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
        if (std::popcount(v) != l) continue;
        int runs = 0;
        for (int i = 0; i < n; ++i) {
            const bool here = (v >> i) & 1;
            const bool prev = (v >> ((i + n - 1) % n)) & 1;
            if (here && !prev) ++runs;
        }
        if (runs == L) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("runs count formula matches enumeration") {
    CHECK(runs_count(5, 2, 2) == 5);
    CHECK(runs_count(6, 3, 1) == 6);
    for (int n = 2; n <= 10; ++n) CHECK(runs_count(n, 1, 1) == n);
    for (int n = 2; n <= 10; ++n)
        for (int l = 1; l < n; ++l)
            for (int L = 1; L <= l; ++L) CHECK(runs_count(n, l, L) == runs_oracle(n, l, L));
    CHECK_THROWS_AS(runs_count(5, 5, 1), Error);
    CHECK_THROWS_AS(runs_count(5, 2, 3), Error);
    CHECK_THROWS_AS(runs_count(5, 2, 0), Error);
}

TEST_CASE("sphere surface conventions and small values") {
    CHECK(sphere_surface(5, 0) == 1);
    for (int n = 2; n <= 10; ++n) CHECK(sphere_surface(n, 1) == 0);
    CHECK(sphere_surface(5, 2) == 5);
    CHECK(sphere_surface(5, 3) == 5);
    CHECK(sphere_surface(5, 4) == 10);
}

TEST_CASE("ball size matches brute-force enumeration") {
    CHECK(ball_size(5, 2) == 6);
    CHECK(ball_size(5, 3) == 11);
    CHECK(ball_size(5, 4) == 21);
    for (int n = 1; n <= 10; ++n) {
        CHECK(ball_size(n, 0) == 1);
        if (n >= 2) CHECK(ball_size(n, 1) == 1);
        for (int t = 0; t <= n; ++t) {
            const auto ball = enumerate_pair_ball(BinaryWord(n), t);
            CHECK(BigInt(ball.size()) == ball_size(n, t));
        }
        const BigInt full = BigInt(1) << n;
        CHECK(ball_size(n, n) == full);
    }
}

TEST_CASE("ball size is monotone in the radius") {
    for (int n = 2; n <= 16; ++n)
        for (int t = 0; t < n; ++t) CHECK(ball_size(n, t) <= ball_size(n, t + 1));
}

TEST_CASE("ball volume is center independent") {
    for (int n = 1; n <= 8; ++n)
        for (int t = 0; t <= n; ++t) {
            const std::size_t reference = enumerate_pair_ball(BinaryWord(n), t).size();
            for (std::uint64_t c = 0; c < (1ULL << n); ++c)
                CHECK(enumerate_pair_ball(BinaryWord::from_value(c, n), t).size() == reference);
        }
}

TEST_CASE("pair ball enumeration basics") {
    const auto ball = enumerate_pair_ball(BinaryWord(3), 2);
    std::set<std::string> seen;
    for (const auto& w : ball) seen.insert(w.to_string());
    CHECK(seen == std::set<std::string>{"000", "100", "010", "001"});
    const BinaryWord x = BinaryWord::from_string("1011");
    const auto tight = enumerate_pair_ball(x, 0);
    REQUIRE(tight.size() == 1);
    CHECK(tight[0] == x);
    CHECK_THROWS_AS(enumerate_pair_ball(BinaryWord(23), 1), Error);
}

TEST_CASE("packing and singleton bounds") {
    CHECK(sphere_packing_max(5, 1) == 32);
    CHECK(sphere_packing_max(5, 2) == 5);
    CHECK(singleton_pair_max(7, 6) == 8);
    CHECK_THROWS_AS(singleton_pair_max(7, 1), Error);
    CHECK_THROWS_AS(singleton_pair_max(7, 8), Error);
}

TEST_CASE("counts stay exact far past 64 bits") {
    const BigInt full100 = BigInt(1) << 100;
    CHECK(ball_size(100, 100) == full100);
    const BigInt b = ball_size(200, 7);
    CHECK(b > 0);
    CHECK(ball_size(200, 6) <= b);
    CHECK(binomial(200, 100) % 2 == 0);  // Kummer: carries in 100+100 base 2
}

TEST_CASE("hamming ball size") {
    CHECK(hamming_ball_size(5, 0) == 1);
    CHECK(hamming_ball_size(5, 1) == 6);
    CHECK(hamming_ball_size(5, 5) == 32);
    CHECK(hamming_ball_size(5, 9) == 32);
}
