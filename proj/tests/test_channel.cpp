#include "doctest.h"

#include <random>

#include "paircode/channel.hpp"

using namespace paircode;

namespace {

BinaryWord w(const char* s) { return BinaryWord::from_string(s); }

}  // namespace

TEST_CASE("transmit respects the error budget") {
    const BinaryWord c = w("110010101");
    SUBCASE("t = 0 returns the exact pair read") {
        const PairVector y = transmit(c, {0, ErrorMode::UpToT, 99});
        CHECK(y == pair_read(c));
    }
    SUBCASE("exactly-t mode lands on the sphere") {
        for (std::uint64_t seed = 0; seed < 50; ++seed)
            for (int t = 0; t <= 4; ++t) {
                const PairVector y = transmit(c, {t, ErrorMode::ExactlyT, seed});
                CHECK(pair_distance_raw(pair_read(c), y) == t);
            }
    }
    SUBCASE("up-to-t mode stays within the ball") {
        for (std::uint64_t seed = 0; seed < 100; ++seed)
            CHECK(pair_distance_raw(pair_read(c), transmit(c, {3, ErrorMode::UpToT, seed})) <= 3);
    }
    SUBCASE("a fixed seed reproduces the draw bit for bit") {
        const PairVector a = transmit(c, {2, ErrorMode::UpToT, 1234});
        const PairVector b = transmit(c, {2, ErrorMode::UpToT, 1234});
        CHECK(a == b);
    }
}

TEST_CASE("decoding an uncorrupted read returns the function value") {
    const FunctionTable wp = FunctionTable::pair_weight_fn(6);
    const PairEncoder enc = encode_pair_weight(6, 1);
    for (std::uint64_t u = 0; u < wp.domain_size(); ++u) {
        const PairVector y = pair_read(enc.encode(BinaryWord::from_value(u, 6)));
        const DecodeResult dec = decode_function(y, enc, wp);
        CHECK(dec.status == DecodeStatus::Ok);
        CHECK(dec.value == wp.eval(u));
        CHECK(dec.distance == 0);
    }
}

TEST_CASE("within-budget corruption always recovers the value (small case)") {
    const FunctionTable wp = FunctionTable::pair_weight_fn(6);
    const PairEncoder enc = encode_pair_weight(6, 1);
    const auto res = exhaustive_round_trip(wp, enc, 1);
    CHECK(res.failures == 0);
    CHECK(res.trials == wp.domain_size() * (1 + 3 * (6 + enc.r())));
}

TEST_CASE("fast decoder agrees with the exhaustive one") {
    const FunctionTable wp = FunctionTable::pair_weight_fn(7);
    const PairEncoder enc = encode_pair_weight(7, 2);
    const unsigned n = static_cast<unsigned>(7 + enc.r());
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        // arbitrary pair vectors, consistent or not, near or far
        const std::uint64_t l = rng() & bits::mask(n);
        const std::uint64_t r = rng() & bits::mask(n);
        const PairVector y(BinaryWord::from_value(l, n), BinaryWord::from_value(r, n));
        const DecodeResult a = decode_function(y, enc, wp);
        const DecodeResult b = decode_function_fast(y, enc, wp);
        CHECK(a.status == b.status);
        CHECK(a.distance == b.distance);
        if (a.status == DecodeStatus::Ok) CHECK(a.value == b.value);
    }
}

TEST_CASE("ties across classes surface as ambiguity") {
    const FunctionTable wp = FunctionTable::pair_weight_fn(2);
    const PairEncoder enc = PairEncoder::identity_encoder(2, 0);
    // ((0,0),(1,1)) sits at distance 1 from both pi(00) (class 0) and pi(11) (class 2).
    const PairVector y = PairVector::from_compact("00,11");
    const DecodeResult dec = decode_function(y, enc, wp);
    CHECK(dec.status == DecodeStatus::Ambiguous);
    CHECK(dec.distance == 1);
}

TEST_CASE("received length must match the encoder") {
    const FunctionTable wp = FunctionTable::pair_weight_fn(4);
    const PairEncoder enc = encode_pair_weight(4, 1);
    CHECK_THROWS_AS(decode_function(pair_read(w("0000")), enc, wp), Error);
}

TEST_CASE("random round trips succeed within the design budget") {
    const FunctionTable wp = FunctionTable::pair_weight_fn(8);
    const PairEncoder enc = encode_pair_weight(8, 2);
    const ExperimentStats stats = round_trip_experiment(wp, enc, {2, ErrorMode::UpToT, 7}, 300);
    CHECK(stats.trials == 300);
    CHECK(stats.successes == 300);
    CHECK(stats.success_rate() == 1.0);

    const ExperimentStats again = round_trip_experiment(wp, enc, {2, ErrorMode::UpToT, 7}, 300);
    CHECK(again.successes == stats.successes);  // per-trial derived seeds

    const ExperimentStats empty = round_trip_experiment(wp, enc, {2, ErrorMode::UpToT, 7}, 0);
    CHECK(empty.trials == 0);
    CHECK(empty.successes == 0);

    // Stress beyond the design t: the run completes and reports whatever happened.
    const ExperimentStats stress = round_trip_experiment(wp, enc, {4, ErrorMode::ExactlyT, 7}, 200);
    CHECK(stress.trials == 200);
    CHECK(stress.successes <= 200);
}
