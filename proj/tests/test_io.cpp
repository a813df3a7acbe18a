#include "doctest.h"

#include <nlohmann/json.hpp>

#include <sstream>

#include "paircode/io.hpp"

using namespace paircode;

namespace {

BinaryWord w(const char* s) { return BinaryWord::from_string(s); }

}  // namespace

TEST_CASE("word files: comments, blanks, round trip") {
    std::istringstream in("# base code\n00000\n11100  # second word\n\n10110\n");
    const auto words = io::read_words(in);
    REQUIRE(words.size() == 3);
    CHECK(words[0] == w("00000"));
    CHECK(words[1] == w("11100"));
    std::ostringstream out;
    io::write_words(out, words);
    std::istringstream back(out.str());
    CHECK(io::read_words(back) == words);
}

TEST_CASE("matrix json and csv round trips") {
    const DistanceMatrix d({{0, 2, 3}, {2, 0, 2}, {3, 2, 0}});
    const auto j = io::matrix_to_json(d);
    CHECK(j.at("m") == 3);
    CHECK(io::matrix_from_json(j) == d);

    std::istringstream csv("0,2,3\n2,0,2\n3,2,0\n");
    CHECK(io::matrix_from_csv(csv) == d);

    std::istringstream bad("0,2\n3,0\n");
    CHECK_THROWS_AS(io::matrix_from_csv(bad), Error);  // asymmetric
}

TEST_CASE("np result serialization") {
    const auto np = exact_np_uniform(3, 2, Metric::Pair);
    REQUIRE(np.has_value());
    const auto j = io::np_result_to_json(*np);
    CHECK(j.at("value") == 2);
    CHECK(j.at("metric") == "pair");
    CHECK(j.at("witness").size() == 3);
}

TEST_CASE("encoder json round trips for every family") {
    SUBCASE("weight") {
        const PairEncoder enc = encode_pair_weight(6, 2);
        const PairEncoder back = io::encoder_from_json(io::encoder_to_json(enc));
        CHECK(back.family() == EncoderFamily::Weight);
        CHECK(back.k() == 6);
        CHECK(back.r() == 5);
        for (std::uint64_t u = 0; u < 64; ++u) CHECK(back.parity_value(u) == enc.parity_value(u));
    }
    SUBCASE("dist") {
        const PairEncoder enc = encode_weight_distribution(9, 1, 5);
        const PairEncoder back = io::encoder_from_json(io::encoder_to_json(enc));
        CHECK(back.r() == 2);
        CHECK(back.dist_T() == 5);
        for (std::uint64_t u = 0; u < 512; ++u) CHECK(back.parity_value(u) == enc.parity_value(u));
    }
    SUBCASE("locally") {
        std::vector<BinaryWord> q{w("00000"), w("11111")};
        const FunctionTable f = FunctionTable::code_indicator_fn(5, q);
        const PairEncoder enc = encode_locally_binary(f, 1);
        const PairEncoder back = io::encoder_from_json(io::encoder_to_json(enc));
        CHECK(back.r() == enc.r());
        for (std::uint64_t u = 0; u < 32; ++u) CHECK(back.parity_value(u) == enc.parity_value(u));
    }
    SUBCASE("generic needs its function table") {
        const FunctionTable f = FunctionTable::pair_weight_fn(4);
        const auto np = exact_np(build_function_matrix(f, 1, 2), Metric::Pair);
        REQUIRE(np.has_value());
        const PairEncoder enc = class_encoder_from_witness(f, 1, np->witness.words);
        const auto j = io::encoder_to_json(enc);
        CHECK_THROWS_AS(io::encoder_from_json(j), Error);
        const PairEncoder back = io::encoder_from_json(j, std::make_shared<FunctionTable>(f));
        for (std::uint64_t u = 0; u < 16; ++u) CHECK(back.parity_value(u) == enc.parity_value(u));
    }
    SUBCASE("identity") {
        const PairEncoder enc = PairEncoder::identity_encoder(4, 1);
        const PairEncoder back = io::encoder_from_json(io::encoder_to_json(enc));
        CHECK(back.r() == 0);
        CHECK(back.encode(w("1010")) == w("1010"));
    }
}

TEST_CASE("function table files") {
    const FunctionTable f = FunctionTable::pair_weight_fn(4);
    std::ostringstream out;
    io::write_function(out, f);
    std::istringstream in(out.str());
    const FunctionTable back = io::function_from_stream(in);
    CHECK(back.k() == 4);
    for (std::uint64_t u = 0; u < 16; ++u) CHECK(back.eval(u) == f.eval(u));

    std::istringstream missing("00 1\n01 2\n10 3\n");
    CHECK_THROWS_AS(io::function_from_stream(missing), Error);
    std::istringstream dup("0 1\n0 2\n");
    CHECK_THROWS_AS(io::function_from_stream(dup), Error);
}

TEST_CASE("report and stats serialization") {
    const RedundancyReport rep = redundancy_report(FunctionTable::pair_weight_fn(5), 1);
    const auto j = io::report_to_json(rep);
    CHECK(j.at("k") == 5);
    CHECK(j.at("achieved") == 2);
    CHECK(j.at("best_lower").get<double>() <= j.at("best_upper").get<double>());

    ExperimentStats stats;
    stats.trials = 10;
    stats.successes = 10;
    stats.family = "weight";
    const auto sj = io::stats_to_json(stats);
    CHECK(sj.at("success_rate") == 1.0);
}
