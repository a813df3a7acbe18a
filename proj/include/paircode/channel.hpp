#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "paircode/fcspc.hpp"

namespace paircode {

enum class ErrorMode { ExactlyT, UpToT };

struct ChannelConfig {
    int t = 0;
    ErrorMode mode = ErrorMode::UpToT;
    std::uint64_t seed = 0;
};

/// Reads c through the pair channel, corrupting at most t pair positions
/// (exactly min(t, n) in ExactlyT mode). Corrupted positions are drawn
/// uniformly without replacement; each corrupted pair becomes a uniformly
/// random different pair symbol. The output may be inconsistent.
PairVector transmit(const BinaryWord& c, const ChannelConfig& cfg);

enum class DecodeStatus { Ok, Ambiguous };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::Ok;
    std::int64_t value = 0;  // f(u*) of the nearest message (meaningful for Ok)
    int distance = 0;        // pair distance of the best encoding to y
};

/// Nearest-encoding function decoder: minimizes d_H(pi(Enc(u)), y) over all
/// messages and returns f of the winner. Ambiguous only when the minimum is
/// attained in two different function classes; within t errors of a verified
/// FCSPC that cannot happen.
DecodeResult decode_function(const PairVector& y, const PairEncoder& enc, const FunctionTable& f);

/// Same result as decode_function, pruning candidates whose interior message
/// pairs already exceed the best distance. Ties are never pruned.
DecodeResult decode_function_fast(const PairVector& y, const PairEncoder& enc, const FunctionTable& f);

struct ExperimentStats {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t ambiguous = 0;
    int t = 0;
    int k = 0;
    int r = 0;
    std::string family;
    std::uint64_t seed = 0;
    double wall_ms = 0;

    double success_rate() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

/// Random (message, error pattern) draws through transmit + decode. Per-trial
/// seeds derive from cfg.seed, so aggregation is order independent.
ExperimentStats round_trip_experiment(const FunctionTable& f, const PairEncoder& enc, const ChannelConfig& cfg,
                                      std::uint64_t trials);

struct ExhaustiveRoundTrip {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    bool all_recovered() const { return failures == 0; }
};

/// Every message and every pair-error pattern of weight <= t on the codeword.
ExhaustiveRoundTrip exhaustive_round_trip(const FunctionTable& f, const PairEncoder& enc, int t);

}  // namespace paircode
