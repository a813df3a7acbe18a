#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paircode/function_table.hpp"
#include "paircode/irregular.hpp"

namespace paircode {

/// Shifted modulus: (a-1) mod b + 1, ranging over [1, b].
constexpr int smod(int a, int b) { return (a - 1) % b + 1; }

/// Pair-distance matrix over an explicit message list; kind 1 uses
/// [2t - d_p]+ and kind 2 uses [2t + 2 - d_p]+, zero when the function values
/// agree.
DistanceMatrix build_message_matrix(const FunctionTable& f, int t, std::span<const BinaryWord> msgs, int kind);

/// Function pair-distance matrix over the sorted image (E x E), from the exact
/// d_p^f of the definition.
DistanceMatrix build_function_matrix(const FunctionTable& f, int t, int kind);

/// The closed-form k x k matrices for the pair weight function: kind 2 indexes
/// by position difference (2t on the first off-diagonal, then [2t+2-|i-j|]+),
/// kind 1 is [2t-|i-j|-1]+ from the chain u_i = 1^i 0^(k-i). Kind 2 differs
/// from the exact function matrix in row/column 1, where the exact
/// d_p^f(0, w) = w is one larger than the position difference; the closed form
/// dominates entrywise, so constructions against it stay valid.
DistanceMatrix closed_form_weight_matrix(int k, int t, int kind);

enum class EncoderFamily { Weight, Dist, Locally, Generic };

const char* to_string(EncoderFamily f);
EncoderFamily encoder_family_from_string(const std::string& s);

/// Systematic encoder u -> (u, p(u)) with redundancy r. The parity rule is
/// family specific:
///   Weight   p(u) = base[(w_p(u)+1) smod (2t+1)]
///   Dist     p(u) = step word indexed by (w_p(u)+1) smod T
///   Locally  p(u) = (2t-1)-fold repetition of a per-message bit
///   Generic  p(u) = parity assigned to the class of f(u)
class PairEncoder {
  public:
    int k() const { return k_; }
    int r() const { return r_; }
    int t() const { return t_; }
    EncoderFamily family() const { return family_; }

    BinaryWord parity(const BinaryWord& u) const;
    std::uint64_t parity_value(std::uint64_t u) const;
    BinaryWord encode(const BinaryWord& u) const;
    /// Packed (u, p(u)) with the parity in bits k..k+r-1; needs k + r <= 64.
    std::uint64_t encode_value(std::uint64_t u) const;

    const std::vector<BinaryWord>& base() const { return base_; }
    int dist_T() const { return dist_T_; }
    const std::vector<std::uint8_t>& locally_bits() const { return locally_bits_; }
    const std::map<std::int64_t, BinaryWord>& class_parity() const { return class_parity_; }

    static PairEncoder weight_encoder(int k, int t, std::vector<BinaryWord> base);
    /// r = 0: Enc(u) = u. The valid FCSPC for constant functions.
    static PairEncoder identity_encoder(int k, int t);
    static PairEncoder dist_encoder(int k, int t, int T);
    static PairEncoder locally_encoder(int k, int t, std::vector<std::uint8_t> bits);
    static PairEncoder class_encoder(int k, int t, std::map<std::int64_t, BinaryWord> parities,
                                     std::shared_ptr<const FunctionTable> f);

    std::shared_ptr<const FunctionTable> bound_function() const { return table_; }

  private:
    PairEncoder() = default;
    EncoderFamily family_ = EncoderFamily::Generic;
    int k_ = 0, r_ = 0, t_ = 0;
    std::vector<BinaryWord> base_;
    int dist_T_ = 0;
    std::vector<std::uint8_t> locally_bits_;
    std::map<std::int64_t, BinaryWord> class_parity_;
    std::shared_ptr<const FunctionTable> table_;
};

/// Built-in minimum-pair-distance-2t base codes for t = 1, 2, 3.
std::vector<BinaryWord> builtin_pair_base(int t);

/// Construction for the pair weight function: parity indexed by
/// (w_p(u)+1) smod (2t+1) into a base code of minimum pair distance 2t.
PairEncoder encode_pair_weight(int k, int t, std::optional<std::vector<BinaryWord>> base = std::nullopt);

/// Construction for the pair weight distribution function Delta_p^T; r = 2t.
/// Requires T | k+1 and T >= 2t+1.
PairEncoder encode_weight_distribution(int k, int t, int T);

/// Repetition-bit construction for 2t-pair-locally binary functions; r = 2t-1.
PairEncoder encode_locally_binary(const FunctionTable& f, int t);

/// Theorem-3.2-style encoder: one parity per function class, taken from a
/// witness of the kind-2 function matrix.
PairEncoder class_encoder_from_witness(const FunctionTable& f, int t, std::span<const BinaryWord> witness);

struct VerifyOptions {
    bool exhaustive = true;
    std::uint64_t samples = 100000;  // used when exhaustive is false
    std::uint64_t seed = 0;
};

struct VerifyResult {
    bool ok = false;
    bool exhaustive = false;
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<BinaryWord, BinaryWord>> counterexample;
};

/// Checks d_p(Enc(u1), Enc(u2)) >= 2t+1 for every message pair with differing
/// function values. Exhaustive mode is guarded at k <= 14; sampled mode never
/// claims validity, only "no violation found".
VerifyResult verify_fcspc(const PairEncoder& enc, const FunctionTable& f, int t, const VerifyOptions& opts = {});

struct BoundEntry {
    std::string name;
    double value = 0;
    bool exact = false;  // true when the entry is an exact integer bound
};

struct RedundancyReport {
    int k = 0, t = 0;
    std::string family;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;
    std::optional<int> achieved;
    std::vector<std::string> notes;

    double best_lower() const;
    double best_upper() const;
};

struct ReportOptions {
    bool exact_np_bounds = true;          // run exact searches where guards allow
    std::optional<std::vector<BinaryWord>> subset;  // message subset for the kind-1 lower bound
    std::uint64_t seed = 0;
};

/// One representative message per function class, chained greedily to keep
/// pairwise pair distances small (tighter kind-1 matrices give tighter lower
/// bounds).
std::vector<BinaryWord> representative_subset(const FunctionTable& f);

RedundancyReport redundancy_report(const FunctionTable& f, int t, const ReportOptions& opts = {});

}  // namespace paircode
