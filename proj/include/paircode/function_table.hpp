#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "paircode/word.hpp"

namespace paircode {

/// A total function f : Z_2^k -> Im(f) with an enumerable image. Messages are
/// indexed by their numeric value (bit i of the index is x_i). The image is
/// kept sorted ascending; that order defines f_1 < ... < f_E and the "max"
/// used by the locally-binary construction.
class FunctionTable {
  public:
    FunctionTable(int k, std::vector<std::int64_t> values, std::string tag = "generic");

    static FunctionTable pair_weight_fn(int k);
    /// Step threshold on the pair weight: u -> floor(w_p(u) / T). The §-level
    /// conditions (T divides k+1, T >= 2t+1) are checked by the encoder, not here.
    static FunctionTable weight_distribution_fn(int k, int T);
    /// f(u) = i+1 for u = q_i (1-based), 0 elsewhere.
    static FunctionTable code_indicator_fn(int k, std::span<const BinaryWord> q);

    int k() const { return k_; }
    std::uint64_t domain_size() const { return 1ULL << k_; }
    std::int64_t eval(std::uint64_t u) const { return values_[u]; }
    std::int64_t eval_word(const BinaryWord& u) const;

    const std::vector<std::int64_t>& image() const { return image_; }
    int image_size() const { return static_cast<int>(image_.size()); }
    bool is_constant() const { return image_.size() == 1; }

    /// Index of a value within the sorted image; throws ValueNotInImage.
    int class_index(std::int64_t value) const;
    int class_index_of_message(std::uint64_t u) const { return class_of_[u]; }
    /// Messages attaining image value #idx, ascending.
    const std::vector<std::uint64_t>& class_members(int idx) const { return classes_[idx]; }

    const std::string& tag() const { return tag_; }
    int dist_T() const { return dist_T_; }

  private:
    int k_ = 0;
    std::vector<std::int64_t> values_;
    std::vector<std::int64_t> image_;
    std::vector<std::int32_t> class_of_;
    std::vector<std::vector<std::uint64_t>> classes_;
    std::string tag_;
    int dist_T_ = 0;  // set by weight_distribution_fn
};

/// d_p^f(v1, v2): smallest pair distance between messages evaluating to v1 and
/// v2. Exact brute force over the two classes (guarded at k <= 22).
int function_pair_distance(const FunctionTable& f, std::int64_t v1, std::int64_t v2);

/// Function values seen within pair distance rho of u.
std::vector<std::int64_t> pair_function_ball(const FunctionTable& f, std::uint64_t u, int rho);

/// |B_p^f(u, rho)| <= 2 for every u.
bool is_pair_locally_binary(const FunctionTable& f, int rho);

/// Hamming-metric analogues (needed for the locally-binary => pair-locally-binary relation).
std::vector<std::int64_t> hamming_function_ball(const FunctionTable& f, std::uint64_t u, int rho);
bool is_locally_binary(const FunctionTable& f, int rho);

}  // namespace paircode
