#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paircode/counting.hpp"
#include "paircode/word.hpp"

namespace paircode {

enum class Metric { Pair, Hamming };

int distance(const BinaryWord& a, const BinaryWord& b, Metric metric);

/// Symmetric nonnegative matrix with zero diagonal; entry (i,j) is the
/// distance required between codewords i and j of an irregular-distance code.
class DistanceMatrix {
  public:
    explicit DistanceMatrix(std::vector<std::vector<int>> rows);
    static DistanceMatrix uniform(int m, int d);
    static DistanceMatrix zero(int m);

    int size() const { return m_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * m_ + j]; }
    void set(int i, int j, int v) {
        entries_[static_cast<std::size_t>(i) * m_ + j] = v;
        entries_[static_cast<std::size_t>(j) * m_ + i] = v;
    }

    int max_entry() const;
    long long row_sum(int i) const;
    /// Sum of the strictly-upper-triangle entries.
    long long upper_sum() const;
    bool is_zero() const { return max_entry() == 0; }

    /// Rows/columns permuted by the same permutation.
    DistanceMatrix permuted(std::span<const int> perm) const;

    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
        return a.m_ == b.m_ && a.entries_ == b.entries_;
    }

  private:
    DistanceMatrix(int m, std::vector<int> entries) : m_(m), entries_(std::move(entries)) {}
    int m_ = 0;
    std::vector<int> entries_;
};

/// Checks d(words_i, words_j) >= [D]_ij for all i, j, in the given order.
bool verify_irregular(std::span<const BinaryWord> words, const DistanceMatrix& d, Metric metric);

/// Plotkin-style lower bound on N_p(D) (Lemma-3.2 shape): coefficient
/// 8/(3(M^2-1)) for odd M, 8/(3M^2) for M = 0 mod 4, 8/(3M^2-4) for M = 2 mod 4.
struct PlotkinBound {
    long long numerator = 0;  // exact rational numerator (before any rounding)
    long long denominator = 1;
    int value = 0;  // ceiling of the rational, a valid integer lower bound
    double real() const { return denominator ? static_cast<double>(numerator) / denominator : 0.0; }
};
PlotkinBound plotkin_lower_bound(const DistanceMatrix& d);

/// Smallest r with 2^r > max_j sum_{i<j} Ball(r, [D]_{pi(i)pi(j)} - 1), the
/// sufficient condition of the greedy construction; 0 for an all-zero matrix.
int gv_upper_bound(const DistanceMatrix& d, std::span<const int> order, Metric metric);

/// Order heuristic used by default: indices by descending row sum.
std::vector<int> descending_row_sum_order(const DistanceMatrix& d);
std::vector<int> identity_order(int m);

struct CodeWitness {
    std::vector<BinaryWord> words;  // in matrix order
    Metric metric = Metric::Pair;
};

/// Greedy codeword selection at fixed length r in the given selection order;
/// each slot takes the first valid word scanning from a seed-derived offset.
/// Returns std::nullopt when the scan exhausts some slot.
std::optional<CodeWitness> greedy_construct(const DistanceMatrix& d, int r, std::span<const int> order,
                                            Metric metric, std::uint64_t seed);

struct NpOptions {
    int max_m = 8;    // matrix-size guard for the exhaustive search
    int r_max = 22;   // largest length tried
};

/// How infeasibility of length value-1 was certified.
enum class NpProof {
    ZeroMatrix,      // no constraints; value 0 by convention
    LowerBound,      // value-1 is below the analytic start (Plotkin / max entry)
    ExhaustedBelow,  // the search at value-1 completed without a witness
};

struct NpResult {
    int value = 0;
    CodeWitness witness;
    NpProof proof = NpProof::ZeroMatrix;
    int searched_from = 0;
};

/// Exact N(D) / N_p(D) by depth-first search over codeword tuples, fixing the
/// first word to all-zeros and restricting the second to canonical forms of
/// the metric's symmetry group. Returns std::nullopt when r_max is exhausted.
std::optional<NpResult> exact_np(const DistanceMatrix& d, Metric metric, const NpOptions& opts = {});

std::optional<NpResult> exact_np_uniform(int m, int dist, Metric metric, const NpOptions& opts = {});

/// Sylvester Hadamard code: 2^(a+1) words of length 2^a, minimum Hamming
/// distance 2^(a-1) (complement pairs sit at distance 2^a).
std::vector<BinaryWord> hadamard_code(int a);

struct UniformUpper {
    enum class Kind { Hadamard, LogFormula } kind;
    int value;
    double real;  // un-ceiled value for the log-formula branch
};

/// Best applicable closed-form upper bound on N_p(M,D): 2D-2 via a Sylvester
/// Hadamard matrix of order 2D-2 when M <= 4D-4, or the D >= 11 log formula
/// when M <= (D-1)^2. std::nullopt when neither applies.
std::optional<UniformUpper> np_uniform_upper(int m, int d);

/// Hamming-metric analogue: N(M,D) <= 2D via a Hadamard matrix of order 2D,
/// or the D >= 10 log formula when M <= D^2.
std::optional<UniformUpper> hamming_uniform_upper(int m, int d);

struct NpVsHammingReport {
    int m = 0;
    int d = 0;
    bool applicable = false;  // the inequality is claimed only for M > 2
    int np = 0;               // exact N_p(M, D)
    int n_hamming = 0;        // exact N(M, D-1)
    bool holds = false;
    std::string note;
};

/// Exhaustively computes N_p(M,D) and N(M,D-1) and checks N_p <= N(M,D-1).
/// For M = 2 the inequality is not asserted (N_p(2,D) = D, N(2,D-1) = D-1).
NpVsHammingReport np_vs_hamming_check(int m, int d, const NpOptions& opts = {});

/// (M, D_max) of a matrix, feeding np_uniform_upper(M, D_max) as a bound on N_p(D).
std::pair<int, int> dmax_uniform_relax(const DistanceMatrix& d);

}  // namespace paircode
