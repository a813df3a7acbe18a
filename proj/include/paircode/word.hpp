#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paircode/errors.hpp"

namespace paircode {

namespace bits {

constexpr std::uint64_t mask(unsigned n) { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

/// Cyclic right rotation by one within the low n bits: bit i of the result is bit (i+1) mod n.
constexpr std::uint64_t rotr1(std::uint64_t z, unsigned n) {
    if (n == 1) return z & 1;
    return ((z >> 1) | (z << (n - 1))) & mask(n);
}

/// Positions where the symbol-pair read of z is nonzero: bit i set iff z_i or z_{(i+1) mod n}.
constexpr std::uint64_t pair_mismatch_mask(std::uint64_t z, unsigned n) { return (z | rotr1(z, n)) & mask(n); }

constexpr int pair_weight(std::uint64_t x, unsigned n) { return std::popcount(pair_mismatch_mask(x, n)); }

constexpr int pair_distance(std::uint64_t x, std::uint64_t y, unsigned n) { return pair_weight(x ^ y, n); }

constexpr int hamming_distance(std::uint64_t x, std::uint64_t y, unsigned n) {
    return std::popcount((x ^ y) & mask(n));
}

}  // namespace bits

/// A binary word x = (x_0, ..., x_{n-1}). Bit i is stored at machine bit i of
/// the i/64-th limb, so for n <= 64 the whole word is a single integer whose
/// numeric order is used wherever a canonical word order is needed.
class BinaryWord {
  public:
    BinaryWord() = default;
    explicit BinaryWord(std::size_t n) : n_(n), head_(0) {
        if (n == 0) raise(ErrorKind::DomainError, "word length must be >= 1");
        if (n > 64) tail_.assign((n - 1) / 64, 0);
    }

    static BinaryWord zeros(std::size_t n) { return BinaryWord(n); }
    static BinaryWord ones(std::size_t n) {
        BinaryWord w(n);
        for (std::size_t i = 0; i < n; ++i) w.set_bit(i, true);
        return w;
    }
    /// Low n bits of `value`, bit i = x_i.
    static BinaryWord from_value(std::uint64_t value, std::size_t n) {
        BinaryWord w(n);
        w.head_ = value & bits::mask(static_cast<unsigned>(n > 64 ? 64 : n));
        return w;
    }
    /// Parses "0110..." with x_0 first.
    static BinaryWord from_string(std::string_view s) {
        if (s.empty()) raise(ErrorKind::ParseError, "empty word string");
        BinaryWord w(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                w.set_bit(i, true);
            else if (s[i] != '0')
                raise(ErrorKind::ParseError, "word strings may contain only '0' and '1'");
        }
        return w;
    }

    std::size_t size() const { return n_; }

    bool bit(std::size_t i) const {
        const std::uint64_t limb = i < 64 ? head_ : tail_[i / 64 - 1];
        return (limb >> (i % 64)) & 1;
    }
    void set_bit(std::size_t i, bool v) {
        std::uint64_t& limb = i < 64 ? head_ : tail_[i / 64 - 1];
        if (v)
            limb |= 1ULL << (i % 64);
        else
            limb &= ~(1ULL << (i % 64));
    }

    /// Numeric value, valid for n <= 64.
    std::uint64_t value() const {
        if (n_ > 64) raise(ErrorKind::TooLarge, "value() requires length <= 64");
        return head_;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }

    std::size_t limb_count() const { return 1 + tail_.size(); }
    std::uint64_t limb(std::size_t j) const { return j == 0 ? head_ : tail_[j - 1]; }
    void set_limb(std::size_t j, std::uint64_t v) { (j == 0 ? head_ : tail_[j - 1]) = v; }

    friend bool operator==(const BinaryWord& a, const BinaryWord& b) {
        return a.n_ == b.n_ && a.head_ == b.head_ && a.tail_ == b.tail_;
    }
    /// Orders by length, then by numeric value (little-endian limbs).
    friend bool operator<(const BinaryWord& a, const BinaryWord& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t j = a.limb_count(); j-- > 0;)
            if (a.limb(j) != b.limb(j)) return a.limb(j) < b.limb(j);
        return false;
    }

  private:
    std::size_t n_ = 0;
    std::uint64_t head_ = 0;
    std::vector<std::uint64_t> tail_;  // limbs beyond bit 63, for n > 64
};

BinaryWord xor_words(const BinaryWord& a, const BinaryWord& b);
BinaryWord or_words(const BinaryWord& a, const BinaryWord& b);
/// Cyclic right rotation by one: bit i of the result is bit (i+1) mod n of w.
BinaryWord rotr1(const BinaryWord& w);
int popcount(const BinaryWord& w);
BinaryWord concat(const BinaryWord& a, const BinaryWord& b);

/// A length-n sequence of symbol pairs, stored as the words of left and right
/// symbols. Not every pair vector is the read of a word; see is_consistent.
class PairVector {
  public:
    PairVector(BinaryWord left, BinaryWord right);

    std::size_t size() const { return left_.size(); }
    std::pair<bool, bool> pair(std::size_t i) const { return {left_.bit(i), right_.bit(i)}; }
    void set_pair(std::size_t i, bool l, bool r) {
        left_.set_bit(i, l);
        right_.set_bit(i, r);
    }
    const BinaryWord& left() const { return left_; }
    const BinaryWord& right() const { return right_; }

    /// Renders as ((0,1),(1,0),...).
    std::string to_string() const;
    /// Parses the compact form "01,10,..." (left symbol first in each pair).
    static PairVector from_compact(std::string_view s);
    std::string to_compact() const;

    friend bool operator==(const PairVector& a, const PairVector& b) {
        return a.left_ == b.left_ && a.right_ == b.right_;
    }

  private:
    BinaryWord left_, right_;
};

/// Symbol-pair read vector: pair i is (x_i, x_{(i+1) mod n}); the last pair wraps cyclically.
PairVector pair_read(const BinaryWord& x);

/// True iff y = pair_read(x) for some word x.
bool is_consistent(const PairVector& y);

/// The unique x with pair_read(x) = y; throws InconsistentPairVector otherwise.
BinaryWord extract_word(const PairVector& y);

/// Pair distance d_p(x, y): Hamming distance between the pair reads, counting
/// whole-pair mismatches.
int pair_distance(const BinaryWord& x, const BinaryWord& y);

/// Number of nonzero pairs of the read of x; equals pair_distance(x, zeros).
int pair_weight(const BinaryWord& x);

/// Hamming distance over pair symbols between two raw pair vectors.
int pair_distance_raw(const PairVector& a, const PairVector& b);

int hamming_distance(const BinaryWord& x, const BinaryWord& y);

/// Minimum pair distance over all unordered pairs of distinct codewords.
int min_pair_distance(std::span<const BinaryWord> code);
int min_hamming_distance(std::span<const BinaryWord> code);

}  // namespace paircode
