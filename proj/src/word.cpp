#include "paircode/word.hpp"

#include <sstream>

namespace paircode {

namespace {

void check_same_length(const BinaryWord& a, const BinaryWord& b) {
    if (a.size() != b.size()) raise(ErrorKind::LengthMismatch, "words must have equal length");
}

}  // namespace

BinaryWord xor_words(const BinaryWord& a, const BinaryWord& b) {
    check_same_length(a, b);
    BinaryWord r(a.size());
    for (std::size_t j = 0; j < a.limb_count(); ++j) r.set_limb(j, a.limb(j) ^ b.limb(j));
    return r;
}

BinaryWord or_words(const BinaryWord& a, const BinaryWord& b) {
    check_same_length(a, b);
    BinaryWord r(a.size());
    for (std::size_t j = 0; j < a.limb_count(); ++j) r.set_limb(j, a.limb(j) | b.limb(j));
    return r;
}

BinaryWord rotr1(const BinaryWord& w) {
    const std::size_t n = w.size();
    if (n <= 64) return BinaryWord::from_value(bits::rotr1(w.value(), static_cast<unsigned>(n)), n);
    BinaryWord r(n);
    const bool low = w.bit(0);
    for (std::size_t j = 0; j < w.limb_count(); ++j) {
        std::uint64_t v = w.limb(j) >> 1;
        if (j + 1 < w.limb_count()) v |= w.limb(j + 1) << 63;
        r.set_limb(j, v);
    }
    r.set_bit(n - 1, low);
    return r;
}

int popcount(const BinaryWord& w) {
    int c = 0;
    for (std::size_t j = 0; j < w.limb_count(); ++j) c += std::popcount(w.limb(j));
    return c;
}

BinaryWord concat(const BinaryWord& a, const BinaryWord& b) {
    BinaryWord r(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.set_bit(i, a.bit(i));
    for (std::size_t i = 0; i < b.size(); ++i) r.set_bit(a.size() + i, b.bit(i));
    return r;
}

PairVector::PairVector(BinaryWord left, BinaryWord right) : left_(std::move(left)), right_(std::move(right)) {
    if (left_.size() != right_.size()) raise(ErrorKind::LengthMismatch, "pair vector halves must match");
}

std::string PairVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << '(' << (left_.bit(i) ? '1' : '0') << ',' << (right_.bit(i) ? '1' : '0') << ')';
    }
    os << ')';
    return os.str();
}

std::string PairVector::to_compact() const {
    std::string s;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += left_.bit(i) ? '1' : '0';
        s += right_.bit(i) ? '1' : '0';
    }
    return s;
}

PairVector PairVector::from_compact(std::string_view s) {
    std::vector<std::pair<bool, bool>> pairs;
    std::size_t i = 0;
    while (i < s.size()) {
        if (i + 2 > s.size()) raise(ErrorKind::ParseError, "truncated pair in pair-vector string");
        auto sym = [&](char c) {
            if (c != '0' && c != '1') raise(ErrorKind::ParseError, "pair symbols must be 0 or 1");
            return c == '1';
        };
        pairs.emplace_back(sym(s[i]), sym(s[i + 1]));
        i += 2;
        if (i < s.size()) {
            if (s[i] != ',') raise(ErrorKind::ParseError, "expected ',' between pairs");
            ++i;
        }
    }
    if (pairs.empty()) raise(ErrorKind::ParseError, "empty pair vector");
    BinaryWord l(pairs.size()), r(pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        l.set_bit(j, pairs[j].first);
        r.set_bit(j, pairs[j].second);
    }
    return PairVector(std::move(l), std::move(r));
}

PairVector pair_read(const BinaryWord& x) { return PairVector(x, rotr1(x)); }

bool is_consistent(const PairVector& y) { return y.right() == rotr1(y.left()); }

BinaryWord extract_word(const PairVector& y) {
    if (!is_consistent(y)) raise(ErrorKind::InconsistentPairVector, "pair vector is not the read of any word");
    return y.left();
}

int pair_distance(const BinaryWord& x, const BinaryWord& y) {
    check_same_length(x, y);
    const BinaryWord z = xor_words(x, y);
    return popcount(or_words(z, rotr1(z)));
}

int pair_weight(const BinaryWord& x) { return popcount(or_words(x, rotr1(x))); }

int pair_distance_raw(const PairVector& a, const PairVector& b) {
    if (a.size() != b.size()) raise(ErrorKind::LengthMismatch, "pair vectors must have equal length");
    const BinaryWord l = xor_words(a.left(), b.left());
    const BinaryWord r = xor_words(a.right(), b.right());
    return popcount(or_words(l, r));
}

int hamming_distance(const BinaryWord& x, const BinaryWord& y) {
    check_same_length(x, y);
    return popcount(xor_words(x, y));
}

namespace {

template <typename Dist>
int min_distance_impl(std::span<const BinaryWord> code, Dist dist) {
    if (code.size() < 2) raise(ErrorKind::CodeTooSmall, "minimum distance needs at least two codewords");
    int best = -1;
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            const int d = dist(code[i], code[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

}  // namespace

int min_pair_distance(std::span<const BinaryWord> code) {
    return min_distance_impl(code, [](const BinaryWord& a, const BinaryWord& b) { return pair_distance(a, b); });
}

int min_hamming_distance(std::span<const BinaryWord> code) {
    return min_distance_impl(code, [](const BinaryWord& a, const BinaryWord& b) { return hamming_distance(a, b); });
}

}  // namespace paircode
