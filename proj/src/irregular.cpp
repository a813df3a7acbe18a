#include "paircode/irregular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "paircode/detail/splitmix.hpp"

namespace paircode {

int distance(const BinaryWord& a, const BinaryWord& b, Metric metric) {
    return metric == Metric::Pair ? pair_distance(a, b) : hamming_distance(a, b);
}

DistanceMatrix::DistanceMatrix(std::vector<std::vector<int>> rows) {
    m_ = static_cast<int>(rows.size());
    if (m_ == 0) raise(ErrorKind::DomainError, "distance matrix must be nonempty");
    entries_.assign(static_cast<std::size_t>(m_) * m_, 0);
    for (int i = 0; i < m_; ++i) {
        if (static_cast<int>(rows[i].size()) != m_) raise(ErrorKind::DomainError, "distance matrix must be square");
        for (int j = 0; j < m_; ++j) {
            if (rows[i][j] < 0) raise(ErrorKind::DomainError, "distance matrix entries must be nonnegative");
            entries_[static_cast<std::size_t>(i) * m_ + j] = rows[i][j];
        }
        if (rows[i][i] != 0) raise(ErrorKind::DomainError, "distance matrix diagonal must be zero");
    }
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            if (at(i, j) != at(j, i)) raise(ErrorKind::DomainError, "distance matrix must be symmetric");
}

DistanceMatrix DistanceMatrix::uniform(int m, int d) {
    if (m < 1 || d < 0) raise(ErrorKind::DomainError, "uniform matrix requires m >= 1, d >= 0");
    DistanceMatrix r = zero(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) r.set(i, j, d);
    return r;
}

DistanceMatrix DistanceMatrix::zero(int m) {
    if (m < 1) raise(ErrorKind::DomainError, "matrix size must be >= 1");
    return DistanceMatrix(m, std::vector<int>(static_cast<std::size_t>(m) * m, 0));
}

int DistanceMatrix::max_entry() const { return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end()); }

long long DistanceMatrix::row_sum(int i) const {
    long long s = 0;
    for (int j = 0; j < m_; ++j) s += at(i, j);
    return s;
}

long long DistanceMatrix::upper_sum() const {
    long long s = 0;
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j) s += at(i, j);
    return s;
}

DistanceMatrix DistanceMatrix::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != m_) raise(ErrorKind::SizeMismatch, "permutation size must match matrix");
    DistanceMatrix r = zero(m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) r.entries_[static_cast<std::size_t>(i) * m_ + j] = at(perm[i], perm[j]);
    return r;
}

std::vector<std::vector<int>> DistanceMatrix::rows() const {
    std::vector<std::vector<int>> r(m_, std::vector<int>(m_));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) r[i][j] = at(i, j);
    return r;
}

bool verify_irregular(std::span<const BinaryWord> words, const DistanceMatrix& d, Metric metric) {
    if (static_cast<int>(words.size()) != d.size())
        raise(ErrorKind::SizeMismatch, "witness size must match matrix size");
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (distance(words[i], words[j], metric) < d.at(static_cast<int>(i), static_cast<int>(j))) return false;
    return true;
}

PlotkinBound plotkin_lower_bound(const DistanceMatrix& d) {
    const int m = d.size();
    const long long sum = d.upper_sum();
    if (m <= 1 || sum == 0) return {0, 1, 0};
    long long den;
    if (m % 2 == 1)
        den = 3LL * (static_cast<long long>(m) * m - 1);
    else if (m % 4 == 0)
        den = 3LL * m * m;
    else
        den = 3LL * m * m - 4;
    const long long num = 8 * sum;
    const int value = static_cast<int>((num + den - 1) / den);
    return {num, den, value};
}

namespace {

BigInt metric_ball(int r, int radius, Metric metric) {
    return metric == Metric::Pair ? ball_size(r, radius) : hamming_ball_size(r, radius);
}

}  // namespace

int gv_upper_bound(const DistanceMatrix& d, std::span<const int> order, Metric metric) {
    if (static_cast<int>(order.size()) != d.size()) raise(ErrorKind::SizeMismatch, "order size must match matrix");
    if (d.is_zero()) return 0;
    const int m = d.size();
    for (int r = 1; r <= 4096; ++r) {
        const BigInt space = BigInt(1) << r;
        BigInt worst = 0;
        for (int j = 0; j < m; ++j) {
            BigInt occupied = 0;
            for (int i = 0; i < j; ++i) {
                const int e = d.at(order[i], order[j]);
                if (e > 0) occupied += metric_ball(r, e - 1, metric);
            }
            worst = std::max(worst, occupied);
        }
        if (space > worst) return r;
    }
    raise(ErrorKind::TooLarge, "GV bound search exceeded the length cap");
}

std::vector<int> descending_row_sum_order(const DistanceMatrix& d) {
    std::vector<int> order(d.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d.row_sum(a) > d.row_sum(b); });
    return order;
}

std::vector<int> identity_order(int m) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

namespace {

void check_permutation(std::span<const int> order, int m) {
    std::vector<bool> seen(m, false);
    if (static_cast<int>(order.size()) != m) raise(ErrorKind::SizeMismatch, "order size must match matrix");
    for (int v : order) {
        if (v < 0 || v >= m || seen[v]) raise(ErrorKind::DomainError, "order must be a permutation of [M]");
        seen[v] = true;
    }
}

int distance_u64(std::uint64_t a, std::uint64_t b, unsigned n, Metric metric) {
    return metric == Metric::Pair ? bits::pair_distance(a, b, n) : bits::hamming_distance(a, b, n);
}

std::uint64_t reverse_bits(std::uint64_t w, unsigned n) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n; ++i)
        if ((w >> i) & 1) r |= 1ULL << (n - 1 - i);
    return r;
}

std::uint64_t rot_right(std::uint64_t w, unsigned s, unsigned n) {
    s %= n;
    if (s == 0) return w & bits::mask(n);
    return ((w >> s) | (w << (n - s))) & bits::mask(n);
}

// Lexicographic minimum (in value order) of the dihedral orbit of w: all
// cyclic rotations of w and of its reversal. Rotations and reversal are
// pair-distance isometries fixing the all-zero word.
std::uint64_t dihedral_min(std::uint64_t w, unsigned n) {
    std::uint64_t best = w & bits::mask(n);
    const std::uint64_t rev = reverse_bits(w, n);
    for (unsigned s = 0; s < n; ++s) {
        best = std::min(best, rot_right(w, s, n));
        best = std::min(best, rot_right(rev, s, n));
    }
    return best;
}

// Canonical second codeword given p_1 = 0: for the pair metric the orbit
// representative under the dihedral group; for the Hamming metric the sorted
// word 1^c 0^(r-c) (coordinate permutations are isometries there).
bool second_slot_canonical(std::uint64_t w, unsigned n, Metric metric) {
    if (metric == Metric::Hamming) {
        const int c = std::popcount(w);
        return w == bits::mask(static_cast<unsigned>(c)) || c == 0;
    }
    return w == dihedral_min(w, n);
}

struct NpSearcher {
    const DistanceMatrix& d;
    Metric metric;
    int m;
    int r;
    unsigned un;
    std::vector<std::uint64_t> assigned;

    bool dfs(int depth) {
        if (depth == m) return true;
        const std::uint64_t space = 1ULL << r;
        for (std::uint64_t w = 0; w < space; ++w) {
            if (depth == 1 && !second_slot_canonical(w, un, metric)) continue;
            bool ok = true;
            for (int i = 0; i < depth; ++i) {
                const int need = d.at(i, depth);
                if (need > 0 && distance_u64(assigned[i], w, un, metric) < need) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assigned[depth] = w;
            if (dfs(depth + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<NpResult> exact_np(const DistanceMatrix& d, Metric metric, const NpOptions& opts) {
    const int m = d.size();
    if (m > opts.max_m) raise(ErrorKind::TooLarge, "exact search is guarded at M <= max_m");
    if (opts.r_max > 26) raise(ErrorKind::TooLarge, "exact search is guarded at r_max <= 26");
    if (d.is_zero()) return NpResult{0, CodeWitness{{}, metric}, NpProof::ZeroMatrix, 0};

    const int r_start = std::max({1, plotkin_lower_bound(d).value, d.max_entry()});
    for (int r = r_start; r <= opts.r_max; ++r) {
        NpSearcher search{d, metric, m, r, static_cast<unsigned>(r), std::vector<std::uint64_t>(m, 0)};
        if (search.dfs(1)) {
            CodeWitness witness;
            witness.metric = metric;
            for (int i = 0; i < m; ++i)
                witness.words.push_back(BinaryWord::from_value(search.assigned[i], static_cast<std::size_t>(r)));
            return NpResult{r, std::move(witness), r > r_start ? NpProof::ExhaustedBelow : NpProof::LowerBound,
                            r_start};
        }
    }
    return std::nullopt;
}

std::optional<NpResult> exact_np_uniform(int m, int dist, Metric metric, const NpOptions& opts) {
    return exact_np(DistanceMatrix::uniform(m, dist), metric, opts);
}

std::optional<CodeWitness> greedy_construct(const DistanceMatrix& d, int r, std::span<const int> order,
                                            Metric metric, std::uint64_t seed) {
    if (r < 1) raise(ErrorKind::DomainError, "greedy construction requires r >= 1");
    if (r > 26) raise(ErrorKind::TooLarge, "greedy candidate scan is guarded at r <= 26");
    const int m = d.size();
    check_permutation(order, m);
    const std::uint64_t space = 1ULL << r;
    const unsigned un = static_cast<unsigned>(r);
    std::vector<std::uint64_t> chosen(m, 0);
    for (int j = 0; j < m; ++j) {
        const std::uint64_t start = detail::derive_seed(seed, static_cast<std::uint64_t>(j)) & bits::mask(un);
        bool found = false;
        for (std::uint64_t idx = 0; idx < space && !found; ++idx) {
            const std::uint64_t w = (start + idx) & bits::mask(un);
            bool ok = true;
            for (int i = 0; i < j; ++i) {
                const int need = d.at(order[i], order[j]);
                if (need > 0 && distance_u64(chosen[i], w, un, metric) < need) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen[j] = w;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    CodeWitness witness;
    witness.metric = metric;
    witness.words.assign(m, BinaryWord(static_cast<std::size_t>(r)));
    for (int j = 0; j < m; ++j) witness.words[order[j]] = BinaryWord::from_value(chosen[j], static_cast<std::size_t>(r));
    return witness;
}

std::vector<BinaryWord> hadamard_code(int a) {
    if (a < 1) raise(ErrorKind::DomainError, "Sylvester exponent must be >= 1");
    if (a > 16) raise(ErrorKind::TooLarge, "Hadamard construction is guarded at a <= 16");
    const std::size_t n = 1ULL << a;
    std::vector<BinaryWord> code;
    code.reserve(2 * n);
    for (std::uint64_t i = 0; i < n; ++i) {
        BinaryWord w(n), wc(n);
        for (std::uint64_t j = 0; j < n; ++j) {
            const bool bit = std::popcount(i & j) & 1;
            w.set_bit(j, bit);
            wc.set_bit(j, !bit);
        }
        code.push_back(std::move(w));
        code.push_back(std::move(wc));
    }
    return code;
}

namespace {

std::optional<UniformUpper> log_formula_upper(int d_eff, int m, int m_cap_sq_base, int d_min) {
    // (2D'-2)/(1 - 2 sqrt(ln(D')/D')) with D' = d_eff, valid for d_eff >= d_min
    // and m <= m_cap_sq_base^2.
    if (d_eff < d_min) return std::nullopt;
    if (static_cast<long long>(m) > static_cast<long long>(m_cap_sq_base) * m_cap_sq_base) return std::nullopt;
    const double dd = static_cast<double>(d_eff);
    const double denom = 1.0 - 2.0 * std::sqrt(std::log(dd) / dd);
    if (denom <= 0.0) return std::nullopt;
    const double real = (2.0 * dd - 2.0) / denom;
    return UniformUpper{UniformUpper::Kind::LogFormula, static_cast<int>(std::ceil(real)), real};
}

std::optional<UniformUpper> best_of(std::optional<UniformUpper> a, std::optional<UniformUpper> b) {
    if (!a) return b;
    if (!b) return a;
    return a->value <= b->value ? a : b;
}

}  // namespace

std::optional<UniformUpper> np_uniform_upper(int m, int d) {
    if (m < 2 || d < 2) raise(ErrorKind::DomainError, "np_uniform_upper requires M >= 2, D >= 2");
    std::optional<UniformUpper> hadamard;
    const unsigned order = static_cast<unsigned>(2 * d - 2);
    if (std::has_single_bit(order) && m <= 4 * d - 4)
        hadamard = UniformUpper{UniformUpper::Kind::Hadamard, 2 * d - 2, static_cast<double>(2 * d - 2)};
    return best_of(hadamard, log_formula_upper(d - 1, m, d - 1, 10));
}

std::optional<UniformUpper> hamming_uniform_upper(int m, int d) {
    if (m < 2 || d < 1) raise(ErrorKind::DomainError, "hamming_uniform_upper requires M >= 2, D >= 1");
    std::optional<UniformUpper> hadamard;
    const unsigned order = static_cast<unsigned>(2 * d);
    if (std::has_single_bit(order) && m <= 4 * d)
        hadamard = UniformUpper{UniformUpper::Kind::Hadamard, 2 * d, static_cast<double>(2 * d)};
    return best_of(hadamard, log_formula_upper(d, m, d, 10));
}

NpVsHammingReport np_vs_hamming_check(int m, int d, const NpOptions& opts) {
    if (m < 2 || d < 2) raise(ErrorKind::DomainError, "np_vs_hamming_check requires M >= 2, D >= 2");
    NpVsHammingReport report;
    report.m = m;
    report.d = d;
    report.applicable = m > 2;
    const auto np = exact_np_uniform(m, d, Metric::Pair, opts);
    const auto nh = exact_np_uniform(m, d - 1, Metric::Hamming, opts);
    if (!np || !nh) raise(ErrorKind::TooLarge, "exact searches exhausted the length guard");
    report.np = np->value;
    report.n_hamming = nh->value;
    report.holds = report.np <= report.n_hamming;
    if (!report.applicable)
        report.note = "M = 2 is the excluded extreme case: N_p(2,D) = D while N(2,D-1) = D-1";
    return report;
}

std::pair<int, int> dmax_uniform_relax(const DistanceMatrix& d) { return {d.size(), d.max_entry()}; }

}  // namespace paircode
