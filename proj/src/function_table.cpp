#include "paircode/function_table.hpp"

#include <algorithm>
#include <map>

namespace paircode {

FunctionTable::FunctionTable(int k, std::vector<std::int64_t> values, std::string tag)
    : k_(k), values_(std::move(values)), tag_(std::move(tag)) {
    if (k < 1 || k > 22) raise(ErrorKind::DomainError, "function tables are guarded at 1 <= k <= 22");
    if (values_.size() != (1ULL << k)) raise(ErrorKind::SizeMismatch, "value table must cover all 2^k messages");
    std::map<std::int64_t, std::int32_t> index;
    for (std::int64_t v : values_) index.emplace(v, 0);
    image_.reserve(index.size());
    for (auto& [v, idx] : index) {
        idx = static_cast<std::int32_t>(image_.size());
        image_.push_back(v);
    }
    class_of_.resize(values_.size());
    classes_.resize(image_.size());
    for (std::uint64_t u = 0; u < values_.size(); ++u) {
        const std::int32_t c = index[values_[u]];
        class_of_[u] = c;
        classes_[c].push_back(u);
    }
}

FunctionTable FunctionTable::pair_weight_fn(int k) {
    if (k < 2) raise(ErrorKind::DomainError, "pair weight function requires k >= 2");
    std::vector<std::int64_t> values(1ULL << k);
    for (std::uint64_t u = 0; u < values.size(); ++u)
        values[u] = bits::pair_weight(u, static_cast<unsigned>(k));
    return FunctionTable(k, std::move(values), "pair_weight");
}

FunctionTable FunctionTable::weight_distribution_fn(int k, int T) {
    if (k < 2 || T < 1) raise(ErrorKind::DomainError, "weight distribution requires k >= 2, T >= 1");
    std::vector<std::int64_t> values(1ULL << k);
    for (std::uint64_t u = 0; u < values.size(); ++u)
        values[u] = bits::pair_weight(u, static_cast<unsigned>(k)) / T;
    FunctionTable f(k, std::move(values), "weight_distribution");
    f.dist_T_ = T;
    return f;
}

FunctionTable FunctionTable::code_indicator_fn(int k, std::span<const BinaryWord> q) {
    if (k < 2) raise(ErrorKind::DomainError, "code indicator requires k >= 2");
    std::vector<std::int64_t> values(1ULL << k, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (static_cast<int>(q[i].size()) != k) raise(ErrorKind::LengthMismatch, "codewords must have length k");
        if (values[q[i].value()] != 0) raise(ErrorKind::DuplicateMessage, "indicator codewords must be distinct");
        values[q[i].value()] = static_cast<std::int64_t>(i) + 1;
    }
    return FunctionTable(k, std::move(values), "code_indicator");
}

std::int64_t FunctionTable::eval_word(const BinaryWord& u) const {
    if (static_cast<int>(u.size()) != k_) raise(ErrorKind::LengthMismatch, "message length must be k");
    return eval(u.value());
}

int FunctionTable::class_index(std::int64_t value) const {
    const auto it = std::lower_bound(image_.begin(), image_.end(), value);
    if (it == image_.end() || *it != value) raise(ErrorKind::ValueNotInImage, "value is not attained by f");
    return static_cast<int>(it - image_.begin());
}

int function_pair_distance(const FunctionTable& f, std::int64_t v1, std::int64_t v2) {
    if (v1 == v2) raise(ErrorKind::DomainError, "function pair distance needs two distinct values");
    const auto& c1 = f.class_members(f.class_index(v1));
    const auto& c2 = f.class_members(f.class_index(v2));
    const auto& outer = c1.size() <= c2.size() ? c1 : c2;
    const auto& inner = c1.size() <= c2.size() ? c2 : c1;
    const unsigned n = static_cast<unsigned>(f.k());
    const int floor = f.k() >= 2 ? 2 : 1;  // distinct words are at least this far apart
    int best = f.k();
    for (const std::uint64_t a : outer) {
        for (const std::uint64_t b : inner) {
            best = std::min(best, bits::pair_distance(a, b, n));
            if (best == floor) return best;
        }
    }
    return best;
}

namespace {

// Words z with w_p(z) <= rho; pair distance is translation invariant, so the
// ball around u is { f(u ^ z) : z in this list }.
std::vector<std::uint64_t> pair_shell(int k, int rho) {
    const unsigned n = static_cast<unsigned>(k);
    std::vector<std::uint64_t> zs;
    for (std::uint64_t z = 0; z < (1ULL << k); ++z)
        if (bits::pair_weight(z, n) <= rho) zs.push_back(z);
    return zs;
}

std::vector<std::uint64_t> hamming_shell(int k, int rho) {
    std::vector<std::uint64_t> zs;
    for (std::uint64_t z = 0; z < (1ULL << k); ++z)
        if (std::popcount(z) <= rho) zs.push_back(z);
    return zs;
}

std::vector<std::int64_t> ball_values(const FunctionTable& f, std::uint64_t u,
                                      std::span<const std::uint64_t> shell) {
    std::vector<std::int64_t> vals;
    for (const std::uint64_t z : shell) vals.push_back(f.eval(u ^ z));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

template <typename ShellFn>
bool locally_binary_impl(const FunctionTable& f, int rho, ShellFn shell_fn) {
    if (f.k() > 20) raise(ErrorKind::TooLarge, "locally-binary scan is guarded at k <= 20");
    const auto shell = shell_fn(f.k(), rho);
    for (std::uint64_t u = 0; u < f.domain_size(); ++u) {
        std::int64_t seen0 = 0, seen1 = 0;
        int count = 0;
        for (const std::uint64_t z : shell) {
            const std::int64_t v = f.eval(u ^ z);
            if (count == 0 || (count == 1 && v != seen0)) {
                (count == 0 ? seen0 : seen1) = v;
                ++count;
            } else if (count == 2 && v != seen0 && v != seen1) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<std::int64_t> pair_function_ball(const FunctionTable& f, std::uint64_t u, int rho) {
    if (f.k() > 20) raise(ErrorKind::TooLarge, "function ball scan is guarded at k <= 20");
    if (rho < 0) raise(ErrorKind::DomainError, "radius must be nonnegative");
    return ball_values(f, u, pair_shell(f.k(), rho));
}

bool is_pair_locally_binary(const FunctionTable& f, int rho) {
    if (rho < 0) raise(ErrorKind::DomainError, "radius must be nonnegative");
    return locally_binary_impl(f, rho, pair_shell);
}

std::vector<std::int64_t> hamming_function_ball(const FunctionTable& f, std::uint64_t u, int rho) {
    if (f.k() > 20) raise(ErrorKind::TooLarge, "function ball scan is guarded at k <= 20");
    if (rho < 0) raise(ErrorKind::DomainError, "radius must be nonnegative");
    return ball_values(f, u, hamming_shell(f.k(), rho));
}

bool is_locally_binary(const FunctionTable& f, int rho) {
    if (rho < 0) raise(ErrorKind::DomainError, "radius must be nonnegative");
    return locally_binary_impl(f, rho, hamming_shell);
}

}  // namespace paircode
