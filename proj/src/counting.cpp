#include "paircode/counting.hpp"

#include <algorithm>

namespace paircode {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

namespace {

// D(n,l,L) with out-of-domain arguments treated as an empty count.
BigInt runs_count_or_zero(long long n, long long l, long long L) {
    if (!(n > l && l >= L && L >= 1)) return 0;
    BigInt num = BigInt(n) * binomial(l - 1, L - 1) * binomial(n - l - 1, L - 1);
    BigInt q, rem;
    boost::multiprecision::divide_qr(num, BigInt(L), q, rem);
    if (rem != 0) raise(ErrorKind::DomainError, "runs count is not integral");
    return q;
}

}  // namespace

BigInt runs_count(long long n, long long l, long long L) {
    if (!(n > l && l >= L && L >= 1)) raise(ErrorKind::DomainError, "runs_count requires n > l >= L >= 1");
    return runs_count_or_zero(n, l, L);
}

BigInt sphere_surface(long long n, long long i) {
    if (n < 1 || i < 0) raise(ErrorKind::DomainError, "sphere_surface requires n >= 1, i >= 0");
    if (i == 0) return 1;
    BigInt s = 0;
    for (long long l = (i + 1) / 2; l <= i - 1; ++l) s += runs_count_or_zero(n, l, i - l);
    // The run sum counts words with at least one zero; the all-ones word sits
    // at pair distance exactly n from the center.
    if (i == n) s += 1;
    return s;
}

BigInt ball_size(long long n, long long t) {
    if (n < 1 || t < 0) raise(ErrorKind::DomainError, "ball_size requires n >= 1, t >= 0");
    BigInt b = 1;
    for (long long i = 1; i <= std::min(t, n); ++i) b += sphere_surface(n, i);
    return b;
}

BigInt hamming_ball_size(long long n, long long t) {
    if (n < 1 || t < 0) raise(ErrorKind::DomainError, "hamming_ball_size requires n >= 1, t >= 0");
    BigInt b = 0;
    for (long long i = 0; i <= std::min(t, n); ++i) b += binomial(n, i);
    return b;
}

std::vector<BinaryWord> enumerate_pair_ball(const BinaryWord& x, int t) {
    const std::size_t n = x.size();
    if (n > 22) raise(ErrorKind::TooLarge, "pair ball enumeration is guarded at n <= 22");
    const unsigned un = static_cast<unsigned>(n);
    const std::uint64_t cx = x.value();
    std::vector<BinaryWord> ball;
    for (std::uint64_t v = 0; v < (1ULL << n); ++v)
        if (bits::pair_distance(cx, v, un) <= t) ball.push_back(BinaryWord::from_value(v, n));
    return ball;
}

BigInt sphere_packing_max(long long n, long long t) {
    if (n < 1 || t < 0) raise(ErrorKind::DomainError, "sphere_packing_max requires n >= 1, t >= 0");
    return BigInt(BigInt(1) << n) / ball_size(n, t);
}

BigInt singleton_pair_max(long long n, long long d_p) {
    if (!(2 <= d_p && d_p <= n)) raise(ErrorKind::DomainError, "singleton bound requires 2 <= d_p <= n");
    return BigInt(1) << (n - d_p + 2);
}

}  // namespace paircode
