#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "paircode/word.hpp"

namespace paircode {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long n, long long k);

/// D(n,l,L): number of length-n words of Hamming weight l whose ones form L
/// cyclic runs. Requires n > l >= L >= 1; evaluated with exact integer
/// arithmetic, dividing by L last.
BigInt runs_count(long long n, long long l, long long L);

/// S(n,i): number of words at pair distance exactly i from a fixed center.
/// S(n,0) = 1 and S(n,1) = 0 for n >= 2; the complement word (the only word
/// at distance n not covered by the run sum) is accounted for at i = n.
BigInt sphere_surface(long long n, long long i);

/// B(n,t): number of words at pair distance at most t from a fixed center.
BigInt ball_size(long long n, long long t);

/// Hamming ball volume sum_{i<=t} C(n,i); used by the Hamming-metric bounds.
BigInt hamming_ball_size(long long n, long long t);

/// All words within pair distance t of x, by full scan. Guarded at |x| <= 22.
std::vector<BinaryWord> enumerate_pair_ball(const BinaryWord& x, int t);

/// Sphere Packing bound: largest M with M * B(n,t) <= 2^n.
BigInt sphere_packing_max(long long n, long long t);

/// Singleton bound for minimum pair distance d_p: M <= 2^(n - d_p + 2).
BigInt singleton_pair_max(long long n, long long d_p);

}  // namespace paircode
