#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "mg2/word.hpp"

namespace mg2 {

// gcd data for a parameter pair (m,n), normalized to m > 0 through the
// marked-group equality BS(m,n) = BS(-m,-n).
struct CongruenceModulus
{
	std::int64_t m = 0, n = 0; // after normalization: m > 0
	std::int64_t d = 0;        // gcd(m,n) > 0
	std::int64_t m1 = 0;       // m = d*m1
	std::int64_t n1 = 0;       // n = d*n1, gcd(m1,n1) = 1
	bool negated = false;      // both signs were flipped to make m positive

	mpz_class modulus(int h) const; // m1^h * d
};

CongruenceModulus congruence_modulus(std::int64_t m, std::int64_t n);

// The word a^{h+1} b^m a^{-1} b^{-k} a^{-h} b a^{h+1} b^{-m} a^{-1} b^k
// a^{-h} b^{-1}, freely reduced, of length 4h + 2|m| + 2k + 6.
// Trivial in BS(m,n) exactly when congruence_predicate(m, n, h, k) holds.
Word congruence_witness_word(std::int64_t m, std::int64_t k, int h);

// n == k mod m1^h*d, computed after normalizing to m > 0. Requires |n| >= 2.
bool congruence_predicate(std::int64_t m, std::int64_t n, int h, std::int64_t k);

// The unique solution of the coupled division scheme
//   s_{i-1}*n  = s_i*m  + r_i
//   s'_{i-1}*n' = s'_i*m + r_i      with s_0 = s'_0 = 1, 0 <= r_i < m,
// which exists when n == n' mod m^h and then satisfies
// s_i == s'_i mod m^{h-i} for every i.
struct DivisionChain
{
	int h = 0;
	std::vector<mpz_class> s;       // s_0..s_h
	std::vector<mpz_class> s_prime; // s'_0..s'_h
	std::vector<std::int64_t> r;    // r_1..r_h
};

// Negative m is normalized away by flipping the signs of m, n and n'.
// Throws when n != n' mod m^h, naming the smallest violated level.
DivisionChain division_chain(std::int64_t m, std::int64_t n,
                             std::int64_t n_prime, int h);

// 2m^h + 4h + 2m + 4: dominates the length of every witness word with
// 0 <= k <= m^h - 1, so two groups agreeing up to this radius share all of
// them. Requires m >= 2, h >= 1.
std::int64_t continuity_modulus(std::int64_t m, int h);

} // namespace mg2
