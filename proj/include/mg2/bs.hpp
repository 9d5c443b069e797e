#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "mg2/word.hpp"

namespace mg2 {

// Baumslag-Solitar group BS(m,n) = <a,b | a b^m a^-1 = b^n>, marked by (a,b).
struct BSGroup {
	std::int64_t m;
	std::int64_t n;

	BSGroup(std::int64_t m_, std::int64_t n_) : m(m_), n(n_)
	{
		if (m == 0 || n == 0)
			throw std::invalid_argument("BS(m,n) requires m != 0 and n != 0");
	}

	bool operator==(const BSGroup &) const = default;
};

// Pinch-free form b^{alpha_0} a^{eps_1} b^{alpha_1} ... a^{eps_k} b^{alpha_k}.
// Exponents are unbounded: pinching multiplies by n/m repeatedly.
struct SyllableForm {
	std::vector<mpz_class> alpha; // size k+1
	std::vector<int> eps;         // size k

	std::size_t a_count() const noexcept { return eps.size(); }
	bool a_free() const noexcept { return eps.empty(); }
};

// Reduces w in BS(m,n) by leftmost-first pinching:
//   a b^t a^-1 with m | t  ->  b^{t n / m}
//   a^-1 b^t a with n | t  ->  b^{t m / n}
// The result contains no pinchable subword.
SyllableForm britton_reduce(const BSGroup &G, const Word &w);

// Reassembles a syllable form into a Word; guards against forms whose
// exponents would materialize absurdly many letters.
Word to_word(const SyllableForm &form, std::size_t max_letters = 1'000'000);

// Word problem: true iff w = 1 in BS(m,n). Decided by Britton reduction
// alone (a-free form with exponent 0).
bool is_identity(const BSGroup &G, const Word &w);

// The exponent t with w = b^t in BS(m,n), when w lies in <b>; nullopt when
// the pinch-free form still contains a-letters (Britton's Lemma: then
// w is not in <b>).
std::optional<mpz_class> b_exponent(const BSGroup &G, const Word &w);

// x -> slope * x + offset with exact rational coefficients.
struct AffineMapQ {
	mpq_class slope = 1;
	mpq_class offset = 0;

	bool is_identity_map() const { return slope == 1 && offset == 0; }
	bool operator==(const AffineMapQ &) const = default;
};

// Image of w under a -> (x -> (n/m) x), b -> (x -> x+1); composition in
// word order (leftmost letter outermost).
AffineMapQ affine_rep(const BSGroup &G, const Word &w);

// Data of the exponent-sum polynomial of w: with syllable levels
// sigma_0 = 0, sigma_i = eps_1 + ... + eps_i, the polynomial
// P(y) = sum_i alpha_i y^{sigma_i - min_sigma} collected per level.
// For every BS(m,n), the affine image of w is
//   x -> q^{sigma_total} x + q^{min_sigma} P(q)   with q = n/m.
struct WordPolynomial {
	std::int64_t sigma_total = 0;
	std::int64_t min_sigma = 0;
	// shifted degree (sigma_i - min_sigma, always >= 0) -> coefficient sum;
	// zero sums are dropped, so the zero polynomial has an empty map.
	std::map<std::int64_t, std::int64_t> coeffs;

	bool is_zero() const noexcept { return coeffs.empty(); }
	bool operator==(const WordPolynomial &) const = default;
};

WordPolynomial word_polynomial(const Word &w);

// Evaluates the quoted identity at q = n/m, reproducing affine_rep(G, w).
AffineMapQ evaluate_word_polynomial(const WordPolynomial &p, const BSGroup &G);

// A length that may be infinite (no relation found / free base group).
class ExtInt {
  public:
	constexpr ExtInt(std::int64_t v) : finite_(true), v_(v) {}
	static constexpr ExtInt infinity() { return ExtInt(); }

	constexpr bool is_infinite() const { return !finite_; }
	constexpr std::int64_t value() const
	{
		if (!finite_)
			throw std::logic_error("value() on infinite ExtInt");
		return v_;
	}

	friend constexpr ExtInt operator+(ExtInt x, ExtInt y)
	{
		if (x.is_infinite() || y.is_infinite())
			return infinity();
		return ExtInt(x.v_ + y.v_);
	}
	friend constexpr ExtInt min(ExtInt x, ExtInt y)
	{
		if (x.is_infinite())
			return y;
		if (y.is_infinite())
			return x;
		return x.v_ <= y.v_ ? x : y;
	}
	friend constexpr bool operator==(ExtInt x, ExtInt y)
	{
		return x.finite_ == y.finite_ && (!x.finite_ || x.v_ == y.v_);
	}

  private:
	constexpr ExtInt() : finite_(false), v_(0) {}
	bool finite_;
	std::int64_t v_;
};

// g_{BS(m,n)} = min{|m|+|n|+2, 2|m|+6, 2|n|+6}.
std::int64_t girth_formula(std::int64_t m, std::int64_t n);

// Three relations realizing the candidate lengths:
//   a b^m a^-1 b^-n               (|m|+|n|+2)
//   a b^m a^-1 b a b^-m a^-1 b^-1 (2|m|+6)
//   a^-1 b^n a b a^-1 b^-n a b^-1 (2|n|+6)
struct GirthWitnesses {
	Word first;
	Word second;
	Word third;
};

GirthWitnesses girth_witnesses(std::int64_t m, std::int64_t n);

struct GirthResult {
	std::optional<std::int64_t> girth; // nullopt: no relation up to the cap
	std::optional<Word> witness;       // first relation in canonical order
	std::int64_t searched_cap = 0;
};

struct MarkedGroupOracle; // space module

// Scans cyclically reduced words by increasing length, canonical order
// within a length, for the shortest trivial one. Sound: triviality is
// conjugation-invariant and cyclic reduction shortens.
GirthResult girth_bruteforce(const MarkedGroupOracle &oracle,
                             std::int64_t cap);

// Bounds for g_Gamma of an HNN-extension of a base with girth g_H over
// subgroups with shortest nontrivial elements of length alpha resp. beta.
struct HNNBoundInputs {
	ExtInt g_H;
	ExtInt alpha;
	ExtInt beta;
};

struct HNNGirthBounds {
	ExtInt lower;
	ExtInt upper;
};

// lower = min{g_H, alpha+beta+2, 2 alpha+6, 2 beta+6}, upper = g_H.
HNNGirthBounds hnn_girth_bounds(const HNNBoundInputs &inp);

} // namespace mg2
