#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mg2 {

// Bases with |m| <= 1 give the zero ring, which is represented by the
// dedicated constant kZeroRing below, never by a MadicInt.
struct DegenerateBaseError : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

struct ZeroRing
{
	bool operator==(const ZeroRing &) const = default;
};
inline constexpr ZeroRing kZeroRing{};

// Truncated m-adic integer: the coherent tower of residues mod |m|^h for
// h <= precision, stored as the single top-level residue in [0, |m|^H).
// Lower levels are recovered by reduction, so coherence is automatic.
class MadicInt
{
public:
	// Normalizes value into [0, |base|^precision) with the mathematical mod.
	MadicInt(std::int64_t base, int precision, const mpz_class &value);

	std::int64_t base() const { return base_; }
	int precision() const { return precision_; }
	const mpz_class &residue() const { return residue_; }

	mpz_class modulus() const;         // |base|^precision
	mpz_class residue_at(int h) const; // residue mod |base|^h, 1 <= h <= precision
	MadicInt truncated(int h) const;   // same value at precision h <= precision()

	friend bool operator==(const MadicInt &x, const MadicInt &y)
	{
		return x.base_ == y.base_ && x.precision_ == y.precision_ &&
		       x.residue_ == y.residue_;
	}

private:
	std::int64_t base_;
	int precision_;
	mpz_class residue_;
};

// Absolute value (1/|m|)^k, or below_precision when the residue is 0 and the
// true value is indistinguishable from 0 at this precision.
struct MadicValue
{
	enum class Kind
	{
		exact_power,
		below_precision
	};

	Kind kind = Kind::below_precision;
	std::int64_t k = 0; // valuation exponent, meaningful only when exact

	static MadicValue exact(std::int64_t k) { return {Kind::exact_power, k}; }
	static MadicValue below() { return {}; }
	bool is_exact() const { return kind == Kind::exact_power; }

	bool operator==(const MadicValue &) const = default;
};

// |u| <= |v|, treating below_precision as smaller than every exact value.
bool abs_leq(const MadicValue &u, const MadicValue &v);

MadicInt from_integer(std::int64_t base, int precision, const mpz_class &x);

// Binary operations require equal bases; the result carries the smaller of
// the two precisions.
MadicInt add(const MadicInt &x, const MadicInt &y);
MadicInt sub(const MadicInt &x, const MadicInt &y);
MadicInt mul(const MadicInt &x, const MadicInt &y);
MadicInt neg(const MadicInt &x);

MadicValue abs_m(const MadicInt &x);

// True iff no prime factor of the base divides the residue.
bool is_unit(const MadicInt &x);

// Requires equal bases and equal precisions.
MadicValue madic_distance(const MadicInt &x, const MadicInt &y);

struct DivergenceError : std::runtime_error
{
	DivergenceError(const std::string &msg, int failing_level)
	    : std::runtime_error(msg), level(failing_level)
	{
	}

	int level; // first h whose residues mod |m|^h did not stabilize
};

// Probes seq(0), seq(1), ... and fixes the residue mod |m|^h, for h = 1..H in
// order, once it stays constant over ceil(probe_budget/4) consecutive probes.
// This is a heuristic stabilization detector: eventual constancy cannot be
// decided from finitely many terms, so the caller asserts it holds within the
// budget. Throws DivergenceError naming the first level that fails.
MadicInt limit_of_sequence(std::int64_t base, int precision,
                           const std::function<mpz_class(std::int64_t)> &seq,
                           std::int64_t probe_budget);

struct SequenceSpecError : std::invalid_argument
{
	SequenceSpecError(const std::string &msg, std::size_t pos)
	    : std::invalid_argument(msg), position(pos)
	{
	}

	std::size_t position;
};

struct IntegerSequence
{
	std::string spec;
	std::function<mpz_class(std::int64_t)> at; // defined for all j >= 0
};

// Accepts "C+S*M^j" (decimal integers C, S, M; M must equal base) or
// "list:[v0,v1,...]"; list indices past the end clamp to the last entry, so a
// finite list stands for its own eventually-constant tail.
IntegerSequence parse_sequence_spec(std::string_view spec, std::int64_t base);

} // namespace mg2
