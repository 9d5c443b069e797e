#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mg2/bs.hpp"
#include "mg2/word.hpp"

namespace mg2 {

// A group with a fixed marking, exposed through its word problem. decide is
// total: true iff the word maps to the identity.
struct MarkedGroupOracle {
	std::string name;
	std::function<bool(const Word &)> decide;
};

struct OracleSpecError : std::invalid_argument {
	std::size_t position;
	OracleSpecError(const std::string &what, std::size_t pos)
	    : std::invalid_argument(what), position(pos)
	{
	}
};

// Accepted specs: "free", "wreath", "bs:M,N" (decimal integers, nonzero).
// Malformed specs are rejected with the offending position.
MarkedGroupOracle make_oracle(std::string_view spec);

MarkedGroupOracle free_oracle();
MarkedGroupOracle wreath_oracle();
MarkedGroupOracle bs_oracle(std::int64_t m, std::int64_t n);

struct DisagreementResult {
	enum class Kind { found, agree_up_to };
	Kind kind;
	std::int64_t lambda = 0;      // when found: length of the witness
	std::optional<Word> witness;  // trivial in exactly one of the two groups
	std::int64_t searched_up_to = 0;

	bool found() const noexcept { return kind == Kind::found; }
};

// Shortest word trivial in exactly one of the two groups, scanning
// cyclically reduced words by increasing length then canonical order.
// Sufficient: triviality is conjugation-invariant in both groups and cyclic
// reduction shortens, so some shortest disagreeing word is cyclically
// reduced.
DisagreementResult first_disagreement(const MarkedGroupOracle &g1,
                                      const MarkedGroupOracle &g2,
                                      std::int64_t max_len);

// The marked-group distance d(G1,G2) = e^{-lambda}, reported symbolically:
// the exact exponent when a disagreement exists within the cap, otherwise
// the bound "distance <= e^{-(max_len+1)}".
struct DistanceExponent {
	bool exact;          // false: only the bound below is known
	std::int64_t lambda; // exact exponent, or max_len + 1 as a bound
	std::optional<Word> witness;
};

DistanceExponent distance_exponent(const MarkedGroupOracle &g1,
                                   const MarkedGroupOracle &g2,
                                   std::int64_t max_len);

// All cyclically reduced trivial words of length <= max_len, canonical
// order (length-major).
std::vector<Word> relations_up_to(const MarkedGroupOracle &oracle,
                                  std::int64_t max_len);

// Truth profile of decide(w) across an indexed family of oracles.
struct StabilizationReport {
	std::int64_t lo = 0;
	std::int64_t hi = 0;
	std::vector<bool> values;               // values[i] for index lo + i
	bool trailing_half_constant = false;
	std::optional<std::int64_t> last_flip;  // absolute index of last change
};

StabilizationReport
stabilization_check(const std::function<MarkedGroupOracle(std::int64_t)> &family,
                    const Word &w, std::int64_t lo, std::int64_t hi);

} // namespace mg2
