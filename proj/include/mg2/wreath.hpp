#pragma once

#include <cstdint>
#include <map>

#include "mg2/word.hpp"

namespace mg2 {

// Element of Z wr Z = Z x (direct sum of Z over Z), marked by a = (1, 0)
// and b = (0, e_0) with e_0 the Dirac mass at 0. Positions and coefficients
// are bounded by the word length, so plain integers suffice.
struct WreathElement {
	std::int64_t shift = 0;
	// position -> nonzero coefficient
	std::map<std::int64_t, std::int64_t> support;

	bool is_identity() const noexcept { return shift == 0 && support.empty(); }
	bool operator==(const WreathElement &) const = default;
};

// Semidirect product law: shifts add, supports add after translating the
// right factor by the left shift.
WreathElement compose(const WreathElement &lhs, const WreathElement &rhs);

// Image of w under the marking homomorphism, by left-to-right state
// accumulation: each a^{+-1} moves the cursor, each b^{+-1} adds +-1 at the
// cursor position.
WreathElement eval_wreath(const Word &w);

bool wreath_is_identity(const Word &w);

} // namespace mg2
