#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mg2 {

// Letters of the free group on {a, b}. Uppercase denotes the inverse, as in
// the compact text format ("abbABBB" = a b^2 a^-1 b^-3). The enum order is
// the canonical letter order a < a^-1 < b < b^-1 used by enumeration and
// witness tie-breaking.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

constexpr Letter inverse(Letter l) noexcept
{
	return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1);
}

constexpr bool is_b_letter(Letter l) noexcept
{
	return static_cast<std::uint8_t>(l) >= 2;
}

// +1 for a generator, -1 for its inverse.
constexpr int sign_of(Letter l) noexcept
{
	return (static_cast<std::uint8_t>(l) & 1) ? -1 : +1;
}

constexpr char to_char(Letter l) noexcept
{
	return "aAbB"[static_cast<std::uint8_t>(l)];
}

std::optional<Letter> letter_from_char(char c) noexcept;

struct WordParseError : std::invalid_argument {
	std::size_t position;
	WordParseError(const std::string &what, std::size_t pos)
	    : std::invalid_argument(what), position(pos)
	{
	}
};

// A freely reduced word over {a, a^-1, b, b^-1}. Immutable value type; the
// empty word is the identity. All constructors reduce, so the no-adjacent-
// inverse invariant always holds.
class Word {
  public:
	Word() = default;
	explicit Word(std::span<const Letter> letters);

	// Unchecked: caller guarantees `letters` is already freely reduced.
	static Word from_reduced(std::vector<Letter> letters);

	// Compact ("abbABBB") or whitespace-separated exponent syntax
	// ("a b^2 a^-1 b^-3"). Throws WordParseError.
	static Word parse(std::string_view text);

	std::size_t length() const noexcept { return letters_.size(); }
	bool empty() const noexcept { return letters_.empty(); }
	Letter operator[](std::size_t i) const { return letters_[i]; }
	const std::vector<Letter> &letters() const noexcept { return letters_; }
	auto begin() const noexcept { return letters_.begin(); }
	auto end() const noexcept { return letters_.end(); }

	Word inverse() const;

	// Concatenation in F2 (reduces at the seam).
	friend Word operator*(const Word &lhs, const Word &rhs);

	// Compact serialization; always the compact form, "" for the identity.
	std::string str() const;

	bool operator==(const Word &) const = default;

	// Shortlex in the canonical letter order: length first, then
	// position-wise letter rank.
	std::strong_ordering operator<=>(const Word &other) const;

  private:
	std::vector<Letter> letters_;
};

// Freely reduces an arbitrary letter sequence. Idempotent.
Word free_reduce(std::span<const Letter> letters);

struct CyclicReduction {
	Word core;       // cyclically reduced
	Word conjugator; // original == conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word &w);

bool is_cyclically_reduced(const Word &w);

// b^{alpha_0} a^{eps_1} b^{alpha_1} ... a^{eps_k} b^{alpha_k};
// k = eps.size(), alpha.size() == k + 1.
struct SyllableDecomposition {
	std::vector<std::int64_t> alpha;
	std::vector<int> eps;

	std::size_t a_count() const noexcept { return eps.size(); }
};

SyllableDecomposition syllables(const Word &w);
Word reassemble(const SyllableDecomposition &dec);

// a^e resp. b^e as a word (e may be negative or zero).
Word a_pow(std::int64_t e);
Word b_pow(std::int64_t e);

// Number of freely reduced words of length exactly L (4 * 3^{L-1}).
std::uint64_t reduced_word_count(int length);

// Streams every freely reduced word of the given length exactly once, in
// canonical order, deterministically. With cyclic_only, words whose first
// and last letters are mutually inverse are skipped (order preserved).
class WordEnumerator {
  public:
	WordEnumerator(int length, bool cyclic_only = false);

	// nullopt once exhausted.
	std::optional<Word> next();

  private:
	bool advance();
	bool cyclic_ok() const;

	std::vector<Letter> cur_;
	bool cyclic_only_ = false;
	bool fresh_ = true;
	bool done_ = false;
};

// Convenience: f(const Word&) -> bool (false stops early). Returns false if
// stopped early.
template <typename F> bool for_each_reduced(int length, bool cyclic_only, F &&f)
{
	WordEnumerator en(length, cyclic_only);
	while (auto w = en.next())
	{
		if (!f(*w))
			return false;
	}
	return true;
}

} // namespace mg2
