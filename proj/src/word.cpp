#include "mg2/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>

#include <fmt/format.h>

namespace mg2 {

std::optional<Letter> letter_from_char(char c) noexcept
{
	switch (c)
	{
	case 'a':
		return Letter::a;
	case 'A':
		return Letter::A;
	case 'b':
		return Letter::b;
	case 'B':
		return Letter::B;
	default:
		return std::nullopt;
	}
}

namespace {

void push_reduced(std::vector<Letter> &out, Letter l)
{
	if (!out.empty() && out.back() == inverse(l))
		out.pop_back();
	else
		out.push_back(l);
}

void append_power(std::vector<Letter> &out, Letter gen, std::int64_t e)
{
	Letter l = e >= 0 ? gen : inverse(gen);
	for (std::int64_t i = 0, n = e >= 0 ? e : -e; i < n; ++i)
		push_reduced(out, l);
}

// Exponents in parsed text bound the materialized word length.
constexpr std::int64_t kMaxParseExponent = 1'000'000;

} // namespace

Word free_reduce(std::span<const Letter> letters)
{
	std::vector<Letter> out;
	out.reserve(letters.size());
	for (Letter l : letters)
		push_reduced(out, l);
	return Word::from_reduced(std::move(out));
}

Word::Word(std::span<const Letter> letters) { *this = free_reduce(letters); }

Word Word::from_reduced(std::vector<Letter> letters)
{
	Word w;
	w.letters_ = std::move(letters);
	return w;
}

Word Word::inverse() const
{
	std::vector<Letter> out;
	out.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		out.push_back(mg2::inverse(*it));
	return from_reduced(std::move(out));
}

Word operator*(const Word &lhs, const Word &rhs)
{
	std::vector<Letter> out = lhs.letters_;
	out.reserve(lhs.length() + rhs.length());
	for (Letter l : rhs.letters_)
		push_reduced(out, l);
	return Word::from_reduced(std::move(out));
}

std::string Word::str() const
{
	std::string s;
	s.reserve(letters_.size());
	for (Letter l : letters_)
		s.push_back(to_char(l));
	return s;
}

std::strong_ordering Word::operator<=>(const Word &other) const
{
	if (auto c = letters_.size() <=> other.letters_.size(); c != 0)
		return c;
	for (std::size_t i = 0; i < letters_.size(); ++i)
		if (auto c = static_cast<std::uint8_t>(letters_[i]) <=>
		             static_cast<std::uint8_t>(other.letters_[i]);
		    c != 0)
			return c;
	return std::strong_ordering::equal;
}

Word Word::parse(std::string_view text)
{
	bool exponent_syntax =
	    text.find_first_of(" \t^") != std::string_view::npos;

	std::vector<Letter> out;
	if (!exponent_syntax)
	{
		out.reserve(text.size());
		for (std::size_t i = 0; i < text.size(); ++i)
		{
			auto l = letter_from_char(text[i]);
			if (!l)
				throw WordParseError(
				    fmt::format("invalid letter '{}' at position {}",
				                text[i], i),
				    i);
			push_reduced(out, *l);
		}
		return from_reduced(std::move(out));
	}

	std::size_t i = 0;
	while (i < text.size())
	{
		if (text[i] == ' ' || text[i] == '\t')
		{
			++i;
			continue;
		}
		auto l = letter_from_char(text[i]);
		if (!l)
			throw WordParseError(
			    fmt::format("invalid letter '{}' at position {}", text[i], i),
			    i);
		++i;
		std::int64_t e = 1;
		if (i < text.size() && text[i] == '^')
		{
			++i;
			std::size_t start = i;
			if (i < text.size() && (text[i] == '-' || text[i] == '+'))
				++i;
			while (i < text.size() && std::isdigit(
			           static_cast<unsigned char>(text[i])))
				++i;
			auto res = std::from_chars(text.data() + start, text.data() + i, e);
			if (res.ec != std::errc{} || res.ptr != text.data() + i ||
			    start == i)
				throw WordParseError(
				    fmt::format("invalid exponent at position {}", start),
				    start);
			if (e > kMaxParseExponent || e < -kMaxParseExponent)
				throw WordParseError(
				    fmt::format("exponent at position {} exceeds |{}|",
				                start, kMaxParseExponent),
				    start);
		}
		// Uppercase letter with exponent means the inverse power.
		append_power(out, *l, e);
	}
	return from_reduced(std::move(out));
}

CyclicReduction cyclic_reduce(const Word &w)
{
	const auto &ls = w.letters();
	std::size_t lo = 0, hi = ls.size();
	while (hi - lo >= 2 && ls[lo] == inverse(ls[hi - 1]))
	{
		++lo;
		--hi;
	}
	CyclicReduction res;
	res.core = Word::from_reduced({ls.begin() + lo, ls.begin() + hi});
	res.conjugator = Word::from_reduced({ls.begin(), ls.begin() + lo});
	return res;
}

bool is_cyclically_reduced(const Word &w)
{
	return w.length() < 2 || w[0] != inverse(w[w.length() - 1]);
}

SyllableDecomposition syllables(const Word &w)
{
	SyllableDecomposition dec;
	dec.alpha.push_back(0);
	for (Letter l : w)
	{
		if (is_b_letter(l))
			dec.alpha.back() += sign_of(l);
		else
		{
			dec.eps.push_back(sign_of(l));
			dec.alpha.push_back(0);
		}
	}
	return dec;
}

Word reassemble(const SyllableDecomposition &dec)
{
	std::vector<Letter> out;
	append_power(out, Letter::b, dec.alpha[0]);
	for (std::size_t i = 0; i < dec.eps.size(); ++i)
	{
		append_power(out, Letter::a, dec.eps[i]);
		append_power(out, Letter::b, dec.alpha[i + 1]);
	}
	return free_reduce(out);
}

Word a_pow(std::int64_t e)
{
	std::vector<Letter> out;
	append_power(out, Letter::a, e);
	return Word::from_reduced(std::move(out));
}

Word b_pow(std::int64_t e)
{
	std::vector<Letter> out;
	append_power(out, Letter::b, e);
	return Word::from_reduced(std::move(out));
}

std::uint64_t reduced_word_count(int length)
{
	if (length <= 0)
		return length == 0 ? 1 : 0;
	std::uint64_t n = 4;
	for (int i = 1; i < length; ++i)
		n *= 3;
	return n;
}

WordEnumerator::WordEnumerator(int length, bool cyclic_only)
    : cyclic_only_(cyclic_only)
{
	if (length < 1)
		throw std::invalid_argument("enumeration length must be >= 1");
	cur_.assign(static_cast<std::size_t>(length), Letter::a);
	// "aaa...a" is reduced and cyclically reduced, so it is a valid start.
}

bool WordEnumerator::cyclic_ok() const
{
	return !cyclic_only_ || cur_.size() < 2 ||
	       cur_.front() != inverse(cur_.back());
}

bool WordEnumerator::advance()
{
	// Odometer in canonical letter order; position i may not hold the
	// inverse of position i-1.
	std::size_t n = cur_.size();
	std::size_t i = n;
	while (i > 0)
	{
		--i;
		Letter forbidden =
		    i > 0 ? inverse(cur_[i - 1]) : static_cast<Letter>(255);
		auto r = static_cast<std::uint8_t>(cur_[i]);
		bool moved = false;
		while (r < 3)
		{
			++r;
			if (static_cast<Letter>(r) != forbidden)
			{
				cur_[i] = static_cast<Letter>(r);
				moved = true;
				break;
			}
		}
		if (moved)
		{
			for (std::size_t j = i + 1; j < n; ++j)
			{
				Letter f = inverse(cur_[j - 1]);
				cur_[j] = f == Letter::a ? Letter::A : Letter::a;
			}
			return true;
		}
	}
	return false;
}

std::optional<Word> WordEnumerator::next()
{
	if (done_)
		return std::nullopt;
	if (fresh_)
		fresh_ = false;
	else if (!advance())
	{
		done_ = true;
		return std::nullopt;
	}
	while (!cyclic_ok())
	{
		if (!advance())
		{
			done_ = true;
			return std::nullopt;
		}
	}
	return Word::from_reduced(std::vector<Letter>(cur_));
}

} // namespace mg2
