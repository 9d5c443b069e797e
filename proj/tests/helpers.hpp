#pragma once

#include <random>
#include <vector>

#include "mg2/word.hpp"

namespace mg2::test {

// Uniform letters, not reduced.
inline std::vector<Letter> random_letters(std::mt19937_64 &rng, std::size_t len)
{
	std::uniform_int_distribution<int> pick(0, 3);
	std::vector<Letter> out;
	out.reserve(len);
	for (std::size_t i = 0; i < len; ++i)
		out.push_back(static_cast<Letter>(pick(rng)));
	return out;
}

// Uniform over freely reduced words of exactly this length.
inline Word random_reduced_word(std::mt19937_64 &rng, std::size_t len)
{
	std::uniform_int_distribution<int> first(0, 3), rest(0, 2);
	std::vector<Letter> out;
	out.reserve(len);
	for (std::size_t i = 0; i < len; ++i)
	{
		if (out.empty())
		{
			out.push_back(static_cast<Letter>(first(rng)));
			continue;
		}
		Letter banned = inverse(out.back());
		int want = rest(rng);
		for (int c = 0; c < 4; ++c)
		{
			Letter l = static_cast<Letter>(c);
			if (l == banned)
				continue;
			if (want-- == 0)
			{
				out.push_back(l);
				break;
			}
		}
	}
	return Word::from_reduced(std::move(out));
}

} // namespace mg2::test
