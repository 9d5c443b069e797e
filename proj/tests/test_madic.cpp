#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "mg2/madic.hpp"

using namespace mg2;

namespace {

mpz_class random_mpz(std::mt19937_64 &rng)
{
	// Mix small values with ones far beyond any modulus in play.
	std::uniform_int_distribution<std::int64_t> small(-2000, 2000);
	switch (rng() % 3)
	{
	case 0:
		return mpz_class(small(rng));
	case 1:
		return mpz_class(static_cast<long>(static_cast<std::int32_t>(rng())));
	default: {
		mpz_class big;
		mpz_ui_pow_ui(big.get_mpz_t(), 7, 40 + rng() % 10);
		return (rng() % 2 ? big : -big) + small(rng);
	}
	}
}

} // namespace

TEST_CASE("residues normalize with the mathematical mod")
{
	CHECK(from_integer(2, 4, 12).residue() == 12);
	CHECK(from_integer(2, 3, 12).residue() == 4);
	CHECK(from_integer(3, 2, -1).residue() == 8);
	CHECK(from_integer(-2, 3, 5).residue() == 5);
	CHECK(from_integer(-2, 3, -1).residue() == 7);

	MadicInt x = from_integer(2, 4, 12);
	CHECK(x.modulus() == 16);
	CHECK(x.residue_at(2) == 0);
	CHECK(x.residue_at(4) == 12);
	CHECK(x.truncated(2) == from_integer(2, 2, 12));
	CHECK_THROWS_AS(x.residue_at(0), std::invalid_argument);
	CHECK_THROWS_AS(x.residue_at(5), std::invalid_argument);
}

TEST_CASE("degenerate bases name the zero ring")
{
	for (std::int64_t m : {0, 1, -1})
	{
		CHECK_THROWS_AS(from_integer(m, 2, 5), DegenerateBaseError);
		CHECK_THROWS_AS(MadicInt(m, 2, 5), DegenerateBaseError);
	}
	CHECK(kZeroRing == ZeroRing{});
	CHECK_THROWS_AS(from_integer(2, 0, 5), std::invalid_argument);
}

TEST_CASE("arithmetic truncates to the smaller precision")
{
	CHECK(add(from_integer(2, 4, 7), from_integer(2, 4, 9)).residue() == 0);
	CHECK(mul(from_integer(2, 4, 3), from_integer(2, 4, 5)).residue() == 15);

	// Zero divisors are part of the ring when the base is composite.
	MadicInt p = mul(from_integer(6, 2, 2), from_integer(6, 2, 3));
	CHECK(p.residue() == 6);
	CHECK(mul(from_integer(6, 2, 6), from_integer(6, 2, 6)).residue() == 0);

	MadicInt mixed = add(from_integer(2, 4, 7), from_integer(2, 2, 1));
	CHECK(mixed.precision() == 2);
	CHECK(mixed.residue() == 0);

	CHECK_THROWS_AS(add(from_integer(2, 3, 1), from_integer(3, 3, 1)),
	                std::invalid_argument);
	CHECK_THROWS_AS(mul(from_integer(2, 3, 1), from_integer(-2, 3, 1)),
	                std::invalid_argument);
}

TEST_CASE("absolute value and units")
{
	CHECK(abs_m(from_integer(2, 5, 12)) == MadicValue::exact(2));
	CHECK(abs_m(from_integer(2, 5, 1)) == MadicValue::exact(0));
	CHECK(abs_m(from_integer(2, 5, 0)) == MadicValue::below());
	CHECK(abs_m(from_integer(2, 3, 8)) == MadicValue::below());

	CHECK(is_unit(from_integer(2, 3, 3)));
	CHECK(!is_unit(from_integer(2, 3, 2)));
	CHECK(is_unit(from_integer(6, 3, 5)));
	CHECK(!is_unit(from_integer(6, 3, 3)));
	CHECK(is_unit(from_integer(10, 3, 7)));
	CHECK(!is_unit(from_integer(10, 3, 5)));

	CHECK(abs_leq(MadicValue::below(), MadicValue::exact(7)));
	CHECK(abs_leq(MadicValue::exact(2), MadicValue::exact(1)));
	CHECK(!abs_leq(MadicValue::exact(1), MadicValue::exact(2)));
	CHECK(abs_leq(MadicValue::below(), MadicValue::below()));
}

TEST_CASE("distance requires matching tower and is ultrametric")
{
	CHECK(madic_distance(from_integer(2, 4, 3), from_integer(2, 4, 3)) ==
	      MadicValue::below());
	CHECK(madic_distance(from_integer(2, 4, 1), from_integer(2, 4, 3)) ==
	      MadicValue::exact(1));
	CHECK(madic_distance(from_integer(2, 4, 1), from_integer(2, 4, 9)) ==
	      MadicValue::exact(3));
	CHECK_THROWS_AS(
	    madic_distance(from_integer(2, 4, 1), from_integer(2, 3, 1)),
	    std::invalid_argument);
	CHECK_THROWS_AS(
	    madic_distance(from_integer(2, 4, 1), from_integer(3, 4, 1)),
	    std::invalid_argument);

	std::mt19937_64 rng(97);
	for (int iter = 0; iter < 2000; ++iter)
	{
		MadicInt x = from_integer(2, 6, random_mpz(rng));
		MadicInt y = from_integer(2, 6, random_mpz(rng));
		MadicInt z = from_integer(2, 6, random_mpz(rng));
		MadicValue dxz = madic_distance(x, z);
		CHECK((abs_leq(dxz, madic_distance(x, y)) ||
		       abs_leq(dxz, madic_distance(y, z))));
	}
}

TEST_CASE("ring laws hold for random residues over several bases")
{
	std::mt19937_64 rng(1234);
	for (std::int64_t base : {2, -2, 3, 10})
	{
		for (int iter = 0; iter < 1500; ++iter)
		{
			int H = 1 + static_cast<int>(rng() % 8);
			mpz_class xv = random_mpz(rng), yv = random_mpz(rng),
			          zv = random_mpz(rng);
			MadicInt x = from_integer(base, H, xv);
			MadicInt y = from_integer(base, H, yv);
			MadicInt z = from_integer(base, H, zv);

			CHECK(add(x, y) == add(y, x));
			CHECK(mul(x, y) == mul(y, x));
			CHECK(add(add(x, y), z) == add(x, add(y, z)));
			CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
			CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
			CHECK(add(x, neg(x)).residue() == 0);
			CHECK(sub(x, y) == add(x, neg(y)));

			// Reduction commutes with the integer operations.
			CHECK(add(x, y) == from_integer(base, H, xv + yv));
			CHECK(mul(x, y) == from_integer(base, H, xv * yv));
			CHECK(abs_m(neg(x)) == abs_m(x));

			// The residue tower is coherent under truncation.
			int h = 1 + static_cast<int>(rng() % H);
			CHECK(x.truncated(h) == from_integer(base, h, xv));

			mpz_class g;
			mpz_class b(base < 0 ? -base : base);
			mpz_gcd(g.get_mpz_t(), x.residue().get_mpz_t(), b.get_mpz_t());
			CHECK(is_unit(x) == (g == 1));
		}
	}
}

TEST_CASE("sequence limits stabilize level by level")
{
	MadicInt l = limit_of_sequence(
	    2, 4, [](std::int64_t j) { return 3 + (mpz_class(1) << j); }, 64);
	CHECK(l.residue() == 3);
	CHECK(l.precision() == 4);

	l = limit_of_sequence(3, 3, [](std::int64_t) { return mpz_class(7); }, 16);
	CHECK(l.residue() == 7);

	try
	{
		limit_of_sequence(
		    2, 2, [](std::int64_t j) { return mpz_class(j % 2 ? -1 : 1); },
		    16);
		FAIL("alternating sequence must not converge");
	}
	catch (const DivergenceError &e)
	{
		CHECK(e.level == 2);
		CHECK(std::strstr(e.what(), "2^2") != nullptr);
	}
}

TEST_CASE("sequence specs parse and evaluate")
{
	IntegerSequence s = parse_sequence_spec("3+1*2^j", 2);
	CHECK(s.at(0) == 4);
	CHECK(s.at(4) == 19);

	s = parse_sequence_spec("-5+3*-2^j", -2);
	CHECK(s.at(0) == -2);
	CHECK(s.at(1) == -11);
	CHECK(s.at(2) == 7);

	s = parse_sequence_spec("list:[4,5,7]", 2);
	CHECK(s.at(0) == 4);
	CHECK(s.at(2) == 7);
	CHECK(s.at(9) == 7); // clamps to the final entry

	CHECK_THROWS_AS(parse_sequence_spec("3+1*3^j", 2), SequenceSpecError);
	CHECK_THROWS_AS(parse_sequence_spec("3+1*2^k", 2), SequenceSpecError);
	CHECK_THROWS_AS(parse_sequence_spec("3+", 2), SequenceSpecError);
	CHECK_THROWS_AS(parse_sequence_spec("list:[]", 2), SequenceSpecError);
	CHECK_THROWS_AS(parse_sequence_spec("list:[1,2", 2), SequenceSpecError);

	try
	{
		parse_sequence_spec("3+1*5^j", 2);
		FAIL("ratio mismatch must be rejected");
	}
	catch (const SequenceSpecError &e)
	{
		CHECK(e.position == 4);
	}

	// A geometric spec in its own base always converges to C.
	MadicInt l =
	    limit_of_sequence(5, 3, parse_sequence_spec("2+7*5^j", 5).at, 40);
	CHECK(l == from_integer(5, 3, 2));
}
