#include "mg2/madic.hpp"

#include <charconv>
#include <vector>

#include <fmt/format.h>

namespace mg2 {

namespace {

void require_base(std::int64_t base)
{
	if (base == 1 || base == -1 || base == 0)
		throw DegenerateBaseError(fmt::format(
		    "base {} gives the zero ring (use kZeroRing); |base| >= 2 required",
		    base));
}

mpz_class pow_abs(std::int64_t base, int exponent)
{
	mpz_class p;
	mpz_class b = base < 0 ? -base : base;
	mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
	return p;
}

mpz_class math_mod(const mpz_class &x, const mpz_class &modulus)
{
	mpz_class r;
	mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
	return r;
}

void require_same_base(const MadicInt &x, const MadicInt &y)
{
	if (x.base() != y.base())
		throw std::invalid_argument(fmt::format(
		    "base mismatch: operands live in Z_{} and Z_{}", x.base(), y.base()));
}

} // namespace

MadicInt::MadicInt(std::int64_t base, int precision, const mpz_class &value)
    : base_(base), precision_(precision)
{
	require_base(base);
	if (precision < 1)
		throw std::invalid_argument(
		    fmt::format("precision {} < 1", precision));
	residue_ = math_mod(value, pow_abs(base, precision));
}

mpz_class MadicInt::modulus() const
{
	return pow_abs(base_, precision_);
}

mpz_class MadicInt::residue_at(int h) const
{
	if (h < 1 || h > precision_)
		throw std::invalid_argument(fmt::format(
		    "level {} outside [1, {}]", h, precision_));
	return math_mod(residue_, pow_abs(base_, h));
}

MadicInt MadicInt::truncated(int h) const
{
	return MadicInt(base_, h, residue_at(h));
}

bool abs_leq(const MadicValue &u, const MadicValue &v)
{
	if (!u.is_exact())
		return true;
	if (!v.is_exact())
		return false;
	return u.k >= v.k; // larger valuation exponent means smaller value
}

MadicInt from_integer(std::int64_t base, int precision, const mpz_class &x)
{
	return MadicInt(base, precision, x);
}

MadicInt add(const MadicInt &x, const MadicInt &y)
{
	require_same_base(x, y);
	int h = std::min(x.precision(), y.precision());
	return MadicInt(x.base(), h, x.residue() + y.residue());
}

MadicInt sub(const MadicInt &x, const MadicInt &y)
{
	require_same_base(x, y);
	int h = std::min(x.precision(), y.precision());
	return MadicInt(x.base(), h, x.residue() - y.residue());
}

MadicInt mul(const MadicInt &x, const MadicInt &y)
{
	require_same_base(x, y);
	int h = std::min(x.precision(), y.precision());
	return MadicInt(x.base(), h, x.residue() * y.residue());
}

MadicInt neg(const MadicInt &x)
{
	return MadicInt(x.base(), x.precision(), -x.residue());
}

MadicValue abs_m(const MadicInt &x)
{
	if (x.residue() == 0)
		return MadicValue::below();
	mpz_class b = x.base() < 0 ? -x.base() : x.base();
	mpz_class rest = x.residue();
	std::int64_t k = 0;
	while (mpz_divisible_p(rest.get_mpz_t(), b.get_mpz_t()))
	{
		rest /= b;
		++k;
	}
	return MadicValue::exact(k);
}

bool is_unit(const MadicInt &x)
{
	std::int64_t rest = x.base() < 0 ? -x.base() : x.base();
	for (std::int64_t p = 2; p * p <= rest; ++p)
	{
		if (rest % p != 0)
			continue;
		while (rest % p == 0)
			rest /= p;
		if (mpz_divisible_ui_p(x.residue().get_mpz_t(),
		                       static_cast<unsigned long>(p)))
			return false;
	}
	if (rest > 1 && mpz_divisible_ui_p(x.residue().get_mpz_t(),
	                                   static_cast<unsigned long>(rest)))
		return false;
	return true;
}

MadicValue madic_distance(const MadicInt &x, const MadicInt &y)
{
	require_same_base(x, y);
	if (x.precision() != y.precision())
		throw std::invalid_argument(fmt::format(
		    "precision mismatch: {} vs {}", x.precision(), y.precision()));
	return abs_m(sub(x, y));
}

MadicInt limit_of_sequence(std::int64_t base, int precision,
                           const std::function<mpz_class(std::int64_t)> &seq,
                           std::int64_t probe_budget)
{
	require_base(base);
	if (precision < 1)
		throw std::invalid_argument(fmt::format("precision {} < 1", precision));
	if (probe_budget < 1)
		throw std::invalid_argument(
		    fmt::format("probe budget {} < 1", probe_budget));

	std::int64_t window = (probe_budget + 3) / 4;
	mpz_class level_residue;
	for (int h = 1; h <= precision; ++h)
	{
		mpz_class modulus = pow_abs(base, h);
		mpz_class current;
		std::int64_t run = 0;
		bool fixed = false;
		for (std::int64_t j = 0; j < probe_budget; ++j)
		{
			mpz_class r = math_mod(seq(j), modulus);
			if (run > 0 && r == current)
				++run;
			else
			{
				current = r;
				run = 1;
			}
			if (run >= window)
			{
				fixed = true;
				break;
			}
		}
		if (!fixed)
			throw DivergenceError(
			    fmt::format("residues mod {}^{} did not stabilize over {} "
			                "consecutive probes within budget {}",
			                base < 0 ? -base : base, h, window, probe_budget),
			    h);
		level_residue = current;
	}
	return MadicInt(base, precision, level_residue);
}

namespace {

std::int64_t parse_spec_int(std::string_view spec, std::size_t &pos)
{
	std::size_t start = pos;
	if (pos < spec.size() && (spec[pos] == '-' || spec[pos] == '+'))
		++pos;
	while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9')
		++pos;
	std::int64_t v = 0;
	auto res = std::from_chars(spec.data() + start, spec.data() + pos, v);
	if (res.ec != std::errc{} || res.ptr != spec.data() + pos || start == pos)
		throw SequenceSpecError(
		    fmt::format("expected integer at position {} in sequence spec '{}'",
		                start, spec),
		    start);
	return v;
}

void expect_char(std::string_view spec, std::size_t &pos, char c)
{
	if (pos >= spec.size() || spec[pos] != c)
		throw SequenceSpecError(
		    fmt::format("expected '{}' at position {} in sequence spec '{}'", c,
		                pos, spec),
		    pos);
	++pos;
}

} // namespace

IntegerSequence parse_sequence_spec(std::string_view spec, std::int64_t base)
{
	IntegerSequence out;
	out.spec = std::string(spec);
	if (spec.starts_with("list:"))
	{
		std::size_t pos = 5;
		expect_char(spec, pos, '[');
		std::vector<mpz_class> values;
		if (pos < spec.size() && spec[pos] != ']')
		{
			values.emplace_back(parse_spec_int(spec, pos));
			while (pos < spec.size() && spec[pos] == ',')
			{
				++pos;
				values.emplace_back(parse_spec_int(spec, pos));
			}
		}
		expect_char(spec, pos, ']');
		if (pos != spec.size())
			throw SequenceSpecError(
			    fmt::format("trailing characters at position {} in sequence "
			                "spec '{}'",
			                pos, spec),
			    pos);
		if (values.empty())
			throw SequenceSpecError(
			    fmt::format("empty list in sequence spec '{}'", spec), 6);
		out.at = [values](std::int64_t j) {
			std::size_t i = j < 0 ? 0 : static_cast<std::size_t>(j);
			if (i >= values.size())
				i = values.size() - 1;
			return values[i];
		};
		return out;
	}

	std::size_t pos = 0;
	std::int64_t c = parse_spec_int(spec, pos);
	expect_char(spec, pos, '+');
	std::int64_t s = parse_spec_int(spec, pos);
	expect_char(spec, pos, '*');
	std::size_t m_pos = pos;
	std::int64_t m = parse_spec_int(spec, pos);
	expect_char(spec, pos, '^');
	expect_char(spec, pos, 'j');
	if (pos != spec.size())
		throw SequenceSpecError(
		    fmt::format("trailing characters at position {} in sequence "
		                "spec '{}'",
		                pos, spec),
		    pos);
	if (m != base)
		throw SequenceSpecError(
		    fmt::format("ratio {} must equal the base {} in sequence spec '{}'",
		                m, base, spec),
		    m_pos);
	out.at = [c, s, m](std::int64_t j) {
		mpz_class p;
		mpz_class mb = m;
		mpz_pow_ui(p.get_mpz_t(), mb.get_mpz_t(),
		           static_cast<unsigned long>(j < 0 ? 0 : j));
		return mpz_class(c + s * p);
	};
	return out;
}

} // namespace mg2
