#include "mg2/space.hpp"

#include <charconv>

#include <fmt/format.h>

#include "mg2/wreath.hpp"

namespace mg2 {

MarkedGroupOracle free_oracle()
{
	// Words are stored freely reduced, so only the empty word is trivial.
	return {"free", [](const Word &w) { return w.empty(); }};
}

MarkedGroupOracle wreath_oracle()
{
	return {"wreath", [](const Word &w) { return wreath_is_identity(w); }};
}

MarkedGroupOracle bs_oracle(std::int64_t m, std::int64_t n)
{
	BSGroup G(m, n);
	return {fmt::format("bs:{},{}", m, n),
	        [G](const Word &w) { return is_identity(G, w); }};
}

namespace {

std::int64_t parse_int_at(std::string_view spec, std::size_t &pos)
{
	std::size_t start = pos;
	if (pos < spec.size() && (spec[pos] == '-' || spec[pos] == '+'))
		++pos;
	while (pos < spec.size() && spec[pos] >= '0' && spec[pos] <= '9')
		++pos;
	std::int64_t v = 0;
	auto res = std::from_chars(spec.data() + start, spec.data() + pos, v);
	if (res.ec != std::errc{} || res.ptr != spec.data() + pos || start == pos)
		throw OracleSpecError(
		    fmt::format("expected integer at position {} in group spec '{}'",
		                start, spec),
		    start);
	return v;
}

} // namespace

MarkedGroupOracle make_oracle(std::string_view spec)
{
	if (spec == "free")
		return free_oracle();
	if (spec == "wreath")
		return wreath_oracle();
	if (spec.starts_with("bs:"))
	{
		std::size_t pos = 3;
		std::int64_t m = parse_int_at(spec, pos);
		if (pos >= spec.size() || spec[pos] != ',')
			throw OracleSpecError(
			    fmt::format("expected ',' at position {} in group spec '{}'",
			                pos, spec),
			    pos);
		++pos;
		std::int64_t n = parse_int_at(spec, pos);
		if (pos != spec.size())
			throw OracleSpecError(
			    fmt::format("trailing characters at position {} in group "
			                "spec '{}'",
			                pos, spec),
			    pos);
		if (m == 0 || n == 0)
			throw OracleSpecError(
			    fmt::format("bs parameters must be nonzero in '{}'", spec), 3);
		return bs_oracle(m, n);
	}
	throw OracleSpecError(
	    fmt::format("unknown group spec '{}' (expected \"free\", \"wreath\" "
	                "or \"bs:M,N\")",
	                spec),
	    0);
}

DisagreementResult first_disagreement(const MarkedGroupOracle &g1,
                                      const MarkedGroupOracle &g2,
                                      std::int64_t max_len)
{
	if (max_len < 1)
		throw std::invalid_argument("first_disagreement requires max_len >= 1");
	DisagreementResult res;
	res.kind = DisagreementResult::Kind::agree_up_to;
	res.searched_up_to = max_len;
	for (std::int64_t L = 1; L <= max_len; ++L)
	{
		WordEnumerator en(static_cast<int>(L), /*cyclic_only=*/true);
		while (auto w = en.next())
		{
			if (g1.decide(*w) != g2.decide(*w))
			{
				res.kind = DisagreementResult::Kind::found;
				res.lambda = L;
				res.witness = std::move(*w);
				return res;
			}
		}
	}
	return res;
}

DistanceExponent distance_exponent(const MarkedGroupOracle &g1,
                                   const MarkedGroupOracle &g2,
                                   std::int64_t max_len)
{
	DisagreementResult d = first_disagreement(g1, g2, max_len);
	if (d.found())
		return {true, d.lambda, std::move(d.witness)};
	return {false, max_len + 1, std::nullopt};
}

std::vector<Word> relations_up_to(const MarkedGroupOracle &oracle,
                                  std::int64_t max_len)
{
	if (max_len < 1)
		throw std::invalid_argument("relations_up_to requires max_len >= 1");
	std::vector<Word> out;
	for (std::int64_t L = 1; L <= max_len; ++L)
	{
		WordEnumerator en(static_cast<int>(L), /*cyclic_only=*/true);
		while (auto w = en.next())
			if (oracle.decide(*w))
				out.push_back(std::move(*w));
	}
	return out;
}

StabilizationReport
stabilization_check(const std::function<MarkedGroupOracle(std::int64_t)> &family,
                    const Word &w, std::int64_t lo, std::int64_t hi)
{
	if (hi < lo)
		throw std::invalid_argument("stabilization_check window is empty");
	StabilizationReport rep;
	rep.lo = lo;
	rep.hi = hi;
	rep.values.reserve(static_cast<std::size_t>(hi - lo + 1));
	for (std::int64_t i = lo; i <= hi; ++i)
		rep.values.push_back(family(i).decide(w));
	for (std::size_t i = 1; i < rep.values.size(); ++i)
		if (rep.values[i] != rep.values[i - 1])
			rep.last_flip = lo + static_cast<std::int64_t>(i);
	std::size_t half = rep.values.size() / 2;
	rep.trailing_half_constant = true;
	for (std::size_t i = half + 1; i < rep.values.size(); ++i)
		if (rep.values[i] != rep.values[half])
			rep.trailing_half_constant = false;
	return rep;
}

} // namespace mg2
