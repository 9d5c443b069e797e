#include "mg2/wreath.hpp"

namespace mg2 {

namespace {

void add_at(WreathElement &e, std::int64_t pos, std::int64_t coeff)
{
	if (coeff == 0)
		return;
	auto [it, inserted] = e.support.try_emplace(pos, coeff);
	if (!inserted && (it->second += coeff) == 0)
		e.support.erase(it);
}

} // namespace

WreathElement compose(const WreathElement &lhs, const WreathElement &rhs)
{
	WreathElement out = lhs;
	out.shift += rhs.shift;
	for (const auto &[pos, coeff] : rhs.support)
		add_at(out, pos + lhs.shift, coeff);
	return out;
}

WreathElement eval_wreath(const Word &w)
{
	WreathElement e;
	for (Letter l : w)
	{
		if (is_b_letter(l))
			add_at(e, e.shift, sign_of(l));
		else
			e.shift += sign_of(l);
	}
	return e;
}

bool wreath_is_identity(const Word &w) { return eval_wreath(w).is_identity(); }

} // namespace mg2
