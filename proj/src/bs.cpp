#include "mg2/bs.hpp"

#include <algorithm>

#include "mg2/space.hpp"

namespace mg2 {

namespace {

bool divides(std::int64_t d, const mpz_class &x)
{
	return mpz_divisible_ui_p(x.get_mpz_t(),
	                          static_cast<unsigned long>(d < 0 ? -d : d)) != 0;
}

} // namespace

SyllableForm britton_reduce(const BSGroup &G, const Word &w)
{
	// Stack of syllables; processing letters left to right applies pinches
	// leftmost-first (a pinch fires as soon as its closing a-letter is
	// consumed, and candidates sharing an a-letter resolve left one first).
	SyllableForm f;
	f.alpha.emplace_back(0);
	for (Letter l : w)
	{
		if (is_b_letter(l))
		{
			f.alpha.back() += sign_of(l);
			continue;
		}
		int e = sign_of(l);
		if (!f.eps.empty() && f.eps.back() == -e)
		{
			mpz_class &t = f.alpha.back();
			if (e < 0 && divides(G.m, t))
			{
				// a b^t a^-1 -> b^{t n/m}
				mpz_class merged = t / G.m * G.n;
				f.alpha.pop_back();
				f.eps.pop_back();
				f.alpha.back() += merged;
				continue;
			}
			if (e > 0 && divides(G.n, t))
			{
				// a^-1 b^t a -> b^{t m/n}
				mpz_class merged = t / G.n * G.m;
				f.alpha.pop_back();
				f.eps.pop_back();
				f.alpha.back() += merged;
				continue;
			}
		}
		f.eps.push_back(e);
		f.alpha.emplace_back(0);
	}
	return f;
}

Word to_word(const SyllableForm &form, std::size_t max_letters)
{
	mpz_class total = 0;
	for (const auto &t : form.alpha)
		total += abs(t);
	total += static_cast<unsigned long>(form.eps.size());
	if (total > static_cast<unsigned long>(max_letters))
		throw std::length_error("syllable form too large to materialize");

	std::vector<Letter> out;
	auto push = [&out](Letter l) {
		if (!out.empty() && out.back() == inverse(l))
			out.pop_back();
		else
			out.push_back(l);
	};
	auto push_b = [&](const mpz_class &t) {
		Letter l = t >= 0 ? Letter::b : Letter::B;
		for (mpz_class i = 0, n = abs(t); i < n; ++i)
			push(l);
	};
	push_b(form.alpha[0]);
	for (std::size_t i = 0; i < form.eps.size(); ++i)
	{
		push(form.eps[i] > 0 ? Letter::a : Letter::A);
		push_b(form.alpha[i + 1]);
	}
	return free_reduce(out);
}

bool is_identity(const BSGroup &G, const Word &w)
{
	SyllableForm f = britton_reduce(G, w);
	return f.a_free() && f.alpha[0] == 0;
}

std::optional<mpz_class> b_exponent(const BSGroup &G, const Word &w)
{
	SyllableForm f = britton_reduce(G, w);
	if (!f.a_free())
		return std::nullopt;
	return f.alpha[0];
}

AffineMapQ affine_rep(const BSGroup &G, const Word &w)
{
	mpq_class q(mpz_class(G.n), mpz_class(G.m));
	q.canonicalize();
	mpq_class q_inv(mpz_class(G.m), mpz_class(G.n));
	q_inv.canonicalize();

	AffineMapQ acc;
	for (Letter l : w)
	{
		// acc := acc o psi(l); (p,q) o (p',q') = (p p', p q' + q).
		if (is_b_letter(l))
			acc.offset += sign_of(l) > 0 ? acc.slope : -acc.slope;
		else
			acc.slope *= sign_of(l) > 0 ? q : q_inv;
	}
	return acc;
}

WordPolynomial word_polynomial(const Word &w)
{
	SyllableDecomposition dec = syllables(w);
	std::int64_t sigma = 0;
	std::int64_t min_sigma = 0;
	std::vector<std::int64_t> levels(dec.alpha.size());
	levels[0] = 0;
	for (std::size_t i = 0; i < dec.eps.size(); ++i)
	{
		sigma += dec.eps[i];
		levels[i + 1] = sigma;
		min_sigma = std::min(min_sigma, sigma);
	}

	WordPolynomial p;
	p.sigma_total = sigma;
	p.min_sigma = min_sigma;
	for (std::size_t i = 0; i < dec.alpha.size(); ++i)
	{
		if (dec.alpha[i] == 0)
			continue;
		std::int64_t deg = levels[i] - min_sigma;
		auto [it, inserted] = p.coeffs.try_emplace(deg, dec.alpha[i]);
		if (!inserted && (it->second += dec.alpha[i]) == 0)
			p.coeffs.erase(it);
	}
	return p;
}

namespace {

mpq_class mpq_pow(const mpq_class &q, std::int64_t e)
{
	mpq_class base = q;
	if (e < 0)
	{
		base = mpq_class(q.get_den(), q.get_num());
		base.canonicalize();
		e = -e;
	}
	mpq_class r = 1;
	for (std::int64_t i = 0; i < e; ++i)
		r *= base;
	return r;
}

} // namespace

AffineMapQ evaluate_word_polynomial(const WordPolynomial &p, const BSGroup &G)
{
	mpq_class q(mpz_class(G.n), mpz_class(G.m));
	q.canonicalize();
	mpq_class value = 0;
	for (const auto &[deg, c] : p.coeffs)
		value += c * mpq_pow(q, deg);
	AffineMapQ f;
	f.slope = mpq_pow(q, p.sigma_total);
	f.offset = mpq_pow(q, p.min_sigma) * value;
	return f;
}

std::int64_t girth_formula(std::int64_t m, std::int64_t n)
{
	if (m == 0 || n == 0)
		throw std::invalid_argument("girth_formula requires m, n nonzero");
	std::int64_t am = m < 0 ? -m : m, an = n < 0 ? -n : n;
	return std::min({am + an + 2, 2 * am + 6, 2 * an + 6});
}

GirthWitnesses girth_witnesses(std::int64_t m, std::int64_t n)
{
	if (m == 0 || n == 0)
		throw std::invalid_argument("girth_witnesses requires m, n nonzero");
	GirthWitnesses w;
	w.first = a_pow(1) * b_pow(m) * a_pow(-1) * b_pow(-n);
	w.second = a_pow(1) * b_pow(m) * a_pow(-1) * b_pow(1) * a_pow(1) *
	           b_pow(-m) * a_pow(-1) * b_pow(-1);
	w.third = a_pow(-1) * b_pow(n) * a_pow(1) * b_pow(1) * a_pow(-1) *
	          b_pow(-n) * a_pow(1) * b_pow(-1);
	return w;
}

GirthResult girth_bruteforce(const MarkedGroupOracle &oracle, std::int64_t cap)
{
	if (cap < 1)
		throw std::invalid_argument("girth_bruteforce requires cap >= 1");
	GirthResult res;
	res.searched_cap = cap;
	for (std::int64_t L = 1; L <= cap; ++L)
	{
		WordEnumerator en(static_cast<int>(L), /*cyclic_only=*/true);
		while (auto w = en.next())
		{
			if (oracle.decide(*w))
			{
				res.girth = L;
				res.witness = std::move(*w);
				return res;
			}
		}
	}
	return res;
}

HNNGirthBounds hnn_girth_bounds(const HNNBoundInputs &inp)
{
	ExtInt lower = min(min(inp.g_H, inp.alpha + inp.beta + ExtInt(2)),
	                   min(inp.alpha + inp.alpha + ExtInt(6),
	                       inp.beta + inp.beta + ExtInt(6)));
	return HNNGirthBounds{lower, inp.g_H};
}

} // namespace mg2
