#include "mg2/congruence.hpp"

#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace mg2 {

namespace {

mpz_class pow_i64(std::int64_t base, int exponent)
{
	mpz_class p;
	mpz_class b = base;
	mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
	return p;
}

} // namespace

mpz_class CongruenceModulus::modulus(int h) const
{
	if (h < 0)
		throw std::invalid_argument(fmt::format("negative level {}", h));
	return pow_i64(m1, h) * d;
}

CongruenceModulus congruence_modulus(std::int64_t m, std::int64_t n)
{
	if (m == 0 || n == 0)
		throw std::invalid_argument("congruence_modulus requires m, n nonzero");
	CongruenceModulus cm;
	cm.negated = m < 0;
	cm.m = cm.negated ? -m : m;
	cm.n = cm.negated ? -n : n;
	cm.d = std::gcd(cm.m, cm.n);
	cm.m1 = cm.m / cm.d;
	cm.n1 = cm.n / cm.d;
	return cm;
}

Word congruence_witness_word(std::int64_t m, std::int64_t k, int h)
{
	if (m == 0)
		throw std::invalid_argument("witness word requires m != 0");
	if (h < 1)
		throw std::invalid_argument(fmt::format("witness word requires h >= 1, got {}", h));
	if (k < 0)
		throw std::invalid_argument(fmt::format("witness word requires k >= 0, got {}", k));
	return a_pow(h + 1) * b_pow(m) * a_pow(-1) * b_pow(-k) * a_pow(-h) *
	       b_pow(1) * a_pow(h + 1) * b_pow(-m) * a_pow(-1) * b_pow(k) *
	       a_pow(-h) * b_pow(-1);
}

bool congruence_predicate(std::int64_t m, std::int64_t n, int h, std::int64_t k)
{
	if (h < 1)
		throw std::invalid_argument(fmt::format("predicate requires h >= 1, got {}", h));
	if (n > -2 && n < 2)
		throw std::invalid_argument(
		    fmt::format("predicate requires |n| >= 2, got n={}", n));
	CongruenceModulus cm = congruence_modulus(m, n);
	mpz_class diff = mpz_class(cm.n) - k;
	mpz_class mod = cm.modulus(h);
	return mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t()) != 0;
}

DivisionChain division_chain(std::int64_t m, std::int64_t n,
                             std::int64_t n_prime, int h)
{
	if (m == 0)
		throw std::invalid_argument("division chain requires m != 0");
	if (h < 1)
		throw std::invalid_argument(fmt::format("division chain requires h >= 1, got {}", h));
	if (m < 0)
	{
		m = -m;
		n = -n;
		n_prime = -n_prime;
	}

	mpz_class diff = mpz_class(n) - n_prime;
	for (int i = 1; i <= h; ++i)
	{
		mpz_class level = pow_i64(m, i);
		if (!mpz_divisible_p(diff.get_mpz_t(), level.get_mpz_t()))
			throw std::invalid_argument(fmt::format(
			    "division chain needs n == n' mod {}^{}; {} and {} first "
			    "differ at level {}",
			    m, h, n, n_prime, i));
	}

	DivisionChain chain;
	chain.h = h;
	chain.s.assign(1, mpz_class(1));
	chain.s_prime.assign(1, mpz_class(1));
	mpz_class mz = m;
	for (int i = 1; i <= h; ++i)
	{
		mpz_class t = chain.s.back() * n;
		mpz_class rem;
		mpz_mod(rem.get_mpz_t(), t.get_mpz_t(), mz.get_mpz_t());
		chain.r.push_back(rem.get_si());
		chain.s.push_back((t - rem) / mz);

		mpz_class t_prime = chain.s_prime.back() * n_prime - rem;
		if (!mpz_divisible_p(t_prime.get_mpz_t(), mz.get_mpz_t()))
			throw std::logic_error("shared remainder failed to divide exactly");
		chain.s_prime.push_back(t_prime / mz);
	}
	return chain;
}

std::int64_t continuity_modulus(std::int64_t m, int h)
{
	if (m < 2)
		throw std::invalid_argument(
		    fmt::format("continuity modulus requires m >= 2, got {}", m));
	if (h < 1)
		throw std::invalid_argument(
		    fmt::format("continuity modulus requires h >= 1, got {}", h));
	mpz_class value = 2 * pow_i64(m, h) + 4 * h + 2 * m + 4;
	if (!value.fits_slong_p())
		throw std::overflow_error(
		    fmt::format("continuity modulus for m={}, h={} overflows", m, h));
	return value.get_si();
}

} // namespace mg2
