#include "p1p1/exact/prime_field.hpp"

#include <charconv>

#include "p1p1/error.hpp"

namespace p1p1::exact {

bool is_prime_u32(std::uint32_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p < 3 || p >= (1u << 31) || !is_prime_u32(p))
        throw InvalidInput("prime field modulus must be an odd prime below 2^31, got " +
                           std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept
{
    std::uint32_t result = 1 % p_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const
{
    if (a % p_ == 0) throw InvalidInput("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_integer(const mpz_class& z) const
{
    return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p_));
}

std::uint32_t PrimeField::from_int(std::int64_t v) const
{
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::from_rational(const mpq_class& q) const
{
    std::uint32_t den = from_integer(q.get_den());
    if (den == 0)
        throw InvalidInput("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
    return mul(from_integer(q.get_num()), inv(den));
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    PrimeField check(p);
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    if (text == "rationals" || text == "Q" || text == "rational") return rationals();
    if (text == "prime") return prime(default_prime);
    const std::string prefix = "prime:";
    if (text.rfind(prefix, 0) == 0) {
        std::uint64_t p = 0;
        const char* first = text.data() + prefix.size();
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc{} || ptr != last || p > 0xffffffffu)
            throw InvalidInput("cannot parse prime in field spec '" + text + "'");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw InvalidInput("unknown field '" + text + "' (expected rationals or prime:<p>)");
}

PrimeField FieldSpec::prime_field() const
{
    if (is_rational()) throw InvalidInput("rational field has no modulus");
    return PrimeField(p_);
}

void FieldSpec::require_multiplicity_guard(int max_multiplicity) const
{
    if (is_rational()) return;
    if (static_cast<std::int64_t>(p_) <= 2 * static_cast<std::int64_t>(max_multiplicity))
        throw InvalidInput("prime " + std::to_string(p_) + " too small for multiplicity " +
                           std::to_string(max_multiplicity) + " (need p > " +
                           std::to_string(2 * max_multiplicity) + ")");
}

std::string FieldSpec::to_string() const
{
    return is_rational() ? "rationals" : "prime:" + std::to_string(p_);
}

} // namespace p1p1::exact
