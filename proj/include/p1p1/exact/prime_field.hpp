#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace p1p1::exact {

// Arithmetic in F_p for an odd prime p < 2^31. Elements are plain
// uint32_t residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    // Throws InvalidInput on zero.
    std::uint32_t inv(std::uint32_t a) const;

    std::uint32_t from_integer(const mpz_class& z) const;
    std::uint32_t from_int(std::int64_t v) const;
    // Throws InvalidInput when p divides the denominator.
    std::uint32_t from_rational(const mpq_class& q) const;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

// 2^31 - 1; the default modulus for prime-field runs.
inline constexpr std::uint32_t default_prime = 2147483647u;

// Used internally to certify ranks over Q; kept distinct from
// default_prime so rational/prime consistency checks are not circular.
inline constexpr std::uint32_t screening_prime = 2147483629u;

// Which field a computation runs over.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(std::uint32_t p);
    // Accepts "rationals", "Q", "prime", "prime:<p>".
    static FieldSpec parse(const std::string& text);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint32_t modulus() const noexcept { return p_; }
    PrimeField prime_field() const;
    // Throws InvalidInput unless p > 2 * max_multiplicity (rationals always pass).
    void require_multiplicity_guard(int max_multiplicity) const;

    std::string to_string() const;
    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

} // namespace p1p1::exact
