#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "p1p1/error.hpp"
#include "p1p1/exact/integer_linalg.hpp"
#include "p1p1/exact/matrix.hpp"
#include "p1p1/exact/modular_linalg.hpp"
#include "p1p1/exact/prime_field.hpp"
#include "p1p1/fat/rng.hpp"

using namespace p1p1;
using namespace p1p1::exact;

namespace {

// Textbook Gaussian elimination over Q, kept deliberately naive.
std::size_t naive_rank(const ExactMatrix& m)
{
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

ExactMatrix random_matrix(fat::SplitMix64& rng, std::size_t rows, std::size_t cols, int spread, bool fractions)
{
    std::vector<mpq_class> e;
    for (std::size_t k = 0; k < rows * cols; ++k) {
        long num = static_cast<long>(rng.uniform(2 * spread)) - spread;
        if (rng.uniform(2) == 0) num = 0; // sparse enough to be rank deficient sometimes
        long den = fractions ? static_cast<long>(rng.uniform(6)) + 1 : 1;
        mpq_class q(num, den);
        q.canonicalize();
        e.push_back(q);
    }
    return ExactMatrix(rows, cols, std::move(e));
}

// Builds a rows x cols matrix of known rank as a product of random factors.
ExactMatrix product_of_rank(fat::SplitMix64& rng, std::size_t rows, std::size_t cols, std::size_t k)
{
    std::vector<mpq_class> e(rows * cols);
    std::vector<std::vector<long>> L(rows, std::vector<long>(k)), R(k, std::vector<long>(cols));
    for (auto& row : L)
        for (auto& v : row) v = static_cast<long>(rng.uniform(20)) - 10;
    for (auto& row : R)
        for (auto& v : row) v = static_cast<long>(rng.uniform(20)) - 10;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            long s = 0;
            for (std::size_t t = 0; t < k; ++t) s += L[r][t] * R[t][c];
            e[r * cols + c] = s;
        }
    return ExactMatrix(rows, cols, std::move(e));
}

} // namespace

TEST_CASE("prime field arithmetic")
{
    const PrimeField f(101);
    CHECK(f.add(100, 5) == 4);
    CHECK(f.sub(3, 5) == 99);
    CHECK(f.mul(f.inv(37), 37) == 1);
    CHECK(f.pow(2, 100) == 1); // Fermat
    CHECK(f.from_int(-1) == 100);
    CHECK(f.from_rational(mpq_class(1, 2)) == 51);
    CHECK_THROWS_AS(f.inv(0), InvalidInput);
    CHECK_THROWS_AS(f.from_rational(mpq_class(1, 101)), InvalidInput);
    CHECK(is_prime_u32(default_prime));
    CHECK(is_prime_u32(screening_prime));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(2147483649u));
}

TEST_CASE("field specs parse and guard")
{
    CHECK(FieldSpec::parse("rationals").is_rational());
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("prime").modulus() == default_prime);
    CHECK(FieldSpec::parse("prime:101").modulus() == 101);
    CHECK_THROWS_AS(FieldSpec::parse("prime:100"), InvalidInput);
    CHECK_THROWS_AS(FieldSpec::parse("reals"), InvalidInput);
    CHECK_THROWS_AS(FieldSpec::prime(7).require_multiplicity_guard(9), InvalidInput);
    CHECK_NOTHROW(FieldSpec::prime(19).require_multiplicity_guard(9));
    CHECK_NOTHROW(FieldSpec::rationals().require_multiplicity_guard(1000));
}

TEST_CASE("rank of small matrices")
{
    CHECK(rank(ExactMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(ExactMatrix::identity(5)) == 5);
    CHECK(rank(ExactMatrix::zeros(3, 4)) == 0);
    CHECK(rank(ExactMatrix(0, 3)) == 0);
    CHECK(kernel_dim(ExactMatrix{{1, 1, 1}}) == 2);
    // Rank 2 over Q, rank 1 mod 3.
    const ExactMatrix m{{1, 1}, {1, 4}};
    CHECK(rank(m) == 2);
    CHECK(rank(m, FieldSpec::prime(3)) == 1);
    CHECK(rank(m, FieldSpec::rationals(), RankMethod::bareiss) == 2);
}

TEST_CASE("rank agrees with a naive rational elimination")
{
    fat::SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = 1 + rng.uniform(7), cols = 1 + rng.uniform(7);
        const auto m = random_matrix(rng, rows, cols, 5, trial % 2 == 0);
        const auto expected = naive_rank(m);
        CHECK(rank(m) == expected);
        CHECK(rank(m, FieldSpec::rationals(), RankMethod::bareiss) == expected);
    }
}

TEST_CASE("rank of products with known rank, including the modular fallback path")
{
    fat::SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 3 + rng.uniform(8), cols = 3 + rng.uniform(8);
        const std::size_t k = rng.uniform(std::min(rows, cols));
        const auto m = product_of_rank(rng, rows, cols, k);
        CHECK(rank(m) == naive_rank(m));
        CHECK(rank(m) <= k);
    }
}

TEST_CASE("rank invariants: transpose, permutations, Q versus F_p")
{
    fat::SplitMix64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rows = 1 + rng.uniform(6), cols = 1 + rng.uniform(6);
        const auto m = random_matrix(rng, rows, cols, 4, false);
        std::vector<std::size_t> rp(m.rows()), cp(m.cols());
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::reverse(rp.begin(), rp.end());
        std::rotate(cp.begin(), cp.begin() + static_cast<long>(rng.uniform(cp.size() - 1)), cp.end());
        const auto r = rank(m);
        CHECK(rank(m.transpose()) == r);
        CHECK(rank(m.with_rows_permuted(rp)) == r);
        CHECK(rank(m.with_cols_permuted(cp)) == r);
        CHECK(rank(m, FieldSpec::prime(5)) <= r);
        CHECK(rank(m, FieldSpec::prime(default_prime)) == r);
    }
}

TEST_CASE("kernel basis spans the kernel")
{
    fat::SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rows = 1 + rng.uniform(5), cols = 1 + rng.uniform(7);
        const auto m = random_matrix(rng, rows, cols, 4, false);
        const auto ints = m.integer_rows();
        const auto ker = kernel_basis(ints, cols);
        CHECK(ker.size() == cols - rank(m));
        for (const auto& v : ker) {
            for (const auto& row : ints) {
                mpz_class dot;
                for (std::size_t c = 0; c < cols; ++c) dot += row[c] * v[c];
                CHECK(dot == 0);
            }
            mpz_class g;
            for (const auto& x : v) g = gcd(g, x);
            CHECK(g == 1);
        }
        if (!ker.empty()) CHECK(bareiss_rank(ker, cols) == ker.size());
        const auto kmod = kernel_basis_mod(reduce(ints, PrimeField(default_prime)), cols, PrimeField(default_prime));
        CHECK(kmod.size() == ker.size());
    }
}

TEST_CASE("row spaces: membership and sums")
{
    IntRows gens{{1, 0, 1}, {0, 1, 1}};
    IntRowSpace space(gens, 3);
    CHECK(space.dim() == 2);
    CHECK(space.contains({2, 3, 5}));
    CHECK_FALSE(space.contains({0, 0, 1}));
    CHECK_FALSE(space.add({1, 1, 2}));
    CHECK(space.add({0, 0, 1}));
    CHECK(space.dim() == 3);

    const ExactMatrix a{{1, 0, 0}}, b{{0, 1, 0}}, c{{1, 1, 0}};
    const std::vector<ExactMatrix> parts{a, b, c};
    CHECK(rowspace_sum_dim(parts) == 2);
    CHECK(rowspace_sum_dim(std::span(parts.data(), 1)) == 1);
    const std::vector<ExactMatrix> bad{a, ExactMatrix{{1, 0}}};
    CHECK_THROWS_AS(rowspace_sum_dim(bad), DimensionMismatch);
    CHECK_THROWS_AS(ExactMatrix::vstack(bad), DimensionMismatch);
}

TEST_CASE("modular echelon")
{
    const PrimeField f(7);
    ModEchelon e(3, f);
    CHECK(e.insert({1, 2, 3}));
    CHECK_FALSE(e.insert({2, 4, 6}));
    CHECK(e.insert({0, 1, 0}));
    CHECK(e.contains({1, 3, 3}));
    CHECK_FALSE(e.contains({0, 0, 1}));
    CHECK(e.rank() == 2);
}

TEST_CASE("certified rank on a tall matrix with full modular rank")
{
    fat::SplitMix64 rng(17);
    const auto m = random_matrix(rng, 30, 12, 50, false);
    CHECK(rank_certified(m.integer_rows(), 12) == naive_rank(m));
}
