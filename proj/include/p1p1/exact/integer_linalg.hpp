#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace p1p1::exact {

using IntVec = std::vector<mpz_class>;
using IntRows = std::vector<IntVec>;

// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.
// Pivot choice is the first nonzero entry in column order, so the run is
// deterministic.
std::size_t bareiss_rank(IntRows rows, std::size_t cols);

// Fraction-free Gauss-Jordan form: every pivot row has the common value
// `denominator` in its pivot column and zeros in all other pivot columns.
struct IntEchelon {
    std::size_t cols = 0;
    std::vector<std::size_t> pivot_cols;
    IntRows rows;
    mpz_class denominator{1};

    std::size_t rank() const noexcept { return rows.size(); }
};

IntEchelon gauss_jordan(IntRows rows, std::size_t cols);

// Primitive integer basis of {x : A x = 0}, one vector per free column in
// increasing column order.
IntRows kernel_basis(const IntRows& rows, std::size_t cols);

// Divides by the gcd of the entries and makes the first nonzero positive.
void make_primitive(IntVec& v);

bool is_zero(const IntVec& v);

// Exact membership test against a fixed row space over Q.
class IntRowSpace {
public:
    IntRowSpace(IntRows generators, std::size_t cols);

    std::size_t dim() const noexcept { return echelon_.rank(); }
    bool contains(const IntVec& v) const;
    // Adds v to the generating set; returns false if it was already inside.
    bool add(const IntVec& v);

private:
    IntRows generators_;
    IntEchelon echelon_;
};

} // namespace p1p1::exact
