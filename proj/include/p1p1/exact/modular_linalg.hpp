#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "p1p1/exact/integer_linalg.hpp"
#include "p1p1/exact/prime_field.hpp"

namespace p1p1::exact {

using ModVec = std::vector<std::uint32_t>;
using ModRows = std::vector<ModVec>;

ModVec reduce(const IntVec& v, const PrimeField& f);
ModRows reduce(const IntRows& rows, const PrimeField& f);

std::size_t rank_mod(ModRows rows, std::size_t cols, const PrimeField& f);

// Basis of the right kernel over F_p, one vector per free column, with the
// free coordinate set to 1.
ModRows kernel_basis_mod(const ModRows& rows, std::size_t cols, const PrimeField& f);

// Incrementally maintained echelon basis over F_p. Each stored row has a
// leading 1 and is zero in the pivot columns of all earlier rows.
class ModEchelon {
public:
    ModEchelon(std::size_t cols, PrimeField field) : cols_(cols), field_(field) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    // Returns true and stores the reduced vector when v is independent.
    bool insert(ModVec v);
    bool contains(ModVec v) const;

private:
    void reduce_in_place(ModVec& v) const;

    std::size_t cols_;
    PrimeField field_;
    ModRows rows_;
    std::vector<std::size_t> pivots_;
};

// Rank over Q of an integer matrix. A rank computed modulo a prime is a
// lower bound for the rational rank, and min(rows, cols) is an upper
// bound; when the two meet the modular result is returned, otherwise the
// matrix goes through Bareiss elimination.
std::size_t rank_certified(const IntRows& rows, std::size_t cols);

} // namespace p1p1::exact
