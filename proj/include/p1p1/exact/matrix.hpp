#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "p1p1/exact/integer_linalg.hpp"
#include "p1p1/exact/modular_linalg.hpp"
#include "p1p1/exact/prime_field.hpp"

namespace p1p1::exact {

// Dense matrix of rationals, row-major. Immutable once built.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<mpq_class> entries);
    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ExactMatrix from_integer_rows(const IntRows& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    ExactMatrix transpose() const;
    ExactMatrix with_rows_permuted(std::span<const std::size_t> order) const;
    ExactMatrix with_cols_permuted(std::span<const std::size_t> order) const;
    static ExactMatrix vstack(std::span<const ExactMatrix> parts);

    // Each row scaled by the lcm of its denominators, then made primitive.
    IntRows integer_rows() const;
    // Entries mapped into F_p; throws if a denominator vanishes mod p.
    ModRows modular_rows(const PrimeField& f) const;

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> entries_;
};

enum class RankMethod {
    automatic, // modular certificate when it is conclusive, Bareiss otherwise
    bareiss,   // always fraction-free elimination (rational field only)
};

std::size_t rank(const ExactMatrix& m, const FieldSpec& field = FieldSpec::rationals(),
                 RankMethod method = RankMethod::automatic);

std::size_t kernel_dim(const ExactMatrix& m, const FieldSpec& field = FieldSpec::rationals());

// Dimension of the sum of the row spaces. Throws DimensionMismatch when
// column counts differ.
std::size_t rowspace_sum_dim(std::span<const ExactMatrix> parts,
                             const FieldSpec& field = FieldSpec::rationals());

} // namespace p1p1::exact
