#include "p1p1/exact/matrix.hpp"

#include "p1p1/error.hpp"

namespace p1p1::exact {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<mpq_class> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
    for (auto& e : entries_) e.canonicalize();
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
        for (long v : r) entries_.emplace_back(v);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
    return m;
}

ExactMatrix ExactMatrix::from_integer_rows(const IntRows& rows, std::size_t cols)
{
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row width differs from column count");
        for (std::size_t c = 0; c < cols; ++c) m.entries_[r * cols + c] = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::with_rows_permuted(std::span<const std::size_t> order) const
{
    if (order.size() != rows_) throw DimensionMismatch("row permutation has wrong length");
    ExactMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.entries_[r * cols_ + c] = (*this)(order[r], c);
    return m;
}

ExactMatrix ExactMatrix::with_cols_permuted(std::span<const std::size_t> order) const
{
    if (order.size() != cols_) throw DimensionMismatch("column permutation has wrong length");
    ExactMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.entries_[r * cols_ + c] = (*this)(r, order[c]);
    return m;
}

ExactMatrix ExactMatrix::vstack(std::span<const ExactMatrix> parts)
{
    if (parts.empty()) return {};
    const std::size_t cols = parts.front().cols();
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols)
            throw DimensionMismatch("cannot stack matrices with " + std::to_string(p.cols()) +
                                    " and " + std::to_string(cols) + " columns");
        rows += p.rows();
    }
    ExactMatrix m(rows, cols);
    std::size_t at = 0;
    for (const auto& p : parts)
        for (const auto& e : p.entries_) m.entries_[at++] = e;
    return m;
}

IntRows ExactMatrix::integer_rows() const
{
    IntRows out(rows_, IntVec(cols_));
    mpz_class lcm;
    for (std::size_t r = 0; r < rows_; ++r) {
        lcm = 1;
        for (std::size_t c = 0; c < cols_; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*this)(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols_; ++c) {
            const mpq_class& q = (*this)(r, c);
            out[r][c] = lcm / q.get_den() * q.get_num();
        }
        make_primitive(out[r]);
    }
    return out;
}

ModRows ExactMatrix::modular_rows(const PrimeField& f) const
{
    ModRows out(rows_, ModVec(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = f.from_rational((*this)(r, c));
    return out;
}

std::size_t rank(const ExactMatrix& m, const FieldSpec& field, RankMethod method)
{
    if (!field.is_rational()) {
        const PrimeField f = field.prime_field();
        return rank_mod(m.modular_rows(f), m.cols(), f);
    }
    if (method == RankMethod::bareiss) return bareiss_rank(m.integer_rows(), m.cols());
    return rank_certified(m.integer_rows(), m.cols());
}

std::size_t kernel_dim(const ExactMatrix& m, const FieldSpec& field)
{
    return m.cols() - rank(m, field);
}

std::size_t rowspace_sum_dim(std::span<const ExactMatrix> parts, const FieldSpec& field)
{
    return rank(ExactMatrix::vstack(parts), field);
}

} // namespace p1p1::exact
