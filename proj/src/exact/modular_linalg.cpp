#include "p1p1/exact/modular_linalg.hpp"

#include <algorithm>
#include <utility>

#include "p1p1/error.hpp"

namespace p1p1::exact {

ModVec reduce(const IntVec& v, const PrimeField& f)
{
    ModVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.from_integer(v[i]);
    return out;
}

ModRows reduce(const IntRows& rows, const PrimeField& f)
{
    ModRows out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(reduce(r, f));
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_mod(ModRows& a, std::size_t cols, const PrimeField& f, bool full)
{
    for (const auto& r : a)
        if (r.size() != cols) throw DimensionMismatch("row width differs from column count");
    const std::size_t n = a.size();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t p = rank;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[rank]);
        ModVec& pr = a[rank];
        const std::uint32_t inv = f.inv(pr[c]);
        for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
        for (std::size_t i = full ? 0 : rank + 1; i < n; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const std::uint32_t factor = a[i][c];
            ModVec& row = a[i];
            for (std::size_t j = c; j < cols; ++j)
                if (pr[j] != 0) row[j] = f.sub(row[j], f.mul(factor, pr[j]));
        }
        pivots.push_back(c);
        ++rank;
    }
    a.resize(rank);
    return pivots;
}

} // namespace

std::size_t rank_mod(ModRows rows, std::size_t cols, const PrimeField& f)
{
    return rref_mod(rows, cols, f, false).size();
}

ModRows kernel_basis_mod(const ModRows& rows, std::size_t cols, const PrimeField& f)
{
    ModRows a = rows;
    auto pivots = rref_mod(a, cols, f, true);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    ModRows basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ModVec v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < a.size(); ++k) v[pivots[k]] = f.neg(a[k][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

void ModEchelon::reduce_in_place(ModVec& v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::uint32_t coeff = v[pivots_[k]];
        if (coeff == 0) continue;
        const ModVec& row = rows_[k];
        for (std::size_t j = pivots_[k]; j < cols_; ++j)
            if (row[j] != 0) v[j] = field_.sub(v[j], field_.mul(coeff, row[j]));
    }
}

bool ModEchelon::insert(ModVec v)
{
    if (v.size() != cols_) throw DimensionMismatch("vector width differs from echelon basis");
    reduce_in_place(v);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    const std::uint32_t inv = field_.inv(*it);
    for (std::size_t j = pivot; j < cols_; ++j) v[j] = field_.mul(v[j], inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool ModEchelon::contains(ModVec v) const
{
    if (v.size() != cols_) throw DimensionMismatch("vector width differs from echelon basis");
    reduce_in_place(v);
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::size_t rank_certified(const IntRows& rows, std::size_t cols)
{
    const std::size_t bound = std::min(rows.size(), cols);
    if (bound == 0) return 0;
    const PrimeField f(screening_prime);
    if (rank_mod(reduce(rows, f), cols, f) == bound) return bound;
    return bareiss_rank(rows, cols);
}

} // namespace p1p1::exact
