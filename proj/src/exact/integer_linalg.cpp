#include "p1p1/exact/integer_linalg.hpp"

#include <utility>

#include "p1p1/error.hpp"

namespace p1p1::exact {

namespace {

void check_widths(const IntRows& rows, std::size_t cols)
{
    for (const auto& r : rows)
        if (r.size() != cols) throw DimensionMismatch("row width differs from column count");
}

} // namespace

std::size_t bareiss_rank(IntRows a, std::size_t cols)
{
    check_widths(a, cols);
    const std::size_t n = a.size();
    std::size_t rank = 0;
    mpz_class prev = 1;
    mpz_class tmp;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t p = rank;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[rank]);
        const IntVec& pivot_row = a[rank];
        const mpz_srcptr pivot = pivot_row[c].get_mpz_t();
        for (std::size_t i = rank + 1; i < n; ++i) {
            IntVec& row = a[i];
            const mpz_srcptr lead = row[c].get_mpz_t();
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_mul(tmp.get_mpz_t(), pivot, row[j].get_mpz_t());
                if (sgn(row[c]) != 0) mpz_submul(tmp.get_mpz_t(), lead, pivot_row[j].get_mpz_t());
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = pivot_row[c];
        ++rank;
    }
    return rank;
}

IntEchelon gauss_jordan(IntRows a, std::size_t cols)
{
    check_widths(a, cols);
    IntEchelon out;
    out.cols = cols;
    const std::size_t n = a.size();
    std::size_t rank = 0;
    mpz_class prev = 1;
    mpz_class tmp;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t p = rank;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[rank]);
        const IntVec& pivot_row = a[rank];
        const mpz_srcptr pivot = pivot_row[c].get_mpz_t();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank) continue;
            IntVec& row = a[i];
            const bool has_lead = sgn(row[c]) != 0;
            const mpz_srcptr lead = row[c].get_mpz_t();
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                mpz_mul(tmp.get_mpz_t(), pivot, row[j].get_mpz_t());
                if (has_lead) mpz_submul(tmp.get_mpz_t(), lead, pivot_row[j].get_mpz_t());
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = pivot_row[c];
        out.pivot_cols.push_back(c);
        ++rank;
    }
    a.resize(rank);
    out.rows = std::move(a);
    out.denominator = prev;
    return out;
}

void make_primitive(IntVec& v)
{
    mpz_class g = 0;
    for (const auto& x : v) {
        if (sgn(x) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (g == 0) return;
    int sign = 1;
    for (const auto& x : v)
        if (sgn(x) != 0) {
            sign = sgn(x);
            break;
        }
    if (g == 1 && sign > 0) return;
    if (sign < 0) g = -g;
    for (auto& x : v)
        if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

bool is_zero(const IntVec& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

IntRows kernel_basis(const IntRows& rows, std::size_t cols)
{
    IntEchelon e = gauss_jordan(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    IntRows basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        IntVec v(cols);
        v[f] = e.denominator;
        for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivot_cols[k]] = -e.rows[k][f];
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

IntRowSpace::IntRowSpace(IntRows generators, std::size_t cols)
    : generators_(std::move(generators)), echelon_(gauss_jordan(generators_, cols))
{
}

bool IntRowSpace::contains(const IntVec& v) const
{
    if (v.size() != echelon_.cols) throw DimensionMismatch("vector width differs from row space");
    std::vector<bool> is_pivot(echelon_.cols, false);
    for (auto c : echelon_.pivot_cols) is_pivot[c] = true;
    // v is in the span iff D*v == sum_k v[c_k] * row_k on every free column.
    mpz_class acc;
    for (std::size_t j = 0; j < echelon_.cols; ++j) {
        if (is_pivot[j]) continue;
        acc = echelon_.denominator * v[j];
        for (std::size_t k = 0; k < echelon_.rows.size(); ++k) {
            const auto& coeff = v[echelon_.pivot_cols[k]];
            if (sgn(coeff) != 0) mpz_submul(acc.get_mpz_t(), coeff.get_mpz_t(), echelon_.rows[k][j].get_mpz_t());
        }
        if (sgn(acc) != 0) return false;
    }
    return true;
}

bool IntRowSpace::add(const IntVec& v)
{
    if (contains(v)) return false;
    generators_.push_back(v);
    echelon_ = gauss_jordan(generators_, echelon_.cols);
    return true;
}

} // namespace p1p1::exact
