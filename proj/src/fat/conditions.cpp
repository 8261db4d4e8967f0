#include "p1p1/fat/conditions.hpp"

#include "p1p1/error.hpp"

namespace p1p1::fat {

using exact::IntRows;
using exact::IntVec;
using exact::ModRows;
using exact::ModVec;

std::string to_string(Bidegree b)
{
    return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
}

namespace {

// Primitive integer representative (n0, n1) of a point of P1.
std::pair<mpz_class, mpz_class> integral(const P1Point& p)
{
    const mpz_class l = lcm(p.x0.get_den(), p.x1.get_den());
    mpz_class a = p.x0.get_num() * (l / p.x0.get_den());
    mpz_class b = p.x1.get_num() * (l / p.x1.get_den());
    const mpz_class g = gcd(a, b);
    return {a / g, b / g};
}

// Local expansion table for one factor of degree n at the point [a0:a1].
// table[p][k] is the coefficient of (w - beta)^p in the dehomogenized
// monomial x0^k x1^(n-k), scaled by the pivot coordinate to the power n so
// that every entry is an integer.
//   chart x1 != 0: w = x0/x1, beta = a0/a1, monomial -> w^k
//   chart x0 != 0: w = x1/x0, beta = a1/a0, monomial -> w^(n-k)
// With beta = num/den the entry is C(e,p) num^(e-p) den^(n-e+p).
std::vector<IntVec> local_table(const mpz_class& num, const mpz_class& den, bool chart_x1, int n, int orders)
{
    std::vector<IntVec> table(static_cast<std::size_t>(orders), IntVec(static_cast<std::size_t>(n + 1)));
    for (int k = 0; k <= n; ++k) {
        const int e = chart_x1 ? k : n - k;
        for (int p = 0; p < orders && p <= e; ++p) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(p));
            mpz_class npow, dpow;
            mpz_pow_ui(npow.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e - p));
            mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n - e + p));
            table[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] = binom * npow * dpow;
        }
    }
    return table;
}

void check_args(const PointConfig& config, std::span<const int> mults, Bidegree b)
{
    if (b.i < 0 || b.j < 0) throw InvalidInput("bidegree " + to_string(b) + " has a negative entry");
    if (mults.size() != config.points.size())
        throw DimensionMismatch("multiplicity vector has length " + std::to_string(mults.size()) + ", expected " +
                                std::to_string(config.points.size()));
    for (int m : mults)
        if (m < 0) throw InvalidInput("multiplicities must be non-negative");
}

// Calls emit(xtable, ytable, m) per point, with tables for the given chart
// rule. `unit` decides whether a coordinate may serve as pivot.
template <class Unit, class Emit>
void for_each_point(const PointConfig& config, std::span<const int> mults, Bidegree b, Unit unit, Emit emit)
{
    for (std::size_t k = 0; k < config.points.size(); ++k) {
        const int m = mults[k];
        if (m == 0) continue;
        auto table_for = [&](const P1Point& pt, int n) {
            auto [a0, a1] = integral(pt);
            const bool chart_x1 = unit(a1);
            return chart_x1 ? local_table(a0, a1, true, n, m) : local_table(a1, a0, false, n, m);
        };
        emit(table_for(config.points[k].x, b.i), table_for(config.points[k].y, b.j), m);
    }
}

} // namespace

IntRows condition_rows(const PointConfig& config, std::span<const int> mults, Bidegree b)
{
    check_args(config, mults, b);
    IntRows rows;
    const std::size_t cols = b.monomials();
    for_each_point(config, mults, b, [](const mpz_class& z) { return sgn(z) != 0; },
                   [&](const std::vector<IntVec>& xt, const std::vector<IntVec>& yt, int m) {
                       for (int p = 0; p < m && p <= b.i; ++p)
                           for (int q = 0; p + q < m && q <= b.j; ++q) {
                               IntVec row(cols);
                               for (int k = 0; k <= b.i; ++k) {
                                   const mpz_class& xk = xt[p][k];
                                   if (sgn(xk) == 0) continue;
                                   for (int l = 0; l <= b.j; ++l)
                                       row[monomial_index(b, k, l)] = xk * yt[q][l];
                               }
                               exact::make_primitive(row);
                               rows.push_back(std::move(row));
                           }
                   });
    return rows;
}

ModRows condition_rows_mod(const PointConfig& config, std::span<const int> mults, Bidegree b,
                           const exact::PrimeField& f)
{
    check_args(config, mults, b);
    ModRows rows;
    const std::size_t cols = b.monomials();
    const mpz_class p_mod = f.modulus();
    for_each_point(config, mults, b, [&](const mpz_class& z) { return f.from_integer(z) != 0; },
                   [&](const std::vector<IntVec>& xt, const std::vector<IntVec>& yt, int m) {
                       for (int p = 0; p < m && p <= b.i; ++p)
                           for (int q = 0; p + q < m && q <= b.j; ++q) {
                               ModVec row(cols, 0);
                               for (int k = 0; k <= b.i; ++k) {
                                   const std::uint32_t xk = f.from_integer(xt[p][k]);
                                   if (xk == 0) continue;
                                   for (int l = 0; l <= b.j; ++l)
                                       row[monomial_index(b, k, l)] = f.mul(xk, f.from_integer(yt[q][l]));
                               }
                               rows.push_back(std::move(row));
                           }
                   });
    return rows;
}

exact::ExactMatrix conditions_matrix(const PointConfig& config, std::span<const int> mults, Bidegree b)
{
    return exact::ExactMatrix::from_integer_rows(condition_rows(config, mults, b), b.monomials());
}

IntVec multiply(const IntVec& f, Bidegree bf, const IntVec& g, Bidegree bg)
{
    if (f.size() != bf.monomials() || g.size() != bg.monomials())
        throw DimensionMismatch("coefficient vector does not match its bidegree");
    const Bidegree bh = bf + bg;
    IntVec h(bh.monomials());
    for (int k = 0; k <= bf.i; ++k)
        for (int l = 0; l <= bf.j; ++l) {
            const mpz_class& c = f[monomial_index(bf, k, l)];
            if (sgn(c) == 0) continue;
            for (int k2 = 0; k2 <= bg.i; ++k2)
                for (int l2 = 0; l2 <= bg.j; ++l2) {
                    const mpz_class& d = g[monomial_index(bg, k2, l2)];
                    if (sgn(d) != 0) mpz_addmul(h[monomial_index(bh, k + k2, l + l2)].get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
                }
        }
    return h;
}

ModVec multiply(const ModVec& f, Bidegree bf, const ModVec& g, Bidegree bg, const exact::PrimeField& field)
{
    if (f.size() != bf.monomials() || g.size() != bg.monomials())
        throw DimensionMismatch("coefficient vector does not match its bidegree");
    const Bidegree bh = bf + bg;
    ModVec h(bh.monomials(), 0);
    for (int k = 0; k <= bf.i; ++k)
        for (int l = 0; l <= bf.j; ++l) {
            const std::uint32_t c = f[monomial_index(bf, k, l)];
            if (c == 0) continue;
            for (int k2 = 0; k2 <= bg.i; ++k2)
                for (int l2 = 0; l2 <= bg.j; ++l2) {
                    const std::uint32_t d = g[monomial_index(bg, k2, l2)];
                    if (d == 0) continue;
                    auto& slot = h[monomial_index(bh, k + k2, l + l2)];
                    slot = field.add(slot, field.mul(c, d));
                }
        }
    return h;
}

bool vanishes(const PointConfig& config, std::span<const int> mults, Bidegree b, const IntVec& v,
              const exact::FieldSpec& field)
{
    if (v.size() != b.monomials()) throw DimensionMismatch("coefficient vector does not match its bidegree");
    if (field.is_rational()) {
        for (const auto& row : condition_rows(config, mults, b)) {
            mpz_class acc;
            for (std::size_t c = 0; c < v.size(); ++c) mpz_addmul(acc.get_mpz_t(), row[c].get_mpz_t(), v[c].get_mpz_t());
            if (sgn(acc) != 0) return false;
        }
        return true;
    }
    const auto f = field.prime_field();
    const ModVec w = exact::reduce(v, f);
    for (const auto& row : condition_rows_mod(config, mults, b, f)) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < w.size(); ++c) acc = f.add(acc, f.mul(row[c], w[c]));
        if (acc != 0) return false;
    }
    return true;
}

} // namespace p1p1::fat
