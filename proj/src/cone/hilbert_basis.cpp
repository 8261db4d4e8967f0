#include "p1p1/cone/hilbert_basis.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include <gmpxx.h>

#include "p1p1/error.hpp"
#include "p1p1/exact/integer_linalg.hpp"

namespace p1p1::cone {

namespace {

std::string to_string(const Vec& x)
{
    std::string out = "(";
    for (std::size_t k = 0; k < x.size(); ++k) out += (k ? "," : "") + std::to_string(x[k]);
    return out + ")";
}

Vec minus(const Vec& x, const Vec& y)
{
    Vec out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] - y[k];
    return out;
}

bool is_zero(const Vec& x)
{
    return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

} // namespace

IntCone::IntCone(int dimension, std::vector<Vec> covectors) : dim(dimension), inequalities(std::move(covectors))
{
    if (dim < 1) throw InvalidInput("cone dimension must be at least 1");
    for (const auto& a : inequalities)
        if (static_cast<int>(a.size()) != dim)
            throw DimensionMismatch("covector " + to_string(a) + " does not have length " + std::to_string(dim));
}

bool IntCone::contains(const Vec& x) const
{
    if (static_cast<int>(x.size()) != dim) throw DimensionMismatch("point has the wrong length");
    for (const auto& a : inequalities) {
        std::int64_t v = 0;
        for (int k = 0; k < dim; ++k) v += a[k] * x[k];
        if (v < 0) return false;
    }
    return true;
}

bool IntCone::is_pointed() const
{
    exact::IntRows rows;
    for (const auto& a : inequalities) {
        exact::IntVec row;
        for (auto v : a) row.emplace_back(static_cast<long>(v));
        rows.push_back(std::move(row));
    }
    return exact::bareiss_rank(std::move(rows), static_cast<std::size_t>(dim)) == static_cast<std::size_t>(dim);
}

std::int64_t IntCone::grading(const Vec& x) const
{
    std::int64_t w = 0;
    for (const auto& a : inequalities)
        for (int k = 0; k < dim; ++k) w += a[k] * x[k];
    return w;
}

IntCone IntCone::five_point_cone()
{
    return IntCone(3, {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}, {1, 2, -5}});
}

HilbertBasis hilbert_basis(const IntCone& cone, int bound)
{
    if (bound < 1) throw InvalidInput("bound must be at least 1");
    if (cone.dim > max_cone_dim || bound > max_cone_bound)
        throw UnsupportedRange("enumeration is limited to dimension <= " + std::to_string(max_cone_dim) +
                               " and bound <= " + std::to_string(max_cone_bound));
    if (!cone.is_pointed()) throw UnsupportedRange("cone is not pointed");

    std::vector<Vec> points;
    Vec x(static_cast<std::size_t>(cone.dim), -bound);
    for (;;) {
        if (!is_zero(x) && cone.contains(x)) points.push_back(x);
        int k = cone.dim - 1;
        while (k >= 0 && x[k] == bound) x[k--] = -bound;
        if (k < 0) break;
        ++x[k];
    }
    // Summands of a point have strictly smaller grading, so processing by
    // grading sees every possible summand first.
    std::stable_sort(points.begin(), points.end(),
                     [&](const Vec& a, const Vec& b) { return cone.grading(a) < cone.grading(b); });

    HilbertBasis out;
    out.completeness_bound = bound;
    for (const auto& p : points) {
        const bool reducible = std::any_of(out.generators.begin(), out.generators.end(), [&](const Vec& g) {
            const Vec rest = minus(p, g);
            return !is_zero(rest) && cone.contains(rest);
        });
        if (!reducible) out.generators.push_back(p);
    }
    std::sort(out.generators.begin(), out.generators.end());

    for (const auto& p : points)
        if (!membership(cone, out, p).member)
            throw BoundTooSmall("point " + to_string(p) + " is not a combination of the generators found at bound " +
                                std::to_string(bound));
    return out;
}

Membership membership(const IntCone& cone, const HilbertBasis& basis, const Vec& x)
{
    Membership out;
    out.coefficients.assign(basis.generators.size(), 0);
    if (static_cast<int>(x.size()) != cone.dim) throw DimensionMismatch("point has the wrong length");
    if (!cone.contains(x)) return out;

    // memo[y] = index of a generator g with y - g generated, or -1 if none.
    std::map<Vec, long> memo;
    auto solve = [&](auto&& self, const Vec& y) -> bool {
        if (is_zero(y)) return true;
        if (auto it = memo.find(y); it != memo.end()) return it->second >= 0;
        if (memo.size() >= max_membership_states)
            throw UnsupportedRange("membership search exceeded " + std::to_string(max_membership_states) + " states");
        long found = -1;
        for (std::size_t g = 0; g < basis.generators.size() && found < 0; ++g) {
            const Vec rest = minus(y, basis.generators[g]);
            if (cone.contains(rest) && self(self, rest)) found = static_cast<long>(g);
        }
        memo[y] = found;
        return found >= 0;
    };
    if (!solve(solve, x)) return out;
    out.member = true;
    for (Vec y = x; !is_zero(y);) {
        const long g = memo.at(y);
        ++out.coefficients[static_cast<std::size_t>(g)];
        y = minus(y, basis.generators[static_cast<std::size_t>(g)]);
    }
    return out;
}

nlohmann::json to_json(const HilbertBasis& basis)
{
    return {{"generators", basis.generators}, {"bound", basis.completeness_bound}};
}

} // namespace p1p1::cone
