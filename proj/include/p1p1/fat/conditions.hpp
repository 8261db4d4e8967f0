#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>

#include "p1p1/exact/integer_linalg.hpp"
#include "p1p1/exact/matrix.hpp"
#include "p1p1/exact/modular_linalg.hpp"
#include "p1p1/exact/prime_field.hpp"
#include "p1p1/fat/point_config.hpp"

namespace p1p1::fat {

struct Bidegree {
    int i = 0;
    int j = 0;

    std::size_t monomials() const { return static_cast<std::size_t>(i + 1) * static_cast<std::size_t>(j + 1); }
    int total() const noexcept { return i + j; }

    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.i + b.i, a.j + b.j}; }
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(Bidegree b);

// Coefficient vectors of bihomogeneous forms of bidegree (i,j). The monomial
// x0^k x1^(i-k) y0^l y1^(j-l) sits at index k*(j+1) + l.
inline std::size_t monomial_index(Bidegree b, int k, int l)
{
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(b.j + 1) + static_cast<std::size_t>(l);
}

// Vanishing conditions for the fat point scheme sum m_k P_k at bidegree
// (i,j). Each point is moved into an affine chart and the form is expanded
// in the local coordinates (u, v) there; the rows pick out the coefficients
// of u^p v^q with p + q < m_k. Rows are scaled to primitive integer vectors.
exact::IntRows condition_rows(const PointConfig& config, std::span<const int> mults, Bidegree b);

// Same conditions computed directly in F_p. The chart is chosen per point so
// that the pivot coordinate is a unit mod p.
exact::ModRows condition_rows_mod(const PointConfig& config, std::span<const int> mults, Bidegree b,
                                  const exact::PrimeField& f);

exact::ExactMatrix conditions_matrix(const PointConfig& config, std::span<const int> mults, Bidegree b);

// Product of forms of bidegrees bf and bg.
exact::IntVec multiply(const exact::IntVec& f, Bidegree bf, const exact::IntVec& g, Bidegree bg);
exact::ModVec multiply(const exact::ModVec& f, Bidegree bf, const exact::ModVec& g, Bidegree bg,
                       const exact::PrimeField& field);

// True when the form v of bidegree b satisfies every condition, over Q or,
// for a prime field, after reducing v mod p.
bool vanishes(const PointConfig& config, std::span<const int> mults, Bidegree b, const exact::IntVec& v,
              const exact::FieldSpec& field);

} // namespace p1p1::fat
