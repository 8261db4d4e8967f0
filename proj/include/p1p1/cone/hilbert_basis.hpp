#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace p1p1::cone {

using Vec = std::vector<std::int64_t>;

// Cone {x in Z^dim : <a, x> >= 0 for every covector a}.
struct IntCone {
    int dim = 0;
    std::vector<Vec> inequalities;

    IntCone(int dimension, std::vector<Vec> covectors);

    bool contains(const Vec& x) const;
    // Lineality space is zero, i.e. the covectors have full rank.
    bool is_pointed() const;
    // Sum of the covectors; positive on every nonzero point of a pointed cone.
    std::int64_t grading(const Vec& x) const;

    // i >= j, j >= m, m >= 0, i + 2j >= 5m.
    static IntCone five_point_cone();
};

struct HilbertBasis {
    std::vector<Vec> generators; // lexicographic order
    int completeness_bound = 0;
};

inline constexpr int max_cone_dim = 4;
inline constexpr int max_cone_bound = 50;

// Enumerate-and-reduce: lattice points of the cone with all |x_k| <= bound,
// minus every point that is a sum of two nonzero cone points. The result is
// re-checked by regenerating each enumerated point from the generators.
// Throws UnsupportedRange for non-pointed cones or oversized searches and
// BoundTooSmall when a point is not regenerated.
HilbertBasis hilbert_basis(const IntCone& cone, int bound);

struct Membership {
    bool member = false;
    std::vector<std::int64_t> coefficients; // one per generator
};

// Bounded search for a non-negative integer combination of the generators.
Membership membership(const IntCone& cone, const HilbertBasis& basis, const Vec& x);

inline constexpr std::size_t max_membership_states = 1'000'000;

nlohmann::json to_json(const HilbertBasis& basis);

} // namespace p1p1::cone
