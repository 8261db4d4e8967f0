#pragma once

#include <optional>
#include <vector>

#include "p1p1/picard/divisor.hpp"

namespace p1p1::picard {

// Largest s for which the (-1)-curve list is finite and known for general
// points; nef and effectivity tests are restricted to this range.
inline constexpr int max_numeric_s = 7;

// All classes of exceptional curves on the blowup at s <= 7 general points,
// sorted. Throws UnsupportedRange for s >= 8.
const std::vector<DivClass>& exceptional_classes(const LatticeContext& ctx);

bool is_exceptional(const LatticeContext& ctx, const DivClass& d);

// D.C >= 0 for every exceptional C, and D.H, D.V >= 0.
bool is_nef_numeric(const LatticeContext& ctx, const DivClass& d);

// First exceptional class (in sorted order) met negatively, if any.
std::optional<DivClass> first_negative_exceptional(const LatticeContext& ctx, const DivClass& d);

// Result of greedy unloading: D = fixed_part[0] + ... + residual with every
// fixed part exceptional and the residual nef.
struct Unloading {
    std::vector<DivClass> fixed_part;
    DivClass residual;
};

// Empty when D is not effective.
std::optional<Unloading> unload(const LatticeContext& ctx, const DivClass& d);

bool is_effective_numeric(const LatticeContext& ctx, const DivClass& d);

} // namespace p1p1::picard
