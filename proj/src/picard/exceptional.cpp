#include "p1p1/picard/exceptional.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>

#include "p1p1/error.hpp"

namespace p1p1::picard {

namespace {

struct Shape {
    std::int64_t a;
    std::int64_t b;
    std::vector<std::int64_t> mults; // nonzero multiplicities only
};

// Up to permuting the E_i and swapping H with V.
const std::array<Shape, 10>& shapes()
{
    static const std::array<Shape, 10> list{{
        {0, 0, {-1}},
        {1, 0, {1}},
        {1, 1, {1, 1, 1}},
        {2, 1, {1, 1, 1, 1, 1}},
        {2, 2, {2, 1, 1, 1, 1, 1}},
        {3, 1, {1, 1, 1, 1, 1, 1, 1}},
        {3, 2, {2, 2, 1, 1, 1, 1, 1}},
        {3, 3, {2, 2, 2, 2, 1, 1, 1}},
        {4, 3, {2, 2, 2, 2, 2, 2, 1}},
        {4, 4, {3, 2, 2, 2, 2, 2, 2}},
    }};
    return list;
}

void require_numeric_range(const LatticeContext& ctx)
{
    if (ctx.s > max_numeric_s)
        throw UnsupportedRange("exceptional curves and numeric nef/effective tests are only available for s <= 7 (got s=" +
                               std::to_string(ctx.s) + ")");
}

std::vector<DivClass> build_orbit(int s)
{
    std::set<DivClass> found;
    for (const auto& shape : shapes()) {
        if (static_cast<int>(shape.mults.size()) > s) continue;
        std::vector<std::int64_t> padded = shape.mults;
        padded.resize(s, 0);
        std::sort(padded.begin(), padded.end());
        do {
            DivClass c{shape.a, shape.b, padded};
            found.insert(c);
            found.insert(c.swapped());
        } while (std::next_permutation(padded.begin(), padded.end()));
    }
    return {found.begin(), found.end()};
}

} // namespace

const std::vector<DivClass>& exceptional_classes(const LatticeContext& ctx)
{
    require_numeric_range(ctx);
    static std::array<std::vector<DivClass>, max_numeric_s + 1> cache;
    static std::array<std::once_flag, max_numeric_s + 1> once;
    std::call_once(once[ctx.s], [&] { cache[ctx.s] = build_orbit(ctx.s); });
    return cache[ctx.s];
}

bool is_exceptional(const LatticeContext& ctx, const DivClass& d)
{
    const auto& all = exceptional_classes(ctx);
    return std::binary_search(all.begin(), all.end(), d);
}

std::optional<DivClass> first_negative_exceptional(const LatticeContext& ctx, const DivClass& d)
{
    for (const auto& c : exceptional_classes(ctx))
        if (intersect(ctx, d, c) < 0) return c;
    return std::nullopt;
}

bool is_nef_numeric(const LatticeContext& ctx, const DivClass& d)
{
    require_numeric_range(ctx);
    if (intersect(ctx, d, DivClass::H(ctx.s)) < 0 || intersect(ctx, d, DivClass::V(ctx.s)) < 0) return false;
    return !first_negative_exceptional(ctx, d).has_value();
}

std::optional<Unloading> unload(const LatticeContext& ctx, const DivClass& d)
{
    require_numeric_range(ctx);
    const DivClass anticanonical = -canonical(ctx);
    const DivClass h = DivClass::H(ctx.s);
    const DivClass v = DivClass::V(ctx.s);
    Unloading out{{}, d};
    // Each subtraction lowers D.(-K) by exactly one, and -K is ample for
    // s <= 7 general points, so the loop runs at most D.(-K) + 1 times.
    const std::int64_t budget = std::max<std::int64_t>(intersect(ctx, d, anticanonical), 0) + 1;
    for (std::int64_t step = 0; step <= budget; ++step) {
        DivClass& r = out.residual;
        if (r.is_zero()) return out;
        if (intersect(ctx, r, anticanonical) <= 0) return std::nullopt;
        if (intersect(ctx, r, h) < 0 || intersect(ctx, r, v) < 0) return std::nullopt;
        auto negative = first_negative_exceptional(ctx, r);
        if (!negative) return out;
        r -= *negative;
        out.fixed_part.push_back(*negative);
    }
    throw VerificationFailure("unloading of " + to_string(d) + " did not terminate within its step bound");
}

bool is_effective_numeric(const LatticeContext& ctx, const DivClass& d)
{
    return unload(ctx, d).has_value();
}

} // namespace p1p1::picard
