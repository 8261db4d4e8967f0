#include "p1p1/picard/divisor.hpp"

#include <cassert>

#include "p1p1/error.hpp"

namespace p1p1::picard {

namespace {

void require_same(const LatticeContext& ctx, const DivClass& d)
{
    if (d.s() != ctx.s)
        throw ContextError("class " + to_string(d) + " has " + std::to_string(d.s()) +
                           " exceptional coefficients, context has s=" + std::to_string(ctx.s));
}

} // namespace

LatticeContext::LatticeContext(int points) : s(points)
{
    if (points < 0) throw InvalidInput("number of points must be non-negative");
}

DivClass DivClass::H(int s)
{
    return {1, 0, std::vector<std::int64_t>(s, 0)};
}

DivClass DivClass::V(int s)
{
    return {0, 1, std::vector<std::int64_t>(s, 0)};
}

DivClass DivClass::E(int s, int i)
{
    if (i < 1 || i > s) throw InvalidInput("E_" + std::to_string(i) + " out of range for s=" + std::to_string(s));
    DivClass d{0, 0, std::vector<std::int64_t>(s, 0)};
    d.mults[i - 1] = -1;
    return d;
}

DivClass DivClass::E_total(int s)
{
    return {0, 0, std::vector<std::int64_t>(s, -1)};
}

DivClass DivClass::uniform(int s, std::int64_t lambda, std::int64_t m)
{
    return {lambda, lambda, std::vector<std::int64_t>(s, m)};
}

DivClass DivClass::swapped() const
{
    return {b, a, mults};
}

bool DivClass::is_zero() const noexcept
{
    if (a != 0 || b != 0) return false;
    for (auto m : mults)
        if (m != 0) return false;
    return true;
}

DivClass& DivClass::operator+=(const DivClass& o)
{
    if (o.s() != s()) throw ContextError("adding classes from lattices of different rank");
    a += o.a;
    b += o.b;
    for (std::size_t i = 0; i < mults.size(); ++i) mults[i] += o.mults[i];
    return *this;
}

DivClass& DivClass::operator-=(const DivClass& o)
{
    if (o.s() != s()) throw ContextError("subtracting classes from lattices of different rank");
    a -= o.a;
    b -= o.b;
    for (std::size_t i = 0; i < mults.size(); ++i) mults[i] -= o.mults[i];
    return *this;
}

DivClass operator*(std::int64_t k, DivClass x)
{
    x.a *= k;
    x.b *= k;
    for (auto& m : x.mults) m *= k;
    return x;
}

std::string to_string(const DivClass& d)
{
    std::string out;
    auto term = [&out](std::int64_t coeff, const std::string& name) {
        if (coeff == 0) return;
        if (coeff < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        std::int64_t mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out += std::to_string(mag);
        out += name;
    };
    term(d.a, "H");
    term(d.b, "V");
    for (int i = 0; i < d.s(); ++i) term(-d.mults[i], "E" + std::to_string(i + 1));
    return out.empty() ? "0" : out;
}

nlohmann::json to_json(const DivClass& d)
{
    nlohmann::json j = nlohmann::json::array({d.a, d.b});
    for (auto m : d.mults) j.push_back(m);
    return j;
}

DivClass divclass_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() < 2) throw InvalidInput("divisor class must be a JSON array [a, b, m_1, ...]");
    DivClass d;
    try {
        d.a = j[0].get<std::int64_t>();
        d.b = j[1].get<std::int64_t>();
        for (std::size_t i = 2; i < j.size(); ++i) d.mults.push_back(j[i].get<std::int64_t>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("divisor class entries must be integers: ") + e.what());
    }
    return d;
}

std::int64_t intersect(const LatticeContext& ctx, const DivClass& d1, const DivClass& d2)
{
    require_same(ctx, d1);
    require_same(ctx, d2);
    std::int64_t v = d1.a * d2.b + d2.a * d1.b;
    for (int i = 0; i < ctx.s; ++i) v -= d1.mults[i] * d2.mults[i];
    return v;
}

DivClass canonical(const LatticeContext& ctx)
{
    return {-2, -2, std::vector<std::int64_t>(ctx.s, -1)};
}

std::int64_t arithmetic_genus(const LatticeContext& ctx, const DivClass& c)
{
    const std::int64_t twice = intersect(ctx, c, c) + intersect(ctx, c, canonical(ctx));
    // C^2 + C.K = 2ab - 2a - 2b - sum m_i(m_i - 1) is always even here.
    assert(twice % 2 == 0);
    return twice / 2 + 1;
}

P2Basis p2_basis(const LatticeContext& ctx)
{
    if (ctx.s < 1) throw UnsupportedRange("the P2 exceptional configuration needs s >= 1");
    const int s = ctx.s;
    P2Basis basis;
    basis.L = DivClass::H(s) + DivClass::V(s) - DivClass::E(s, s);
    for (int i = 1; i < s; ++i) basis.exceptional.push_back(DivClass::E(s, i));
    basis.exceptional.push_back(DivClass::H(s) - DivClass::E(s, s));
    basis.exceptional.push_back(DivClass::V(s) - DivClass::E(s, s));
    return basis;
}

P2Coords to_p2_basis(const LatticeContext& ctx, const DivClass& d)
{
    require_same(ctx, d);
    const P2Basis basis = p2_basis(ctx);
    // The primed basis is orthogonal with L^2 = 1 and E'^2 = -1.
    P2Coords out;
    out.d = intersect(ctx, d, basis.L);
    for (const auto& e : basis.exceptional) out.c.push_back(-intersect(ctx, d, e));
    return out;
}

DivClass from_p2_basis(const LatticeContext& ctx, const P2Coords& coords)
{
    const P2Basis basis = p2_basis(ctx);
    if (coords.c.size() != basis.exceptional.size())
        throw ContextError("P2 coordinates need " + std::to_string(basis.exceptional.size()) +
                           " exceptional entries");
    DivClass d = coords.d * basis.L;
    for (std::size_t i = 0; i < coords.c.size(); ++i) d += coords.c[i] * basis.exceptional[i];
    return d;
}

std::int64_t p2_intersect(const P2Coords& x, const P2Coords& y)
{
    if (x.c.size() != y.c.size()) throw ContextError("P2 coordinate lengths differ");
    std::int64_t v = x.d * y.d;
    for (std::size_t i = 0; i < x.c.size(); ++i) v -= x.c[i] * y.c[i];
    return v;
}

} // namespace p1p1::picard
