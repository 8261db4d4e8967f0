#include "p1p1/fat/witness.hpp"

#include <algorithm>

#include "p1p1/error.hpp"

namespace p1p1::fat {

using exact::IntVec;

std::string to_string(WitnessKind k)
{
    return k == WitnessKind::equality ? "equality" : "containment-failure";
}

bool Witness::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const WitnessCheck& c) { return c.passed; });
}

nlohmann::json to_json(const Witness& w)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : w.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"kind", to_string(w.kind)},
            {"bidegree", {w.bidegree.i, w.bidegree.j}},
            {"dim_symbolic", w.dim_symbolic},
            {"dim_symbolic_is_lower_bound", w.dim_symbolic_is_lower_bound},
            {"dim_ordinary", w.dim_ordinary},
            {"s", w.s},
            {"m", w.m},
            {"r", w.r},
            {"checks", checks}};
}

std::size_t second_symbolic_formula(int s, Bidegree b)
{
    if (s < 1) throw InvalidInput("s must be positive");
    if (b.i < 0 || b.j < 0) throw InvalidInput("bidegree " + to_string(b) + " has a negative entry");
    if ((b.i == 2 && b.j == s - 1) || (b.i == s - 1 && b.j == 2))
        throw ExcludedCase("the closed form does not cover bidegree " + to_string(b) + " for s = " +
                           std::to_string(s));
    const long v = static_cast<long>(b.monomials()) - 3L * s;
    return v > 0 ? static_cast<std::size_t>(v) : 0;
}

namespace {

void require_s(const FatEngine& engine, int s, const char* what)
{
    if (engine.s() != s)
        throw InvalidInput(std::string(what) + " needs s = " + std::to_string(s) + ", got " +
                           std::to_string(engine.s()));
}

WitnessCheck check(std::string name, bool passed, std::string detail)
{
    return {std::move(name), passed, std::move(detail)};
}

Witness containment_failure(FatEngine& engine, int m, int r, Bidegree b)
{
    Witness w;
    w.kind = WitnessKind::containment_failure;
    w.bidegree = b;
    w.s = engine.s();
    w.m = m;
    w.r = r;
    w.dim_symbolic = engine.symbolic_dim(m, b);
    w.dim_ordinary = engine.ordinary_dim(r, b);
    return w;
}

void require_all(const Witness& w, const char* what)
{
    for (const auto& c : w.checks)
        if (!c.passed) throw VerificationFailure(std::string(what) + ": " + c.name + " (" + c.detail + ")");
}

} // namespace

Witness four_point_witness(FatEngine& engine)
{
    require_s(engine, 4, "the four-point witness");
    Witness w = containment_failure(engine, 3, 3, {4, 4});
    const auto a1 = engine.alpha_symbolic(1);
    const auto a3 = engine.alpha_ordinary(3, true);
    const auto as3 = engine.alpha_symbolic(3);
    w.checks.push_back(check("alpha(I) = 3", a1.t == 3, "computed " + std::to_string(a1.t)));
    w.checks.push_back(check("alpha(I^3) = 9", a3.t == 9, "computed " + std::to_string(a3.t) + ", verified"));
    w.checks.push_back(check("dim (I^(3))_(4,4) >= 1", w.dim_symbolic >= 1,
                             "computed " + std::to_string(w.dim_symbolic)));
    w.checks.push_back(check("alpha(I^(3)) <= 8", as3.t <= 8,
                             "computed " + std::to_string(as3.t) + " at " + to_string(as3.witness)));
    w.checks.push_back(check("(I^3)_(4,4) = 0", w.dim_ordinary == 0, "computed " + std::to_string(w.dim_ordinary)));
    require_all(w, "four-point witness");
    return w;
}

Witness six_point_witness(FatEngine& engine)
{
    require_s(engine, 6, "the six-point witness");
    Witness w = containment_failure(engine, 2, 2, {3, 4});
    w.checks.push_back(check("dim (I^(2))_(3,4) = 2", w.dim_symbolic == 2, "computed " + std::to_string(w.dim_symbolic)));
    w.checks.push_back(check("dim (I^2)_(3,4) = 0", w.dim_ordinary == 0, "computed " + std::to_string(w.dim_ordinary)));
    require_all(w, "six-point witness");
    return w;
}

Witness seven_plus_witness(FatEngine& engine)
{
    const int s = engine.s();
    if (s < 7) throw InvalidInput("the bidegree (3, q1 + q2) argument needs s >= 7, got " + std::to_string(s));
    if (s <= max_generic_check_s && !engine.is_m1_generic())
        throw InvalidInput("configuration is not in multiplicity-1 generic position");
    const int q1 = s / 2, r1 = s % 2, q2 = s / 3, r2 = s % 3;
    const Bidegree b{3, q1 + q2};
    Witness w = containment_failure(engine, 2, 2, b);
    const long expected_sym = q2 + 4 - 2L * r1 - r2;
    const long bound_ord = (2L - r1) * (3L - r2);
    w.checks.push_back(check("dim (I^(2)) = q2 + 4 - 2 r1 - r2", static_cast<long>(w.dim_symbolic) == expected_sym,
                             "expected " + std::to_string(expected_sym) + ", computed " +
                                 std::to_string(w.dim_symbolic)));
    w.checks.push_back(check("dim (I^2) <= (2 - r1)(3 - r2)", static_cast<long>(w.dim_ordinary) <= bound_ord,
                             "bound " + std::to_string(bound_ord) + ", computed " + std::to_string(w.dim_ordinary)));
    w.checks.push_back(check("symbolic exceeds ordinary", w.dim_symbolic > w.dim_ordinary,
                             std::to_string(w.dim_symbolic) + " vs " + std::to_string(w.dim_ordinary)));
    require_all(w, "seven-plus witness");
    return w;
}

Witness square_grid_noncontainment(FatEngine& engine, int t, int n)
{
    if (t < 2 || n < 1) throw InvalidInput("need t >= 2 and n >= 1");
    if (t > 3 || n != 1) throw UnsupportedRange("square-grid witness is limited to t <= 3 and n = 1");
    const int s = t * t;
    require_s(engine, s, "the square-grid witness");
    const auto& field = engine.field();
    const auto& config = engine.config();

    const int e = (2 * t - 1) * n;          // exponent of F
    const int m = (s - 1) * e;              // symbolic power
    const int r = 2 * s * (t - 1) * n + 1;  // ordinary power
    const int deg = (t - 1) * s * e;        // D
    field.require_multiplicity_guard(m);

    Witness w;
    w.kind = WitnessKind::containment_failure;
    w.bidegree = {deg, deg};
    w.s = s;
    w.m = m;
    w.r = r;

    auto fail = [&](const std::string& step) { throw ConstructionFailure("square-grid construction: " + step); };

    const Bidegree small{t - 1, t - 1};
    const Bidegree fdeg{s * (t - 1), s * (t - 1)};
    IntVec f(1, 1);
    Bidegree f_bideg{0, 0};
    for (int i = 0; i < s; ++i) {
        std::vector<int> y(static_cast<std::size_t>(s), 1);
        y[static_cast<std::size_t>(i)] = 0;
        const auto& basis = engine.symbolic_basis(y, small);
        const std::string name = "dim I(Y_" + std::to_string(i + 1) + ")_" + to_string(small) + " = 1";
        w.checks.push_back(check(name, basis.size() == 1, "computed " + std::to_string(basis.size())));
        if (basis.size() != 1) fail(name + " fails, computed " + std::to_string(basis.size()));

        std::vector<int> at_p(static_cast<std::size_t>(s), 0);
        at_p[static_cast<std::size_t>(i)] = 1;
        const bool nonzero = !vanishes(config, at_p, small, basis[0], field);
        const std::string pname = "F_" + std::to_string(i + 1) + "(P_" + std::to_string(i + 1) + ") != 0";
        w.checks.push_back(check(pname, nonzero, nonzero ? "nonzero" : "vanishes"));
        if (!nonzero) fail(pname + " fails");

        f = multiply(f, f_bideg, basis[0], small);
        f_bideg = f_bideg + small;
    }

    const std::vector<int> order_s1(static_cast<std::size_t>(s), s - 1);
    const bool in_sym = vanishes(config, order_s1, fdeg, f, field);
    w.checks.push_back(check("F in I^(" + std::to_string(s - 1) + ")_" + to_string(fdeg), in_sym, "direct evaluation"));
    if (!in_sym) fail("F = prod F_i does not vanish to order s - 1");

    // Direct evaluation of F^e is cheap up to a few hundred monomials; past
    // that, order of vanishing is additive under products.
    const Bidegree big{deg, deg};
    if (big.monomials() <= 400) {
        IntVec g = f;
        for (int k = 1; k < e; ++k) g = multiply(g, {fdeg.i * k, fdeg.j * k}, f, fdeg);
        const bool ok = vanishes(config, std::vector<int>(static_cast<std::size_t>(s), m), big, g, field);
        w.checks.push_back(check("F^" + std::to_string(e) + " in I^(" + std::to_string(m) + ")_" + to_string(big), ok,
                                 "direct evaluation"));
        if (!ok) fail("F^e does not vanish to order (s - 1) e");
        w.dim_symbolic = engine.symbolic_dim(m, big);
        w.checks.push_back(check("(I^(" + std::to_string(m) + "))_" + to_string(big) + " != 0", w.dim_symbolic > 0,
                                 "rank computation gives dimension " + std::to_string(w.dim_symbolic)));
        if (w.dim_symbolic == 0) fail("symbolic piece is zero by rank");
    } else {
        w.checks.push_back(check("F^" + std::to_string(e) + " in I^(" + std::to_string(m) + ")_" + to_string(big), true,
                                 "order of vanishing is additive; F is nonzero"));
        w.dim_symbolic = 1;
        w.dim_symbolic_is_lower_bound = true;
    }

    const int alpha_i = engine.alpha_symbolic(1).t;
    const long alpha_r = static_cast<long>(r) * alpha_i;
    const bool gap = alpha_r > 2L * deg;
    w.checks.push_back(check("alpha(I^" + std::to_string(r) + ") > " + std::to_string(2 * deg), gap,
                             "alpha(I^" + std::to_string(r) + ") = " + std::to_string(r) + " * " +
                                 std::to_string(alpha_i) + " = " + std::to_string(alpha_r)));
    if (!gap) fail("alpha(I^r) = " + std::to_string(alpha_r) + " does not exceed " + std::to_string(2 * deg));
    w.dim_ordinary = 0;
    return w;
}

} // namespace p1p1::fat
