#include "p1p1/gamma/gamma.hpp"

#include <cmath>
#include <cstdio>

#include "p1p1/error.hpp"
#include "p1p1/picard/exceptional.hpp"

namespace p1p1::gamma {

using picard::DivClass;
using picard::LatticeContext;

namespace {

std::string q_str(const mpq_class& q)
{
    return q.get_str();
}

// (a+1)(b+1) - sum m(m+1)/2; meaningful for a, b >= 0 and m_k >= 0.
long count_margin(const DivClass& d)
{
    long margin = (d.a + 1) * (d.b + 1);
    for (auto m : d.mults) margin -= m * (m + 1) / 2;
    return margin;
}

bool count_applies(const DivClass& d)
{
    if (d.a < 0 || d.b < 0) return false;
    for (auto m : d.mults)
        if (m < 0) return false;
    return true;
}

} // namespace

std::optional<std::string> effectivity_argument(const LatticeContext& ctx, const DivClass& d)
{
    if (count_applies(d) && count_margin(d) > 0)
        return "forms minus conditions = " + std::to_string(count_margin(d)) + " > 0";
    if (ctx.s <= picard::max_numeric_s) {
        if (auto u = picard::unload(ctx, d)) {
            std::string text = "unloads to nef residual " + picard::to_string(u->residual);
            if (!u->fixed_part.empty()) text += " plus " + std::to_string(u->fixed_part.size()) + " exceptional curves";
            return text;
        }
    }
    return std::nullopt;
}

CertificationReport certify_gamma_report(const GammaCertificate& cert)
{
    CertificationReport report;
    auto fail = [](const std::string& what) -> void { throw InvalidCertificate(what); };
    auto pass = [&](std::string name, std::string detail) {
        report.checks.push_back({std::move(name), true, std::move(detail)});
    };

    if (cert.s < 1) fail("s must be positive");
    const LatticeContext ctx(cert.s);
    if (cert.C.s() != cert.s || cert.D.s() != cert.s) fail("C and D must have s exceptional coordinates");
    for (const auto& piece : cert.effective_decomposition)
        if (piece.s() != cert.s) fail("decomposition summand " + picard::to_string(piece) + " has the wrong s");
    if (cert.m <= 0 || cert.t <= 0) fail("m and t must be positive");
    if (cert.C != DivClass::uniform(cert.s, cert.lambda, cert.m))
        fail("C = " + picard::to_string(cert.C) + " is not lambda(H+V) - m sum E with the recorded lambda, m");
    if (cert.D != DivClass::uniform(cert.s, cert.t, cert.r))
        fail("D = " + picard::to_string(cert.D) + " is not t(H+V) - r sum E with the recorded t, r");
    pass("shape", "C and D are uniform classes");

    const auto cd = picard::intersect(ctx, cert.C, cert.D);
    if (cd != 0) fail("C.D = " + std::to_string(cd) + ", must be 0");
    pass("C.D = 0", "0");

    const mpq_class from_c(2 * cert.lambda, cert.m);
    const mpq_class from_d(static_cast<long>(cert.s) * cert.r, cert.t);
    mpq_class a = from_c, b = from_d;
    a.canonicalize();
    b.canonicalize();
    if (a != b) fail("2 lambda/m = " + q_str(a) + " differs from s r/t = " + q_str(b));
    mpq_class recorded = cert.gamma_value;
    recorded.canonicalize();
    if (recorded != a) fail("recorded value " + q_str(recorded) + " differs from 2 lambda/m = " + q_str(a));
    pass("2 lambda/m = s r/t", q_str(a));

    if (cert.effective_decomposition.empty()) fail("effective decomposition is empty");
    DivClass sum = DivClass::uniform(cert.s, 0, 0);
    for (const auto& piece : cert.effective_decomposition) sum += piece;
    if (sum != cert.C) fail("decomposition sums to " + picard::to_string(sum) + ", not C");
    for (const auto& piece : cert.effective_decomposition) {
        auto why = effectivity_argument(ctx, piece);
        if (!why) fail("summand " + picard::to_string(piece) + " is not shown effective");
        pass("effective " + picard::to_string(piece), *why);
    }

    if (cert.s <= picard::max_numeric_s) {
        if (auto bad = picard::first_negative_exceptional(ctx, cert.D))
            fail("D is not nef: D." + picard::to_string(*bad) + " = " +
                 std::to_string(picard::intersect(ctx, cert.D, *bad)));
        if (picard::intersect(ctx, cert.D, DivClass::H(cert.s)) < 0 ||
            picard::intersect(ctx, cert.D, DivClass::V(cert.s)) < 0)
            fail("D is not nef: negative against H or V");
        pass("D nef", "numeric test against all exceptional classes, H and V");
    } else {
        // The only nefness accepted on trust: -K at eight points, via the
        // irreducible (2,2)-curve through nine general points.
        const bool anticanonical = cert.s == 8 && cert.D == -picard::canonical(ctx);
        if (cert.nef_witness.kind != NefWitnessKind::trusted || !anticanonical)
            fail("nefness of D cannot be decided for s = " + std::to_string(cert.s));
        report.nef_trusted = true;
        report.checks.push_back({"D nef", true, std::string(trusted_label) + "; " + cert.nef_witness.justification});
    }
    report.value = a;
    return report;
}

mpq_class certify_gamma(const GammaCertificate& cert)
{
    return certify_gamma_report(cert).value;
}

GammaCertificate builtin_certificate(int s)
{
    if (s < 1 || s > 8) throw UnsupportedRange("built-in certificates exist for 1 <= s <= 8");
    const DivClass H = DivClass::H(s), V = DivClass::V(s), E = DivClass::E_total(s);
    auto Ei = [s](int i) { return DivClass::E(s, i); };
    GammaCertificate c;
    c.s = s;
    auto set_c = [&](std::int64_t lambda, std::int64_t m) {
        c.lambda = lambda;
        c.m = m;
        c.C = DivClass::uniform(s, lambda, m);
    };
    auto set_d = [&](std::int64_t t, std::int64_t r) {
        c.t = t;
        c.r = r;
        c.D = DivClass::uniform(s, t, r);
    };
    switch (s) {
    case 1:
        set_c(1, 2);
        set_d(1, 1);
        c.effective_decomposition = {H - Ei(1), V - Ei(1)};
        break;
    case 2:
        set_c(1, 1);
        set_d(1, 1);
        c.effective_decomposition = {H - Ei(1), V - Ei(2)};
        break;
    case 3:
        set_c(1, 1);
        set_d(3, 2);
        c.effective_decomposition = {c.C};
        break;
    case 4:
        set_c(4, 3);
        set_d(3, 2);
        for (int i = 1; i <= 4; ++i) c.effective_decomposition.push_back(H + V - E + Ei(i));
        break;
    case 5:
        set_c(3, 2);
        set_d(10, 6);
        c.effective_decomposition = {2 * H + V - E, H + 2 * V - E};
        break;
    case 6:
        set_c(12, 7);
        set_d(7, 4);
        for (int i = 1; i <= 6; ++i) c.effective_decomposition.push_back(2 * (H + V) - E - Ei(i));
        break;
    case 7:
        set_c(28, 15);
        set_d(15, 8);
        for (int i = 1; i <= 7; ++i) c.effective_decomposition.push_back(4 * (H + V) - 2 * E - Ei(i));
        break;
    case 8:
        set_c(2, 1);
        set_d(2, 1);
        c.effective_decomposition = {c.C};
        c.nef_witness = {NefWitnessKind::trusted,
                         "-K is the class of the (2,2)-curves through the 8 points; a pencil of them "
                         "has an irreducible member through a ninth general point, and an irreducible "
                         "curve of non-negative self-intersection is nef"};
        break;
    }
    c.gamma_value = mpq_class(2 * c.lambda, c.m);
    c.gamma_value.canonicalize();
    return c;
}

GammaResult gamma_table(int s)
{
    if (s < 1 || s > 8)
        throw UnsupportedRange("exact values are tabulated for 1 <= s <= 8; use bounds for s >= 9");
    GammaResult result;
    result.s = s;
    result.certificate = builtin_certificate(s);
    result.value = certify_gamma(*result.certificate);
    return result;
}

namespace {

std::string decimal15(long double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15Lg", x);
    return buf;
}

} // namespace

GammaBounds gamma_bounds(int s)
{
    if (s < 9) throw UnsupportedRange("bounds are for s >= 9; smaller s have exact values");
    GammaBounds b;
    b.s = s;
    b.lower_expression = "sqrt(" + std::to_string(s) + ") - 1";
    b.lower_decimal = decimal15(std::sqrt(static_cast<long double>(s)) - 1.0L);
    b.upper_sqrt_decimal = decimal15(std::sqrt(2.0L * s));
    std::optional<mpq_class> best;
    for (long m = 1; m <= upper_search_cap; ++m)
        for (long d = m; d <= upper_search_cap; ++d)
            if (2 * d * d > static_cast<long>(s) * m * m) {
                mpq_class q(2 * d, m);
                q.canonicalize();
                if (!best || q < *best) best = q;
                break; // larger d only increases 2d/m
            }
    if (!best) {
        // Beyond the cap: the integer ceiling still lies above sqrt(2s).
        long d = static_cast<long>(std::sqrt(static_cast<long double>(s) / 2.0L));
        while (2 * d * d <= s) ++d;
        best = mpq_class(2 * d);
    }
    b.upper = *best;
    return b;
}

int alpha_from_genericity(int s)
{
    if (s < 1) throw InvalidInput("s must be positive");
    for (int t = 0;; ++t) {
        const int i = t / 2;
        if ((i + 1) * (t - i + 1) > s) return t; // the balanced split maximizes the product
    }
}

long alpha_bound_margin(const GammaCertificate& cert)
{
    const long cols = (cert.lambda + 1) * (cert.lambda + 1);
    const long rows = static_cast<long>(cert.s) * cert.m * (cert.m + 1) / 2;
    return cols - rows;
}

namespace {

nlohmann::json decomposition_json(const std::vector<DivClass>& parts)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : parts) out.push_back(picard::to_json(p));
    return out;
}

std::int64_t get_int(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidCertificate(std::string("certificate field '") + key + "' must be an integer");
    return j[key].get<std::int64_t>();
}

} // namespace

nlohmann::json to_json(const GammaCertificate& cert)
{
    nlohmann::json nef{{"kind", cert.nef_witness.kind == NefWitnessKind::numeric ? "numeric" : trusted_label}};
    if (!cert.nef_witness.justification.empty()) nef["justification"] = cert.nef_witness.justification;
    return {{"s", cert.s},
            {"C", picard::to_json(cert.C)},
            {"C_text", picard::to_string(cert.C)},
            {"lambda", cert.lambda},
            {"m", cert.m},
            {"D", picard::to_json(cert.D)},
            {"D_text", picard::to_string(cert.D)},
            {"t", cert.t},
            {"r", cert.r},
            {"effective_decomposition", decomposition_json(cert.effective_decomposition)},
            {"nef_witness", nef},
            {"gamma_value", q_str(cert.gamma_value)}};
}

GammaCertificate certificate_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) throw InvalidCertificate("certificate must be a JSON object");
    try {
        GammaCertificate c;
        c.s = static_cast<int>(get_int(j, "s"));
        if (c.s < 1) throw InvalidCertificate("s must be positive");
        c.C = picard::divclass_from_json(j.at("C"));
        c.D = picard::divclass_from_json(j.at("D"));
        c.lambda = get_int(j, "lambda");
        c.m = get_int(j, "m");
        c.t = get_int(j, "t");
        c.r = get_int(j, "r");
        for (const auto& p : j.at("effective_decomposition")) c.effective_decomposition.push_back(picard::divclass_from_json(p));
        const auto& nef = j.at("nef_witness");
        const std::string kind = nef.at("kind").get<std::string>();
        if (kind == "numeric")
            c.nef_witness.kind = NefWitnessKind::numeric;
        else if (kind == trusted_label || kind == "trusted")
            c.nef_witness.kind = NefWitnessKind::trusted;
        else
            throw InvalidCertificate("unknown nef witness kind '" + kind + "'");
        if (nef.contains("justification")) c.nef_witness.justification = nef["justification"].get<std::string>();
        const auto& v = j.at("gamma_value");
        if (v.is_number_integer())
            c.gamma_value = mpq_class(v.get<long>());
        else if (v.is_string()) {
            if (c.gamma_value.set_str(v.get<std::string>(), 10) != 0 || c.gamma_value.get_den() == 0)
                throw InvalidCertificate("gamma_value is not a rational");
            c.gamma_value.canonicalize();
        } else
            throw InvalidCertificate("gamma_value must be a rational string");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidCertificate(std::string("malformed certificate: ") + e.what());
    }
}

nlohmann::json to_json(const GammaBounds& b)
{
    return {{"s", b.s},
            {"lower", {{"expression", b.lower_expression}, {"decimal", b.lower_decimal}, {"strict", true}}},
            {"upper", {{"value", q_str(b.upper)}, {"search_cap", upper_search_cap}, {"sqrt_2s_decimal", b.upper_sqrt_decimal}}}};
}

nlohmann::json to_json(const CertificationReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"value", q_str(r.value)}, {"nef_trusted", r.nef_trusted}, {"checks", checks}};
}

} // namespace p1p1::gamma
