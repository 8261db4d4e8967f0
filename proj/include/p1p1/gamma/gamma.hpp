#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "p1p1/picard/divisor.hpp"

namespace p1p1::gamma {

enum class NefWitnessKind {
    numeric, // checked against every exceptional class (s <= 7)
    trusted, // recorded argument, not lattice-decidable
};

struct NefWitness {
    NefWitnessKind kind = NefWitnessKind::numeric;
    std::string justification;
};

// Status string attached to trusted nefness in reports.
inline constexpr const char* trusted_label = "trusted: paper";

// C = lambda(H+V) - m sum E effective and D = t(H+V) - r sum E nef with
// C.D = 0 pin the constant down to 2 lambda / m = s r / t.
struct GammaCertificate {
    int s = 0;
    picard::DivClass C;
    std::int64_t lambda = 0;
    std::int64_t m = 0;
    picard::DivClass D;
    std::int64_t t = 0;
    std::int64_t r = 0;
    std::vector<picard::DivClass> effective_decomposition;
    NefWitness nef_witness;
    mpq_class gamma_value;
};

struct CertificateCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CertificationReport {
    mpq_class value;
    bool nef_trusted = false;
    std::vector<CertificateCheck> checks;
};

// Validates every condition and returns the checks performed. Throws
// InvalidCertificate on the first violated condition.
CertificationReport certify_gamma_report(const GammaCertificate& cert);
mpq_class certify_gamma(const GammaCertificate& cert);

// Effectivity of a class: the count (a+1)(b+1) - sum m_k(m_k+1)/2 > 0 of
// forms minus conditions, or unloading to a nef residual when s <= 7.
// Returns a description of the argument used, or empty when neither works.
std::optional<std::string> effectivity_argument(const picard::LatticeContext& ctx, const picard::DivClass& d);

// Built-in certificate for 1 <= s <= 8.
GammaCertificate builtin_certificate(int s);

struct GammaBounds {
    int s = 0;
    std::string lower_expression; // "sqrt(s) - 1"
    std::string lower_decimal;    // 15 significant digits
    mpq_class upper;              // rational above sqrt(2s)
    std::string upper_sqrt_decimal;
};

struct GammaResult {
    int s = 0;
    std::optional<mpq_class> value;
    std::optional<GammaBounds> bounds;
    std::optional<GammaCertificate> certificate;
};

// 1 <= s <= 8; throws UnsupportedRange otherwise.
GammaResult gamma_table(int s);

inline constexpr int upper_search_cap = 64;

// s >= 9: lower bound sqrt(s) - 1 and the least 2d/m > sqrt(2s) with
// 1 <= m <= d <= 64.
GammaBounds gamma_bounds(int s);

// Least t with (i+1)(j+1) > s for some i + j = t.
int alpha_from_genericity(int s);

// alpha(I^(m)) <= 2 lambda for the certificate's m: the piece of bidegree
// (lambda, lambda) has more monomials than conditions. Returns the margin
// (monomials minus conditions), which must be positive.
long alpha_bound_margin(const GammaCertificate& cert);

nlohmann::json to_json(const GammaCertificate& cert);
GammaCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GammaBounds& b);
nlohmann::json to_json(const CertificationReport& r);

} // namespace p1p1::gamma
