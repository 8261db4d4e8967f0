#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace p1p1::fat {

// A point [x0 : x1] of P1 with rational homogeneous coordinates.
struct P1Point {
    mpq_class x0;
    mpq_class x1{1};

    static P1Point affine(const mpq_class& c) { return {c, 1}; }
    static P1Point infinity() { return {1, 0}; }

    bool same_as(const P1Point& o) const { return x0 * o.x1 == x1 * o.x0; }
};

struct Point {
    P1Point x; // first factor
    P1Point y; // second factor
};

enum class Provenance { random, grid, explicit_list };

std::string to_string(Provenance p);

struct PointConfig {
    std::vector<Point> points;
    Provenance provenance = Provenance::explicit_list;
    std::optional<std::uint64_t> seed;
    // Set by the genericity checks; empty means not verified.
    std::optional<bool> distinct_rules;
    std::optional<bool> m1_generic;

    int s() const noexcept { return static_cast<int>(points.size()); }
    // Drops the points whose flag is false.
    PointConfig subset(const std::vector<bool>& keep) const;
};

// Throws InvalidInput on a zero coordinate pair or repeated points.
void validate(const PointConfig& config);

bool have_distinct_rules(const PointConfig& config);

// Rectangular array X1 x X2. Throws InvalidInput on repeated entries.
PointConfig grid_config(const std::vector<P1Point>& xs, const std::vector<P1Point>& ys);

// Coordinates are written as integers where possible and "p/q" strings
// otherwise: {s, points: [[[a0,a1],[b0,b1]], ...], provenance, seed}.
nlohmann::json to_json(const PointConfig& config);
PointConfig config_from_json(const nlohmann::json& j);

mpq_class parse_rational(const nlohmann::json& j);
nlohmann::json rational_to_json(const mpq_class& q);
// "3", "-2/5", "inf" (the point [1:0]).
P1Point parse_p1(const std::string& text);

} // namespace p1p1::fat
