#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace p1p1::picard {

// Number of blown-up points; every class lives in the lattice of one context.
struct LatticeContext {
    int s = 0;

    explicit LatticeContext(int points);
};

// The class aH + bV - m_1 E_1 - ... - m_s E_s.
struct DivClass {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::vector<std::int64_t> mults;

    int s() const noexcept { return static_cast<int>(mults.size()); }

    static DivClass H(int s);
    static DivClass V(int s);
    // E_i with 1-based i, i.e. mults[i-1] == -1.
    static DivClass E(int s, int i);
    // Sum of all E_i.
    static DivClass E_total(int s);
    // lambda(H+V) - m(E_1 + ... + E_s).
    static DivClass uniform(int s, std::int64_t lambda, std::int64_t m);

    DivClass swapped() const;
    bool is_zero() const noexcept;

    DivClass& operator+=(const DivClass& o);
    DivClass& operator-=(const DivClass& o);
    friend DivClass operator+(DivClass x, const DivClass& y) { return x += y; }
    friend DivClass operator-(DivClass x, const DivClass& y) { return x -= y; }
    friend DivClass operator*(std::int64_t k, DivClass x);
    friend DivClass operator-(DivClass x) { return -1 * std::move(x); }

    friend bool operator==(const DivClass&, const DivClass&) = default;
    friend auto operator<=>(const DivClass&, const DivClass&) = default;
};

std::string to_string(const DivClass& d);

// JSON form [a, b, m_1, ..., m_s].
nlohmann::json to_json(const DivClass& d);
DivClass divclass_from_json(const nlohmann::json& j);

std::int64_t intersect(const LatticeContext& ctx, const DivClass& d1, const DivClass& d2);

// K_X = -2H - 2V + E_1 + ... + E_s.
DivClass canonical(const LatticeContext& ctx);

std::int64_t arithmetic_genus(const LatticeContext& ctx, const DivClass& c);

// Exceptional configuration of a birational morphism X -> P2:
// L = H+V-E_s, E'_i = E_i (i < s), E'_s = H-E_s, E'_{s+1} = V-E_s.
struct P2Basis {
    DivClass L;
    std::vector<DivClass> exceptional; // E'_1 .. E'_{s+1}
};

P2Basis p2_basis(const LatticeContext& ctx);

// Coordinates of D = d L + sum_i c_i E'_i.
struct P2Coords {
    std::int64_t d = 0;
    std::vector<std::int64_t> c;

    friend bool operator==(const P2Coords&, const P2Coords&) = default;
};

P2Coords to_p2_basis(const LatticeContext& ctx, const DivClass& d);
DivClass from_p2_basis(const LatticeContext& ctx, const P2Coords& coords);

// Pairing of signature (1, s+1) on P2 coordinates.
std::int64_t p2_intersect(const P2Coords& x, const P2Coords& y);

} // namespace p1p1::picard
