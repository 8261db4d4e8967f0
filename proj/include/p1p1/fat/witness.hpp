#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "p1p1/fat/engine.hpp"

namespace p1p1::fat {

enum class WitnessKind { equality, containment_failure };

std::string to_string(WitnessKind k);

struct WitnessCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Witness {
    WitnessKind kind = WitnessKind::equality;
    Bidegree bidegree;
    std::size_t dim_symbolic = 0;
    std::size_t dim_ordinary = 0;
    // Set when dim_symbolic was only shown positive by exhibiting a form.
    bool dim_symbolic_is_lower_bound = false;
    int s = 0;
    int m = 0; // symbolic power
    int r = 0; // ordinary power
    std::vector<WitnessCheck> checks;

    bool all_passed() const;
};

nlohmann::json to_json(const Witness& w);

// max{0, (i+1)(j+1) - 3s}, the expected dimension of the second symbolic
// power of s general points. Throws ExcludedCase at (2, s-1) and (s-1, 2).
std::size_t second_symbolic_formula(int s, Bidegree b);

// s = 4: alpha(I) = 3 and alpha(I^3) = 9 while (I^(3))_(4,4) is nonzero.
Witness four_point_witness(FatEngine& engine);

// s = 6: (I^(2))_(3,4) has dimension 2 and (I^2)_(3,4) is zero.
Witness six_point_witness(FatEngine& engine);

// s >= 7, with s = 2 q1 + r1 = 3 q2 + r2: at (3, q1 + q2) the symbolic
// square has dimension q2 + 4 - 2 r1 - r2 and the ordinary square at most
// (2 - r1)(3 - r2). Throws InvalidInput for s < 7 and VerificationFailure
// if the strict inequality fails.
Witness seven_plus_witness(FatEngine& engine);

// s = t^2 points: with F_i spanning I(Y_i)_(t-1,t-1), Y_i the points other
// than P_i, F = prod F_i lies in I^(s-1) and F^((2t-1)n) is a nonzero
// element of I^((s-1)(2t-1)n) in bidegree (D, D), D = (t-1)s(2t-1)n, while
// alpha(I^(2s(t-1)n+1)) > 2D. Restricted to t <= 3, n = 1. Throws
// ConstructionFailure naming the first step that does not hold.
Witness square_grid_noncontainment(FatEngine& engine, int t, int n);

} // namespace p1p1::fat
