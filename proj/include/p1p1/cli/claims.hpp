#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "p1p1/exact/prime_field.hpp"

namespace p1p1::cli {

struct ClaimOptions {
    exact::FieldSpec field = exact::FieldSpec::rationals();
    std::uint64_t seed = 1; // seeds seed, seed+1, seed+2 where three are needed
    unsigned threads = 1;
    std::vector<int> only;  // criterion numbers; empty runs all
};

struct ClaimResult {
    int criterion = 0;
    std::string id;
    std::string statement;
    std::string expected;
    std::string computed;
    bool passed = false;
    // Set on a failure that matches a documented defect of the claimed
    // statement; the claim still counts as failed.
    std::string known_deviation;
    // Finite-window or bounded check of a statement about all m.
    bool partial_evidence = false;
    double seconds = 0;
    nlohmann::json details;
};

inline constexpr int claim_count = 10;

// Largest multiplicity any selected claim needs; prime fields must exceed
// twice this.
int max_multiplicity(const ClaimOptions& options);

// Runs the selected claims in order. Throws InvalidInput when the field
// fails the multiplicity guard.
std::vector<ClaimResult> run_claims(const ClaimOptions& options);

nlohmann::json to_json(const ClaimResult& r);

} // namespace p1p1::cli
