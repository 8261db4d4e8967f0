#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "p1p1/exact/integer_linalg.hpp"
#include "p1p1/exact/matrix.hpp"
#include "p1p1/exact/modular_linalg.hpp"
#include "p1p1/exact/prime_field.hpp"
#include "p1p1/fat/conditions.hpp"
#include "p1p1/fat/point_config.hpp"
#include "p1p1/picard/divisor.hpp"

namespace p1p1::fat {

// Largest s accepted by is_m1_generic, which walks all 2^s subsets.
inline constexpr int max_generic_check_s = 12;

struct FatScheme {
    PointConfig config;
    std::vector<int> mults;

    FatScheme(PointConfig c, std::vector<int> m);
    static FatScheme uniform(PointConfig c, int m);
};

enum class PowerKind { plain, symbolic, ordinary };

std::string to_string(PowerKind k);

struct PieceBasis {
    Bidegree bidegree;
    PowerKind kind = PowerKind::plain;
    int power = 1;
    // Rows span the piece inside the monomial space. For prime fields the
    // entries are residues in [0, p).
    exact::ExactMatrix matrix;
};

struct AlphaResult {
    int t = 0;
    Bidegree witness;
    // True when every piece below t (and lexicographically below the
    // witness at t) was checked to vanish rather than inferred.
    bool verified = false;
};

struct EqualityRow {
    Bidegree bidegree;
    std::size_t dim_symbolic = 0;
    std::size_t dim_ordinary = 0;
    bool equal = false;     // dims agree
    bool contained = false; // symbolic piece lies inside the ordinary piece
};

// Graded pieces of symbolic and ordinary powers of the ideal of a point
// configuration, over Q or over F_p. All results are memoized; the engine
// may be shared between threads.
class FatEngine {
public:
    explicit FatEngine(PointConfig config, exact::FieldSpec field = exact::FieldSpec::rationals());

    FatEngine(const FatEngine&) = delete;
    FatEngine& operator=(const FatEngine&) = delete;

    const PointConfig& config() const noexcept { return config_; }
    const exact::FieldSpec& field() const noexcept { return field_; }
    int s() const noexcept { return config_.s(); }

    exact::ExactMatrix conditions_matrix(const std::vector<int>& mults, Bidegree b) const;

    std::size_t symbolic_dim(const std::vector<int>& mults, Bidegree b);
    std::size_t symbolic_dim(int m, Bidegree b);
    std::size_t hilbert_function(Bidegree b);
    // Dimension of (I^r) at b, I the ideal of the reduced points.
    std::size_t ordinary_dim(int r, Bidegree b);

    // power is m for symbolic pieces, r for ordinary ones, ignored for plain.
    PieceBasis piece_basis(PowerKind kind, int power, Bidegree b);
    PieceBasis piece_basis(const std::vector<int>& mults, Bidegree b);

    AlphaResult alpha_symbolic(const std::vector<int>& mults);
    AlphaResult alpha_symbolic(int m);
    // Uses alpha(I^r) = r alpha(I); with verify set, every piece of degree
    // below the answer is computed and checked to vanish.
    AlphaResult alpha_ordinary(int r, bool verify = false);

    // Every 0/1 multiplicity vector has the generic Hilbert function at every
    // bidegree. Certified on a finite set: for a subset of size k and each
    // i < k, full rank k at (i, j0) and injectivity at (i, j0 - 1), where
    // j0 is the least j with (i+1)(j+1) >= k. Throws UnsupportedRange for
    // s > 12.
    bool is_m1_generic();

    // Rows for all bidegrees (i,j) with i <= window.i, j <= window.j, in
    // lexicographic order. Runs on up to `threads` threads.
    std::vector<EqualityRow> equality_report(int m, int r, Bidegree window, unsigned threads = 1);
    EqualityRow compare(int m, int r, Bidegree b);

    // h0 of the line bundle aH + bV - sum m_k E_k on the blowup at the
    // configuration: 0 if a or b is negative, otherwise the dimension of the
    // forms of bidegree (a,b) vanishing to order max(m_k, 0) at P_k.
    std::size_t h0(const picard::DivClass& d);

    // Integer representatives of a basis of the symbolic piece; over F_p
    // these are residues.
    const exact::IntRows& symbolic_basis(const std::vector<int>& mults, Bidegree b);
    const exact::IntRows& ordinary_basis(int r, Bidegree b);

private:
    struct SymPiece {
        exact::IntRows exact;
        exact::ModRows images; // reductions modulo screen_
    };
    struct Recipe {
        Bidegree left;
        std::size_t left_index = 0;
        Bidegree right;
        std::size_t right_index = 0;
    };
    struct OrdPiece {
        exact::ModRows images;
        std::vector<Recipe> recipes; // empty for r = 1
    };

    using SymKey = std::tuple<std::vector<int>, int, int>;
    using OrdKey = std::tuple<int, int, int>;

    std::vector<int> uniform(int m) const { return std::vector<int>(static_cast<std::size_t>(s()), m); }
    void check_power(int m) const;
    const SymPiece& sym_piece(const std::vector<int>& mults, Bidegree b);
    const OrdPiece& ord_piece(int r, Bidegree b);
    OrdPiece build_ord_piece(int r, Bidegree b);
    exact::IntVec materialize(int r, Bidegree b, const Recipe& recipe);

    PointConfig config_;
    exact::FieldSpec field_;
    exact::PrimeField screen_; // field used for modular screening

    std::mutex mutex_;
    std::map<SymKey, std::size_t> sym_dims_;
    std::map<SymKey, std::unique_ptr<SymPiece>> sym_pieces_;
    std::map<OrdKey, std::unique_ptr<OrdPiece>> ord_pieces_;
    std::map<OrdKey, std::unique_ptr<exact::IntRows>> ord_exact_;
    std::optional<bool> m1_generic_;
};

// Seeded sampler: coordinates [c:1] with c uniform in [0, 10^4], resampled
// until the points are distinct and pass is_m1_generic over Q. Depends only
// on (s, seed). Throws SamplingError when the retry budget runs out.
PointConfig random_config(int s, std::uint64_t seed);

inline constexpr std::uint64_t random_coordinate_bound = 10000;
inline constexpr int random_retry_budget = 64;

} // namespace p1p1::fat
