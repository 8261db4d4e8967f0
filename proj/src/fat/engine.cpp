#include "p1p1/fat/engine.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "p1p1/error.hpp"
#include "p1p1/fat/rng.hpp"

namespace p1p1::fat {

using exact::IntRows;
using exact::IntVec;
using exact::ModEchelon;
using exact::ModRows;
using exact::ModVec;

FatScheme::FatScheme(PointConfig c, std::vector<int> m) : config(std::move(c)), mults(std::move(m))
{
    if (mults.size() != config.points.size())
        throw DimensionMismatch("multiplicity vector length differs from the number of points");
    for (int v : mults)
        if (v < 0) throw InvalidInput("multiplicities must be non-negative");
}

FatScheme FatScheme::uniform(PointConfig c, int m)
{
    const auto n = c.points.size();
    return FatScheme(std::move(c), std::vector<int>(n, m));
}

std::string to_string(PowerKind k)
{
    switch (k) {
    case PowerKind::plain: return "plain";
    case PowerKind::symbolic: return "symbolic";
    case PowerKind::ordinary: return "ordinary";
    }
    return "plain";
}

namespace {

IntVec lift(const ModVec& v)
{
    IntVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = static_cast<unsigned long>(v[k]);
    return out;
}

IntRows lift(const ModRows& rows)
{
    IntRows out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(lift(r));
    return out;
}

int max_of(const std::vector<int>& v)
{
    return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

} // namespace

FatEngine::FatEngine(PointConfig config, exact::FieldSpec field)
    : config_(std::move(config)),
      field_(field),
      screen_(field.is_rational() ? exact::PrimeField(exact::screening_prime) : field.prime_field())
{
    validate(config_);
}

void FatEngine::check_power(int m) const
{
    if (m < 0) throw InvalidInput("power must be non-negative");
    field_.require_multiplicity_guard(m);
}

exact::ExactMatrix FatEngine::conditions_matrix(const std::vector<int>& mults, Bidegree b) const
{
    field_.require_multiplicity_guard(max_of(mults));
    if (field_.is_rational()) return fat::conditions_matrix(config_, mults, b);
    const auto f = field_.prime_field();
    return exact::ExactMatrix::from_integer_rows(lift(condition_rows_mod(config_, mults, b, f)), b.monomials());
}

std::size_t FatEngine::symbolic_dim(const std::vector<int>& mults, Bidegree b)
{
    if (b.i < 0 || b.j < 0) throw InvalidInput("bidegree " + to_string(b) + " has a negative entry");
    field_.require_multiplicity_guard(max_of(mults));
    SymKey key{mults, b.i, b.j};
    {
        std::lock_guard lock(mutex_);
        if (auto it = sym_dims_.find(key); it != sym_dims_.end()) return it->second;
    }
    const std::size_t cols = b.monomials();
    std::size_t rank;
    if (field_.is_rational())
        rank = exact::rank_certified(condition_rows(config_, mults, b), cols);
    else
        rank = exact::rank_mod(condition_rows_mod(config_, mults, b, screen_), cols, screen_);
    const std::size_t dim = cols - rank;
    std::lock_guard lock(mutex_);
    return sym_dims_.emplace(std::move(key), dim).first->second;
}

std::size_t FatEngine::symbolic_dim(int m, Bidegree b)
{
    check_power(m);
    return symbolic_dim(uniform(m), b);
}

std::size_t FatEngine::hilbert_function(Bidegree b)
{
    return b.monomials() - symbolic_dim(1, b);
}

const FatEngine::SymPiece& FatEngine::sym_piece(const std::vector<int>& mults, Bidegree b)
{
    SymKey key{mults, b.i, b.j};
    {
        std::lock_guard lock(mutex_);
        if (auto it = sym_pieces_.find(key); it != sym_pieces_.end()) return *it->second;
    }
    auto piece = std::make_unique<SymPiece>();
    const std::size_t cols = b.monomials();
    if (field_.is_rational()) {
        piece->exact = exact::kernel_basis(condition_rows(config_, mults, b), cols);
        piece->images = exact::reduce(piece->exact, screen_);
    } else {
        piece->images = exact::kernel_basis_mod(condition_rows_mod(config_, mults, b, screen_), cols, screen_);
        piece->exact = lift(piece->images);
    }
    std::lock_guard lock(mutex_);
    sym_dims_.emplace(key, piece->exact.size());
    return *sym_pieces_.emplace(std::move(key), std::move(piece)).first->second;
}

const IntRows& FatEngine::symbolic_basis(const std::vector<int>& mults, Bidegree b)
{
    if (b.i < 0 || b.j < 0) throw InvalidInput("bidegree " + to_string(b) + " has a negative entry");
    field_.require_multiplicity_guard(max_of(mults));
    if (mults.size() != config_.points.size())
        throw DimensionMismatch("multiplicity vector length differs from the number of points");
    return sym_piece(mults, b).exact;
}

// (I^r)_b is spanned by the products (I^{r-1})_{b-c} * I_c. Candidate
// products are screened modulo a prime: a vector whose image is independent
// of the accepted images is independent over Q as well. The span is capped
// by dim (I^(r))_b since I^r lies in I^(r); once the cap is reached no
// further candidate can contribute. Over Q, candidates rejected by the
// screen are rechecked exactly when the cap is not reached, since the
// screen can only underestimate the rational rank.
FatEngine::OrdPiece FatEngine::build_ord_piece(int r, Bidegree b)
{
    OrdPiece out;
    const std::size_t cols = b.monomials();
    if (r == 1) {
        out.images = sym_piece(uniform(1), b).images;
        return out;
    }
    const std::size_t cap = std::min(cols, symbolic_dim(uniform(r), b));
    if (cap == 0) return out;

    ModEchelon echelon(cols, screen_);
    std::vector<Recipe> deferred;
    for (int c = 0; c <= b.i && echelon.rank() < cap; ++c)
        for (int d = 0; d <= b.j && echelon.rank() < cap; ++d) {
            const Bidegree right{c, d};
            const Bidegree left{b.i - c, b.j - d};
            const auto& rp = sym_piece(uniform(1), right);
            if (rp.images.empty()) continue;
            const auto& lp = ord_piece(r - 1, left);
            if (lp.images.empty()) continue;
            for (std::size_t li = 0; li < lp.images.size() && echelon.rank() < cap; ++li)
                for (std::size_t ri = 0; ri < rp.images.size() && echelon.rank() < cap; ++ri) {
                    ModVec v = multiply(lp.images[li], left, rp.images[ri], right, screen_);
                    const Recipe recipe{left, li, right, ri};
                    if (echelon.insert(v)) {
                        out.images.push_back(std::move(v));
                        out.recipes.push_back(recipe);
                    } else if (field_.is_rational()) {
                        deferred.push_back(recipe);
                    }
                }
        }

    if (field_.is_rational() && echelon.rank() < cap && !deferred.empty()) {
        IntRows accepted;
        for (const auto& recipe : out.recipes) accepted.push_back(materialize(r, b, recipe));
        exact::IntRowSpace space(std::move(accepted), cols);
        for (const auto& recipe : deferred) {
            if (space.dim() >= cap) break;
            IntVec v = materialize(r, b, recipe);
            if (space.add(v)) {
                out.images.push_back(exact::reduce(v, screen_));
                out.recipes.push_back(recipe);
            }
        }
    }
    return out;
}

const FatEngine::OrdPiece& FatEngine::ord_piece(int r, Bidegree b)
{
    OrdKey key{r, b.i, b.j};
    {
        std::lock_guard lock(mutex_);
        if (auto it = ord_pieces_.find(key); it != ord_pieces_.end()) return *it->second;
    }
    auto piece = std::make_unique<OrdPiece>(build_ord_piece(r, b));
    std::lock_guard lock(mutex_);
    return *ord_pieces_.emplace(key, std::move(piece)).first->second;
}

IntVec FatEngine::materialize(int r, Bidegree /*b*/, const Recipe& recipe)
{
    const IntRows& left = ordinary_basis(r - 1, recipe.left);
    const IntRows& right = sym_piece(uniform(1), recipe.right).exact;
    return multiply(left.at(recipe.left_index), recipe.left, right.at(recipe.right_index), recipe.right);
}

const IntRows& FatEngine::ordinary_basis(int r, Bidegree b)
{
    if (r < 1) throw InvalidInput("ordinary power must be at least 1");
    if (b.i < 0 || b.j < 0) throw InvalidInput("bidegree " + to_string(b) + " has a negative entry");
    check_power(r);
    if (r == 1) return sym_piece(uniform(1), b).exact;
    OrdKey key{r, b.i, b.j};
    {
        std::lock_guard lock(mutex_);
        if (auto it = ord_exact_.find(key); it != ord_exact_.end()) return *it->second;
    }
    const OrdPiece& piece = ord_piece(r, b);
    auto rows = std::make_unique<IntRows>();
    for (const auto& recipe : piece.recipes) rows->push_back(materialize(r, b, recipe));
    if (!field_.is_rational())
        for (auto& v : *rows) v = lift(exact::reduce(v, screen_));
    std::lock_guard lock(mutex_);
    return *ord_exact_.emplace(key, std::move(rows)).first->second;
}

std::size_t FatEngine::ordinary_dim(int r, Bidegree b)
{
    if (r < 1) throw InvalidInput("ordinary power must be at least 1");
    if (b.i < 0 || b.j < 0) throw InvalidInput("bidegree " + to_string(b) + " has a negative entry");
    check_power(r);
    if (r == 1) return symbolic_dim(1, b);
    return ord_piece(r, b).images.size();
}

PieceBasis FatEngine::piece_basis(PowerKind kind, int power, Bidegree b)
{
    PieceBasis out;
    out.bidegree = b;
    out.kind = kind;
    out.power = kind == PowerKind::plain ? 1 : power;
    const IntRows& rows = kind == PowerKind::ordinary ? ordinary_basis(power, b)
                                                      : symbolic_basis(uniform(out.power), b);
    out.matrix = exact::ExactMatrix::from_integer_rows(rows, b.monomials());
    return out;
}

PieceBasis FatEngine::piece_basis(const std::vector<int>& mults, Bidegree b)
{
    PieceBasis out;
    out.bidegree = b;
    out.kind = PowerKind::symbolic;
    out.power = max_of(mults);
    out.matrix = exact::ExactMatrix::from_integer_rows(symbolic_basis(mults, b), b.monomials());
    return out;
}

AlphaResult FatEngine::alpha_symbolic(const std::vector<int>& mults)
{
    if (mults.size() != config_.points.size())
        throw DimensionMismatch("multiplicity vector length differs from the number of points");
    // Terminates: once (i+1)(j+1) exceeds the number of conditions the
    // kernel is nonzero.
    for (int t = 0;; ++t)
        for (int i = 0; i <= t; ++i)
            if (symbolic_dim(mults, {i, t - i}) > 0) return {t, {i, t - i}, true};
}

AlphaResult FatEngine::alpha_symbolic(int m)
{
    check_power(m);
    return alpha_symbolic(uniform(m));
}

AlphaResult FatEngine::alpha_ordinary(int r, bool verify)
{
    if (r < 1) throw InvalidInput("ordinary power must be at least 1");
    check_power(r);
    const AlphaResult base = alpha_symbolic(1);
    // f^r gives the upper bound. At degree r t every product has all r
    // factors in degree t, each with first degree at least that of the
    // witness of I, so r times the witness is lexicographically least.
    AlphaResult out{r * base.t, {r * base.witness.i, r * base.witness.j}, false};
    if (!verify) return out;
    for (int t = 0; t <= out.t; ++t)
        for (int i = 0; i <= t; ++i) {
            const Bidegree b{i, t - i};
            if (b == out.witness) {
                if (ordinary_dim(r, b) == 0)
                    throw VerificationFailure("alpha of the ordinary power: witness piece " + to_string(b) +
                                              " is zero");
                out.verified = true;
                return out;
            }
            if (ordinary_dim(r, b) != 0)
                throw VerificationFailure("alpha of the ordinary power: piece " + to_string(b) +
                                          " below the predicted witness is nonzero");
        }
    return out;
}

bool FatEngine::is_m1_generic()
{
    {
        std::lock_guard lock(mutex_);
        if (m1_generic_) return *m1_generic_;
    }
    const int n = s();
    if (n > max_generic_check_s)
        throw UnsupportedRange("genericity check walks all 2^s subsets and is limited to s <= " +
                               std::to_string(max_generic_check_s) + "; use sampled verification instead");
    bool ok = true;
    for (std::uint32_t mask = 1; ok && mask < (1u << n); ++mask) {
        std::vector<int> mults(static_cast<std::size_t>(n), 0);
        int k = 0;
        for (int p = 0; p < n; ++p)
            if (mask & (1u << p)) {
                mults[static_cast<std::size_t>(p)] = 1;
                ++k;
            }
        for (int i = 0; ok && i < k; ++i) {
            const int j0 = (k + i) / (i + 1) - 1; // ceil(k/(i+1)) - 1
            const Bidegree top{i, j0};
            if (top.monomials() - symbolic_dim(mults, top) != static_cast<std::size_t>(k)) ok = false;
            if (ok && j0 >= 1 && symbolic_dim(mults, {i, j0 - 1}) != 0) ok = false;
        }
    }
    std::lock_guard lock(mutex_);
    m1_generic_ = ok;
    config_.m1_generic = ok;
    config_.distinct_rules = have_distinct_rules(config_);
    return ok;
}

EqualityRow FatEngine::compare(int m, int r, Bidegree b)
{
    if (m < 1 || r < 1) throw InvalidInput("powers must be at least 1");
    EqualityRow row;
    row.bidegree = b;
    row.dim_symbolic = symbolic_dim(m, b);
    row.dim_ordinary = ordinary_dim(r, b);
    row.equal = row.dim_symbolic == row.dim_ordinary;
    if (m == r) {
        row.contained = row.equal;
        return row;
    }
    // Containment of the symbolic piece in the ordinary one: the sum of the
    // two spaces must not exceed the ordinary piece.
    const std::size_t cols = b.monomials();
    ModEchelon echelon(cols, screen_);
    for (const auto& v : ord_piece(r, b).images) echelon.insert(v);
    const auto& sym = sym_piece(uniform(m), b);
    for (const auto& v : sym.images) echelon.insert(v);
    if (echelon.rank() > row.dim_ordinary) {
        row.contained = false;
        return row;
    }
    if (!field_.is_rational()) {
        row.contained = true;
        return row;
    }
    exact::IntRowSpace space(ordinary_basis(r, b), cols);
    row.contained = std::all_of(sym.exact.begin(), sym.exact.end(), [&](const IntVec& v) { return space.contains(v); });
    return row;
}

std::vector<EqualityRow> FatEngine::equality_report(int m, int r, Bidegree window, unsigned threads)
{
    if (window.i < 0 || window.j < 0) throw InvalidInput("window bounds must be non-negative");
    if (m < 1 || r < 1) throw InvalidInput("powers must be at least 1");
    check_power(std::max(m, r));
    std::vector<Bidegree> cells;
    for (int i = 0; i <= window.i; ++i)
        for (int j = 0; j <= window.j; ++j) cells.push_back({i, j});
    std::vector<EqualityRow> rows(cells.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
    if (threads == 1) {
        for (std::size_t k = 0; k < cells.size(); ++k) rows[k] = compare(m, r, cells[k]);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < cells.size();) {
            try {
                rows[k] = compare(m, r, cells[k]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::size_t FatEngine::h0(const picard::DivClass& d)
{
    if (d.s() != s())
        throw ContextError("class has " + std::to_string(d.s()) + " exceptional coordinates, configuration has " +
                           std::to_string(s()) + " points");
    if (d.a < 0 || d.b < 0) return 0;
    std::vector<int> mults;
    for (auto m : d.mults) mults.push_back(static_cast<int>(std::max<std::int64_t>(m, 0)));
    return symbolic_dim(mults, {static_cast<int>(d.a), static_cast<int>(d.b)});
}

PointConfig random_config(int s, std::uint64_t seed)
{
    if (s < 1) throw InvalidInput("random configurations need s >= 1");
    if (s > max_generic_check_s)
        throw UnsupportedRange("random configurations are verified m1-generic, which is limited to s <= " +
                               std::to_string(max_generic_check_s));
    SplitMix64 rng(seed ^ (0xd1b54a32d192ed03ull * static_cast<std::uint64_t>(s)));
    for (int attempt = 0; attempt < random_retry_budget; ++attempt) {
        PointConfig config;
        config.provenance = Provenance::random;
        config.seed = seed;
        for (int k = 0; k < s; ++k) {
            const auto cx = rng.uniform(random_coordinate_bound);
            const auto cy = rng.uniform(random_coordinate_bound);
            config.points.push_back({P1Point::affine(mpq_class(static_cast<unsigned long>(cx))),
                                     P1Point::affine(mpq_class(static_cast<unsigned long>(cy)))});
        }
        try {
            validate(config);
        } catch (const InvalidInput&) {
            continue;
        }
        FatEngine engine(config);
        if (engine.is_m1_generic()) {
            PointConfig out = engine.config();
            return out;
        }
    }
    throw SamplingError("no m1-generic configuration of " + std::to_string(s) + " points after " +
                        std::to_string(random_retry_budget) + " attempts");
}

} // namespace p1p1::fat
