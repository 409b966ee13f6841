#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gssp/collect.hpp"
#include "gssp/distortion.hpp"
#include "gssp/fgroup.hpp"

namespace gssp {

/// Zero-one equation instance: decide whether A x = (1,...,1) for a 0/1
/// vector x.
struct ZoeInstance {
    std::size_t k = 0;
    std::vector<std::vector<int>> A;

    ZoeInstance() = default;
    ZoeInstance(std::size_t k_, std::vector<std::vector<int>> a);
};

/// Subset sum instance over F: decide whether target = items_1^{e_1} ...
/// items_k^{e_k} for e_i in {0,1}, order fixed.
struct SspInstance {
    FGroup group;
    std::vector<Word> items;
    Word target;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    double wall_ms = 0.0;
};

struct SolveResult {
    bool positive = false;
    std::optional<std::vector<int>> witness;
    SolveStats stats;
};

enum class SspStrategy { brute, mitm };

/// Witness-product reduction: items g_i = w_1^{a_{1i}} ... w_k^{a_{ki}} (column
/// reading of A) and target g = w_1 ... w_k over the witness plan for X with
/// lambda = k unless overridden. Rejects quasi-unipotent actions.
SspInstance reduce_zoe(const ZoeInstance& zoe, const IntMatrix& X,
                       std::optional<std::uint64_t> lambda = std::nullopt,
                       GapMode mode = GapMode::minimal);

/// Exhaustive ZOE solver; enumerates assignments in lexicographic order of
/// (x_1, ..., x_k) and returns the first satisfying one. Guarded to k <= 25.
SolveResult solve_zoe_brute(const ZoeInstance& zoe);

SolveResult solve_ssp(const SspInstance& inst, SspStrategy strategy);

struct EquivalenceReport {
    std::size_t k = 0;
    bool zoe_positive = false;
    bool ssp_positive = false;
    bool verdicts_agree = false;
    std::optional<std::vector<int>> zoe_witness;
    std::optional<std::vector<int>> ssp_witness;
    /// -1 + sum_i a_{ji} eps_i per row j, recomputed for the SSP witness.
    std::vector<std::int64_t> coefficients;
    bool coefficients_all_zero = false;
};

/// Runs both brute solvers and checks the if-and-only-if claim instance-wise.
EquivalenceReport verify_equivalence(const ZoeInstance& zoe, const IntMatrix& X);

/// Appends, for each corrector h, `bound` copies of h followed by `bound`
/// copies of h^-1; the target is unchanged.
std::vector<Word> padded_items(const std::vector<Word>& items,
                               const std::vector<Word>& correctors, std::uint64_t bound);
SspInstance build_padded_instance(const SspInstance& base, const std::vector<Word>& correctors,
                                  std::uint64_t bound);

enum class ZoeGenMode { random, planted };

/// Seeded instance generator. Planted mode hides a nonzero 0/1 solution and
/// builds rows summing to exactly 1 over its support, guaranteeing
/// positivity; identical arguments produce identical instances.
ZoeInstance gen_zoe(std::size_t k, ZoeGenMode mode, double density, std::uint64_t seed);

/// Seeded random element of GL_n(Z): a product of `steps` elementary shears
/// and signed swaps, so |det| = 1 by construction.
IntMatrix random_unimodular(std::size_t n, unsigned steps, std::uint64_t seed);

// ---- generic solver core -------------------------------------------------
//
// The enumeration is order-respecting and valid in any group; it only needs
// evaluation, multiplication, inversion and a total order on elements. The
// padded-instance demonstrations instantiate it for the Heisenberg group and
// for Z x Heisenberg; the SSP wire format instantiates it for F.

template <class Ctx>
SolveResult ssp_brute(const Ctx& ctx, const std::vector<Word>& items, const Word& target,
                      std::size_t guard = 30) {
    if (items.size() > guard)
        throw std::invalid_argument("ssp_brute: instance exceeds the enumeration guard");
    const auto t0 = std::chrono::steady_clock::now();
    using Elem = decltype(ctx.eval(target));
    const Elem goal = ctx.eval(target);
    std::vector<Elem> gs;
    gs.reserve(items.size());
    for (const auto& w : items) gs.push_back(ctx.eval(w));

    SolveResult res;
    std::vector<int> eps(items.size(), 0);
    // depth-first with the 0 branch first visits assignments lexicographically
    auto dfs = [&](auto&& self, std::size_t i, const Elem& prefix) -> bool {
        ++res.stats.nodes;
        if (i == gs.size()) return prefix == goal;
        eps[i] = 0;
        if (self(self, i + 1, prefix)) return true;
        eps[i] = 1;
        if (self(self, i + 1, ctx.mul(prefix, gs[i]))) return true;
        eps[i] = 0;
        return false;
    };
    res.positive = dfs(dfs, 0, ctx.identity());
    if (res.positive) res.witness = eps;
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

template <class Ctx>
SolveResult ssp_mitm(const Ctx& ctx, const std::vector<Word>& items, const Word& target,
                     std::size_t guard = 50) {
    if (items.size() > guard)
        throw std::invalid_argument("ssp_mitm: instance exceeds the enumeration guard");
    const auto t0 = std::chrono::steady_clock::now();
    using Elem = decltype(ctx.eval(target));
    const Elem goal = ctx.eval(target);
    std::vector<Elem> gs;
    gs.reserve(items.size());
    for (const auto& w : items) gs.push_back(ctx.eval(w));

    const std::size_t k = items.size();
    const std::size_t split = (k + 1) / 2;  // prefix 1..split, suffix split+1..k
    const std::size_t suffix_len = k - split;

    SolveResult res;
    // suffix products, first (lexicographically smallest) representative per element
    std::map<Elem, std::uint64_t> table;
    for (std::uint64_t bits = 0; bits < (1ull << suffix_len); ++bits) {
        ++res.stats.nodes;
        Elem prod = ctx.identity();
        for (std::size_t i = 0; i < suffix_len; ++i)
            if (bits & (1ull << i)) prod = ctx.mul(prod, gs[split + i]);
        table.emplace(std::move(prod), bits);
    }
    for (std::uint64_t bits = 0; bits < (1ull << split); ++bits) {
        ++res.stats.nodes;
        Elem prod = ctx.identity();
        for (std::size_t i = 0; i < split; ++i)
            if (bits & (1ull << i)) prod = ctx.mul(prod, gs[i]);
        const Elem need = ctx.mul(ctx.inv(prod), goal);
        auto hit = table.find(need);
        if (hit == table.end()) continue;
        std::vector<int> eps(k, 0);
        for (std::size_t i = 0; i < split; ++i) eps[i] = (bits >> i) & 1u;
        for (std::size_t i = 0; i < suffix_len; ++i) eps[split + i] = (hit->second >> i) & 1u;
        res.positive = true;
        res.witness = std::move(eps);
        break;
    }
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// Context for F = Z x| Z^n.
struct FContext {
    const FGroup* G;

    FElement eval(const Word& w) const { return evaluate(*G, w); }
    FElement mul(const FElement& a, const FElement& b) const { return f_mul(*G, a, b); }
    FElement inv(const FElement& a) const { return f_inv(*G, a); }
    FElement identity() const { return f_identity(*G); }
};

/// Context for the integer Heisenberg group, words over {x1, x2}.
struct HeisenbergContext {
    HeisenbergElement eval(const Word& w) const { return heisenberg_eval(w); }
    HeisenbergElement mul(const HeisenbergElement& a, const HeisenbergElement& b) const {
        return heisenberg_mul(a, b);
    }
    HeisenbergElement inv(const HeisenbergElement& a) const { return heisenberg_inv(a); }
    HeisenbergElement identity() const { return heisenberg_identity(); }
};

inline bool operator<(const HeisenbergElement& l, const HeisenbergElement& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.z < r.z;
}

/// Direct product Z x Heisenberg, words over {t, x1, x2}; the general-group
/// demonstration target for the padded-instance mechanics.
struct ZxHeisenbergElement {
    BigInt t;
    HeisenbergElement h;

    bool operator==(const ZxHeisenbergElement& other) const = default;
};

inline bool operator<(const ZxHeisenbergElement& l, const ZxHeisenbergElement& r) {
    if (l.t != r.t) return l.t < r.t;
    return l.h < r.h;
}

struct ZxHeisenbergContext {
    static const Alphabet& alphabet();

    ZxHeisenbergElement eval(const Word& w) const;
    ZxHeisenbergElement mul(const ZxHeisenbergElement& a, const ZxHeisenbergElement& b) const {
        return {a.t + b.t, heisenberg_mul(a.h, b.h)};
    }
    ZxHeisenbergElement inv(const ZxHeisenbergElement& a) const {
        return {-a.t, heisenberg_inv(a.h)};
    }
    ZxHeisenbergElement identity() const { return {0, heisenberg_identity()}; }
};

}  // namespace gssp
