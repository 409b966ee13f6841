#include "gssp/reduction.hpp"

#include <random>
#include <stdexcept>

namespace gssp {

ZoeInstance::ZoeInstance(std::size_t k_, std::vector<std::vector<int>> a)
    : k(k_), A(std::move(a)) {
    if (k == 0) throw std::invalid_argument("ZoeInstance: k must be >= 1");
    if (A.size() != k) throw std::invalid_argument("ZoeInstance: A must be k x k");
    for (const auto& row : A) {
        if (row.size() != k) throw std::invalid_argument("ZoeInstance: A must be k x k");
        for (const int e : row)
            if (e != 0 && e != 1)
                throw std::invalid_argument("ZoeInstance: entries must be 0 or 1");
    }
}

SspInstance reduce_zoe(const ZoeInstance& zoe, const IntMatrix& X,
                       std::optional<std::uint64_t> lambda, GapMode mode) {
    const std::size_t k = zoe.k;
    const std::uint64_t lam = lambda.value_or(static_cast<std::uint64_t>(k));
    // the separation argument needs lambda >= k: coefficients reach k-1 and
    // the chain must outgrow their geometric sum
    if (lam < k)
        throw std::invalid_argument("reduce_zoe: lambda below k voids the verdict equivalence");
    const DistortionPlan plan = build_plan(X, lam, k, mode);

    SspInstance inst{plan.group, {}, {}};
    inst.items.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        Word g;
        for (std::size_t j = 0; j < k; ++j)
            if (zoe.A[j][i]) g = g.concat(plan.witnesses[j]);
        inst.items.push_back(std::move(g));
    }
    Word target;
    for (std::size_t j = 0; j < k; ++j) target = target.concat(plan.witnesses[j]);
    inst.target = std::move(target);

    // instance size is polynomial in k: total length <= (k+1) * k * |w_k|
    std::uint64_t total = inst.target.raw_length();
    for (const auto& g : inst.items) total += g.raw_length();
    const std::uint64_t longest = 1 + 2 * static_cast<std::uint64_t>(plan.indices.back());
    if (total > (k + 1) * k * longest)
        throw std::logic_error("reduce_zoe: instance size bound violated");
    return inst;
}

SolveResult solve_zoe_brute(const ZoeInstance& zoe) {
    if (zoe.k > 25)
        throw std::invalid_argument("solve_zoe_brute: instance exceeds the enumeration guard");
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    const std::size_t k = zoe.k;
    std::vector<int> x(k, 0);
    // lexicographic order of (x_1, ..., x_k): x_1 is the most significant bit
    for (std::uint64_t m = 0; m < (1ull << k); ++m) {
        ++res.stats.nodes;
        for (std::size_t i = 0; i < k; ++i) x[i] = (m >> (k - 1 - i)) & 1u;
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j) {
            int sum = 0;
            for (std::size_t i = 0; i < k; ++i) sum += zoe.A[j][i] * x[i];
            ok = sum == 1;
        }
        if (ok) {
            res.positive = true;
            res.witness = x;
            break;
        }
    }
    res.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SolveResult solve_ssp(const SspInstance& inst, SspStrategy strategy) {
    const FContext ctx{&inst.group};
    return strategy == SspStrategy::brute ? ssp_brute(ctx, inst.items, inst.target)
                                          : ssp_mitm(ctx, inst.items, inst.target);
}

EquivalenceReport verify_equivalence(const ZoeInstance& zoe, const IntMatrix& X) {
    EquivalenceReport rep;
    rep.k = zoe.k;
    const SolveResult zr = solve_zoe_brute(zoe);
    const SspInstance inst = reduce_zoe(zoe, X);
    const SolveResult sr = solve_ssp(inst, SspStrategy::brute);
    rep.zoe_positive = zr.positive;
    rep.ssp_positive = sr.positive;
    rep.verdicts_agree = zr.positive == sr.positive;
    rep.zoe_witness = zr.witness;
    rep.ssp_witness = sr.witness;
    if (sr.witness) {
        const auto& eps = *sr.witness;
        rep.coefficients.resize(zoe.k);
        for (std::size_t j = 0; j < zoe.k; ++j) {
            std::int64_t c = -1;
            for (std::size_t i = 0; i < zoe.k; ++i) c += zoe.A[j][i] * eps[i];
            rep.coefficients[j] = c;
        }
        rep.coefficients_all_zero = true;
        for (const auto c : rep.coefficients)
            if (c != 0) rep.coefficients_all_zero = false;
    }
    return rep;
}

std::vector<Word> padded_items(const std::vector<Word>& items,
                               const std::vector<Word>& correctors, std::uint64_t bound) {
    std::vector<Word> out = items;
    for (const auto& h : correctors) {
        const Word hinv = h.inverse();
        for (std::uint64_t i = 0; i < bound; ++i) out.push_back(h);
        for (std::uint64_t i = 0; i < bound; ++i) out.push_back(hinv);
    }
    return out;
}

SspInstance build_padded_instance(const SspInstance& base, const std::vector<Word>& correctors,
                                  std::uint64_t bound) {
    return SspInstance{base.group, padded_items(base.items, correctors, bound), base.target};
}

ZoeInstance gen_zoe(std::size_t k, ZoeGenMode mode, double density, std::uint64_t seed) {
    if (k == 0) throw std::invalid_argument("gen_zoe: k must be >= 1");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("gen_zoe: density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    // portable Bernoulli: compare raw 64-bit draws against a fixed threshold
    const auto bernoulli = [&rng, density]() {
        if (density >= 1.0) return 1;
        const auto threshold = static_cast<std::uint64_t>(
            static_cast<long double>(density) * 18446744073709551616.0L);
        return rng() < threshold ? 1 : 0;
    };

    std::vector<std::vector<int>> A(k, std::vector<int>(k, 0));
    if (mode == ZoeGenMode::random) {
        for (auto& row : A)
            for (auto& e : row) e = bernoulli();
        return ZoeInstance(k, std::move(A));
    }

    // planted: hide a nonzero 0/1 solution x, then give each row exactly one
    // 1 over the support of x
    std::vector<int> x(k, 0);
    bool nonzero = false;
    for (int attempt = 0; attempt < 1000 && !nonzero; ++attempt) {
        for (auto& xi : x) {
            xi = static_cast<int>(rng() & 1u);
            nonzero = nonzero || xi == 1;
        }
    }
    if (!nonzero) throw std::runtime_error("gen_zoe: planted solution sampling failed");
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < k; ++i)
        if (x[i]) support.push_back(i);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t pick = support[rng() % support.size()];
        for (std::size_t i = 0; i < k; ++i) {
            if (i == pick)
                A[j][i] = 1;
            else if (x[i])
                A[j][i] = 0;
            else
                A[j][i] = bernoulli();
        }
    }
    return ZoeInstance(k, std::move(A));
}

IntMatrix random_unimodular(std::size_t n, unsigned steps, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_unimodular: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (unsigned s = 0; s < steps; ++s) {
        const std::size_t i = rng() % n;
        std::size_t j = rng() % n;
        if (n > 1)
            while (j == i) j = rng() % n;
        switch (rng() % 3) {
            case 0:  // row_i += row_j
                if (n > 1)
                    for (std::size_t c = 0; c < n; ++c) m[i][c] += m[j][c];
                break;
            case 1:  // row_i -= row_j
                if (n > 1)
                    for (std::size_t c = 0; c < n; ++c) m[i][c] -= m[j][c];
                break;
            default:  // negate one row (keeps |det| = 1)
                for (std::size_t c = 0; c < n; ++c) m[i][c] = -m[i][c];
                break;
        }
    }
    return IntMatrix(std::move(m));
}

const Alphabet& ZxHeisenbergContext::alphabet() {
    static const Alphabet names({"t", "x1", "x2"});
    return names;
}

ZxHeisenbergElement ZxHeisenbergContext::eval(const Word& w) const {
    ZxHeisenbergElement acc = identity();
    for (const auto& l : w.letters()) {
        ZxHeisenbergElement step = identity();
        if (l.gen == 0)
            step.t = l.exp;
        else if (l.gen == 1)
            step.h.a = l.exp;
        else if (l.gen == 2)
            step.h.b = l.exp;
        else
            throw std::invalid_argument("ZxHeisenberg: word must be over {t, x1, x2}");
        acc = mul(acc, step);
    }
    return acc;
}

}  // namespace gssp
