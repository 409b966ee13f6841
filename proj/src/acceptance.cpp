#include "gssp/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "gssp/cli.hpp"
#include "gssp/collect.hpp"
#include "gssp/distortion.hpp"
#include "gssp/reduction.hpp"

namespace gssp {

namespace {

const IntMatrix& matrix_x0() {
    static const IntMatrix m({{2, 1}, {1, 1}});
    return m;
}

Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t gens) {
    Word w;
    for (std::size_t i = 0; i < letters; ++i) w.append(rng() % gens, rng() % 2 ? 1 : -1);
    return w;
}

CriterionResult crit_reduction_exhaustive() {
    CriterionResult r{1, "reduction equivalence, exhaustive ZOE k <= 3 over X0", false, "", 0};
    std::size_t total = 0;
    std::size_t agree = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
        for (std::uint64_t bits = 0; bits < (1ull << (k * k)); ++bits) {
            std::vector<std::vector<int>> a(k, std::vector<int>(k));
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < k; ++i)
                    a[j][i] = static_cast<int>((bits >> (j * k + i)) & 1u);
            const ZoeInstance zoe(k, std::move(a));
            const bool zp = solve_zoe_brute(zoe).positive;
            const bool sp = solve_ssp(reduce_zoe(zoe, matrix_x0()), SspStrategy::brute).positive;
            ++total;
            if (zp == sp) ++agree;
        }
    }
    r.pass = agree == total;
    std::ostringstream os;
    os << agree << "/" << total << " verdicts agree (k = 1, 2, 3)";
    r.detail = os.str();
    return r;
}

CriterionResult crit_reduction_sampled() {
    CriterionResult r{2, "reduction equivalence, 100 seeded k = 6 instances, MITM", false, "", 0};
    std::size_t agree = 0;
    const std::size_t total = 100;
    for (std::size_t i = 0; i < total; ++i) {
        const bool planted = i >= 50;
        const std::uint64_t seed = 1 + (i % 50);
        const ZoeInstance zoe =
            gen_zoe(6, planted ? ZoeGenMode::planted : ZoeGenMode::random, 0.5, seed);
        const bool zp = solve_zoe_brute(zoe).positive;
        const SolveResult sr = solve_ssp(reduce_zoe(zoe, matrix_x0()), SspStrategy::mitm);
        if (zp == sr.positive) ++agree;
    }
    r.pass = agree == total;
    std::ostringstream os;
    os << agree << "/" << total << " MITM verdicts match ZOE brute (50 random + 50 planted)";
    r.detail = os.str();
    return r;
}

CriterionResult crit_growth_chain() {
    CriterionResult r{3, "growth chain for build_plan(X0, lambda = 8, count = 8)", false, "", 0};
    const DistortionPlan plan = build_plan(matrix_x0(), 8, 8);
    const BigInt lambda_sq = BigInt(8) * BigInt(8);
    bool ok = plan.indices.size() == 8 && plan.indices[0] == 1;
    for (std::size_t i = 0; i + 1 < plan.norm_sq.size(); ++i)
        ok = ok && lambda_sq * plan.norm_sq[i] < plan.norm_sq[i + 1];
    r.pass = ok;
    std::ostringstream os;
    os << "indices";
    for (const auto n : plan.indices) os << ' ' << n;
    os << "; lambda^2 chain strict at every step";
    r.detail = os.str();
    return r;
}

CriterionResult crit_norm_sandwich() {
    CriterionResult r{4, "norm sandwich for X0 and two random unimodular 3x3, k = 1..30", false,
                      "", 0};
    std::vector<IntMatrix> mats{matrix_x0()};
    for (std::uint64_t seed = 1; mats.size() < 3 && seed < 64; ++seed) {
        IntMatrix m = random_unimodular(3, 14, seed);
        if (!is_quasi_unipotent(m)) mats.push_back(std::move(m));
    }
    const double rel = 1e-6;
    const double log_tol = std::log2(1.0 + rel);
    bool ok = mats.size() == 3;
    for (const auto& X : mats) {
        const SpectralAnalysis a = analyze_spectrum(X);
        const double log_alpha = std::log2(a.report.alpha);
        const double n = static_cast<double>(X.dim());
        IntMatrix P = IntMatrix::identity(X.dim());
        for (std::uint64_t k = 1; k <= 30 && ok; ++k) {
            P = P * X;
            BigInt best = 0;
            for (std::size_t j = 0; j < X.dim(); ++j) best = std::max(best, P.col(j).norm_sq());
            const double log_norm_sq = big_log2(best);
            // (1/n) alpha^{2k} <= max_j ||X^k e_j||^2
            ok = ok && log_norm_sq + std::log2(n) + log_tol >= 2.0 * k * log_alpha;
            // max_j ||X^k e_j|| <= p(k) alpha^k
            ok = ok && 0.5 * log_norm_sq <=
                           std::log2(norm_bound_p(a, k)) + k * log_alpha + log_tol;
        }
    }
    r.pass = ok;
    r.detail = "both growth bounds hold at relative tolerance 1e-6";
    return r;
}

CriterionResult crit_collection_oracle() {
    CriterionResult r{5, "collection matches the Heisenberg oracle on 1000 random words", false,
                      "", 0};
    std::mt19937_64 rng(505);
    const Collector engine(2, 2);
    std::size_t match = 0;
    const std::size_t total = 1000;
    for (std::size_t i = 0; i < total; ++i) {
        const std::size_t len = rng() % 61;
        const Word w = random_word(rng, len, 2);
        if (heisenberg_from_exponents(engine.collect(w)) == heisenberg_eval(w)) ++match;
    }
    r.pass = match == total;
    std::ostringstream os;
    os << match << "/" << total << " words, lengths <= 60, exact agreement";
    r.detail = os.str();
    return r;
}

CriterionResult crit_exponent_bound() {
    CriterionResult r{6, "collected exponent growth |alpha| <= 4 C |w|^weight (r=2, c=3)", false,
                      "", 0};
    std::mt19937_64 rng(606);
    const Collector engine(2, 3);
    const auto& basis = engine.basis();
    const unsigned cls = 3;
    const std::size_t words_per_length = 200;

    auto max_ratio_per_weight = [&](std::size_t length) {
        std::vector<double> ratio(cls + 1, 0.0);
        for (std::size_t i = 0; i < words_per_length; ++i) {
            const ExponentVector ev = engine.collect(random_word(rng, length, 2));
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const unsigned d = basis.weight(b);
                const double v = std::abs(ev.alphas[b].convert_to<double>()) /
                                 std::pow(static_cast<double>(length), d);
                ratio[d] = std::max(ratio[d], v);
            }
        }
        return ratio;
    };

    const auto fitted = max_ratio_per_weight(10);
    bool ok = true;
    std::ostringstream os;
    os << "C fitted at length 10:";
    for (unsigned d = 1; d <= cls; ++d) os << ' ' << fitted[d];
    for (const std::size_t length : {20u, 40u, 80u}) {
        const auto seen = max_ratio_per_weight(length);
        for (unsigned d = 1; d <= cls; ++d) ok = ok && seen[d] <= 4.0 * fitted[d];
    }
    r.pass = ok;
    r.detail = os.str() + "; lengths 20/40/80 stay within factor 4";
    return r;
}

CriterionResult crit_permutation_correction() {
    CriterionResult r{7, "permutation correction, all tau and eps for k = 2,3 at c = 2", false,
                      "", 0};
    std::mt19937_64 rng(707);
    std::size_t cases = 0;
    bool ok = true;
    for (unsigned k = 2; k <= 3 && ok; ++k) {
        std::vector<std::size_t> tau(k);
        for (std::size_t i = 0; i < k; ++i) tau[i] = i + 1;
        do {
            for (std::uint64_t mask = 0; mask < (1ull << k) && ok; ++mask) {
                std::vector<int> eps(k);
                for (std::size_t i = 0; i < k; ++i) eps[i] = (mask >> i) & 1u;
                const ExponentVector ev = permutation_correction(k, 2, eps, tau);
                for (int rep = 0; rep < 10 && ok; ++rep) {
                    std::vector<HeisenbergElement> f(k);
                    for (auto& fi : f) {
                        const std::size_t len = rng() % 9;
                        fi = heisenberg_eval(random_word(rng, len, 2));
                    }
                    HeisenbergElement lhs = heisenberg_identity();
                    HeisenbergElement rhs = heisenberg_identity();
                    for (std::size_t i = 0; i < k; ++i) {
                        if (eps[tau[i] - 1]) lhs = heisenberg_mul(lhs, f[tau[i] - 1]);
                        if (eps[i]) rhs = heisenberg_mul(rhs, f[i]);
                    }
                    const auto& basis = ev.basis;
                    for (std::size_t b = 0; b < basis.size(); ++b) {
                        if (basis.weight(b) < 2 || ev.alphas[b] == 0) continue;
                        const auto& e = basis.element(b);
                        const HeisenbergElement& u = f[basis.element(e.left).gen];
                        const HeisenbergElement& v = f[basis.element(e.right).gen];
                        HeisenbergElement h = heisenberg_mul(
                            heisenberg_mul(heisenberg_inv(u), heisenberg_inv(v)),
                            heisenberg_mul(u, v));
                        std::int64_t a = ev.alphas[b].convert_to<std::int64_t>();
                        if (a < 0) {
                            h = heisenberg_inv(h);
                            a = -a;
                        }
                        for (std::int64_t rep2 = 0; rep2 < a; ++rep2)
                            rhs = heisenberg_mul(rhs, h);
                    }
                    ok = ok && lhs == rhs;
                    ++cases;
                }
            }
        } while (std::next_permutation(tau.begin(), tau.end()) && ok);
    }
    r.pass = ok;
    std::ostringstream os;
    os << cases << " specialized identities hold exactly";
    r.detail = os.str();
    return r;
}

CriterionResult crit_spectral() {
    CriterionResult r{8, "spectral radius of X0 and quasi-unipotence calls", false, "", 0};
    const auto [alpha, tol] = spectral_radius(matrix_x0(), 1e-9);
    (void)tol;
    const double expected = (3.0 + std::sqrt(5.0)) / 2.0;
    bool ok = std::abs(alpha - expected) <= 1e-9;
    ok = ok && is_quasi_unipotent(IntMatrix({{1, 1}, {0, 1}}));
    ok = ok && is_quasi_unipotent(IntMatrix({{0, 1}, {1, 0}}));
    ok = ok && !is_quasi_unipotent(matrix_x0());
    r.pass = ok;
    std::ostringstream os;
    os << "alpha = " << alpha << " vs (3+sqrt(5))/2 within 1e-9; dichotomy answers correct";
    r.detail = os.str();
    return r;
}

CriterionResult crit_unipotent_growth() {
    CriterionResult r{9, "quasi-unipotent polynomial growth: ||U^k e_2||^2 = k^2 + 1", false, "",
                      0};
    const IntMatrix u({{1, 1}, {0, 1}});
    bool ok = true;
    for (std::int64_t k = 1; k <= 40; ++k) {
        const BigInt ns = mat_pow(u, k).col(1).norm_sq();
        ok = ok && ns == BigInt(k) * BigInt(k) + 1;
    }
    r.pass = ok;
    r.detail = "exact equality for k = 1..40";
    return r;
}

CriterionResult crit_padded_instance() {
    CriterionResult r{10, "padded instance mechanics (Heisenberg corrector + abelian bottom)",
                      false, "", 0};
    // Heisenberg: items (f2, f1), target f1 f2, corrector [f1,f2], bound 1
    const Alphabet gens({"x1", "x2"});
    const Word f1 = Word::parse(gens, "x1");
    const Word f2 = Word::parse(gens, "x2");
    const Word corrector = Word::parse(gens, "x1^-1 x2^-1 x1 x2");
    const std::vector<Word> items = padded_items({f2, f1}, {corrector}, 1);
    const HeisenbergContext ctx;
    const SolveResult res = ssp_brute(ctx, items, f1.concat(f2));
    bool ok = res.positive && res.witness == std::vector<int>{1, 1, 1, 0};

    // identity correctors over the abelian bottom subgroup keep every verdict
    std::mt19937_64 rng(1010);
    const FGroup F(matrix_x0());
    const Word identity_corrector = Word::parse(F.alphabet(), "e1^-1 e2^-1 e1 e2");
    std::size_t kept = 0;
    const std::size_t total = 100;
    for (std::size_t t = 0; t < total; ++t) {
        SspInstance base{F, {}, {}};
        const std::size_t k = 1 + rng() % 5;
        for (std::size_t i = 0; i < k; ++i) {
            Word w;
            for (std::size_t l = 0, n = 1 + rng() % 4; l < n; ++l)
                w.append(1 + rng() % 2, rng() % 2 ? 1 : -1);
            base.items.push_back(std::move(w));
        }
        if (rng() % 2) {  // sometimes plant a positive instance
            Word target;
            for (std::size_t i = 0; i < k; ++i)
                if (rng() % 2) target = target.concat(base.items[i]);
            base.target = std::move(target);
        } else {
            Word target;
            for (std::size_t l = 0, n = rng() % 5; l < n; ++l)
                target.append(1 + rng() % 2, rng() % 2 ? 1 : -1);
            base.target = std::move(target);
        }
        const bool before = solve_ssp(base, SspStrategy::brute).positive;
        const bool after =
            solve_ssp(build_padded_instance(base, {identity_corrector}, 2), SspStrategy::brute)
                .positive;
        if (before == after) ++kept;
    }
    ok = ok && kept == total;
    r.pass = ok;
    std::ostringstream os;
    os << "witness (1,1,1,0) found; " << kept << "/" << total
       << " abelian-bottom verdicts invariant under identity padding";
    r.detail = os.str();
    return r;
}

CriterionResult crit_word_problem_speed() {
    CriterionResult r{11, "evaluate a random word of length 1e5 in under 2 s", false, "", 0};
    std::mt19937_64 rng(1111);
    const FGroup F(matrix_x0());
    Word w;
    for (std::size_t i = 0; i < 100'000; ++i) w.append(rng() % 3, rng() % 2 ? 1 : -1);
    const auto t0 = std::chrono::steady_clock::now();
    const FElement e = evaluate(F, w);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.pass = ms < 2000.0;
    std::ostringstream os;
    os << "evaluated in " << ms << " ms (t = " << e.t << ", " << e.v.max_entry_bits()
       << "-bit entries)";
    r.detail = os.str();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::optional<int> only) {
    const std::vector<std::function<CriterionResult()>> checks = {
        crit_reduction_exhaustive, crit_reduction_sampled,    crit_growth_chain,
        crit_norm_sandwich,        crit_collection_oracle,    crit_exponent_bound,
        crit_permutation_correction, crit_spectral,           crit_unipotent_growth,
        crit_padded_instance,      crit_word_problem_speed};
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (only && *only != static_cast<int>(i + 1)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult res;
        try {
            res = checks[i]();
        } catch (const std::exception& e) {
            res.id = static_cast<int>(i + 1);
            res.name = "criterion " + std::to_string(i + 1);
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                t0)
                          .count();
        results.push_back(std::move(res));
    }
    if (results.empty()) throw std::invalid_argument("no such acceptance criterion");
    return results;
}

std::string format_criterion_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail << " ["
       << static_cast<long long>(r.wall_ms) << " ms]";
    return os.str();
}

}  // namespace gssp
