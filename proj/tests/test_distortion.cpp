#include <doctest.h>

#include <cmath>
#include <random>

#include "gssp/distortion.hpp"
#include "gssp/reduction.hpp"

using namespace gssp;

namespace {
const IntMatrix X0({{2, 1}, {1, 1}});
const IntMatrix U({{1, 1}, {0, 1}});
}  // namespace

TEST_CASE("pick_star_basis pinned examples") {
    CHECK(pick_star_basis(X0, 3) == 1);  // 233 vs 89
    CHECK(pick_star_basis(IntMatrix::identity(2), 4) == 1);  // tie-break: lowest index
    CHECK(pick_star_basis(X0, 1) == 1);  // 5 vs 2
    CHECK(pick_star_basis(U, 3) == 2);   // (1,0) vs (3,1)
    CHECK(star_norm_sq(X0, 3).second == 233);
    CHECK_THROWS_AS(pick_star_basis(IntMatrix({{2, 0}, {0, 1}}), 1), std::invalid_argument);
}

TEST_CASE("gap_minimal pinned examples") {
    CHECK(gap_minimal(X0, 2, 1) == 1);  // 4 * 5 = 20 < 34
    CHECK(gap_minimal(X0, 2, 2) == 1);  // 4 * 34 = 136 < 233
    CHECK(gap_minimal(X0, 1, 1) == 1);
    CHECK_THROWS_AS(gap_minimal(U, 2, 1), std::invalid_argument);
}

TEST_CASE("gap_analytic satisfies the exact chain inequality") {
    // regression values for X0 with C_X = 2
    CHECK(gap_analytic(X0, 2, 1) == 5);
    CHECK(gap_analytic(X0, 1, 1) == 4);
    CHECK(gap_analytic(X0, 8, 1) == 7);
    for (const std::uint64_t lambda : {1u, 2u, 5u}) {
        for (const std::int64_t k : {1, 2, 5, 9}) {
            const std::int64_t c = gap_analytic(X0, lambda, k);
            CHECK(c >= 1);
            CHECK(c >= gap_minimal(X0, lambda, k));
            const BigInt lhs = BigInt(lambda) * BigInt(lambda) * star_norm_sq(X0, k).second;
            CHECK(lhs < star_norm_sq(X0, k + c).second);
        }
    }
    CHECK_THROWS_AS(gap_analytic(U, 2, 1), std::invalid_argument);
}

TEST_CASE("build_plan pinned minimal plan") {
    const DistortionPlan plan = build_plan(X0, 2, 3, GapMode::minimal);
    CHECK(plan.indices == std::vector<std::int64_t>{1, 2, 3});
    CHECK(plan.norm_sq == std::vector<BigInt>{5, 34, 233});
    CHECK(plan.star == std::vector<std::size_t>{1, 1, 1});
    CHECK(plan.witnesses[0].to_string(plan.group.alphabet()) == "x^-1 e1 x");
    CHECK(plan.witnesses[1].to_string(plan.group.alphabet()) == "x^-2 e1 x^2");
    CHECK(plan.witnesses[2].to_string(plan.group.alphabet()) == "x^-3 e1 x^3");
}

TEST_CASE("single-witness plan") {
    const DistortionPlan plan = build_plan(X0, 1, 1);
    CHECK(plan.indices == std::vector<std::int64_t>{1});
    CHECK(plan.witnesses[0].to_string(plan.group.alphabet()) == "x^-1 e1 x");
}

TEST_CASE("witnesses evaluate into the bottom subgroup") {
    for (const GapMode mode : {GapMode::minimal, GapMode::analytic}) {
        const DistortionPlan plan = build_plan(X0, 3, 5, mode);
        for (std::size_t i = 0; i < plan.witnesses.size(); ++i) {
            const FElement e = evaluate(plan.group, plan.witnesses[i]);
            CHECK(e.t == 0);
            const IntVector expect =
                mat_pow(X0, plan.indices[i]) * IntVector::unit(2, plan.star[i] - 1);
            CHECK(e.v == expect);
            CHECK(e.v.norm_sq() == plan.norm_sq[i]);
        }
    }
}

TEST_CASE("chain inequality holds exactly and transitively") {
    const DistortionPlan plan = build_plan(X0, 8, 8);
    const BigInt l2 = BigInt(8) * BigInt(8);
    for (std::size_t i = 0; i + 1 < plan.norm_sq.size(); ++i)
        CHECK(l2 * plan.norm_sq[i] < plan.norm_sq[i + 1]);
    // transitive consequence: lambda^{2(k-i)} norm_sq[i] < norm_sq[k]
    BigInt factor = 1;
    for (std::size_t gap = 1; gap < plan.norm_sq.size(); ++gap) {
        factor *= l2;
        CHECK(factor * plan.norm_sq[0] < plan.norm_sq[gap]);
    }
}

TEST_CASE("minimal mode gives pointwise smaller indices than analytic") {
    const DistortionPlan small = build_plan(X0, 2, 6, GapMode::minimal);
    const DistortionPlan wide = build_plan(X0, 2, 6, GapMode::analytic);
    for (std::size_t i = 0; i < 6; ++i) CHECK(small.indices[i] <= wide.indices[i]);
}

TEST_CASE("lower bound n * norm_sq >= alpha^{2 n_i} within 1e-6") {
    const SpectralAnalysis a = analyze_spectrum(X0);
    const DistortionPlan plan = build_plan(X0, 2, 6);
    for (std::size_t i = 0; i < plan.indices.size(); ++i) {
        const double lhs = std::log2(2.0) + big_log2(plan.norm_sq[i]);
        const double rhs = 2.0 * static_cast<double>(plan.indices[i]) * std::log2(a.report.alpha);
        CHECK(lhs + std::log2(1.0 + 1e-6) >= rhs);
    }
}

TEST_CASE("analytic indices respect the quadratic envelope") {
    const std::uint64_t lambda = 8;
    const DistortionPlan plan = build_plan(X0, lambda, 12, GapMode::analytic);
    // one-parameter bound n_i <= (1/lambda)(lambda i + C)^2 with C fitted on
    // the first three indices
    double c_fit = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double ni = static_cast<double>(plan.indices[i]);
        const double li = static_cast<double>(lambda) * static_cast<double>(i + 1);
        c_fit = std::max(c_fit, std::sqrt(static_cast<double>(lambda) * ni) - li);
    }
    for (std::size_t i = 0; i < plan.indices.size(); ++i) {
        const double li = static_cast<double>(lambda) * static_cast<double>(i + 1);
        const double bound = (li + c_fit) * (li + c_fit) / static_cast<double>(lambda);
        CHECK(static_cast<double>(plan.indices[i]) <= bound + 1e-9);
    }
}

TEST_CASE("plans reject quasi-unipotent actions and bad arguments") {
    CHECK_THROWS_AS(build_plan(U, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_plan(IntMatrix(std::vector<std::vector<BigInt>>{{BigInt(1)}}), 2, 1),
                    std::invalid_argument);  // n = 1, X = [1]
    CHECK_THROWS_AS(build_plan(X0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_plan(X0, 2, 0), std::invalid_argument);
}

TEST_CASE("distortion_table pinned rows") {
    const auto rows = distortion_table(X0, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].norm_sq == 5);
    CHECK(rows[1].norm_sq == 34);
    CHECK(rows[2].norm_sq == 233);
    CHECK(rows[2].j_star == 1);

    const auto id_rows = distortion_table(IntMatrix::identity(2), 2);
    CHECK(id_rows[0].norm_sq == 1);
    CHECK(id_rows[1].norm_sq == 1);

    // U^k e2 = (k, 1): squared norms k^2 + 1
    const auto u_rows = distortion_table(U, 3);
    CHECK(u_rows[0].norm_sq == 2);
    CHECK(u_rows[1].norm_sq == 5);
    CHECK(u_rows[2].norm_sq == 10);
    CHECK(u_rows[0].k_log_alpha == doctest::Approx(0.0).epsilon(1e-9));

    CHECK_THROWS_AS(distortion_table(X0, 0), std::invalid_argument);
}

TEST_CASE("distortion_table CSV shape") {
    const std::string csv = distortion_table_csv(distortion_table(X0, 2));
    CHECK(csv.rfind("k,j_star,norm_sq,log_norm,k_log_alpha\n", 0) == 0);
    CHECK(csv.find("\n1,1,5,") != std::string::npos);
    CHECK(csv.find("\n2,1,34,") != std::string::npos);
}

TEST_CASE("plans over random exponentially-distorting matrices") {
    std::mt19937_64 rng(55);
    int built = 0;
    for (std::uint64_t seed = 1; built < 4 && seed < 40; ++seed) {
        const IntMatrix m = random_unimodular(3, 12, seed);
        if (is_quasi_unipotent(m)) continue;
        const DistortionPlan plan = build_plan(m, 3, 4);
        const BigInt l2 = 9;
        for (std::size_t i = 0; i + 1 < plan.norm_sq.size(); ++i)
            CHECK(l2 * plan.norm_sq[i] < plan.norm_sq[i + 1]);
        ++built;
        (void)rng;
    }
    CHECK(built == 4);
}
