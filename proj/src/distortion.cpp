#include "gssp/distortion.hpp"

#include <cmath>
#include <sstream>

namespace gssp {

namespace {

void require_exponential(const IntMatrix& X, const char* who) {
    if (is_quasi_unipotent(X))
        throw std::invalid_argument(std::string(who) +
                                    ": quasi-unipotent action has no exponential distortion");
}

}  // namespace

std::pair<std::size_t, BigInt> star_norm_sq(const IntMatrix& X, std::int64_t k) {
    if (!X.is_unimodular()) throw std::invalid_argument("pick_star_basis: |det| must be 1");
    const IntMatrix P = mat_pow(X, k);
    std::size_t best_j = 1;
    BigInt best = P.col(0).norm_sq();
    for (std::size_t j = 1; j < X.dim(); ++j) {
        BigInt ns = P.col(j).norm_sq();
        if (ns > best) {
            best = std::move(ns);
            best_j = j + 1;
        }
    }
    return {best_j, best};
}

std::size_t pick_star_basis(const IntMatrix& X, std::int64_t k) {
    return star_norm_sq(X, k).first;
}

namespace {

std::int64_t repair_gap(const IntMatrix& X, std::uint64_t lambda, std::int64_t k,
                        std::int64_t c) {
    const BigInt lambda_sq = BigInt(lambda) * BigInt(lambda);
    const BigInt base = star_norm_sq(X, k).second;
    while (lambda_sq * base >= star_norm_sq(X, k + c).second) {
        ++c;
        if (c > 1'000'000)
            throw std::logic_error("gap repair did not terminate; is alpha really > 1?");
    }
    return c;
}

}  // namespace

std::int64_t gap_analytic(const SpectralAnalysis& a, const IntMatrix& X, std::uint64_t lambda,
                          std::int64_t k) {
    if (lambda < 1) throw std::invalid_argument("gap_analytic: lambda must be >= 1");
    require_exponential(X, "gap_analytic");
    // Plain ceil on float logs; any undershoot from rounding is caught by the
    // exact repair loop below.
    const double log_alpha = std::log(a.report.alpha);
    const auto ceil_log = [log_alpha](double v) { return std::ceil(std::log(v) / log_alpha); };
    std::int64_t c = static_cast<std::int64_t>(
        ceil_log(norm_bound_p(a, static_cast<std::uint64_t>(k))) +
        ceil_log(static_cast<double>(lambda)) + ceil_log(std::sqrt(static_cast<double>(X.dim()))) +
        1.0);
    if (c < 1) c = 1;
    return repair_gap(X, lambda, k, c);
}

std::int64_t gap_analytic(const IntMatrix& X, std::uint64_t lambda, std::int64_t k) {
    return gap_analytic(analyze_spectrum(X), X, lambda, k);
}

std::int64_t gap_minimal(const IntMatrix& X, std::uint64_t lambda, std::int64_t k) {
    if (lambda < 1) throw std::invalid_argument("gap_minimal: lambda must be >= 1");
    require_exponential(X, "gap_minimal");
    return repair_gap(X, lambda, k, 1);
}

DistortionPlan build_plan(const IntMatrix& X, std::uint64_t lambda, std::size_t count,
                          GapMode mode) {
    if (count < 1) throw std::invalid_argument("build_plan: count must be >= 1");
    if (lambda < 1) throw std::invalid_argument("build_plan: lambda must be >= 1");
    require_exponential(X, "build_plan");

    DistortionPlan plan{FGroup(X), lambda, {}, {}, {}, {}};
    const SpectralAnalysis analysis =
        mode == GapMode::analytic ? analyze_spectrum(X) : SpectralAnalysis{};

    std::int64_t n_i = 1;
    for (std::size_t i = 0; i < count; ++i) {
        auto [j, ns] = star_norm_sq(X, n_i);
        Word witness;
        witness.append(FGroup::x_index, -n_i);
        witness.append(plan.group.e_index(j), 1);
        witness.append(FGroup::x_index, n_i);
        if (mode == GapMode::analytic &&
            witness.raw_length() != 1 + 2 * static_cast<std::uint64_t>(n_i))
            throw std::logic_error("build_plan: witness length bound violated");
        plan.indices.push_back(n_i);
        plan.star.push_back(j);
        plan.witnesses.push_back(std::move(witness));
        plan.norm_sq.push_back(std::move(ns));
        if (i + 1 < count)
            n_i += mode == GapMode::analytic ? gap_analytic(analysis, X, lambda, n_i)
                                             : gap_minimal(X, lambda, n_i);
    }

    // the growth chain is what every consumer relies on; verify it exactly
    const BigInt lambda_sq = BigInt(lambda) * BigInt(lambda);
    for (std::size_t i = 0; i + 1 < count; ++i)
        if (lambda_sq * plan.norm_sq[i] >= plan.norm_sq[i + 1])
            throw std::logic_error("build_plan: growth chain is not strictly increasing");
    return plan;
}

std::vector<DistortionRow> distortion_table(const IntMatrix& X, std::int64_t kmax) {
    if (kmax < 1) throw std::invalid_argument("distortion_table: kmax must be >= 1");
    const auto [alpha, tol] = spectral_radius(X);
    (void)tol;
    std::vector<DistortionRow> rows;
    rows.reserve(static_cast<std::size_t>(kmax));
    for (std::int64_t k = 1; k <= kmax; ++k) {
        auto [j, ns] = star_norm_sq(X, k);
        DistortionRow row;
        row.k = k;
        row.j_star = j;
        row.log_norm = 0.5 * big_log2(ns) * std::log(2.0);
        row.k_log_alpha = static_cast<double>(k) * std::log(alpha);
        row.norm_sq = std::move(ns);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string distortion_table_csv(const std::vector<DistortionRow>& rows) {
    std::ostringstream os;
    os << "k,j_star,norm_sq,log_norm,k_log_alpha\n";
    for (const auto& row : rows)
        os << row.k << ',' << row.j_star << ',' << row.norm_sq << ',' << row.log_norm << ','
           << row.k_log_alpha << '\n';
    return os.str();
}

}  // namespace gssp
