#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gssp/fgroup.hpp"
#include "gssp/spectral.hpp"

namespace gssp {

enum class GapMode { minimal, analytic };

/// 1-based index j maximizing ||X^k e_j||^2, ties broken by lowest index.
/// The argmax satisfies the sandwich lower bound (1/sqrt n) alpha^k.
std::size_t pick_star_basis(const IntMatrix& X, std::int64_t k);

/// Exact squared norm of the star column at power k (and the chosen j).
std::pair<std::size_t, BigInt> star_norm_sq(const IntMatrix& X, std::int64_t k);

/// The analytic gap c_{lambda,k} = ceil(log_a p(k)) + ceil(log_a lambda)
/// + ceil(log_a sqrt(n)) + 1, computed with outward-rounded float logs and
/// then repaired exactly: the gap is bumped until
/// lambda^2 ||X^k e*_k||^2 < ||X^{k+c} e*_{k+c}||^2 holds over Z.
/// Requires alpha > 1 (rejects quasi-unipotent actions).
std::int64_t gap_analytic(const SpectralAnalysis& a, const IntMatrix& X, std::uint64_t lambda,
                          std::int64_t k);
std::int64_t gap_analytic(const IntMatrix& X, std::uint64_t lambda, std::int64_t k);

/// Smallest c >= 1 with lambda^2 ||X^k e*_k||^2 < ||X^{k+c} e*_{k+c}||^2.
std::int64_t gap_minimal(const IntMatrix& X, std::uint64_t lambda, std::int64_t k);

/// Witness plan: indices n_1 = 1 < n_2 < ... < n_k, star basis vectors,
/// witness words x^{-n_i} e*_{n_i} x^{n_i}, and the exactly verified chain
/// lambda^2 norm_sq[i] < norm_sq[i+1].
struct DistortionPlan {
    FGroup group;
    std::uint64_t lambda = 1;
    std::vector<std::int64_t> indices;
    std::vector<std::size_t> star;
    std::vector<Word> witnesses;
    std::vector<BigInt> norm_sq;
};

DistortionPlan build_plan(const IntMatrix& X, std::uint64_t lambda, std::size_t count,
                          GapMode mode = GapMode::minimal);

struct DistortionRow {
    std::int64_t k = 0;
    std::size_t j_star = 0;
    BigInt norm_sq;
    double log_norm = 0.0;
    double k_log_alpha = 0.0;
};

/// One row per k = 1..kmax; norm_sq is exact, the log columns are
/// informational floats.
std::vector<DistortionRow> distortion_table(const IntMatrix& X, std::int64_t kmax);

/// CSV with header k,j_star,norm_sq,log_norm,k_log_alpha.
std::string distortion_table_csv(const std::vector<DistortionRow>& rows);

}  // namespace gssp
