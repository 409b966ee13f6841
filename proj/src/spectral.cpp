#include "gssp/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <optional>

namespace gssp {

namespace {

// ---- exact polynomial helpers (ascending coefficients, monic divisors) ----

void poly_trim(std::vector<BigInt>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// exact division by a monic divisor; nullopt when the remainder is nonzero
std::optional<std::vector<BigInt>> poly_divide_exact(std::vector<BigInt> num,
                                                     const std::vector<BigInt>& den) {
    poly_trim(num);
    if (den.back() != 1) throw std::invalid_argument("poly_divide_exact: divisor must be monic");
    if (num.size() < den.size()) return std::nullopt;
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        BigInt c = num[qi + den.size() - 1];
        quot[qi] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) return std::nullopt;
    return quot;
}

std::size_t poly_deg(const std::vector<BigInt>& p) { return p.size() - 1; }

bool poly_is_zero(const std::vector<BigInt>& p) { return p.size() == 1 && p[0] == 0; }

std::vector<BigInt> poly_derivative(const std::vector<BigInt>& p) {
    if (p.size() <= 1) return {BigInt(0)};
    std::vector<BigInt> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = BigInt(i) * p[i];
    return d;
}

std::vector<BigInt> poly_primitive(std::vector<BigInt> p) {
    poly_trim(p);
    BigInt content = 0;
    for (const auto& c : p) content = boost::multiprecision::gcd(content, c);
    if (content > 1)
        for (auto& c : p) c /= content;
    if (p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

// primitive-PRS gcd over Z
std::vector<BigInt> poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
    a = poly_primitive(std::move(a));
    b = poly_primitive(std::move(b));
    if (poly_deg(a) < poly_deg(b)) std::swap(a, b);
    while (!poly_is_zero(b)) {
        std::vector<BigInt> r = a;  // pseudo-remainder of a by b
        const BigInt& lead = b.back();
        while (!poly_is_zero(r) && poly_deg(r) >= poly_deg(b)) {
            const std::size_t shift = poly_deg(r) - poly_deg(b);
            const BigInt top = r.back();
            for (auto& c : r) c *= lead;
            for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= top * b[i];
            poly_trim(r);
        }
        a = std::move(b);
        b = poly_primitive(std::move(r));
    }
    return a;
}

// exact division by a (possibly non-monic) divisor known to divide evenly
std::vector<BigInt> poly_exact_quotient(std::vector<BigInt> num,
                                        const std::vector<BigInt>& den) {
    poly_trim(num);
    if (poly_deg(num) < poly_deg(den))
        throw std::logic_error("poly_exact_quotient: degree underflow");
    std::vector<BigInt> quot(poly_deg(num) - poly_deg(den) + 1, BigInt(0));
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        const BigInt& top = num[qi + den.size() - 1];
        if (top % den.back() != 0)
            throw std::logic_error("poly_exact_quotient: inexact division");
        const BigInt c = top / den.back();
        quot[qi] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("poly_exact_quotient: nonzero remainder");
    return quot;
}

// squarefree part p / gcd(p, p'); same root set, all roots simple, which is
// what the Aberth iteration needs to converge quadratically
std::vector<BigInt> poly_squarefree(const std::vector<BigInt>& p) {
    if (p.size() <= 2) return p;
    const std::vector<BigInt> g = poly_gcd(p, poly_derivative(p));
    if (poly_deg(g) == 0) return p;
    return poly_exact_quotient(p, g);
}

unsigned euler_phi(unsigned d) {
    unsigned result = d;
    for (unsigned p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        result -= result / p;
        while (d % p == 0) d /= p;
    }
    if (d > 1) result -= result / d;
    return result;
}

double binom_over_alpha(std::uint64_t k, std::size_t n, double alpha) {
    // 1 + C(k,1)/alpha + ... + C(k,n)/alpha^n  (binomials vanish past i = k)
    double sum = 1.0;
    double binom = 1.0;
    double pow_a = 1.0;
    for (std::size_t i = 1; i <= n && i <= k; ++i) {
        binom *= static_cast<double>(k - i + 1) / static_cast<double>(i);
        pow_a *= alpha;
        sum += binom / pow_a;
    }
    return sum;
}

// exact max_j ||X^k e_j||^2
BigInt max_col_norm_sq(const IntMatrix& P) {
    BigInt best = 0;
    for (std::size_t j = 0; j < P.dim(); ++j) best = std::max(best, P.col(j).norm_sq());
    return best;
}

}  // namespace

std::vector<BigInt> char_poly(const IntMatrix& X) {
    const std::size_t n = X.dim();
    // Faddeev-LeVerrier: M_1 = X, c_1 = -tr(M_1), M_{k+1} = X(M_k + c_k I),
    // c_{k+1} = -tr(M_{k+1})/(k+1); all divisions are exact over Z.
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    coeffs[n] = 1;
    IntMatrix M = X;
    BigInt c;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<std::vector<BigInt>> shifted = M.rows();
            for (std::size_t i = 0; i < n; ++i) shifted[i][i] += c;
            M = X * IntMatrix(std::move(shifted));
        }
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += M.at(i, i);
        if (tr % BigInt(k) != 0) throw std::logic_error("char_poly: inexact trace division");
        c = -tr / BigInt(k);
        coeffs[n - k] = c;
    }
    return coeffs;
}

std::vector<BigInt> cyclotomic_polynomial(unsigned d) {
    if (d == 0) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
    // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e
    std::vector<BigInt> num(d + 1, BigInt(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned e = 1; e < d; ++e) {
        if (d % e) continue;
        auto q = poly_divide_exact(num, cyclotomic_polynomial(e));
        if (!q) throw std::logic_error("cyclotomic_polynomial: division failed");
        num = std::move(*q);
    }
    return num;
}

std::vector<std::complex<double>> poly_roots_aberth(const std::vector<double>& coeffs,
                                                    double tol, double* achieved_tol) {
    using cd = std::complex<double>;
    std::vector<double> c = coeffs;
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    const std::size_t deg = c.size() - 1;
    if (deg == 0) {
        if (achieved_tol) *achieved_tol = 0.0;
        return {};
    }
    for (auto& v : c) v /= coeffs.back();

    auto eval = [&](cd z, cd& deriv) {
        cd p = c[deg], d = 0.0;
        for (std::size_t i = deg; i-- > 0;) {
            d = d * z + p;
            p = p * z + c[i];
        }
        deriv = d;
        return p;
    };

    // initial guesses on a circle inside the Cauchy bound
    double cauchy = 0.0;
    for (std::size_t i = 0; i < deg; ++i) cauchy = std::max(cauchy, std::abs(c[i]));
    const double radius = 0.5 + 0.5 * std::pow(1.0 + cauchy, 1.0 / static_cast<double>(deg));
    std::vector<cd> z(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        const double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(deg) + 0.7;
        z[i] = radius * cd(std::cos(theta), std::sin(theta));
    }

    double max_step = 0.0;
    for (int iter = 0; iter < 300; ++iter) {
        max_step = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            cd deriv;
            const cd p = eval(z[i], deriv);
            if (p == cd(0.0)) continue;
            cd w = deriv == cd(0.0) ? cd(0.0) : p / deriv;
            cd sum = 0.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i && z[i] != z[j]) sum += 1.0 / (z[i] - z[j]);
            const cd denom = 1.0 - w * sum;
            cd step = denom == cd(0.0) ? w : w / denom;
            if (deriv == cd(0.0)) step = cd(0.5, 0.3);  // nudge off a critical point
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (max_step < tol * 0.01) break;
    }
    if (achieved_tol) *achieved_tol = std::max(max_step, 1e-15);
    return z;
}

std::pair<double, double> spectral_radius(const IntMatrix& X, double tol) {
    if (tol <= 0) throw std::invalid_argument("spectral_radius: tol must be positive");
    const auto cp = poly_squarefree(char_poly(X));
    std::vector<double> cd(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i) cd[i] = cp[i].convert_to<double>();
    double achieved = 0.0;
    const auto roots = poly_roots_aberth(cd, std::min(tol, 1e-12), &achieved);
    double alpha = 0.0;
    for (const auto& r : roots) alpha = std::max(alpha, std::abs(r));
    const double tol_out = std::max(achieved * std::max(1.0, alpha), 1e-14);

    // power-growth sanity bound: the exact norms of X^k must grow like alpha^k
    if (X.is_unimodular() && X.dim() >= 1) {
        const std::uint64_t k0 = 48;
        const BigInt g = max_col_norm_sq(mat_pow(X, static_cast<std::int64_t>(k0)));
        if (g > 0) {
            const double est = big_log2(g) / (2.0 * static_cast<double>(k0));
            const double expect = std::log2(std::max(alpha, 1e-300));
            if (std::abs(est - expect) > std::log2(1.30))
                throw std::logic_error("spectral_radius: root finder disagrees with exact power growth");
        }
    }
    return {alpha, tol_out};
}

bool is_quasi_unipotent(const IntMatrix& X) {
    if (!X.is_unimodular())
        throw std::invalid_argument("is_quasi_unipotent: |det| must be 1");
    std::vector<BigInt> p = char_poly(X);
    const std::size_t n = p.size() - 1;
    // candidate cyclotomic indices: phi(d) <= n forces d <= 2 n^2 + 1
    const unsigned dmax = static_cast<unsigned>(2 * n * n + 40);
    for (unsigned d = 1; d <= dmax && p.size() > 1; ++d) {
        if (euler_phi(d) > n) continue;
        const auto phi_d = cyclotomic_polynomial(d);
        while (p.size() > 1) {
            auto q = poly_divide_exact(p, phi_d);
            if (!q) break;
            p = std::move(*q);
        }
    }
    return p.size() == 1 && p[0] == 1;
}

SpectralReport spectral_report(const IntMatrix& X, double tol) {
    SpectralReport rep;
    rep.char_poly = char_poly(X);
    auto [alpha, tol_out] = spectral_radius(X, tol);
    rep.alpha = alpha;
    rep.alpha_tol = tol_out;
    rep.quasi_unipotent = X.is_unimodular() ? is_quasi_unipotent(X) : false;
    return rep;
}

SpectralAnalysis analyze_spectrum(const IntMatrix& X, double tol) {
    SpectralAnalysis a;
    a.dim = X.dim();
    a.report = spectral_report(X, tol);
    const std::size_t n = X.dim();
    const double alpha = std::max(a.report.alpha, 1e-12);

    double c_x = 0.0;
    {
        Eigen::MatrixXd M(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M(i, j) = X.at(i, j).convert_to<double>();
        Eigen::EigenSolver<Eigen::MatrixXd> es(M);
        if (es.info() == Eigen::Success) {
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(es.eigenvectors());
            const auto& sv = svd.singularValues();
            const double smin = sv(static_cast<Eigen::Index>(n) - 1);
            const double smax = sv(0);
            if (smin > 0 && std::isfinite(smax / smin) && smax / smin < 1e12)
                c_x = std::ceil(smax / smin) * 2.0;
        }
    }
    if (c_x == 0.0) {
        // (near) defective eigenbasis: fit the constant from exact norms instead
        double fit = 0.0;
        IntMatrix P = IntMatrix::identity(n);
        for (std::uint64_t k = 1; k <= 2 * n + 20; ++k) {
            P = P * X;
            const BigInt ns = max_col_norm_sq(P);
            if (ns == 0) break;
            const double log_num = big_log2(ns) / 2.0;
            const double log_den =
                std::log2(binom_over_alpha(k, n, alpha)) + static_cast<double>(k) * std::log2(alpha);
            fit = std::max(fit, std::exp2(log_num - log_den));
        }
        c_x = 2.0 * fit;
    }
    a.c_x = std::max(1.0, c_x);
    return a;
}

double norm_bound_p(const SpectralAnalysis& a, std::uint64_t k) {
    return a.c_x * binom_over_alpha(k, a.dim, std::max(a.report.alpha, 1e-12));
}

double norm_bound_p(const IntMatrix& X, std::uint64_t k) {
    return norm_bound_p(analyze_spectrum(X), k);
}

}  // namespace gssp
