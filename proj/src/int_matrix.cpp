#include "gssp/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

namespace gssp {

IntVector IntVector::unit(std::size_t n, std::size_t j) {
    if (j >= n) throw std::out_of_range("IntVector::unit: index out of range");
    IntVector v(n);
    v[j] = 1;
    return v;
}

bool IntVector::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

BigInt IntVector::norm_sq() const {
    BigInt s = 0;
    for (const auto& e : entries_) s += e * e;
    return s;
}

std::size_t IntVector::max_entry_bits() const {
    std::size_t bits = 0;
    for (const auto& e : entries_) {
        if (e == 0) continue;
        bits = std::max(bits, static_cast<std::size_t>(boost::multiprecision::msb(big_abs(e)) + 1));
    }
    return bits;
}

IntVector IntVector::operator+(const IntVector& other) const {
    IntVector r = *this;
    r += other;
    return r;
}

IntVector& IntVector::operator+=(const IntVector& other) {
    if (size() != other.size()) throw std::invalid_argument("IntVector: dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

IntVector IntVector::operator-() const {
    IntVector r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

IntVector operator*(const BigInt& c, const IntVector& v) {
    IntVector r = v;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= c;
    return r;
}

IntMatrix::IntMatrix(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {
    n_ = rows_.size();
    if (n_ == 0) throw std::invalid_argument("IntMatrix: empty matrix");
    for (const auto& row : rows_)
        if (row.size() != n_) throw std::invalid_argument("IntMatrix: matrix must be square");
    det_abs_ = big_abs(det(*this));
}

IntMatrix IntMatrix::identity(std::size_t n) {
    std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return IntMatrix(std::move(rows));
}

IntVector IntMatrix::col(std::size_t j) const {
    if (j >= n_) throw std::out_of_range("IntMatrix::col: index out of range");
    std::vector<BigInt> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = rows_[i][j];
    return IntVector(std::move(c));
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    std::vector<std::vector<BigInt>> out(n_, std::vector<BigInt>(n_, BigInt(0)));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const BigInt& a = rows_[i][k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) out[i][j] += a * other.rows_[k][j];
        }
    return IntMatrix(std::move(out));
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("IntMatrix: vector dimension mismatch");
    std::vector<BigInt> out(n_, BigInt(0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i] += rows_[i][j] * v[j];
    return IntVector(std::move(out));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << rows_[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

BigInt det(const IntMatrix& X) {
    // Bareiss fraction-free elimination; all divisions are exact.
    const std::size_t n = X.dim();
    std::vector<std::vector<BigInt>> a = X.rows();
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix unimodular_inverse(const IntMatrix& X) {
    if (!X.is_unimodular())
        throw std::invalid_argument("unimodular_inverse: |det| must be 1");
    const std::size_t n = X.dim();
    const BigInt d = det(X);  // +1 or -1
    if (n == 1) return IntMatrix({{d}});
    // adjugate via cofactors; desk-scale dimensions only
    std::vector<std::vector<BigInt>> adj(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<BigInt>> minor(n - 1, std::vector<BigInt>(n - 1));
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[mr][mc++] = X.at(r, c);
                }
                ++mr;
            }
            BigInt cof = det(IntMatrix(std::move(minor)));
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;  // transpose
        }
    if (d < 0)
        for (auto& row : adj)
            for (auto& e : row) e = -e;
    return IntMatrix(std::move(adj));
}

IntMatrix mat_pow(const IntMatrix& X, std::int64_t k) {
    if (k < 0 && !X.is_unimodular())
        throw std::invalid_argument("mat_pow: negative power requires |det| = 1");
    IntMatrix base = k < 0 ? unimodular_inverse(X) : X;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    IntMatrix acc = IntMatrix::identity(X.dim());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

}  // namespace gssp
