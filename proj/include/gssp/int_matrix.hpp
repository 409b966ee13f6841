#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gssp/bigint.hpp"

namespace gssp {

/// Column vector over Z with exact arbitrary-precision entries.
class IntVector {
  public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : entries_(n, BigInt(0)) {}
    explicit IntVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}

    static IntVector unit(std::size_t n, std::size_t j);

    std::size_t size() const { return entries_.size(); }
    const BigInt& operator[](std::size_t i) const { return entries_[i]; }
    BigInt& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<BigInt>& entries() const { return entries_; }

    bool is_zero() const;
    /// Exact squared Euclidean norm; floats never see this value.
    BigInt norm_sq() const;
    std::size_t max_entry_bits() const;

    IntVector operator+(const IntVector& other) const;
    IntVector operator-() const;
    IntVector& operator+=(const IntVector& other);
    bool operator==(const IntVector& other) const = default;
    bool operator<(const IntVector& other) const { return entries_ < other.entries_; }

  private:
    std::vector<BigInt> entries_;
};

IntVector operator*(const BigInt& c, const IntVector& v);

/// Square integer matrix. |det| is computed once on construction; the
/// group-action modules additionally require |det| = 1.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(std::vector<std::vector<BigInt>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    const BigInt& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<BigInt>>& rows() const { return rows_; }
    const BigInt& det_abs() const { return det_abs_; }
    bool is_unimodular() const { return det_abs_ == 1; }

    IntVector col(std::size_t j) const;
    IntMatrix operator*(const IntMatrix& other) const;
    IntVector operator*(const IntVector& v) const;
    bool operator==(const IntMatrix& other) const { return rows_ == other.rows_; }

    std::string to_string() const;

  private:
    std::size_t n_ = 0;
    std::vector<std::vector<BigInt>> rows_;
    BigInt det_abs_ = 0;
};

/// Exact determinant (Bareiss fraction-free elimination).
BigInt det(const IntMatrix& X);

/// Exact inverse of a unimodular matrix (adjugate divided by det = +-1).
IntMatrix unimodular_inverse(const IntMatrix& X);

/// Exact k-th power; k < 0 requires |det X| = 1.
IntMatrix mat_pow(const IntMatrix& X, std::int64_t k);

}  // namespace gssp
