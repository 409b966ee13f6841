#pragma once

#include <cstdint>

#include "gssp/int_matrix.hpp"
#include "gssp/word.hpp"

namespace gssp {

/// The abelian-by-cyclic group F = Z x| Z^n where the cyclic generator x acts
/// on Z^n by a unimodular matrix X. Generating set {x, e_1, ..., e_n}.
class FGroup {
  public:
    explicit FGroup(IntMatrix X);

    std::size_t n() const { return n_; }
    const IntMatrix& X() const { return X_; }
    const IntMatrix& X_inv() const { return X_inv_; }
    const Alphabet& alphabet() const { return alphabet_; }

    static constexpr std::size_t x_index = 0;
    /// Generator index of e_j for 1-based j.
    std::size_t e_index(std::size_t j) const;

    bool operator==(const FGroup& other) const { return X_ == other.X_; }

  private:
    std::size_t n_ = 0;
    IntMatrix X_;
    IntMatrix X_inv_;
    Alphabet alphabet_;
};

/// Normal form x^t * v; multiplying on the right by x applies X to v.
struct FElement {
    std::int64_t t = 0;
    IntVector v;

    bool operator==(const FElement& other) const = default;
    bool operator<(const FElement& other) const {
        if (t != other.t) return t < other.t;
        return v < other.v;
    }
};

FElement f_identity(const FGroup& G);
bool f_is_identity(const FElement& a);

/// (t_a, v_a) * (t_b, v_b) = (t_a + t_b, X^{t_b} v_a + v_b)
FElement f_mul(const FGroup& G, const FElement& a, const FElement& b);

/// (t, v)^-1 = (-t, -X^{-t} v)
FElement f_inv(const FGroup& G, const FElement& a);

/// Image of a free word under the canonical epimorphism onto F. The running
/// X-power is maintained incrementally, one matrix multiply per x-letter.
FElement evaluate(const FGroup& G, const Word& w);

/// True iff w represents the identity of F.
bool word_problem(const FGroup& G, const Word& w);

}  // namespace gssp
