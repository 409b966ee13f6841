#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "gssp/bigint.hpp"
#include "gssp/hall.hpp"
#include "gssp/word.hpp"

namespace gssp {

/// Malcev coordinates (alpha_1, ..., alpha_m) over a Hall basis: the element
/// is y_1^{alpha_1} ... y_m^{alpha_m}.
struct ExponentVector {
    HallBasis basis;
    std::vector<BigInt> alphas;

    bool is_zero() const;
    bool operator==(const ExponentVector& other) const {
        return basis == other.basis && alphas == other.alphas;
    }
};

/// Word y_1^{alpha_1} ... y_m^{alpha_m} over the basis alphabet.
Word normal_word(const ExponentVector& ev);

/// A basis element with a sign, as it appears inside the collection engine.
struct SignedBasic {
    std::size_t index = 0;
    int sign = 1;
};

/// Collection engine for N_{r,c}. Rewrites words into Malcev normal form by
/// the leftmost-lowest-weight strategy: generators and then heavier basics
/// are pushed to the left one at a time; each swap t s -> s t u emits a
/// correction u of strictly larger weight, and commutators of weight > c are
/// discarded. Instances memoize pairwise corrections and are not safe for
/// concurrent use; distinct instances are independent.
class Collector {
  public:
    Collector(unsigned r, unsigned c);

    const HallBasis& basis() const { return basis_; }

    /// Malcev normal form of a word in the generators x1..xr.
    ExponentVector collect(const Word& w) const;

    /// The word u (over the basis alphabet) with t s = s t u in N_{r,c}.
    /// u is a word in basics of weight >= weight(s) + weight(t), empty when
    /// that sum exceeds the class.
    Word swap_rewrite(SignedBasic s, SignedBasic t) const;

  private:
    struct Unit {
        std::uint32_t idx;
        std::int8_t sign;
    };
    using UnitWord = std::vector<Unit>;

    static UnitWord inverted(const UnitWord& w);
    UnitWord comm_letters(std::size_t ti, int ts, std::size_t si, int ss, unsigned depth) const;
    UnitWord comm_positive(std::size_t ti, std::size_t si, unsigned depth) const;
    UnitWord comm_word_letter(const UnitWord& p, std::size_t li, int ls, unsigned depth) const;
    UnitWord comm_word_word(const UnitWord& p, const UnitWord& q, unsigned depth) const;
    unsigned min_weight(const UnitWord& w) const;

    HallBasis basis_;
    mutable std::map<std::array<std::size_t, 4>, UnitWord> comm_cache_;
};

/// One-shot collection; builds a fresh engine per call and is therefore pure.
ExponentVector collect(unsigned r, unsigned c, const Word& w);

Word swap_rewrite(unsigned r, unsigned c, SignedBasic s, SignedBasic t);

// ---- Heisenberg oracle: N_{2,2} as 3x3 unitriangular integer matrices ----

struct HeisenbergElement {
    BigInt a, b, z;

    bool operator==(const HeisenbergElement& other) const = default;
};

HeisenbergElement heisenberg_identity();
/// (a1,b1,z1)(a2,b2,z2) = (a1+a2, b1+b2, z1+z2+a1*b2)
HeisenbergElement heisenberg_mul(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement heisenberg_inv(const HeisenbergElement& g);
/// Evaluate a word over {x1, x2}: x1 -> (1,0,0), x2 -> (0,1,0).
HeisenbergElement heisenberg_eval(const Word& w);

/// Heisenberg image of Malcev coordinates on hall_basis(2,2):
/// (a1, a2, a3) -> (a1, a2, a3 + a1*a2).
HeisenbergElement heisenberg_from_exponents(const ExponentVector& ev);

// ---- permutation bookkeeping in free nilpotent groups ----

/// Exponents (alpha_i) on hall_basis(k,c) with
///   x_{tau(1)}^{eps_{tau(1)}} ... x_{tau(k)}^{eps_{tau(k)}}
///     = x_1^{eps_1} ... x_k^{eps_k} * prod_i y_i^{alpha_i},
/// where the product runs over basis elements of weight >= 2 (the weight-1
/// coordinates are necessarily zero and are asserted to be). By freeness the
/// same exponents are valid under any specialization x_i -> f_i into a group
/// of nilpotency class <= c. tau is 1-based: tau[i-1] is the image of i.
ExponentVector permutation_correction(unsigned k, unsigned c, const std::vector<int>& eps,
                                      const std::vector<std::size_t>& tau);

/// Words obtained by substituting x_i -> ws[i] into every Hall basis element
/// of weight >= 2 of hall_basis(|ws|, c), expanding [u,v] as u^-1 v^-1 u v.
std::vector<Word> enumerate_iterated_commutators(const std::vector<Word>& ws, unsigned c);

/// max_i |alpha_i| of permutation_correction over all tau in S_k and all
/// eps in {0,1}^k; the exact per-instance padding bound. Guarded to k <= 6.
BigInt padding_bound(unsigned k, unsigned c);

}  // namespace gssp
