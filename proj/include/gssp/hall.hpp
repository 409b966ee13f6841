#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gssp/word.hpp"

namespace gssp {

/// A basic commutator: either a generator or a bracket [left, right] of two
/// earlier basis elements, with weight = sum of component weights.
struct BasicCommutator {
    unsigned weight = 1;
    std::size_t left = SIZE_MAX;
    std::size_t right = SIZE_MAX;
    std::size_t gen = SIZE_MAX;

    bool is_generator() const { return gen != SIZE_MAX; }
};

/// Number of basic commutators of weight w on r generators (Witt's formula).
std::uint64_t witt_number(unsigned r, unsigned w);

/// Hall basis of the free nilpotent group N_{r,c}, listed by weight and then
/// by creation order; the first r elements are the generators x1..xr.
///
/// Admissibility uses the priority order "higher weight first, then earlier
/// list position": [u,v] is basic iff u, v are basic, u has higher priority
/// than v, and when u = [p,q] the priority of v is at least that of q. With
/// generator priority x1 > x2 > ... this pins [x1,x2] at weight 2 and
/// [[x1,x2],x1], [[x1,x2],x2] at weight 3.
class HallBasis {
  public:
    static constexpr std::size_t npos = SIZE_MAX;

    HallBasis() = default;
    HallBasis(unsigned r, unsigned c);

    unsigned rank() const { return r_; }
    unsigned cls() const { return c_; }
    std::size_t size() const { return elems_.size(); }
    const BasicCommutator& element(std::size_t i) const { return elems_.at(i); }
    unsigned weight(std::size_t i) const { return elems_.at(i).weight; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    /// Alphabet of all m basis element names (commutators in bracket form).
    const Alphabet& alphabet() const { return alphabet_; }
    /// Alphabet of the r generators only.
    const Alphabet& generator_alphabet() const { return gen_alphabet_; }

    /// Index of the basic commutator [u,v], or npos when that pair is not basic.
    std::size_t find_pair(std::size_t u, std::size_t v) const;

    /// True iff a precedes b in the priority order described above.
    bool priority_gt(std::size_t a, std::size_t b) const;

    bool operator==(const HallBasis& other) const { return r_ == other.r_ && c_ == other.c_; }

  private:
    unsigned r_ = 0;
    unsigned c_ = 0;
    std::vector<BasicCommutator> elems_;
    std::vector<std::string> names_;
    Alphabet alphabet_;
    Alphabet gen_alphabet_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
};

HallBasis hall_basis(unsigned r, unsigned c);

}  // namespace gssp
