#include "gssp/fgroup.hpp"

#include <stdexcept>
#include <string>

namespace gssp {

FGroup::FGroup(IntMatrix X) : n_(X.dim()), X_(std::move(X)) {
    if (!X_.is_unimodular())
        throw std::invalid_argument("FGroup: action matrix must have |det| = 1");
    X_inv_ = unimodular_inverse(X_);
    std::vector<std::string> names;
    names.reserve(n_ + 1);
    names.push_back("x");
    for (std::size_t j = 1; j <= n_; ++j) names.push_back("e" + std::to_string(j));
    alphabet_ = Alphabet(std::move(names));
}

std::size_t FGroup::e_index(std::size_t j) const {
    if (j < 1 || j > n_) throw std::out_of_range("FGroup::e_index: j out of range");
    return j;
}

FElement f_identity(const FGroup& G) { return FElement{0, IntVector(G.n())}; }

bool f_is_identity(const FElement& a) { return a.t == 0 && a.v.is_zero(); }

FElement f_mul(const FGroup& G, const FElement& a, const FElement& b) {
    if (a.v.size() != G.n() || b.v.size() != G.n())
        throw std::invalid_argument("f_mul: dimension mismatch");
    FElement out;
    out.t = a.t + b.t;
    out.v = mat_pow(G.X(), b.t) * a.v + b.v;
    return out;
}

FElement f_inv(const FGroup& G, const FElement& a) {
    FElement out;
    out.t = -a.t;
    out.v = -(mat_pow(G.X(), -a.t) * a.v);
    return out;
}

FElement evaluate(const FGroup& G, const Word& w) {
    // Right-to-left fold: v = sum_i X^{S_i} v_i with S_i the x-exponent sum
    // strictly after letter i; P tracks X^{S_i} incrementally.
    FElement out = f_identity(G);
    IntMatrix P = IntMatrix::identity(G.n());
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (it->gen == FGroup::x_index) {
            out.t += it->exp;
            P = P * mat_pow(G.X(), it->exp);
        } else {
            if (it->gen > G.n())
                throw std::invalid_argument("evaluate: word uses generator outside the alphabet");
            out.v += BigInt(it->exp) * P.col(it->gen - 1);
        }
    }
    return out;
}

bool word_problem(const FGroup& G, const Word& w) { return f_is_identity(evaluate(G, w)); }

}  // namespace gssp
