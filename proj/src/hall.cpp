#include "gssp/hall.hpp"

#include <stdexcept>

namespace gssp {

std::uint64_t witt_number(unsigned r, unsigned w) {
    if (w == 0) throw std::invalid_argument("witt_number: weight must be positive");
    auto moebius = [](unsigned n) -> int {
        int mu = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    std::int64_t sum = 0;
    for (unsigned d = 1; d <= w; ++d) {
        if (w % d) continue;
        std::int64_t pw = 1;
        for (unsigned i = 0; i < w / d; ++i) pw *= r;
        sum += moebius(d) * pw;
    }
    return static_cast<std::uint64_t>(sum / w);
}

HallBasis::HallBasis(unsigned r, unsigned c) : r_(r), c_(c) {
    if (r < 1 || c < 1) throw std::invalid_argument("HallBasis: rank and class must be positive");
    if (r > 6 || (c > 4 && r > 1))
        throw std::invalid_argument(
            "HallBasis: collection beyond r = 6, c = 4 is outside desk scale");

    for (std::size_t g = 0; g < r; ++g) {
        BasicCommutator b;
        b.weight = 1;
        b.gen = g;
        elems_.push_back(b);
        names_.push_back("x" + std::to_string(g + 1));
    }
    const unsigned top_weight = r == 1 ? 1 : c;  // rank 1 has no commutators
    for (unsigned w = 2; w <= top_weight; ++w) {
        const std::size_t known = elems_.size();
        for (std::size_t u = 0; u < known; ++u) {
            for (std::size_t v = 0; v < known; ++v) {
                if (elems_[u].weight + elems_[v].weight != w) continue;
                if (!priority_gt(u, v)) continue;
                if (!elems_[u].is_generator()) {
                    const std::size_t q = elems_[u].right;
                    if (v != q && !priority_gt(v, q)) continue;
                }
                BasicCommutator b;
                b.weight = w;
                b.left = u;
                b.right = v;
                pair_index_[{u, v}] = elems_.size();
                elems_.push_back(b);
                names_.push_back("[" + names_[u] + "," + names_[v] + "]");
            }
        }
    }
    alphabet_ = Alphabet(names_);
    gen_alphabet_ = Alphabet(std::vector<std::string>(names_.begin(), names_.begin() + r));
}

std::size_t HallBasis::find_pair(std::size_t u, std::size_t v) const {
    auto it = pair_index_.find({u, v});
    return it == pair_index_.end() ? npos : it->second;
}

bool HallBasis::priority_gt(std::size_t a, std::size_t b) const {
    if (elems_[a].weight != elems_[b].weight) return elems_[a].weight > elems_[b].weight;
    return a < b;
}

HallBasis hall_basis(unsigned r, unsigned c) { return HallBasis(r, c); }

}  // namespace gssp
