#include "gssp/collect.hpp"

#include <algorithm>
#include <climits>
#include <list>
#include <numeric>
#include <stdexcept>

namespace gssp {

bool ExponentVector::is_zero() const {
    for (const auto& a : alphas)
        if (a != 0) return false;
    return true;
}

Word normal_word(const ExponentVector& ev) {
    Word w;
    for (std::size_t i = 0; i < ev.alphas.size(); ++i) {
        if (ev.alphas[i] == 0) continue;
        if (!fits_int64(ev.alphas[i]))
            throw std::overflow_error("normal_word: exponent exceeds 64-bit range");
        w.append(i, ev.alphas[i].convert_to<std::int64_t>());
    }
    return w;
}

Collector::Collector(unsigned r, unsigned c) : basis_(r, c) {}

Collector::UnitWord Collector::inverted(const UnitWord& w) {
    UnitWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->idx, static_cast<std::int8_t>(-it->sign)});
    return out;
}

unsigned Collector::min_weight(const UnitWord& w) const {
    unsigned mw = UINT_MAX;
    for (const auto& u : w) mw = std::min(mw, basis_.weight(u.idx));
    return mw;
}

Collector::UnitWord Collector::comm_letters(std::size_t ti, int ts, std::size_t si, int ss,
                                            unsigned depth) const {
    if (depth > 2000) throw std::logic_error("Collector: commutator expansion recursed too deep");
    if (ti == si) return {};  // powers of one element commute
    if (basis_.weight(ti) + basis_.weight(si) > basis_.cls()) return {};
    const std::array<std::size_t, 4> key{ti, static_cast<std::size_t>(ts + 1), si,
                                         static_cast<std::size_t>(ss + 1)};
    if (auto hit = comm_cache_.find(key); hit != comm_cache_.end()) return hit->second;

    UnitWord res;
    if (ts == 1 && ss == 1) {
        res = comm_positive(ti, si, depth + 1);
    } else if (ts == -1) {
        // [t^-1, s^e] = W^-1 * [W^-1, t^-1]  with W = [t, s^e]
        const UnitWord winv = inverted(comm_letters(ti, 1, si, ss, depth + 1));
        res = winv;
        const UnitWord tail = comm_word_letter(winv, ti, -1, depth + 1);
        res.insert(res.end(), tail.begin(), tail.end());
    } else {
        // [t, s^-1] = W^-1 * [W^-1, s^-1]  with W = [t, s]
        const UnitWord winv = inverted(comm_letters(ti, 1, si, 1, depth + 1));
        res = winv;
        const UnitWord tail = comm_word_letter(winv, si, -1, depth + 1);
        res.insert(res.end(), tail.begin(), tail.end());
    }
    comm_cache_[key] = res;
    return res;
}

Collector::UnitWord Collector::comm_positive(std::size_t ti, std::size_t si,
                                             unsigned depth) const {
    if (basis_.priority_gt(si, ti))  // wrong orientation: [t,s] = [s,t]^-1
        return inverted(comm_letters(si, 1, ti, 1, depth + 1));
    if (const std::size_t idx = basis_.find_pair(ti, si); idx != HallBasis::npos)
        return {{static_cast<std::uint32_t>(idx), 1}};
    // Non-basic pair [t, s] with t = [p, q] and s strictly below q in
    // priority. Conjugation by s is an automorphism, so
    //   [t, s] = t^-1 (t^s) = t^-1 [p^s, q^s],  p^s = p [p,s], q^s = q [q,s].
    // Expanding [p [p,s], q [q,s]] reproduces the single letter t (from the
    // (p,q) pair) plus letters of weight >= weight(t) + weight(s); bubbling
    // that t to the front cancels it against t^-1 and leaves a correction
    // word made of sufficiently heavy letters only.
    const BasicCommutator& t = basis_.element(ti);
    if (t.is_generator())
        throw std::logic_error("Collector: generator pair escaped the Hall table");
    const auto p = static_cast<std::uint32_t>(t.left);
    const auto q = static_cast<std::uint32_t>(t.right);
    UnitWord ps{{p, 1}};
    {
        const UnitWord a = comm_letters(t.left, 1, si, 1, depth + 1);
        ps.insert(ps.end(), a.begin(), a.end());
    }
    UnitWord qs{{q, 1}};
    {
        const UnitWord b = comm_letters(t.right, 1, si, 1, depth + 1);
        qs.insert(qs.end(), b.begin(), b.end());
    }
    UnitWord expansion = comm_word_word(ps, qs, depth + 1);

    std::size_t at = expansion.size();
    for (std::size_t i = 0; i < expansion.size(); ++i)
        if (expansion[i].idx == ti) {
            at = i;
            break;
        }
    if (at == expansion.size() || expansion[at].sign != 1)
        throw std::logic_error("Collector: conjugation expansion lost its leading letter");
    while (at > 0) {
        const Unit z = expansion[at - 1];
        const UnitWord corr = comm_letters(z.idx, z.sign, ti, 1, depth + 1);
        std::swap(expansion[at - 1], expansion[at]);
        expansion.insert(expansion.begin() + static_cast<std::ptrdiff_t>(at) + 1, corr.begin(),
                         corr.end());
        --at;
    }
    expansion.erase(expansion.begin());
    const unsigned need = basis_.weight(ti) + basis_.weight(si);
    for (const auto& u : expansion)
        if (basis_.weight(u.idx) < need)
            throw std::logic_error("Collector: underweight letter in commutator expansion");
    return expansion;
}

Collector::UnitWord Collector::comm_word_letter(const UnitWord& p, std::size_t li, int ls,
                                                unsigned depth) const {
    if (p.empty()) return {};
    if (min_weight(p) + basis_.weight(li) > basis_.cls()) return {};
    // [a Q, l] = [a,l] * [[a,l], Q] * [Q,l]; recursion is structural on
    // strictly shorter words, so the pair-expansion depth is forwarded as is.
    UnitWord res = comm_letters(p[0].idx, p[0].sign, li, ls, depth);
    const UnitWord rest(p.begin() + 1, p.end());
    if (rest.empty()) return res;
    const UnitWord nested = comm_word_word(res, rest, depth);
    res.insert(res.end(), nested.begin(), nested.end());
    const UnitWord tail = comm_word_letter(rest, li, ls, depth);
    res.insert(res.end(), tail.begin(), tail.end());
    return res;
}

Collector::UnitWord Collector::comm_word_word(const UnitWord& p, const UnitWord& q,
                                              unsigned depth) const {
    if (p.empty() || q.empty()) return {};
    if (min_weight(p) + min_weight(q) > basis_.cls()) return {};
    // [P, b R] = [P, R] * [P, b] * [[P, b], R]
    const Unit b = q[0];
    const UnitWord rest(q.begin() + 1, q.end());
    const UnitWord pb = comm_word_letter(p, b.idx, b.sign, depth);
    if (rest.empty()) return pb;
    UnitWord res = comm_word_word(p, rest, depth);
    res.insert(res.end(), pb.begin(), pb.end());
    const UnitWord nested = comm_word_word(pb, rest, depth);
    res.insert(res.end(), nested.begin(), nested.end());
    return res;
}

ExponentVector Collector::collect(const Word& w) const {
    const unsigned c = basis_.cls();
    std::list<Unit> work;
    // Letters are usually generators x1..xr; normal-form words over the full
    // basis alphabet are accepted too (the engine collects any basis letter).
    for (const auto& l : w.letters()) {
        if (l.gen >= basis_.size())
            throw std::invalid_argument("collect: word uses a letter outside the basis");
        const std::int8_t sign = l.exp < 0 ? -1 : 1;
        const std::uint64_t count =
            l.exp < 0 ? ~static_cast<std::uint64_t>(l.exp) + 1 : static_cast<std::uint64_t>(l.exp);
        for (std::uint64_t i = 0; i < count; ++i)
            work.push_back({static_cast<std::uint32_t>(l.gen), sign});
    }

    std::vector<BigInt> alpha(basis_.size(), BigInt(0));
    for (std::size_t phase = 0; phase < basis_.size() && !work.empty(); ++phase) {
        const unsigned wp = basis_.weight(phase);
        if (2 * wp > c) {
            // every remaining pair of letters commutes in N_{r,c}
            for (const auto& u : work) alpha[u.idx] += u.sign;
            work.clear();
            break;
        }
        auto scan = work.begin();
        for (;;) {
            while (scan != work.end() && scan->idx != phase) ++scan;
            if (scan == work.end()) break;
            auto it = scan;
            scan = std::next(scan);
            while (it != work.begin()) {
                auto prev = std::prev(it);
                if (prev->idx == it->idx ||
                    basis_.weight(prev->idx) + wp > c) {  // free commute
                    work.splice(prev, work, it);
                    continue;
                }
                const UnitWord corr = comm_letters(prev->idx, prev->sign, it->idx, it->sign, 0);
                work.splice(prev, work, it);  // order is now: it, prev
                work.insert(std::next(prev), corr.begin(), corr.end());
            }
            alpha[phase] += it->sign;
            work.erase(it);
        }
    }
    return ExponentVector{basis_, std::move(alpha)};
}

Word Collector::swap_rewrite(SignedBasic s, SignedBasic t) const {
    if (s.index >= basis_.size() || t.index >= basis_.size())
        throw std::out_of_range("swap_rewrite: basis index out of range");
    if ((s.sign != 1 && s.sign != -1) || (t.sign != 1 && t.sign != -1))
        throw std::invalid_argument("swap_rewrite: sign must be +1 or -1");
    const UnitWord u = comm_letters(t.index, t.sign, s.index, s.sign, 0);
    Word out;
    for (const auto& l : u) out.append(l.idx, l.sign);
    return out;
}

ExponentVector collect(unsigned r, unsigned c, const Word& w) {
    return Collector(r, c).collect(w);
}

Word swap_rewrite(unsigned r, unsigned c, SignedBasic s, SignedBasic t) {
    return Collector(r, c).swap_rewrite(s, t);
}

// ---- Heisenberg oracle ----

HeisenbergElement heisenberg_identity() { return {0, 0, 0}; }

HeisenbergElement heisenberg_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
    return {g.a + h.a, g.b + h.b, g.z + h.z + g.a * h.b};
}

HeisenbergElement heisenberg_inv(const HeisenbergElement& g) {
    return {-g.a, -g.b, g.a * g.b - g.z};
}

HeisenbergElement heisenberg_eval(const Word& w) {
    HeisenbergElement acc = heisenberg_identity();
    for (const auto& l : w.letters()) {
        HeisenbergElement step;
        if (l.gen == 0)
            step = {BigInt(l.exp), 0, 0};
        else if (l.gen == 1)
            step = {0, BigInt(l.exp), 0};
        else
            throw std::invalid_argument("heisenberg_eval: word must be over {x1, x2}");
        acc = heisenberg_mul(acc, step);
    }
    return acc;
}

HeisenbergElement heisenberg_from_exponents(const ExponentVector& ev) {
    if (ev.basis.rank() != 2 || ev.basis.cls() != 2)
        throw std::invalid_argument("heisenberg_from_exponents: basis must be hall_basis(2,2)");
    return {ev.alphas[0], ev.alphas[1], ev.alphas[2] + ev.alphas[0] * ev.alphas[1]};
}

// ---- permutation correction / commutator enumeration ----

ExponentVector permutation_correction(unsigned k, unsigned c, const std::vector<int>& eps,
                                      const std::vector<std::size_t>& tau) {
    if (eps.size() != k || tau.size() != k)
        throw std::invalid_argument("permutation_correction: eps and tau must have length k");
    std::vector<bool> seen(k, false);
    for (const std::size_t image : tau) {
        if (image < 1 || image > k || seen[image - 1])
            throw std::invalid_argument("permutation_correction: tau is not a permutation");
        seen[image - 1] = true;
    }
    for (const int e : eps)
        if (e != 0 && e != 1)
            throw std::invalid_argument("permutation_correction: eps entries must be 0 or 1");

    Word straight, permuted;
    for (std::size_t i = 0; i < k; ++i) straight.append(i, eps[i]);
    for (std::size_t i = 0; i < k; ++i) permuted.append(tau[i] - 1, eps[tau[i] - 1]);

    ExponentVector ev = collect(k, c, straight.inverse().concat(permuted));
    for (std::size_t i = 0; i < k; ++i)
        if (ev.alphas[i] != 0)
            throw std::logic_error("permutation_correction: nonzero weight-1 coordinate");
    return ev;
}

std::vector<Word> enumerate_iterated_commutators(const std::vector<Word>& ws, unsigned c) {
    if (c < 2) throw std::invalid_argument("enumerate_iterated_commutators: class must be >= 2");
    if (ws.empty()) throw std::invalid_argument("enumerate_iterated_commutators: no base words");
    const HallBasis basis(static_cast<unsigned>(ws.size()), c);
    std::vector<Word> expanded(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& e = basis.element(i);
        if (e.is_generator()) {
            expanded[i] = ws[e.gen];
        } else {
            const Word& u = expanded[e.left];
            const Word& v = expanded[e.right];
            expanded[i] = u.inverse().concat(v.inverse()).concat(u).concat(v);
        }
    }
    std::vector<Word> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis.weight(i) >= 2) out.push_back(expanded[i]);
    return out;
}

BigInt padding_bound(unsigned k, unsigned c) {
    if (k > 6) throw std::invalid_argument("padding_bound: exact enumeration guarded to k <= 6");
    if (k == 0) return 0;
    const Collector engine(k, c);
    BigInt bound = 0;
    std::vector<std::size_t> tau(k);
    std::iota(tau.begin(), tau.end(), 1);
    do {
        for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
            Word straight, permuted;
            for (std::size_t i = 0; i < k; ++i) straight.append(i, (mask >> i) & 1u);
            for (std::size_t i = 0; i < k; ++i)
                permuted.append(tau[i] - 1, (mask >> (tau[i] - 1)) & 1u);
            const ExponentVector ev = engine.collect(straight.inverse().concat(permuted));
            for (const auto& a : ev.alphas) bound = std::max(bound, big_abs(a));
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
    return bound;
}

}  // namespace gssp
