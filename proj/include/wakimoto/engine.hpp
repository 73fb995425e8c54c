#pragma once

#include "wakimoto/ratfun.hpp"

#include <map>
#include <vector>

namespace wakimoto {

// Shared normal-ordering machinery for the mode algebras. A Traits class
// supplies the generator type and the rewriting data:
//
//   using Gen = ...;                    // totally ordered (operator<)
//   bool right_mover(Gen) const;        // annihilates or absorbs at vac
//   // vac_action: coefficient of the empty monomial produced when a
//   // right-mover reaches the vacuum (zero coefficient = annihilation)
//   RatFun vac_action(Gen) const;
//   // swap rule: x g = g x + sum_i coeff_i * gen_i + central
//   struct BracketResult { std::vector<std::pair<Gen,Rat>> elems; RatFun central; };
//   BracketResult bracket(Gen x, Gen g) const;
//
// Vectors are maps from sorted monomials to coefficients. apply_word applies
// a word of generators right to left (the word is an operator product, the
// rightmost factor acts first). Termination: every worklist step either
// shortens the combined sequence, removes an adjacent inversion, or moves a
// generator from the pending word into the sorted monomial, so the measure
// (total length, inversions, pending length) strictly decreases.
template <class Traits>
struct ModeEngine {
    using Gen = typename Traits::Gen;
    using Monomial = std::vector<Gen>;
    using Vec = std::map<Monomial, RatFun>;

    const Traits& traits;

    explicit ModeEngine(const Traits& t) : traits(t) {}

    static void accumulate(Vec& out, const Monomial& m, const RatFun& c) {
        if (c.is_zero())
            return;
        auto [it, fresh] = out.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                out.erase(it);
        }
    }

    static Vec add(const Vec& a, const Vec& b) {
        Vec r = a;
        for (auto& [m, c] : b)
            accumulate(r, m, c);
        return r;
    }

    static Vec sub(const Vec& a, const Vec& b) {
        Vec r = a;
        for (auto& [m, c] : b)
            accumulate(r, m, -c);
        return r;
    }

    static Vec scale(const Vec& a, const RatFun& c) {
        Vec r;
        for (auto& [m, x] : a)
            accumulate(r, m, x * c);
        return r;
    }

    // word applied right-to-left to a single monomial
    Vec apply_word_mono(const std::vector<Gen>& word, const Monomial& mono,
                        const RatFun& coeff) const {
        struct Item {
            RatFun c;
            std::vector<Gen> pending; // applied from the back
            Monomial m;               // sorted
        };
        Vec out;
        std::vector<Item> work;
        work.push_back({coeff, word, mono});
        while (!work.empty()) {
            Item it = std::move(work.back());
            work.pop_back();
            if (it.c.is_zero())
                continue;
            if (it.pending.empty()) {
                accumulate(out, it.m, it.c);
                continue;
            }
            Gen x = it.pending.back();
            it.pending.pop_back();
            if (it.m.empty()) {
                if (traits.right_mover(x)) {
                    RatFun v = traits.vac_action(x);
                    if (v.is_zero())
                        continue;
                    work.push_back({it.c * v, std::move(it.pending), {}});
                } else {
                    work.push_back({std::move(it.c), std::move(it.pending), {x}});
                }
                continue;
            }
            const Gen g = it.m.front();
            if (!traits.right_mover(x) && !(g < x)) {
                // already in sorted position
                Monomial m2;
                m2.reserve(it.m.size() + 1);
                m2.push_back(x);
                m2.insert(m2.end(), it.m.begin(), it.m.end());
                work.push_back({std::move(it.c), std::move(it.pending), std::move(m2)});
                continue;
            }
            // x g rest  ->  g (x rest) + [x, g] rest
            Monomial rest(it.m.begin() + 1, it.m.end());
            auto br = traits.bracket(x, g);
            {
                std::vector<Gen> p = it.pending;
                p.push_back(g);
                p.push_back(x);
                work.push_back({it.c, std::move(p), rest});
            }
            for (auto& [z, cz] : br.elems) {
                std::vector<Gen> p = it.pending;
                p.push_back(z);
                work.push_back({it.c * cz, std::move(p), rest});
            }
            if (!br.central.is_zero())
                work.push_back({it.c * br.central, it.pending, rest});
        }
        return out;
    }

    Vec apply_word(const std::vector<Gen>& word, const Vec& v) const {
        Vec out;
        for (auto& [m, c] : v)
            for (auto& [m2, c2] : apply_word_mono(word, m, c))
                accumulate(out, m2, c2);
        return out;
    }

    Vec apply_gen(const Gen& x, const Vec& v) const {
        return apply_word({x}, v);
    }

    // substitute `target` for the vacuum: sum_J c_J (word J applied to target)
    Vec substitute(const Vec& v, const Vec& target) const {
        Vec out;
        for (auto& [m, c] : v)
            for (auto& [m2, c2] : apply_word(m, target))
                accumulate(out, m2, c2 * c);
        return out;
    }
};

} // namespace wakimoto
