#pragma once

#include "wakimoto/engine.hpp"
#include "wakimoto/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wakimoto {

// Oscillator / Heisenberg generator. kind order B < AStar < A matches the
// Fock basis blocks (b modes, then a*, then a), each block ordered by index
// then n descending.
struct FGen {
    enum Kind { B = 0, AStar = 1, A = 2 };
    int kind = B;
    int idx = 0; // Cartan index for B, positive-root index for A / AStar
    int n = 0;

    bool operator==(const FGen& o) const {
        return kind == o.kind && idx == o.idx && n == o.n;
    }
    bool operator<(const FGen& o) const {
        if (kind != o.kind)
            return kind < o.kind;
        if (idx != o.idx)
            return idx < o.idx;
        return n > o.n;
    }
};

inline FGen a_gen(int root, int n) { return {FGen::A, root, n}; }
inline FGen astar_gen(int root, int n) { return {FGen::AStar, root, n}; }
inline FGen b_gen(int i, int n) { return {FGen::B, i, n}; }

// A normally ordered word of field symbols with a coefficient; the modes of
// a product split by degree across the factors.
struct FieldSymbol {
    enum Kind { A, AStar, DAStar, B } kind;
    int idx;
};

struct FieldTerm {
    RatFun coeff;
    std::vector<FieldSymbol> symbols;
};

struct FieldExpr {
    std::vector<FieldTerm> terms;

    FieldExpr& operator+=(const FieldExpr& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
};

// M_N (x) pi^_N at Heisenberg level kappa (used at kappa = k - k_c), plus its
// localization. Annihilation at vac: a_{alpha,n} for n >= N, a*_{alpha,n}
// for n >= 0, b_{i,n} for n > N; b_{i,N} becomes H_i when localized.
class FockModule {
  public:
    struct Traits {
        using Gen = FGen;
        const FockModule* mod;
        bool right_mover(const FGen& g) const;
        RatFun vac_action(const FGen& g) const;
        struct BracketResult {
            std::vector<std::pair<FGen, Rat>> elems; // always empty here
            RatFun central;
        };
        BracketResult bracket(const FGen& x, const FGen& g) const;
    };
    using Engine = ModeEngine<Traits>;
    using Vec = Engine::Vec;
    using Monomial = Engine::Monomial;

    FockModule(const LieAlgebra& g, const CoeffField& field, int N,
               bool localized, RatFun kappa);

    const LieAlgebra& algebra() const { return *g_; }
    const CoeffField& field() const { return field_; }
    int N() const { return N_; }
    bool localized() const { return localized_; }

    Vec vac() const { return {{Monomial{}, field_.one()}}; }

    Vec apply_gen(const FGen& x, const Vec& v) const {
        return engine_.apply_gen(x, v);
    }
    Vec apply_word(const std::vector<FGen>& w, const Vec& v) const {
        return engine_.apply_word(w, v);
    }
    Vec substitute(const Vec& v, const Vec& target) const {
        return engine_.substitute(v, target);
    }

    // degree -n mode of a field expression applied to a state; finite by the
    // annihilation windows
    Vec mode_apply(const FieldExpr& f, int n, const Vec& v) const;

    // gradings
    int gen_I(const FGen& g) const {
        return g.kind == FGen::AStar ? -g.n : N_ - g.n;
    }
    int monomial_I(const Monomial& m) const;
    int monomial_degree(const Monomial& m) const;
    std::vector<int> monomial_weight(const Monomial& m) const;
    std::optional<long> term_degree(const Monomial& m, const RatFun& c) const;

    std::vector<Monomial> basis_monomials(int maxI, int bN_cap = 0) const;
    std::vector<Monomial> basis_monomials_weight(const std::vector<int>& wt,
                                                 int maxI, int bN_cap = 0) const;

    // left Fun-action solve b_{i,N} y = x on the localized module
    Vec solve_b(int i, const Vec& x) const;

    std::string str(const Vec& v) const;

  private:
    int symbol_upper_bound(const FieldSymbol& s, const Vec& v) const;

    const LieAlgebra* g_;
    CoeffField field_;
    int N_;
    bool localized_;
    RatFun kappa_;
    Traits traits_;
    Engine engine_;
    friend struct Traits;
};

// field built from a polynomial in the y variables (one per positive root):
// each monomial y_g1^m1 ... turns into a* symbols, then `main` is appended
FieldExpr poly_field(const CoeffField& field, const Poly& p,
                     std::optional<FieldSymbol> main);

} // namespace wakimoto
