#pragma once

#include "wakimoto/engine.hpp"
#include "wakimoto/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wakimoto {

// x (x) t^n for a Chevalley basis element x of g.
//
// The PBW order is (base, n descending). Because the basis is laid out as
// [h_1..h_r | f (height,lex) | e (height,lex)], this puts all h modes first
// with positive powers left of negative ones, then the f block, then the e
// block, exactly the monomial shape of the vacuum-module basis.
struct Mode {
    int base = 0; // basis index into LieAlgebra
    int n = 0;

    bool operator==(const Mode& o) const { return base == o.base && n == o.n; }
    bool operator<(const Mode& o) const {
        if (base != o.base)
            return base < o.base;
        return n > o.n;
    }
};

enum class PbwKind {
    Free,        // the full enveloping algebra, no vacuum rules
    Vacuum,      // M_{N,k}: g_+ kills vac, h_{i,N} is a basis factor
    VacuumLocal, // M_{N,k,reg}: h_{i,N} absorbed into the coefficient H_i
};

// U_k(g^)-module with PBW normal forms. The level enters only through the
// central term of the affine bracket
//   [x t^n, y t^m] = [x,y] t^{n+m} + m delta_{n,-m} (x,y) level,
// which keeps the paper-side sign convention; right modules are stored as
// left modules at the opposite level (the caller applies x -> -x).
class PbwModule {
  public:
    struct Traits {
        using Gen = Mode;
        const PbwModule* mod;
        bool right_mover(const Mode& m) const;
        RatFun vac_action(const Mode& m) const;
        struct BracketResult {
            std::vector<std::pair<Mode, Rat>> elems;
            RatFun central;
        };
        BracketResult bracket(const Mode& x, const Mode& g) const;
    };
    using Engine = ModeEngine<Traits>;
    using Vec = Engine::Vec;
    using Monomial = Engine::Monomial;

    PbwModule(const LieAlgebra& g, const CoeffField& field, PbwKind kind, int N,
              RatFun level);

    const LieAlgebra& algebra() const { return *g_; }
    const CoeffField& field() const { return field_; }
    PbwKind kind() const { return kind_; }
    int N() const { return N_; }
    const RatFun& level() const { return level_; }

    Vec vac() const { return {{Monomial{}, field_.one()}}; }
    Vec zero() const { return {}; }

    Vec apply_mode(const Mode& x, const Vec& v) const {
        return engine_.apply_gen(x, v);
    }
    Vec apply_word(const std::vector<Mode>& w, const Vec& v) const {
        return engine_.apply_word(w, v);
    }
    // right action through the antiautomorphism x -> -x
    Vec right_apply_mode(const Mode& x, const Vec& v) const {
        return Engine::scale(engine_.apply_gen(x, v), field_.constant(Rat(-1)));
    }
    Vec substitute(const Vec& v, const Vec& target) const {
        return engine_.substitute(v, target);
    }

    // gradings
    int mode_I(const Mode& m) const { return N_ - m.n; }
    int monomial_I(const Monomial& m) const;
    int monomial_degree(const Monomial& m) const; // sum of -n, modes only
    std::vector<int> monomial_weight(const Monomial& m) const;
    // degree including the H-grading of the coefficient (deg H_i = -N);
    // nullopt when the coefficient is inhomogeneous
    std::optional<long> term_degree(const Monomial& m, const RatFun& c) const;

    // all basis monomials with I-weight <= maxI (h_{i,N} factors capped
    // separately in the unlocalized module since they carry I = 0)
    std::vector<Monomial> basis_monomials(int maxI, int hN_cap = 0) const;
    std::vector<Monomial> basis_monomials_weight(const std::vector<int>& wt,
                                                 int maxI, int hN_cap = 0) const;

    // left Fun-action solve h_{i,N} y = x on the localized module
    Vec solve_h(int i, const Vec& x) const;

    // mode validity in the PBW basis of this module
    bool basis_mode(const Mode& m) const;

    std::string str(const Vec& v) const;

  private:
    const LieAlgebra* g_;
    CoeffField field_;
    PbwKind kind_;
    int N_;
    RatFun level_;
    Traits traits_;
    Engine engine_;
    friend struct Traits;
};

// the coefficient field shared by the affine and Fock engines:
// variables (k, H_1..H_r), denominators {k - k_c, k + k_c} and {H_alpha}
CoeffField make_level_field(const LieAlgebra& g);
// H_alpha = sum_i (coroot coords) H_i as a polynomial of the level field
Poly h_alpha_poly(const LieAlgebra& g, const CoeffField& f, int root);

} // namespace wakimoto
