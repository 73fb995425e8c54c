#include "wakimoto/fock.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace wakimoto {

bool FockModule::Traits::right_mover(const FGen& g) const {
    switch (g.kind) {
    case FGen::A:
        return g.n >= mod->N_;
    case FGen::AStar:
        return g.n >= 0;
    default:
        return g.n > mod->N_ || (g.n == mod->N_ && mod->localized_);
    }
}

RatFun FockModule::Traits::vac_action(const FGen& g) const {
    if (g.kind == FGen::B && g.n == mod->N_ && mod->localized_)
        return mod->field_.var(1 + g.idx);
    return mod->field_.zero();
}

FockModule::Traits::BracketResult FockModule::Traits::bracket(const FGen& x,
                                                              const FGen& g) const {
    BracketResult r;
    r.central = mod->field_.zero();
    if (x.n + g.n != 0)
        return r;
    if (x.kind == FGen::A && g.kind == FGen::AStar && x.idx == g.idx)
        r.central = mod->field_.one();
    else if (x.kind == FGen::AStar && g.kind == FGen::A && x.idx == g.idx)
        r.central = mod->field_.constant(Rat(-1));
    else if (x.kind == FGen::B && g.kind == FGen::B) {
        Rat c = mod->g_->cartan_form(x.idx, g.idx);
        if (c != 0)
            r.central = mod->kappa_ * (c * Rat(-x.n));
    }
    return r;
}

FockModule::FockModule(const LieAlgebra& g, const CoeffField& field, int N,
                       bool localized, RatFun kappa)
    : g_(&g), field_(field), N_(N), localized_(localized),
      kappa_(std::move(kappa)), traits_{this}, engine_(traits_) {
    if (N < 1)
        throw std::invalid_argument("N must be >= 1");
}

int FockModule::monomial_I(const Monomial& m) const {
    int s = 0;
    for (auto& x : m)
        s += gen_I(x);
    return s;
}

int FockModule::monomial_degree(const Monomial& m) const {
    int s = 0;
    for (auto& x : m)
        s -= x.n;
    return s;
}

std::vector<int> FockModule::monomial_weight(const Monomial& m) const {
    std::vector<int> w(g_->rank(), 0);
    for (auto& x : m) {
        if (x.kind == FGen::B)
            continue;
        const Root& r = g_->positive_roots()[x.idx];
        int s = x.kind == FGen::A ? 1 : -1;
        for (int i = 0; i < g_->rank(); ++i)
            w[i] += s * r.coords[i];
    }
    return w;
}

std::optional<long> FockModule::term_degree(const Monomial& m,
                                            const RatFun& c) const {
    std::vector<long> vw(field_.nvars(), 0);
    for (int i = 0; i < g_->rank(); ++i)
        vw[1 + i] = -N_;
    auto cd = c.weighted_degree(vw);
    if (!cd)
        return std::nullopt;
    return *cd + monomial_degree(m);
}

std::vector<FockModule::Monomial> FockModule::basis_monomials(int maxI,
                                                              int bN_cap) const {
    std::vector<FGen> gens;
    for (int i = 0; i < g_->rank(); ++i) {
        int top = localized_ ? N_ - 1 : N_;
        for (int n = top; N_ - n <= maxI; --n)
            gens.push_back(b_gen(i, n));
    }
    for (int a = 0; a < g_->npos(); ++a)
        for (int n = -1; -n <= maxI; --n)
            gens.push_back(astar_gen(a, n));
    for (int a = 0; a < g_->npos(); ++a)
        for (int n = N_ - 1; N_ - n <= maxI; --n)
            gens.push_back(a_gen(a, n));
    std::sort(gens.begin(), gens.end());
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, size_t from, int budget, int bN_left) -> void {
        out.push_back(cur);
        for (size_t i = from; i < gens.size(); ++i) {
            int ci = gen_I(gens[i]);
            bool is_bN = gens[i].kind == FGen::B && gens[i].n == N_;
            if (ci > budget)
                continue;
            if (is_bN && bN_left == 0)
                continue;
            cur.push_back(gens[i]);
            self(self, i, budget - ci, bN_left - (is_bN ? 1 : 0));
            cur.pop_back();
        }
    };
    rec(rec, 0, maxI, bN_cap);
    return out;
}

std::vector<FockModule::Monomial>
FockModule::basis_monomials_weight(const std::vector<int>& wt, int maxI,
                                   int bN_cap) const {
    std::vector<Monomial> out;
    for (auto& m : basis_monomials(maxI, bN_cap))
        if (monomial_weight(m) == wt)
            out.push_back(m);
    return out;
}

int FockModule::symbol_upper_bound(const FieldSymbol& s, const Vec& v) const {
    // largest mode index of this symbol that can act without annihilating;
    // within-term contractions cannot raise it (normal ordering puts the
    // movers rightmost, where only the state is available)
    int u;
    switch (s.kind) {
    case FieldSymbol::A:
        u = N_ - 1;
        for (auto& [m, c] : v)
            for (auto& g : m)
                if (g.kind == FGen::AStar && g.idx == s.idx)
                    u = std::max(u, -g.n);
        return u;
    case FieldSymbol::AStar:
    case FieldSymbol::DAStar:
        u = 0;
        for (auto& [m, c] : v)
            for (auto& g : m)
                if (g.kind == FGen::A && g.idx == s.idx)
                    u = std::max(u, -g.n);
        return u;
    default:
        u = N_;
        for (auto& [m, c] : v)
            for (auto& g : m)
                if (g.kind == FGen::B && g_->cartan_form(s.idx, g.idx) != 0)
                    u = std::max(u, -g.n);
        return u;
    }
}

FockModule::Vec FockModule::mode_apply(const FieldExpr& f, int n,
                                       const Vec& v) const {
    Vec out;
    if (v.empty())
        return out;
    for (auto& term : f.terms) {
        if (term.coeff.is_zero())
            continue;
        int r = (int)term.symbols.size();
        if (r == 0) {
            if (n == 0)
                out = Engine::add(out, Engine::scale(v, term.coeff));
            continue;
        }
        std::vector<int> ub(r);
        int ub_sum = 0;
        for (int j = 0; j < r; ++j) {
            ub[j] = symbol_upper_bound(term.symbols[j], v);
            ub_sum += ub[j];
        }
        // enumerate mode splittings n_0 + .. + n_{r-1} = n with n_j <= ub[j]
        std::vector<int> pick(r);
        auto rec = [&](auto&& self, int j, int rem, int ub_tail) -> void {
            if (j == r - 1) {
                if (rem > ub[j])
                    return;
                pick[j] = rem;
                // assemble the generator word, normally ordered: by the
                // normal-ordering rule a_{n>=0} and a*_{m>0} move right
                std::vector<FGen> stay, move;
                Rat scale(1);
                for (int s = 0; s < r; ++s) {
                    const FieldSymbol& sym = term.symbols[s];
                    int m = pick[s];
                    FGen gen;
                    switch (sym.kind) {
                    case FieldSymbol::A:
                        gen = a_gen(sym.idx, m);
                        (m >= 0 ? move : stay).push_back(gen);
                        break;
                    case FieldSymbol::DAStar:
                        if (m == 0)
                            return; // zero coefficient
                        scale *= Rat(-m);
                        [[fallthrough]];
                    case FieldSymbol::AStar:
                        gen = astar_gen(sym.idx, m);
                        (m > 0 ? move : stay).push_back(gen);
                        break;
                    default:
                        stay.push_back(b_gen(sym.idx, m));
                    }
                }
                stay.insert(stay.end(), move.begin(), move.end());
                Vec piece = engine_.apply_word(stay, v);
                out = Engine::add(out, Engine::scale(piece, term.coeff * scale));
                return;
            }
            ub_tail -= ub[j];
            // n_j >= rem - (max of the remaining tail)
            for (int m = rem - ub_tail; m <= ub[j]; ++m) {
                pick[j] = m;
                self(self, j + 1, rem - m, ub_tail);
            }
        };
        rec(rec, 0, n, ub_sum);
    }
    return out;
}

FockModule::Vec FockModule::solve_b(int i, const Vec& x) const {
    if (!localized_)
        throw std::logic_error("solve_b needs the localized module");
    Poly hi = Poly::variable(field_.nvars(), 1 + i);
    RatFun Hi = field_.var(1 + i);
    FGen biN = b_gen(i, N_);
    Vec y, rem = x;
    int j = 0;
    while (!rem.empty()) {
        if (j > 1000)
            throw std::logic_error("solve_b failed to terminate");
        RatFun pref =
            field_.constant(Rat(j % 2 == 0 ? 1 : -1)).div_by_factor(hi, j + 1);
        y = Engine::add(y, Engine::scale(rem, pref));
        Vec next = apply_gen(biN, rem);
        next = Engine::sub(next, Engine::scale(rem, Hi));
        rem = std::move(next);
        ++j;
    }
    return y;
}

std::string FockModule::str(const Vec& v) const {
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : v) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str(field_.names) << ")";
        for (auto& x : m) {
            const char* k = x.kind == FGen::B ? "b" : (x.kind == FGen::A ? "a" : "a*");
            os << " " << k << "[" << x.idx << "]_{" << x.n << "}";
        }
        os << " vac'";
    }
    return os.str();
}

FieldExpr poly_field(const CoeffField& field, const Poly& p,
                     std::optional<FieldSymbol> main) {
    FieldExpr f;
    for (auto& [e, c] : p.terms()) {
        FieldTerm t;
        t.coeff = field.constant(c);
        for (size_t a = 0; a < e.size(); ++a)
            for (int j = 0; j < e[a]; ++j)
                t.symbols.push_back({FieldSymbol::AStar, (int)a});
        if (main)
            t.symbols.push_back(*main);
        f.terms.push_back(std::move(t));
    }
    return f;
}

} // namespace wakimoto
