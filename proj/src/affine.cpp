#include "wakimoto/affine.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace wakimoto {

CoeffField make_level_field(const LieAlgebra& g) {
    CoeffField f;
    f.names.push_back("k");
    for (int i = 0; i < g.rank(); ++i)
        f.names.push_back("H" + std::to_string(i + 1));
    int nv = (int)f.names.size();
    // k - k_c = k + h_vee and k + k_c = k - h_vee
    Poly kv = Poly::variable(nv, 0);
    f.factors.push_back(monic(kv + Poly::constant(nv, Rat(g.dual_coxeter()))));
    f.factors.push_back(monic(kv - Poly::constant(nv, Rat(g.dual_coxeter()))));
    for (int a = 0; a < g.npos(); ++a) {
        Poly h(nv);
        for (int i = 0; i < g.rank(); ++i)
            h += Poly::variable(nv, 1 + i) * g.coroot_coords(a)[i];
        f.factors.push_back(monic(h));
    }
    return f;
}

Poly h_alpha_poly(const LieAlgebra& g, const CoeffField& f, int root) {
    Poly h(f.nvars());
    for (int i = 0; i < g.rank(); ++i)
        h += Poly::variable(f.nvars(), 1 + i) * g.coroot_coords(root)[i];
    return h;
}

bool PbwModule::Traits::right_mover(const Mode& m) const {
    if (mod->kind_ == PbwKind::Free)
        return false;
    if (mod->g_->is_h(m.base))
        return m.n > mod->N_ ||
               (m.n == mod->N_ && mod->kind_ == PbwKind::VacuumLocal);
    return m.n >= mod->N_;
}

RatFun PbwModule::Traits::vac_action(const Mode& m) const {
    // only right movers reach here; h_{i,N} on the localized module becomes
    // the coefficient H_i, everything else annihilates vac
    if (mod->g_->is_h(m.base) && m.n == mod->N_ &&
        mod->kind_ == PbwKind::VacuumLocal)
        return mod->field_.var(1 + m.base);
    return mod->field_.zero();
}

PbwModule::Traits::BracketResult PbwModule::Traits::bracket(const Mode& x,
                                                            const Mode& g) const {
    BracketResult r;
    r.central = mod->field_.zero();
    const LieAlgebra& alg = *mod->g_;
    const Elt& br = alg.bracket_basis(x.base, g.base);
    for (int d = 0; d < alg.dim(); ++d)
        if (br[d] != 0)
            r.elems.push_back({Mode{d, x.n + g.n}, br[d]});
    if (x.n + g.n == 0 && g.n != 0) {
        Rat pairing = alg.form(x.base, g.base);
        if (pairing != 0)
            r.central = mod->level_ * (pairing * Rat(g.n));
    }
    return r;
}

PbwModule::PbwModule(const LieAlgebra& g, const CoeffField& field, PbwKind kind,
                     int N, RatFun level)
    : g_(&g), field_(field), kind_(kind), N_(N), level_(std::move(level)),
      traits_{this}, engine_(traits_) {
    if (N < 1)
        throw std::invalid_argument("N must be >= 1");
}

int PbwModule::monomial_I(const Monomial& m) const {
    int s = 0;
    for (auto& x : m)
        s += mode_I(x);
    return s;
}

int PbwModule::monomial_degree(const Monomial& m) const {
    int s = 0;
    for (auto& x : m)
        s -= x.n;
    return s;
}

std::vector<int> PbwModule::monomial_weight(const Monomial& m) const {
    std::vector<int> w(g_->rank(), 0);
    for (auto& x : m) {
        auto mw = g_->weight_of_basis(x.base);
        for (int i = 0; i < g_->rank(); ++i)
            w[i] += mw[i];
    }
    return w;
}

std::optional<long> PbwModule::term_degree(const Monomial& m,
                                           const RatFun& c) const {
    std::vector<long> vw(field_.nvars(), 0);
    for (int i = 0; i < g_->rank(); ++i)
        vw[1 + i] = -N_; // deg H_i = -N, deg k = 0
    auto cd = c.weighted_degree(vw);
    if (!cd)
        return std::nullopt;
    return *cd + monomial_degree(m);
}

bool PbwModule::basis_mode(const Mode& m) const {
    if (kind_ == PbwKind::Free)
        return true;
    if (g_->is_h(m.base))
        return kind_ == PbwKind::VacuumLocal ? m.n < N_ : m.n <= N_;
    return m.n < N_;
}

std::vector<PbwModule::Monomial> PbwModule::basis_monomials(int maxI,
                                                            int hN_cap) const {
    // generators with I in [1, maxI], in basis order; h_{i,N} (I = 0) only
    // in the plain vacuum module, capped separately
    std::vector<Mode> gens;
    for (int base = 0; base < g_->dim(); ++base) {
        int top = g_->is_h(base) ? (kind_ == PbwKind::VacuumLocal ? N_ - 1 : N_)
                                 : N_ - 1;
        for (int n = top; N_ - n <= maxI; --n)
            if (mode_I(Mode{base, n}) >= 0)
                gens.push_back(Mode{base, n});
    }
    std::sort(gens.begin(), gens.end());
    std::vector<Monomial> out;
    Monomial cur;
    // DFS over non-decreasing generator sequences within the I budget
    auto rec = [&](auto&& self, size_t from, int budget, int hN_left) -> void {
        out.push_back(cur);
        for (size_t i = from; i < gens.size(); ++i) {
            int ci = mode_I(gens[i]);
            bool is_hN = g_->is_h(gens[i].base) && gens[i].n == N_;
            if (ci > budget)
                continue;
            if (is_hN && hN_left == 0)
                continue;
            cur.push_back(gens[i]);
            self(self, i, budget - ci, hN_left - (is_hN ? 1 : 0));
            cur.pop_back();
        }
    };
    rec(rec, 0, maxI, hN_cap);
    return out;
}

std::vector<PbwModule::Monomial>
PbwModule::basis_monomials_weight(const std::vector<int>& wt, int maxI,
                                  int hN_cap) const {
    std::vector<Monomial> out;
    for (auto& m : basis_monomials(maxI, hN_cap))
        if (monomial_weight(m) == wt)
            out.push_back(m);
    return out;
}

PbwModule::Vec PbwModule::solve_h(int i, const Vec& x) const {
    if (kind_ != PbwKind::VacuumLocal)
        throw std::logic_error("solve_h needs the localized module");
    // h_{i,N} acts as H_i + A with A strictly raising the t-degree of some
    // factor; A is nilpotent on each graded piece, so
    //   y = sum_j (-1)^j H_i^{-(j+1)} A^j x.
    Poly hi = Poly::variable(field_.nvars(), 1 + i);
    RatFun Hi = field_.var(1 + i);
    Mode hiN{g_->h_index(i), N_};
    Vec y, rem = x;
    int j = 0;
    while (!rem.empty()) {
        if (j > 1000)
            throw std::logic_error("solve_h failed to terminate");
        RatFun pref =
            field_.constant(Rat(j % 2 == 0 ? 1 : -1)).div_by_factor(hi, j + 1);
        y = Engine::add(y, Engine::scale(rem, pref));
        // rem <- A rem = h_{i,N} rem - H_i rem
        Vec next = apply_mode(hiN, rem);
        next = Engine::sub(next, Engine::scale(rem, Hi));
        rem = std::move(next);
        ++j;
    }
    return y;
}

std::string PbwModule::str(const Vec& v) const {
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : v) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str(field_.names) << ")";
        for (auto& x : m)
            os << " " << g_->basis_name(x.base) << "_{" << x.n << "}";
        os << " vac";
    }
    return os.str();
}

} // namespace wakimoto
