#include "wakimoto/bigcell.hpp"

#include "json.hpp"

#include <cassert>
#include <stdexcept>

namespace wakimoto {

namespace {

// g-valued polynomial in the y variables: one Poly per basis element
using GPoly = std::vector<Poly>;

GPoly gp_zero(const LieAlgebra& g, int nv) { return GPoly(g.dim(), Poly(nv)); }

bool gp_is_zero(const GPoly& x) {
    for (auto& p : x)
        if (!p.is_zero())
            return false;
    return true;
}

GPoly ad(const LieAlgebra& g, const GPoly& y, const GPoly& x) {
    int nv = y[0].nvars();
    GPoly r = gp_zero(g, nv);
    for (int a = 0; a < g.dim(); ++a) {
        if (y[a].is_zero())
            continue;
        for (int b = 0; b < g.dim(); ++b) {
            if (x[b].is_zero())
                continue;
            const Elt& t = g.bracket_basis(a, b);
            Poly prod = y[a] * x[b];
            for (int d = 0; d < g.dim(); ++d)
                if (t[d] != 0)
                    r[d] += prod * t[d];
        }
    }
    return r;
}

} // namespace

BigCellRealization compute_realization(const LieAlgebra& g) {
    const int npos = g.npos();
    const int nv = npos;

    GPoly y_elt = gp_zero(g, nv);
    for (int a = 0; a < npos; ++a)
        y_elt[g.e_index(a)] = Poly::variable(nv, a);

    // nilpotency order of ad_Y: it raises the height grading by at least 1
    int maxh = 0;
    for (auto& r : g.positive_roots())
        maxh = std::max(maxh, r.height);
    const int nil = 2 * maxh + 1;

    // series z/(1 - e^{-z}) = sum s_m z^m from inverting
    // (1 - e^{-z})/z = sum_j (-1)^j z^j / (j+1)!
    std::vector<Rat> c(nil + 1), s(nil + 1);
    Rat fact(1);
    for (int j = 0; j <= nil; ++j) {
        fact *= Rat(j + 1);
        c[j] = Rat(j % 2 == 0 ? 1 : -1) / fact;
    }
    s[0] = 1;
    for (int m = 1; m <= nil; ++m) {
        Rat acc(0);
        for (int j = 1; j <= m; ++j)
            acc += c[j] * s[m - j];
        s[m] = -acc;
    }

    BigCellRealization real;
    real.images.resize(g.dim());
    real.scalings.assign(npos, Rat(1));

    for (int x = 0; x < g.dim(); ++x) {
        // w = -e^{-ad_Y}(x), the left-translated velocity of exp(-s x) u
        GPoly w = gp_zero(g, nv);
        GPoly cur = gp_zero(g, nv);
        cur[x] = Poly::constant(nv, Rat(1));
        Rat jfact(1), sign(-1);
        for (int j = 0; j <= nil && !gp_is_zero(cur); ++j) {
            if (j > 0) {
                cur = ad(g, y_elt, cur);
                jfact *= Rat(j);
                sign = -sign;
            }
            for (int d = 0; d < g.dim(); ++d)
                w[d] += cur[d] * (sign / jfact);
        }
        // u^{-1} du = ((1 - e^{-ad_Y}) / ad_Y)(dY) must match the u-part of
        // w, so dY = (ad_Y / (1 - e^{-ad_Y}))(w_u)
        GPoly wu = gp_zero(g, nv);
        for (int a = 0; a < npos; ++a)
            wu[g.e_index(a)] = w[g.e_index(a)];
        GPoly dy = gp_zero(g, nv);
        cur = wu;
        for (int m = 0; m <= nil && !gp_is_zero(cur); ++m) {
            if (m > 0)
                cur = ad(g, y_elt, cur);
            for (int d = 0; d < g.dim(); ++d)
                dy[d] += cur[d] * s[m];
        }
        PolyVectorField f;
        f.comp.resize(npos, Poly(nv));
        for (int a = 0; a < npos; ++a)
            f.comp[a] = dy[g.e_index(a)];
        real.images[x] = std::move(f);
    }

    // normalize: scale y_alpha so the constant coefficient of d/dy_alpha in
    // the image of e_alpha is exactly 1 (weight reasons make it constant)
    std::vector<Rat> lambda(npos);
    for (int a = 0; a < npos; ++a) {
        Rat c0 = real.images[g.e_index(a)].comp[a].constant_term();
        if (c0 == 0)
            throw std::logic_error("vanishing leading coefficient in e_alpha image");
        lambda[a] = c0;
    }
    return rescale_realization(g, real, lambda);
}

BigCellRealization rescale_realization(const LieAlgebra& g,
                                       const BigCellRealization& r,
                                       const std::vector<Rat>& mu) {
    // y_alpha = mu_alpha y'_alpha: substitute in coefficients and divide the
    // d/dy_beta component by mu_beta
    const int npos = g.npos();
    BigCellRealization out;
    out.images.resize(g.dim());
    out.scalings.resize(npos);
    for (int a = 0; a < npos; ++a) {
        if (mu[a] == 0)
            throw std::invalid_argument("zero coordinate scaling");
        out.scalings[a] = r.scalings[a] * mu[a];
    }
    for (int x = 0; x < g.dim(); ++x) {
        PolyVectorField f;
        f.comp.resize(npos, Poly(npos));
        for (int b = 0; b < npos; ++b) {
            Poly p = r.images[x].comp[b];
            for (int a = 0; a < npos; ++a)
                p = p.subst(a, Poly::variable(npos, a) * mu[a]);
            f.comp[b] = p * (Rat(1) / mu[b]);
        }
        out.images[x] = std::move(f);
    }
    return out;
}

PolyVectorField vf_bracket(const LieAlgebra& g, const PolyVectorField& v,
                           const PolyVectorField& w) {
    const int npos = g.npos();
    PolyVectorField r;
    r.comp.resize(npos, Poly(npos));
    for (int b = 0; b < npos; ++b) {
        Poly acc(npos);
        for (int a = 0; a < npos; ++a) {
            if (!v.comp[a].is_zero())
                acc += v.comp[a] * w.comp[b].derivative(a);
            if (!w.comp[a].is_zero())
                acc -= w.comp[a] * v.comp[b].derivative(a);
        }
        r.comp[b] = acc;
    }
    return r;
}

PQTables extract_pq(const LieAlgebra& g, const BigCellRealization& r) {
    const int npos = g.npos();
    PQTables t;
    t.P.assign(g.rank(), std::vector<Poly>(npos, Poly(npos)));
    t.Q.assign(g.rank(), std::vector<Poly>(npos, Poly(npos)));
    t.P_all.assign(npos, std::vector<Poly>(npos, Poly(npos)));
    for (int a = 0; a < npos; ++a) {
        const PolyVectorField& f = r.images[g.e_index(a)];
        for (int b = 0; b < npos; ++b) {
            Rat c0 = f.comp[b].constant_term();
            if (b == a) {
                if (c0 != 1)
                    throw std::runtime_error("e_alpha leading coefficient not 1");
            } else if (c0 != 0) {
                throw std::runtime_error("constant term in P table");
            }
            Poly p = f.comp[b];
            if (b == a)
                p = p - Poly::constant(npos, Rat(1));
            if (!p.is_zero() &&
                g.positive_roots()[b].height <= g.positive_roots()[a].height)
                throw std::runtime_error("P^alpha_beta supported below alpha");
            t.P_all[a][b] = p;
        }
    }
    for (int i = 0; i < g.rank(); ++i) {
        int a = g.simple_root_index(i);
        for (int b = 0; b < npos; ++b) {
            t.P[i][b] = t.P_all[a][b];
            const Poly& q = r.images[g.f_index(a)].comp[b];
            if (q.constant_term() != 0)
                throw std::runtime_error("constant term in Q table");
            t.Q[i][b] = q;
        }
    }
    return t;
}

std::string pq_tables_json(const LieAlgebra& g, const PQTables& t) {
    nlohmann::json j;
    j["schema"] = 1;
    j["cartan_type"] = g.type();
    auto poly_json = [&](const Poly& p) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto& [e, c] : p.terms()) {
            nlohmann::json term;
            term["monomial"] = e;
            term["coeff"] = rat_str(c);
            terms.push_back(term);
        }
        return terms;
    };
    auto root_key = [&](int a) {
        std::string s;
        for (int x : g.positive_roots()[a].coords)
            s += (s.empty() ? "" : ",") + std::to_string(x);
        return s;
    };
    for (int a = 0; a < g.npos(); ++a)
        for (int b = 0; b < g.npos(); ++b)
            if (!t.P_all[a][b].is_zero())
                j["P"][root_key(a)][root_key(b)] = poly_json(t.P_all[a][b]);
    for (int i = 0; i < g.rank(); ++i)
        for (int b = 0; b < g.npos(); ++b)
            if (!t.Q[i][b].is_zero())
                j["Q"][std::to_string(i + 1)][root_key(b)] = poly_json(t.Q[i][b]);
    return j.dump(2);
}

} // namespace wakimoto
