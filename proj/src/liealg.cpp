#include "wakimoto/liealg.hpp"

#include "json.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace wakimoto {

namespace {

RatMatrix zeros(int n) { return RatMatrix(n, std::vector<Rat>(n, Rat(0))); }

RatMatrix unit(int n, int i, int j) {
    RatMatrix m = zeros(n);
    m[i][j] = 1;
    return m;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b, const Rat& cb) {
    RatMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j)
            r[i][j] += cb * b[i][j];
    return r;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    int n = (int)a.size();
    RatMatrix r = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0)
                continue;
            for (int j = 0; j < n; ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

RatMatrix mat_comm(const RatMatrix& a, const RatMatrix& b) {
    return mat_add(mat_mul(a, b), mat_mul(b, a), Rat(-1));
}

bool mat_zero(const RatMatrix& m) {
    for (auto& row : m)
        for (auto& x : row)
            if (x != 0)
                return false;
    return true;
}

// roots sorted by (height, lex descending) so alpha_1 precedes alpha_2
bool root_less(const Root& a, const Root& b) {
    if (a.height != b.height)
        return a.height < b.height;
    return a.coords > b.coords;
}

struct ModelData {
    int rank;
    int h_vee;
    int n;                            // matrix size
    std::vector<std::vector<int>> roots; // all positive roots, coords
    std::vector<RatMatrix> e_simple, f_simple;
};

ModelData model_for(const std::string& type) {
    ModelData m;
    if (type == "A1") {
        m.rank = 1;
        m.h_vee = 2;
        m.n = 2;
        m.roots = {{1}};
        m.e_simple = {unit(2, 0, 1)};
        m.f_simple = {unit(2, 1, 0)};
    } else if (type == "A2") {
        m.rank = 2;
        m.h_vee = 3;
        m.n = 3;
        m.roots = {{1, 0}, {0, 1}, {1, 1}};
        m.e_simple = {unit(3, 0, 1), unit(3, 1, 2)};
        m.f_simple = {unit(3, 1, 0), unit(3, 2, 1)};
    } else if (type == "B2") {
        // so(5) preserving the antidiagonal form, F_ij = E_ij - E_{6-j,6-i}
        m.rank = 2;
        m.h_vee = 3;
        m.n = 5;
        m.roots = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
        auto F = [&](int i, int j) {
            return mat_add(unit(5, i - 1, j - 1), unit(5, 5 - j, 5 - i), Rat(-1));
        };
        m.e_simple = {F(1, 2), F(2, 3)};
        m.f_simple = {F(2, 1), F(3, 2)};
    } else {
        throw std::invalid_argument("unsupported Cartan type: " + type);
    }
    return m;
}

} // namespace

LieAlgebra LieAlgebra::build(const std::string& cartan_type) {
    ModelData md = model_for(cartan_type);

    LieAlgebra g;
    g.type_ = cartan_type;
    g.rank_ = md.rank;
    g.dual_coxeter_ = md.h_vee;

    for (auto& c : md.roots) {
        Root r;
        r.coords = c;
        r.height = 0;
        for (int x : c)
            r.height += x;
        g.positive_roots_.push_back(std::move(r));
    }
    std::sort(g.positive_roots_.begin(), g.positive_roots_.end(), root_less);
    for (int a = 0; a < g.npos(); ++a)
        g.root_lookup_[g.positive_roots_[a].coords] = a;
    g.simple_index_.assign(g.rank_, -1);
    for (int i = 0; i < g.rank_; ++i) {
        std::vector<int> c(g.rank_, 0);
        c[i] = 1;
        g.simple_index_[i] = g.root_lookup_.at(c);
    }

    int npos = g.npos();
    int dim = g.dim();
    int n = md.n;

    // Build e_alpha by the fixed chain: for non-simple alpha take the
    // smallest simple index i with alpha - alpha_i a positive root and set
    // e_alpha = [e_i, e_{alpha - alpha_i}]. Whatever sign the chain produces
    // is kept. f_alpha / h_alpha are then normalized to an sl2 triple.
    std::vector<RatMatrix> e_mat(npos), f_mat(npos), h_mat(g.rank_);
    auto cartan_apply = [&](const RatMatrix& t, const RatMatrix& eroot) -> Rat {
        // eigenvalue of ad_t on eroot; eroot must be an eigenvector
        RatMatrix br = mat_comm(t, eroot);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (eroot[i][j] != 0)
                    return br[i][j] / eroot[i][j];
        throw std::logic_error("zero root vector");
    };

    for (int a = 0; a < npos; ++a) {
        const Root& al = g.positive_roots_[a];
        if (al.height == 1) {
            int i = 0;
            while (al.coords[i] == 0)
                ++i;
            e_mat[a] = md.e_simple[i];
            f_mat[a] = md.f_simple[i];
        } else {
            int i = -1, b = -1;
            for (int s = 0; s < g.rank_ && i < 0; ++s) {
                std::vector<int> c = al.coords;
                c[s] -= 1;
                if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) {
                    auto it = g.root_lookup_.find(c);
                    if (it != g.root_lookup_.end()) {
                        i = s;
                        b = it->second;
                    }
                }
            }
            assert(i >= 0 && "chain decomposition exists");
            int si = g.simple_index_[i];
            e_mat[a] = mat_comm(e_mat[si], e_mat[b]);
            f_mat[a] = mat_comm(f_mat[si], f_mat[b]);
            assert(!mat_zero(e_mat[a]));
        }
        // normalize (e, f, h) to an sl2 triple: t = [e, f_raw],
        // h = (2 / alpha(t)) t, f = (2 / alpha(t)) f_raw
        RatMatrix t = mat_comm(e_mat[a], f_mat[a]);
        Rat at = cartan_apply(t, e_mat[a]);
        assert(at != 0);
        Rat scale = Rat(2) / at;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                f_mat[a][i][j] *= scale;
    }
    for (int i = 0; i < g.rank_; ++i)
        h_mat[i] = mat_comm(e_mat[g.simple_index_[i]], f_mat[g.simple_index_[i]]);

    // assemble the model matrices in basis order
    std::vector<RatMatrix> basis(dim);
    for (int i = 0; i < g.rank_; ++i)
        basis[g.h_index(i)] = h_mat[i];
    for (int a = 0; a < npos; ++a) {
        basis[g.f_index(a)] = f_mat[a];
        basis[g.e_index(a)] = e_mat[a];
    }
    g.defining_.dim = n;
    g.defining_.mats = basis;

    // expand arbitrary model matrices in the basis (exact solve)
    auto expand = [&](const RatMatrix& x) -> Elt {
        RatMatrix sys(n * n, std::vector<Rat>(dim + 1, Rat(0)));
        for (int b = 0; b < dim; ++b)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    sys[i * n + j][b] = basis[b][i][j];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sys[i * n + j][dim] = x[i][j];
        // gaussian elimination with the augmented column
        int rows = n * n;
        std::vector<int> pivot_col;
        int rank = 0;
        for (int col = 0; col < dim && rank < rows; ++col) {
            int piv = -1;
            for (int r = rank; r < rows; ++r)
                if (sys[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                continue;
            std::swap(sys[rank], sys[piv]);
            for (int r = 0; r < rows; ++r) {
                if (r == rank || sys[r][col] == 0)
                    continue;
                Rat f = sys[r][col] / sys[rank][col];
                for (int c = col; c <= dim; ++c)
                    sys[r][c] -= f * sys[rank][c];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        Elt out(dim, Rat(0));
        for (int r = 0; r < rank; ++r)
            out[pivot_col[r]] = sys[r][dim] / sys[r][pivot_col[r]];
        for (int r = rank; r < rows; ++r)
            if (sys[r][dim] != 0)
                throw std::logic_error("matrix not in the span of the basis");
        return out;
    };

    g.table_.assign(dim, std::vector<Elt>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            g.table_[i][j] = expand(mat_comm(basis[i], basis[j]));

    // invariant form from the abstract adjoint action
    Rep ad = g.adjoint_rep();
    g.form_.assign(dim, std::vector<Rat>(dim, Rat(0)));
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Rat tr(0);
            RatMatrix prod = mat_mul(ad.mats[i], ad.mats[j]);
            for (int d = 0; d < dim; ++d)
                tr += prod[d][d];
            g.form_[i][j] = g.form_[j][i] = tr / Rat(2 * g.dual_coxeter_);
        }

    // alpha(h_i) pairing, (alpha, alpha), coroot coordinates, rho
    g.pairing_.assign(npos, std::vector<Rat>(g.rank_, Rat(0)));
    for (int a = 0; a < npos; ++a)
        for (int i = 0; i < g.rank_; ++i) {
            const Elt& br = g.table_[g.h_index(i)][g.e_index(a)];
            g.pairing_[a][i] = br[g.e_index(a)];
        }
    g.root_norm2_.assign(npos, Rat(0));
    g.coroot_coords_.assign(npos, std::vector<Rat>(g.rank_, Rat(0)));
    for (int a = 0; a < npos; ++a) {
        // h_alpha = [e_alpha, f_alpha] is Cartan, so its coordinates in the
        // h_i are read off directly; (alpha,alpha) = 4/(h_alpha,h_alpha)
        const Elt& h = g.table_[g.e_index(a)][g.f_index(a)];
        for (int i = 0; i < g.rank_; ++i)
            g.coroot_coords_[a][i] = h[g.h_index(i)];
        Rat hh = g.form(h, h);
        assert(hh != 0);
        g.root_norm2_[a] = Rat(4) / hh;
    }
    g.rho_.assign(g.rank_, Rat(0));
    for (int a = 0; a < npos; ++a)
        for (int i = 0; i < g.rank_; ++i)
            g.rho_[i] += Rat(g.positive_roots_[a].coords[i]) / 2;

    return g;
}

int LieAlgebra::root_index(const std::vector<int>& coords) const {
    auto it = root_lookup_.find(coords);
    return it == root_lookup_.end() ? -1 : it->second;
}

int LieAlgebra::root_of(int idx) const {
    assert(!is_h(idx));
    return is_f(idx) ? idx - rank_ : idx - rank_ - npos();
}

std::string LieAlgebra::basis_name(int idx) const {
    std::ostringstream os;
    if (is_h(idx)) {
        os << "h" << idx + 1;
        return os.str();
    }
    const Root& r = positive_roots_[root_of(idx)];
    os << (is_f(idx) ? "f[" : "e[");
    for (size_t i = 0; i < r.coords.size(); ++i)
        os << (i ? "," : "") << r.coords[i];
    os << "]";
    return os.str();
}

Elt LieAlgebra::basis_elt(int idx) const {
    Elt x = zero_elt();
    x[idx] = 1;
    return x;
}

Elt LieAlgebra::bracket(const Elt& x, const Elt& y) const {
    Elt r = zero_elt();
    for (int i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j] == 0)
                continue;
            const Elt& t = table_[i][j];
            Rat c = x[i] * y[j];
            for (int d = 0; d < dim(); ++d)
                r[d] += c * t[d];
        }
    }
    return r;
}

Rat LieAlgebra::form(const Elt& x, const Elt& y) const {
    Rat s(0);
    for (int i = 0; i < dim(); ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < dim(); ++j)
            if (y[j] != 0)
                s += x[i] * y[j] * form_[i][j];
    }
    return s;
}

Rat LieAlgebra::weight_eval(const std::vector<Rat>& w,
                            const std::vector<Rat>& h) const {
    // w = sum w_a alpha_a over simple roots, h = sum h_i h_i
    Rat s(0);
    for (int a = 0; a < rank_; ++a)
        for (int i = 0; i < rank_; ++i)
            s += w[a] * h[i] * pairing_[simple_index_[a]][i];
    return s;
}

Rat LieAlgebra::rho_of_h(int i) const {
    Rat s(0);
    for (int a = 0; a < npos(); ++a)
        s += Rat(1, 2) * pairing_[a][i];
    return s;
}

std::vector<int> LieAlgebra::weight_of_basis(int idx) const {
    std::vector<int> w(rank_, 0);
    if (is_h(idx))
        return w;
    const Root& r = positive_roots_[root_of(idx)];
    int s = is_e(idx) ? 1 : -1;
    for (int i = 0; i < rank_; ++i)
        w[i] = s * r.coords[i];
    return w;
}

bool LieAlgebra::regular(const std::vector<Rat>& chi_of_h) const {
    for (int a = 0; a < npos(); ++a) {
        Rat v(0);
        for (int i = 0; i < rank_; ++i)
            v += coroot_coords_[a][i] * chi_of_h[i];
        if (v == 0)
            return false;
    }
    return true;
}

Rep LieAlgebra::adjoint_rep() const {
    Rep ad;
    ad.dim = dim();
    ad.mats.assign(dim(), zeros(dim()));
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int d = 0; d < dim(); ++d)
                ad.mats[i][d][j] = table_[i][j][d];
    return ad;
}

std::string LieAlgebra::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["cartan_type"] = type_;
    j["rank"] = rank_;
    j["dual_coxeter"] = dual_coxeter_;
    for (auto& r : positive_roots_) {
        nlohmann::json jr;
        jr["coords"] = r.coords;
        jr["height"] = r.height;
        j["positive_roots"].push_back(jr);
    }
    for (int i = 0; i < dim(); ++i) {
        nlohmann::json row;
        for (int k = 0; k < dim(); ++k) {
            nlohmann::json ent;
            for (auto& c : table_[i][k])
                ent.push_back(rat_str(c));
            row.push_back(ent);
        }
        j["structure_constants"].push_back(row);
    }
    for (int i = 0; i < dim(); ++i) {
        nlohmann::json row;
        for (int k = 0; k < dim(); ++k)
            row.push_back(rat_str(form_[i][k]));
        j["bilinear_form"].push_back(row);
    }
    for (int i = 0; i < rank_; ++i)
        j["rho"].push_back(rat_str(rho_[i]));
    return j.dump(2);
}

} // namespace wakimoto
