#include "wakimoto/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace wakimoto {

namespace {

// One Bareiss sweep; returns the list of pivot rows used and leaves m in
// echelon-ish form. prev is the previous pivot (1 at the start).
int bareiss_eliminate(PolyMatrix& m) {
    if (m.empty())
        return 0;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int nv = 0;
    for (auto& row : m)
        for (auto& p : row)
            nv = std::max(nv, p.nvars());
    Poly prev = Poly::constant(nv, Rat(1));
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                Poly t = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
                auto q = t.divide_exact(prev);
                assert(q && "Bareiss division must be exact");
                m[r][c] = *q;
            }
            m[r][col] = Poly(nv);
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace

int bareiss_rank(PolyMatrix m) { return bareiss_eliminate(m); }

Poly bareiss_det(PolyMatrix m) {
    int n = (int)m.size();
    assert(n > 0 && (int)m[0].size() == n);
    int nv = 0;
    for (auto& row : m)
        for (auto& p : row)
            nv = std::max(nv, p.nvars());
    Poly prev = Poly::constant(nv, Rat(1));
    Rat sign(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                return Poly(nv);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                Poly t = m[r][c] * m[k][k] - m[r][k] * m[k][c];
                auto q = t.divide_exact(prev);
                assert(q && "Bareiss division must be exact");
                m[r][c] = *q;
            }
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * sign;
}

int ratfun_rank(const std::vector<std::vector<RatFun>>& m) {
    PolyMatrix p;
    p.reserve(m.size());
    for (auto& row : m) {
        // common denominator of the row, then scale it away
        RatFun scaled;
        std::vector<Poly> prow;
        Poly den;
        bool first = true;
        for (auto& x : row) {
            Poly d = x.den_poly();
            if (first) {
                den = d;
                first = false;
            } else {
                // lcm is overkill; product works for rank purposes
                den = den * d;
            }
        }
        for (auto& x : row) {
            Poly t = x.num();
            auto q = den.divide_exact(x.den_poly());
            assert(q);
            prow.push_back(t * *q);
        }
        p.push_back(std::move(prow));
    }
    return bareiss_rank(std::move(p));
}

std::optional<PolySolution> bareiss_solve(const PolyMatrix& a,
                                          const std::vector<Poly>& b) {
    int n = (int)a.size();
    if (n == 0)
        return PolySolution{{}, Poly::constant(0, Rat(1))};
    assert((int)a[0].size() == n && (int)b.size() == n);
    Poly det = bareiss_det(a);
    if (det.is_zero())
        return std::nullopt;
    PolySolution sol;
    sol.den = det;
    for (int j = 0; j < n; ++j) {
        PolyMatrix aj = a;
        for (int r = 0; r < n; ++r)
            aj[r][j] = b[r];
        sol.num.push_back(bareiss_det(aj));
    }
    // Cramer is exact; verify anyway so a bad pivot assumption cannot slip
    for (int r = 0; r < n; ++r) {
        Poly lhs(b[r].nvars());
        for (int j = 0; j < n; ++j)
            lhs += a[r][j] * sol.num[j];
        if (!(lhs == b[r] * sol.den))
            return std::nullopt;
    }
    return sol;
}

std::optional<PolySolution> solve_overdetermined(const PolyMatrix& a,
                                                 const std::vector<Poly>& b) {
    int rows = (int)a.size();
    if (rows == 0)
        return std::nullopt;
    int cols = (int)a[0].size();
    // find a full-rank square subsystem greedily
    PolyMatrix sub;
    std::vector<Poly> subb;
    std::vector<int> used;
    for (int r = 0; r < rows && (int)used.size() < cols; ++r) {
        PolyMatrix test = sub;
        test.push_back(a[r]);
        if (bareiss_rank(test) == (int)test.size()) {
            sub.push_back(a[r]);
            subb.push_back(b[r]);
            used.push_back(r);
        }
    }
    if ((int)sub.size() < cols)
        return std::nullopt;
    auto sol = bareiss_solve(sub, subb);
    if (!sol)
        return std::nullopt;
    // verify the remaining rows: a[r] . num == b[r] * den
    for (int r = 0; r < rows; ++r) {
        Poly lhs(b[r].nvars());
        for (int j = 0; j < cols; ++j)
            lhs += a[r][j] * sol->num[j];
        if (!(lhs == b[r] * sol->den))
            return std::nullopt;
    }
    return sol;
}

int rat_rank(RatMatrix m) {
    if (m.empty())
        return 0;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            Rat f = m[r][col] / m[rank][col];
            for (int c = col; c < cols; ++c)
                m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rat>> rat_solve(RatMatrix a, std::vector<Rat> b) {
    int n = (int)a.size();
    assert(n > 0 && (int)a[0].size() == n && (int)b.size() == n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rat f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

} // namespace wakimoto
