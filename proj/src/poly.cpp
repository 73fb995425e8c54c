#include "wakimoto/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace wakimoto {

bool grlex_less(const Poly::Expo& a, const Poly::Expo& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a < b;
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int var, int power) {
    assert(var >= 0 && var < nvars);
    Poly p(nvars);
    Expo e(nvars, 0);
    e[var] = power;
    p.add_term(e, Rat(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0);
}

Rat Poly::constant_term() const {
    auto it = terms_.find(Expo(nvars_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Expo& e, const Rat& c) {
    assert((int)e.size() == nvars_);
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r = *this;
    for (auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r = *this;
    for (auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    Poly r(nvars_);
    Expo e(nvars_);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0)
        return Poly(nvars_);
    Poly r(nvars_);
    for (auto& [e, a] : terms_)
        r.terms_.emplace(e, a * c);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (nvars_ != o.nvars_)
        return nvars_ < o.nvars_;
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first)
            return a->first < b->first;
        int c = cmp(a->second, b->second);
        if (c != 0)
            return c < 0;
    }
    return b != o.terms_.end();
}

int Poly::total_degree() const {
    int d = -1;
    for (auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_)
        d = std::max(d, e[var]);
    return d;
}

std::optional<long> Poly::weighted_degree(const std::vector<long>& w) const {
    assert((int)w.size() == nvars_);
    std::optional<long> deg;
    for (auto& [e, c] : terms_) {
        long d = 0;
        for (int i = 0; i < nvars_; ++i)
            d += w[i] * e[i];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

Poly Poly::derivative(int var) const {
    Poly r(nvars_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Expo f = e;
        f[var] -= 1;
        r.add_term(f, c * e[var]);
    }
    return r;
}

Poly Poly::pow(int e) const {
    assert(e >= 0);
    Poly r = Poly::constant(nvars_, Rat(1));
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

Poly Poly::subst(int var, const Poly& value) const {
    assert(value.nvars() == nvars_);
    Poly r(nvars_);
    for (auto& [e, c] : terms_) {
        Expo f = e;
        f[var] = 0;
        Poly t(nvars_);
        t.add_term(f, c);
        r += t * value.pow(e[var]);
    }
    return r;
}

std::pair<Poly::Expo, Rat> Poly::leading_term_grlex() const {
    assert(!terms_.empty());
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (grlex_less(best->first, it->first))
            best = it;
    return {best->first, best->second};
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
    assert(nvars_ == o.nvars_);
    if (o.is_zero())
        return std::nullopt;
    Poly q(nvars_), r = *this;
    auto [le, lc] = o.leading_term_grlex();
    while (!r.is_zero()) {
        auto [re, rc] = r.leading_term_grlex();
        Expo e(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            e[i] = re[i] - le[i];
            if (e[i] < 0)
                return std::nullopt;
        }
        Poly t(nvars_);
        t.add_term(e, rc / lc);
        q += t;
        r -= t * o;
    }
    return q;
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& x) const {
    assert((int)x.size() == nvars_);
    std::complex<double> s = 0.0;
    for (auto& [e, c] : terms_) {
        std::complex<double> t = rat_double(c);
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j)
                t *= x[i];
        s += t;
    }
    return s;
}

Rat Poly::eval_rat(const std::vector<Rat>& x) const {
    assert((int)x.size() == nvars_);
    Rat s(0);
    for (auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < e[i]; ++j)
                t *= x[i];
        s += t;
    }
    return s;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool hasvar = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
        if (a != 1 || !hasvar)
            os << rat_str(a) << (hasvar ? "*" : "");
        bool firstv = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!firstv)
                os << "*";
            firstv = false;
            os << names[i];
            if (e[i] > 1)
                os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace wakimoto
