#include "wakimoto/ratfun.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace wakimoto {

Poly monic(const Poly& p) {
    if (p.is_zero())
        return p;
    auto [e, c] = p.leading_term_grlex();
    return p * (Rat(1) / c);
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& [f, e] : den_) {
        while (e > 0) {
            auto q = num_.divide_exact(f);
            if (!q)
                break;
            num_ = *q;
            --e;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(),
                              [](auto& fe) { return fe.second == 0; }),
               den_.end());
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    assert(num_.nvars() == o.num_.nvars());
    // union of denominators, scale each numerator by the missing factors
    RatFun r;
    r.den_ = den_;
    for (auto& [f, e] : o.den_) {
        auto it = std::find_if(r.den_.begin(), r.den_.end(),
                               [&](auto& fe) { return fe.first == f; });
        if (it == r.den_.end())
            r.den_.emplace_back(f, e);
        else
            it->second = std::max(it->second, e);
    }
    std::sort(r.den_.begin(), r.den_.end());
    auto scale = [&](const RatFun& x) {
        Poly p = x.num_;
        for (auto& [f, e] : r.den_) {
            int have = 0;
            for (auto& [g, d] : x.den_)
                if (g == f)
                    have = d;
            for (int i = have; i < e; ++i)
                p *= f;
        }
        return p;
    };
    r.num_ = scale(*this) + scale(o);
    r.reduce();
    return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    assert(num_.nvars() == o.num_.nvars());
    RatFun r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (auto& [f, e] : o.den_) {
        auto it = std::find_if(r.den_.begin(), r.den_.end(),
                               [&](auto& fe) { return fe.first == f; });
        if (it == r.den_.end())
            r.den_.emplace_back(f, e);
        else
            it->second += e;
    }
    std::sort(r.den_.begin(), r.den_.end());
    r.reduce();
    return r;
}

RatFun RatFun::operator*(const Rat& c) const {
    if (c == 0)
        return RatFun(Poly(num_.nvars()));
    RatFun r = *this;
    r.num_ = r.num_ * c;
    return r;
}

bool RatFun::operator==(const RatFun& o) const {
    // reduced representations are unique up to nothing: compare directly,
    // falling back to cross multiplication when denominators differ
    if (num_ == o.num_ && den_ == o.den_)
        return true;
    return (*this - o).is_zero();
}

bool RatFun::operator<(const RatFun& o) const {
    if (!(num_ == o.num_))
        return num_ < o.num_;
    return den_ < o.den_;
}

RatFun RatFun::div_by_factor(const Poly& factor, int e) const {
    assert(e >= 0);
    if (e == 0 || num_.is_zero())
        return *this;
    Poly f = monic(factor);
    RatFun r = *this;
    auto it = std::find_if(r.den_.begin(), r.den_.end(),
                           [&](auto& fe) { return fe.first == f; });
    if (it == r.den_.end()) {
        r.den_.emplace_back(f, e);
        std::sort(r.den_.begin(), r.den_.end());
    } else {
        it->second += e;
    }
    auto [le, lc] = factor.leading_term_grlex();
    Rat scale(1);
    for (int i = 0; i < e; ++i)
        scale /= lc;
    r.num_ = r.num_ * scale;
    r.reduce();
    return r;
}

std::optional<RatFun> RatFun::try_div(const RatFun& o) const {
    if (o.is_zero())
        return std::nullopt;
    // (a / A) / (b / B) = a * B / (A * b)
    Poly p = num_;
    for (auto& [f, e] : o.den_)
        for (int i = 0; i < e; ++i)
            p *= f;
    auto q = p.divide_exact(o.num_);
    if (!q)
        return std::nullopt;
    RatFun r;
    r.num_ = *q;
    r.den_ = den_;
    r.reduce();
    return r;
}

RatFun RatFun::derivative(int var) const {
    // (n / prod f^e)' = n' / prod f^e - sum_e e f' n / (f^{e+1} prod rest)
    RatFun r(num_.derivative(var));
    r.den_ = den_;
    r.reduce();
    for (size_t i = 0; i < den_.size(); ++i) {
        auto& [f, e] = den_[i];
        Poly fd = f.derivative(var);
        if (fd.is_zero())
            continue;
        RatFun t(num_ * fd * Rat(-e));
        t.den_ = den_;
        t.den_[i].second += 1;
        t.reduce();
        r += t;
    }
    return r;
}

RatFun RatFun::subst(int var, const Poly& value) const {
    RatFun r(num_.subst(var, value));
    for (auto& [f, e] : den_) {
        Poly g = f.subst(var, value);
        if (g.is_zero())
            throw std::domain_error("RatFun::subst hits a denominator zero");
        if (g.is_constant()) {
            Rat scale(1);
            for (int i = 0; i < e; ++i)
                scale /= g.constant_term();
            r = r * scale;
        } else {
            r = r.div_by_factor(g, e);
        }
    }
    return r;
}

Poly RatFun::den_poly() const {
    Poly d = Poly::constant(num_.nvars(), Rat(1));
    for (auto& [f, e] : den_)
        for (int i = 0; i < e; ++i)
            d *= f;
    return d;
}

std::optional<long> RatFun::weighted_degree(const std::vector<long>& w) const {
    auto nd = num_.weighted_degree(w);
    if (!nd)
        return std::nullopt;
    long d = *nd;
    for (auto& [f, e] : den_) {
        auto fd = f.weighted_degree(w);
        if (!fd)
            return std::nullopt;
        d -= e * *fd;
    }
    return d;
}

std::complex<double> RatFun::eval(const std::vector<std::complex<double>>& x) const {
    std::complex<double> v = num_.eval(x);
    for (auto& [f, e] : den_)
        for (int i = 0; i < e; ++i)
            v /= f.eval(x);
    return v;
}

Rat RatFun::eval_rat(const std::vector<Rat>& x) const {
    Rat v = num_.eval_rat(x);
    for (auto& [f, e] : den_)
        for (int i = 0; i < e; ++i) {
            Rat fv = f.eval_rat(x);
            if (fv == 0)
                throw std::domain_error("RatFun::eval_rat at a pole");
            v /= fv;
        }
    return v;
}

std::string RatFun::str(const std::vector<std::string>& names) const {
    std::string s = num_.str(names);
    if (den_.empty())
        return s;
    std::string d;
    for (auto& [f, e] : den_) {
        if (!d.empty())
            d += "*";
        d += "(" + f.str(names) + ")";
        if (e > 1)
            d += "^" + std::to_string(e);
    }
    return "(" + s + ")/(" + d + ")";
}

bool CoeffField::factor_allowed(const Poly& f) const {
    Poly m = monic(f);
    return std::any_of(factors.begin(), factors.end(),
                       [&](const Poly& g) { return g == m; });
}

RatFun CoeffField::div_factor(const RatFun& x, const Poly& factor, int e) const {
    if (!factor_allowed(factor))
        throw std::domain_error("denominator outside the declared multiplicative set");
    return x.div_by_factor(factor, e);
}

} // namespace wakimoto
