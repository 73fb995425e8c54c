#pragma once

#include "wakimoto/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wakimoto {

// Rational function with a controlled denominator: a polynomial numerator
// over a product of monic factors drawn from a declared multiplicative set.
// Any operation that would need a denominator outside that set throws, which
// is how convention bugs surface early instead of propagating.
class RatFun {
  public:
    RatFun() = default;
    explicit RatFun(Poly num) : num_(std::move(num)) {}

    static RatFun constant(int nvars, const Rat& c) {
        return RatFun(Poly::constant(nvars, c));
    }

    const Poly& num() const { return num_; }
    // (factor, exponent) pairs, factors monic under graded lex, sorted.
    const std::vector<std::pair<Poly, int>>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    int nvars() const { return num_.nvars(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun operator*(const Rat& c) const;
    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }
    bool operator<(const RatFun& o) const;

    // Multiplies by 1/factor^e. The factor is normalized to monic form; the
    // caller is responsible for it being in the declared set (checked by
    // CoeffField::div_factor).
    RatFun div_by_factor(const Poly& factor, int e = 1) const;

    // Exact division by an arbitrary nonzero element; nullopt when the
    // quotient leaves the controlled ring.
    std::optional<RatFun> try_div(const RatFun& o) const;

    // d/d(var), denominators stay in the multiplicative set.
    RatFun derivative(int var) const;

    RatFun subst(int var, const Poly& value) const;

    // Clears denominators: returns num * prod(other factors cleared)... i.e.
    // the pair (p, d) with *this == p/d and d the denominator polynomial.
    Poly den_poly() const;

    std::optional<long> weighted_degree(const std::vector<long>& w) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;
    Rat eval_rat(const std::vector<Rat>& x) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    void reduce();
    Poly num_;
    std::vector<std::pair<Poly, int>> den_;
};

inline RatFun operator*(const Rat& c, const RatFun& f) { return f * c; }

// Variable naming plus the declared denominator set for one coefficient ring.
// The engines for U_k(g^) and the Fock modules share a field with variables
// (k, H_1..H_r) and factors {k - k_c, k + k_c} ∪ {H_alpha}; the connection
// and differential-operator rings declare their own.
struct CoeffField {
    std::vector<std::string> names;
    std::vector<Poly> factors; // monic

    int nvars() const { return (int)names.size(); }
    RatFun zero() const { return RatFun(Poly(nvars())); }
    RatFun one() const { return constant(Rat(1)); }
    RatFun constant(const Rat& c) const { return RatFun::constant(nvars(), c); }
    RatFun var(int i) const { return RatFun(Poly::variable(nvars(), i)); }
    RatFun from_poly(const Poly& p) const { return RatFun(p); }

    bool factor_allowed(const Poly& f) const;
    // *this / factor^e with membership check.
    RatFun div_factor(const RatFun& x, const Poly& factor, int e = 1) const;
};

Poly monic(const Poly& p);

} // namespace wakimoto
