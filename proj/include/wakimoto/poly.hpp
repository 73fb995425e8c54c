#pragma once

#include "wakimoto/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wakimoto {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Exponent vectors always have length nvars(); zero coefficients are never
// stored. The term map is ordered lexicographically, leading terms for
// division use graded lex.
class Poly {
  public:
    using Expo = std::vector<int>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int var, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent).
    Rat constant_term() const;

    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const; // arbitrary total order, for keys

    int total_degree() const; // -1 for zero
    int degree_in(int var) const;
    // Weighted degree, nullopt if terms are inhomogeneous for the weights.
    std::optional<long> weighted_degree(const std::vector<long>& w) const;

    Poly derivative(int var) const;
    Poly pow(int e) const;

    // Substitute variable -> polynomial (same nvars as result space).
    Poly subst(int var, const Poly& value) const;

    // Leading term under graded lex; polynomial must be nonzero.
    std::pair<Expo, Rat> leading_term_grlex() const;

    // Exact division; nullopt if o does not divide exactly.
    std::optional<Poly> divide_exact(const Poly& o) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;
    Rat eval_rat(const std::vector<Rat>& x) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    int nvars_;
    std::map<Expo, Rat> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

bool grlex_less(const Poly::Expo& a, const Poly::Expo& b);

} // namespace wakimoto
