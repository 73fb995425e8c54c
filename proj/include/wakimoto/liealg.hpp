#pragma once

#include "wakimoto/linalg.hpp"
#include "wakimoto/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wakimoto {

// Positive root in simple-root coordinates. height == sum of coordinates.
struct Root {
    std::vector<int> coords;
    int height = 0;

    bool operator==(const Root& o) const { return coords == o.coords; }
};

// Dense element of g in the Chevalley-style basis
//   [h_1 .. h_r | f_beta (by height, lex) | e_beta (by height, lex)].
using Elt = std::vector<Rat>;

// A finite-dimensional representation: one matrix per basis element.
struct Rep {
    int dim = 0;
    std::vector<RatMatrix> mats;
};

// Simple Lie algebra data for the supported small-rank types. Immutable
// after construction; safe to share across threads.
class LieAlgebra {
  public:
    static LieAlgebra build(const std::string& cartan_type);

    const std::string& type() const { return type_; }
    int rank() const { return rank_; }
    int npos() const { return (int)positive_roots_.size(); }
    int dim() const { return rank_ + 2 * npos(); }
    int dual_coxeter() const { return dual_coxeter_; }

    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    // index of alpha_i within positive_roots (0-based i)
    int simple_root_index(int i) const { return simple_index_[i]; }
    int root_index(const std::vector<int>& coords) const; // -1 if absent

    // basis index helpers
    int h_index(int i) const { return i; }
    int f_index(int root) const { return rank_ + root; }
    int e_index(int root) const { return rank_ + npos() + root; }
    bool is_h(int idx) const { return idx < rank_; }
    bool is_f(int idx) const { return idx >= rank_ && idx < rank_ + npos(); }
    bool is_e(int idx) const { return idx >= rank_ + npos(); }
    // root index of an e/f basis element
    int root_of(int idx) const;
    std::string basis_name(int idx) const;

    Elt zero_elt() const { return Elt(dim(), Rat(0)); }
    Elt basis_elt(int idx) const;
    Elt bracket(const Elt& x, const Elt& y) const;
    // bracket of two basis elements (precomputed table)
    const Elt& bracket_basis(int i, int j) const { return table_[i][j]; }

    // invariant form (x,y) = tr(ad_x ad_y) / (2 h_vee) on basis elements
    const Rat& form(int i, int j) const { return form_[i][j]; }
    Rat form(const Elt& x, const Elt& y) const;
    // Gram matrix of the coroots h_i
    Rat cartan_form(int i, int j) const { return form_[i][j]; }

    // alpha(h_i) for a positive root alpha
    const Rat& pairing(int root, int i) const { return pairing_[root][i]; }
    // w(h) for a rational weight in simple-root coordinates and h in the
    // h_i basis
    Rat weight_eval(const std::vector<Rat>& w, const std::vector<Rat>& h) const;
    // (alpha, alpha)
    const Rat& root_norm2(int root) const { return root_norm2_[root]; }
    // coordinates of h_alpha in the h_i basis
    const std::vector<Rat>& coroot_coords(int root) const {
        return coroot_coords_[root];
    }
    // rho = half sum of positive roots, in simple-root coordinates
    const std::vector<Rat>& rho() const { return rho_; }
    Rat rho_of_h(int i) const; // rho(h_i)

    // h-weight of a basis element, in simple-root coordinates (integers)
    std::vector<int> weight_of_basis(int idx) const;

    // chi given by its values (chi(h_1), ..., chi(h_r)); true iff
    // chi(h_alpha) != 0 for every positive root
    bool regular(const std::vector<Rat>& chi_of_h) const;

    // representations
    const Rep& defining_rep() const { return defining_; }
    Rep adjoint_rep() const;

    std::string to_json() const;

  private:
    std::string type_;
    int rank_ = 0;
    int dual_coxeter_ = 0;
    std::vector<Root> positive_roots_;
    std::vector<int> simple_index_;
    std::map<std::vector<int>, int> root_lookup_;
    std::vector<std::vector<Elt>> table_;
    std::vector<std::vector<Rat>> form_;
    std::vector<std::vector<Rat>> pairing_;
    std::vector<Rat> root_norm2_;
    std::vector<std::vector<Rat>> coroot_coords_;
    std::vector<Rat> rho_;
    Rep defining_;
};

} // namespace wakimoto
