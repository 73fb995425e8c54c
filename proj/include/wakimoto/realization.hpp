#pragma once

#include "wakimoto/affine.hpp"
#include "wakimoto/bigcell.hpp"
#include "wakimoto/fock.hpp"

#include "json.hpp"

#include <memory>
#include <string>
#include <vector>

namespace wakimoto {

using Json = nlohmann::json;

// Outcome of one verification pass; witness holds the first counterexample.
struct CheckReport {
    std::string check;
    Json parameters;
    bool pass = true;
    Json witness;

    Json to_json() const {
        Json j;
        j["check"] = check;
        j["parameters"] = parameters;
        j["status"] = pass ? "pass" : "fail";
        if (!witness.is_null())
            j["witness"] = witness;
        return j;
    }
};

// The free-field action on M_N (x) pi^_reg at level k: field expressions for
// the simple generators (and the direct transcriptions for every e_alpha),
// with the dilaton-type constants solved from the bracket relations rather
// than transcribed.
struct Realization {
    const LieAlgebra* g = nullptr;
    CoeffField field;
    int N = 1;
    std::shared_ptr<FockModule> fock;
    std::vector<FieldExpr> e_field_all; // per positive root (transcription)
    std::vector<FieldExpr> h_field;     // per simple i
    std::vector<FieldExpr> f_field;     // per simple i, constants solved
    std::vector<RatFun> dastar_coeff;   // solved full d_z a* coefficient X_i
    std::vector<RatFun> c;              // derived constants c_i
    std::vector<RatFun> b_term_coeff;   // gamma_i (1 unless tables rescaled)

    FockModule::Vec vac() const { return fock->vac(); }
};

// Builds the realization and solves the constants; throws if the linear
// system for some c_i is inconsistent or underdetermined.
Realization build_realization(const LieAlgebra& g, const BigCellRealization& bc,
                              int N, int solve_cutoff = 2);

// Applies the image of x (x) t^n; non-simple root vectors act through
// iterated commutators of simple ones.
class ImageApplier {
  public:
    explicit ImageApplier(const Realization& r) : r_(&r) {}
    FockModule::Vec apply(const Mode& m, const FockModule::Vec& v);

  private:
    FockModule::Vec apply_mono(const Mode& m, const FockModule::Monomial& mono);
    const Realization* r_;
    std::map<std::pair<Mode, FockModule::Monomial>, FockModule::Vec> memo_;
};

// ℘: image of a PBW vector under J vac (x) phi -> image(J) vac' phi.
FockModule::Vec wp_apply(const Realization& r, const PbwModule::Vec& v);

// Bracket-closure sweep over all generator mode pairs |n|,|m| <= D against
// the Fock basis states with I <= D, level symbolic. The parallel flag picks
// the OpenMP kernel; the serial path is the reference implementation.
CheckReport verify_homomorphism(const Realization& r, int D, bool parallel);

// g_+ annihilates vac' within the window (modes above N + D annihilate by
// degree, so the window is complete for the truncation).
CheckReport check_vacuum_annihilation(const Realization& r, int D);

// h_{i,N} vac' = b_{i,N} vac'
CheckReport check_hin_bin(const Realization& r);

// Dimension counts and exact rank of ℘ on every (weight, I <= W) piece,
// W <= D. Also checks that ℘ respects the I filtration.
CheckReport check_wp_isomorphism(const Realization& r, int D);

// Structure of the non-simple images: e_alpha acts exactly as its
// transcription; f_alpha matches the general conformal-dimension-one ansatz
// with the stated support and its b-linear part given by the coroot.
CheckReport check_nonsimple_images(const Realization& r, int D);

// One-stop sweep used by the CLI.
std::vector<CheckReport> realization_suite(const LieAlgebra& g, int N, int D,
                                           bool parallel);

} // namespace wakimoto
