#include "wakimoto/affine.hpp"
#include "wakimoto/bigcell.hpp"
#include "wakimoto/fock.hpp"
#include <cassert>
#include <iostream>

using namespace wakimoto;

int main() {
    auto g = LieAlgebra::build("A1");
    assert(g.rank() == 1 && g.npos() == 1 && g.dual_coxeter() == 2);
    // (h,h) = 2, (e,f) = 1
    assert(g.form(g.h_index(0), g.h_index(0)) == 2);
    assert(g.form(g.e_index(0), g.f_index(0)) == 1);
    std::cout << "A1 ok\n" << g.to_json().substr(0, 80) << "...\n";

    auto real = compute_realization(g);
    // e -> d/dy, h -> -2y d/dy, f -> -y^2 d/dy
    std::cout << "e image: " << real.images[g.e_index(0)].comp[0].str({"y"}) << "\n";
    std::cout << "h image: " << real.images[g.h_index(0)].comp[0].str({"y"}) << "\n";
    std::cout << "f image: " << real.images[g.f_index(0)].comp[0].str({"y"}) << "\n";

    CoeffField F = make_level_field(g);
    PbwModule M(g, F, PbwKind::VacuumLocal, 1, F.var(0));
    auto v = M.apply_word({{g.e_index(0), 1}, {g.f_index(0), -1}}, M.vac());
    std::cout << "e_1 f_-1 vac: " << M.str(v) << "\n";
    auto w = M.apply_word({{g.f_index(0), -1}, {g.e_index(0), 1}}, M.vac());
    std::cout << "f_-1 e_1 vac: " << M.str(w) << "\n";
    // commutator should be h_0 - k acting on vac
    auto comm = PbwModule::Engine::sub(v, w);
    std::cout << "[e_1,f_-1] vac: " << M.str(comm) << "\n";
    return 0;
}
