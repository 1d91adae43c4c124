// Boost a spin-up electron at rest along +3 and watch the small components
// and the current appear; then apply the discrete symmetries to the result.
//
// boost(3, a) puts sinh(a) on e^3, i.e. on the covariant momentum p_3 = -p^3,
// so motion along +3 needs a negative rapidity argument.

#include <cmath>
#include <iostream>

#include "realdirac/bilinears.hpp"
#include "realdirac/dirac.hpp"
#include "realdirac/lorentz.hpp"
#include "realdirac/symmetries.hpp"

int main() {
  using namespace realdirac;
  const double m = 1.0;
  const Spinor rest = free_solution(OnShellState::make(m, {0, 0, 0}));

  for (double rapidity : {0.0, 0.5, 1.0, 2.0}) {
    const LorentzOp S = boost(3, -rapidity);
    const Spinor psi = act(S.S, rest);
    const Multivector p = frame_transform(S, m * e(0));
    const auto j = current(psi);
    std::cout << "rapidity " << rapidity << "\n"
              << "  p          " << p << "\n"
              << "  psi        " << psi << "\n"
              << "  (p - m)psi " << act(p - Multivector(m), psi).max_abs() << "\n"
              << "  v = j3/j0  " << j[3] / j[0] << "  (tanh = " << std::tanh(rapidity) << ")\n"
              << "  psi-bar psi " << bilinear(psi, psi, BilinearKind::scalar()).value.real() << "\n";
  }

  const Spinor psi = act(boost(3, -1.0).S, rest);
  std::cout << "\nP psi   " << apply_P(psi) << "\nT3 psi  " << apply_T(psi, 3) << "\nC3 psi  " << apply_C(psi, 3)
            << "\nCPT psi " << apply_CPT(psi) << "\n";
}
