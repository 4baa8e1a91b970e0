#ifndef MK1_DENSITY_HPP_
#define MK1_DENSITY_HPP_

#include "mk1/hom.hpp"

namespace mk1 {

  // Each constructor takes (phi, psi) with psi strictly below phi and returns
  // chi strictly between them.  Preconditions are checked with the deciders
  // of green.hpp; violations raise OrderViolation.

  //! psi <_R chi <_R phi; chi is a partial identity.
  Hom r_between(Hom const& phi, Hom const& psi);

  //! psi <_L chi <_L phi.
  Hom l_between(Hom const& phi, Hom const& psi);

  //! psi <_L chi <_L phi with chi R-equivalent to phi (and psi).
  Hom l_between_in_Rclass(Hom const& phi, Hom const& psi);

  //! psi <_R chi <_R phi with chi L-equivalent to phi (and psi).
  Hom r_between_in_Lclass(Hom const& phi, Hom const& psi);

}  // namespace mk1

#endif  // MK1_DENSITY_HPP_
