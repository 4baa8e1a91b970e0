#ifndef MK1_GREEN_HPP_
#define MK1_GREEN_HPP_

#include <utility>

#include "mk1/congruence.hpp"
#include "mk1/core.hpp"
#include "mk1/hom.hpp"

namespace mk1 {

  //! psi <=_R phi, i.e. psi = phi alpha for some alpha.
  bool r_leq(Hom const& psi, Hom const& phi);

  //! psi <=_L phi, i.e. psi = alpha phi for some alpha.  Decided on leveled
  //! fibers of phi: ends(Dom psi) within ends(Dom phi), and psi agrees on
  //! every pair of extensions x0 t, x t with x0, x in one fiber of phi.
  bool l_leq(Hom const& psi, Hom const& phi);

  //! The same relation decided through idempotents: eta_psi = eta_psi eta_phi
  //! with eta_chi = inverse(chi) chi.
  bool l_leq_idempotent(Hom const& psi, Hom const& phi);

  bool r_equiv(Hom const& psi, Hom const& phi);
  bool l_equiv(Hom const& psi, Hom const& phi);

  //! e <= f in the idempotent order (e = ef = fe).
  bool idempotent_leq(Hom const& e, Hom const& f);

  //! alpha with psi = phi alpha.
  Hom r_multiplier(Hom const& psi, Hom const& phi);
  //! alpha with psi = alpha phi.
  Hom l_multiplier(Hom const& psi, Hom const& phi);

  //! Essentially equal restrictions (psi0, phi0) with imC(psi0) a subset of
  //! imC(phi0).
  std::pair<Hom, Hom> align_image_codes(Hom const& psi, Hom const& phi);

  bool is_surjective_elem(Hom const& phi);
  bool is_monomorphism(Hom const& phi);

}  // namespace mk1

#endif  // MK1_GREEN_HPP_
