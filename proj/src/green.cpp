#include "mk1/green.hpp"

#include <algorithm>

namespace mk1 {

  namespace {
    void check_same(Hom const& a, Hom const& b) {
      if (!(a.alphabet() == b.alphabet())) {
        throw AlphabetMismatch("alphabet mismatch: k="
                               + std::to_string(a.alphabet().k()) + " vs k="
                               + std::to_string(b.alphabet().k()));
      }
    }
  }  // namespace

  bool r_leq(Hom const& psi, Hom const& phi) {
    check_same(psi, phi);
    return ends_subset(image_code(psi), image_code(phi));
  }

  bool l_leq(Hom const& psi, Hom const& phi) {
    check_same(psi, phi);
    if (!ends_subset(psi.domain_code(), phi.domain_code())) {
      return false;
    }
    // Fibers of a pc-preserving table are exactly its classes of ends, up to
    // a common suffix; psi must be constant on each of them.
    std::size_t const L = psi.max_in_length();
    for (auto const& [y, xs] : fibers(pc_form(phi))) {
      Word const& x0 = xs.front();
      for (std::size_t i = 1; i < xs.size(); ++i) {
        std::size_t const shortest = std::min(x0.size(), xs[i].size());
        std::size_t const m        = L > shortest ? L - shortest : 0;
        for (auto const& t : words_of_length(psi.alphabet(), m)) {
          if (evaluate(psi, x0 + t) != evaluate(psi, xs[i] + t)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool l_leq_idempotent(Hom const& psi, Hom const& phi) {
    check_same(psi, phi);
    if (psi.is_zero()) {
      return true;
    }
    if (phi.is_zero()) {
      return false;
    }
    MonoidElem const eta_psi = compose(inverse(psi), psi);
    MonoidElem const eta_phi = compose(inverse(phi), phi);
    return compose(eta_psi, eta_phi) == eta_psi;
  }

  bool r_equiv(Hom const& psi, Hom const& phi) {
    return r_leq(psi, phi) && r_leq(phi, psi);
  }

  bool l_equiv(Hom const& psi, Hom const& phi) {
    return l_leq(psi, phi) && l_leq(phi, psi);
  }

  bool idempotent_leq(Hom const& e, Hom const& f) {
    check_same(e, f);
    if (!is_idempotent(e) || !is_idempotent(f)) {
      throw DomainError("idempotent_leq: both arguments must be idempotents");
    }
    return eq_in_M(e, compose(e, f)) && eq_in_M(e, compose(f, e));
  }

  Hom r_multiplier(Hom const& psi, Hom const& phi) {
    if (!r_leq(psi, phi)) {
      throw OrderViolation("r_multiplier: psi is not <=_R phi");
    }
    if (psi.is_zero()) {
      return Hom::zero(psi.alphabet());
    }
    return compose(inverse(phi), psi).table();
  }

  Hom l_multiplier(Hom const& psi, Hom const& phi) {
    if (!l_leq(psi, phi)) {
      throw OrderViolation("l_multiplier: psi is not <=_L phi");
    }
    if (psi.is_zero()) {
      return Hom::zero(psi.alphabet());
    }
    return compose(psi, inverse(phi)).table();
  }

  std::pair<Hom, Hom> align_image_codes(Hom const& psi, Hom const& phi) {
    if (!r_leq(psi, phi)) {
      throw OrderViolation("align_image_codes: psi is not <=_R phi");
    }
    Hom const  Psi = pc_form(psi);
    Hom const  Phi = pc_form(phi);
    PrefixCode q0  = ideal_intersection(image_code(Phi), image_code(Psi));

    std::vector<Entry> t0;
    for (auto const& [x, y] : Psi.entries()) {
      if (q0.contains(y)) {
        t0.push_back({x, y});
        continue;
      }
      for (auto const& z : q0.below(y)) {
        t0.push_back({x + z.suffix_from(y.size()), z});
      }
    }

    std::vector<Entry> t1;
    for (auto const& [x, y] : Phi.entries()) {
      auto below = q0.below(y);
      if (below.empty() || below.front() == y) {
        t1.push_back({x, y});
        continue;
      }
      PrefixCode const here(psi.alphabet(), below);
      auto rest = complement_code(here, PrefixCode(psi.alphabet(), {y}));
      below.insert(below.end(), rest.begin(), rest.end());
      for (auto const& z : below) {
        t1.push_back({x + z.suffix_from(y.size()), z});
      }
    }
    return {Hom(psi.alphabet(), std::move(t0)),
            Hom(phi.alphabet(), std::move(t1))};
  }

  bool is_surjective_elem(Hom const& phi) {
    return is_maximal(image_code(phi));
  }

  bool is_monomorphism(Hom const& phi) {
    bool mono = is_maximal(phi.domain_code());
    if (mono) {
      for (auto const& [y, xs] : fibers(pc_form(phi))) {
        if (xs.size() != 1) {
          mono = false;
          break;
        }
      }
    }
    if (mono != l_equiv(phi, Hom::identity(phi.alphabet()))) {
      throw InternalError("is_monomorphism: fiber test and L-class test "
                          "disagree on "
                          + phi.str());
    }
    return mono;
  }

}  // namespace mk1
