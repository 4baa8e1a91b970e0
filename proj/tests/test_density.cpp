#include <doctest.h>

#include "mk1/density.hpp"
#include "mk1/green.hpp"
#include "support.hpp"

using namespace mk1;
using namespace mk1::testing;

namespace {
  bool r_strict(Hom const& psi, Hom const& phi) {
    return r_leq(psi, phi) && !r_leq(phi, psi);
  }

  bool l_strict(Hom const& psi, Hom const& phi) {
    return l_leq(psi, phi) && !l_leq(phi, psi);
  }

  Hom id_on(std::string_view code) {
    return Hom::partial_identity(P(code));
  }
}  // namespace

TEST_SUITE("density") {
  TEST_CASE("r_between") {
    CHECK(r_between(id_on("{-}"), id_on("{b}")) == id_on("{aa,b}"));
    Hom const chi = r_between(id_on("{a}"), id_on("{aa}"));
    CHECK(chi == id_on("{aa,aba}"));
    CHECK(r_strict(id_on("{aa}"), chi));
    CHECK(r_strict(chi, id_on("{a}")));
    CHECK_THROWS_AS(r_between(id_on("{a}"), id_on("{a}")), OrderViolation);
    CHECK_THROWS_AS(r_between(id_on("{a}"), id_on("{b}")), OrderViolation);
  }

  TEST_CASE("l_between") {
    Hom const phi = H("- -> -");
    Hom const psi = H("a->a, b->a");
    Hom const chi = l_between(phi, psi);
    CHECK(l_strict(psi, chi));
    CHECK(l_strict(chi, phi));

    Hom const chi1 = l_between(H("a->a, b->b"), H(""));
    CHECK(l_strict(H(""), chi1));
    CHECK(l_strict(chi1, H("a->a, b->b")));
    CHECK_THROWS_AS(l_between(phi, phi), OrderViolation);
  }

  TEST_CASE("l_between_in_Rclass") {
    Hom const top = H("- -> -");
    Hom const c2  = l_between_in_Rclass(top, H("a->-, b->-"));
    CHECK(r_equiv(c2, top));
    CHECK(l_strict(H("a->-, b->-"), c2));
    CHECK(l_strict(c2, top));
    CHECK_THROWS_AS(l_between_in_Rclass(top, top), OrderViolation);
    // [a->a] has image aA*, so it is not R-equivalent to the identity.
    CHECK_THROWS_AS(l_between_in_Rclass(top, H("a->a")), OrderViolation);
  }

  TEST_CASE("r_between_in_Lclass") {
    Hom const phi = H("a->a, b->b");
    Hom const psi = H("a->aa, b->ab");
    Hom const chi = r_between_in_Lclass(phi, psi);
    CHECK(l_equiv(chi, psi));
    CHECK(r_strict(psi, chi));
    CHECK(r_strict(chi, phi));
    CHECK_THROWS_AS(r_between_in_Lclass(phi, phi), OrderViolation);
    CHECK_THROWS_AS(r_between_in_Lclass(phi, H("a->a")), OrderViolation);
  }

  TEST_CASE("all strict pairs of the depth-1 family") {
    auto const family = depth_family(1);
    int        counts[4] = {0, 0, 0, 0};
    for (auto const& phi : family) {
      for (auto const& psi : family) {
        bool const rs = r_strict(psi, phi);
        bool const ls = l_strict(psi, phi);
        if (rs) {
          Hom const chi = r_between(phi, psi);
          CHECK(r_strict(psi, chi));
          CHECK(r_strict(chi, phi));
          ++counts[0];
          if (l_equiv(phi, psi)) {
            Hom const c = r_between_in_Lclass(phi, psi);
            CHECK(l_equiv(c, psi));
            CHECK(r_strict(psi, c));
            CHECK(r_strict(c, phi));
            ++counts[3];
          }
        } else {
          CHECK_THROWS_AS(r_between(phi, psi), OrderViolation);
        }
        if (ls) {
          Hom const chi = l_between(phi, psi);
          CHECK(l_strict(psi, chi));
          CHECK(l_strict(chi, phi));
          ++counts[1];
          if (r_equiv(phi, psi)) {
            Hom const c = l_between_in_Rclass(phi, psi);
            CHECK(r_equiv(c, phi));
            CHECK(l_strict(psi, c));
            CHECK(l_strict(c, phi));
            ++counts[2];
          }
        } else {
          CHECK_THROWS_AS(l_between(phi, psi), OrderViolation);
        }
      }
    }
    for (int c : counts) {
      CHECK(c > 0);
    }
  }
}
