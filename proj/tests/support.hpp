#ifndef MK1_TESTS_SUPPORT_HPP_
#define MK1_TESTS_SUPPORT_HPP_

#include <memory>
#include <random>
#include <string_view>
#include <vector>

#include "mk1/congruence.hpp"
#include "mk1/genwords.hpp"
#include "mk1/hom.hpp"
#include "oracles.hpp"

namespace mk1::testing {

  Word       W(std::string_view text, int k = 2);
  PrefixCode P(std::string_view braces, int k = 2);
  //! Table from "a->aa, b->a"; "" is the zero table and "-" is epsilon.
  Hom        H(std::string_view text, int k = 2);
  //! Congruence from "a ba | bb"; "" is the empty congruence.
  Congruence C(std::string_view text, int k = 2);

  //! Letter text ("ab", "-") to the raw form used by the oracles.
  oracle::Str   raw(std::string_view letters);
  oracle::Code  raw_code(std::vector<std::string_view> const& letters);

  oracle::Code  to_oracle(PrefixCode const& p);
  oracle::Table to_oracle(Hom const& h);
  PrefixCode    from_oracle(int k, oracle::Code const& c);

  //! Semantic equality on A^L, L one past the deepest word of either table.
  bool same_element(Hom const& a, Hom const& b);

  //! Random prefix code grown from the root, depth <= max_depth.
  PrefixCode random_code(std::mt19937_64& rng, Alphabet const& A, std::size_t max_depth);
  //! Random table: domain from random_code, images of length <= max_image.
  Hom        random_hom(std::mt19937_64& rng, Alphabet const& A, std::size_t max_depth,
                        std::size_t max_image);

  //! Every table with domain code in A^{<=depth} and images in A^{<=depth}
  //! (k = 2), reduced to distinct elements of M_{2,1}.
  std::vector<Hom> depth_family(std::size_t depth);

  //! Generators used for random generator words.
  std::shared_ptr<GammaSet const> sample_gamma();
  GenWord random_genword(std::mt19937_64& rng, std::shared_ptr<GammaSet const> const& gamma,
                         std::size_t max_atoms, std::size_t max_tau);

}  // namespace mk1::testing

#endif  // MK1_TESTS_SUPPORT_HPP_
