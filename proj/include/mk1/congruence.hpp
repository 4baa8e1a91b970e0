#ifndef MK1_CONGRUENCE_HPP_
#define MK1_CONGRUENCE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mk1/core.hpp"
#include "mk1/hom.hpp"

namespace mk1 {

  //! A prefix code congruence: a finite prefix code partitioned into blocks.
  //! The class of p w (p in block B) is B w.
  //!
  //! Blocks are sorted internally and ordered by their least word.
  class Congruence {
   public:
    explicit Congruence(Alphabet alphabet) : _alphabet(alphabet) {}
    Congruence(Alphabet alphabet, std::vector<std::vector<Word>> blocks);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<std::vector<Word>> const& blocks() const noexcept {
      return _blocks;
    }
    bool empty() const noexcept {
      return _blocks.empty();
    }

    PrefixCode domain_code() const;

    //! (block index, remaining suffix) for the domain word prefixing w.
    std::optional<std::pair<std::size_t, Word>> locate(Word const& w) const;

    std::size_t max_length() const noexcept;

    std::string str() const;

    bool operator==(Congruence const&) const = default;

   private:
    Alphabet                                _alphabet;
    std::vector<std::vector<Word>>          _blocks;
    std::vector<std::pair<Word, std::size_t>> _index;  // sorted by word
  };

  std::optional<bool> trace(Congruence const& c, Word const& u, Word const& v);

  Congruence cong_restrict_step(Congruence const&        c,
                                std::vector<Word> const& block);
  Congruence cong_extend_step(Congruence const& c, std::vector<Word> const& b);
  Congruence cong_max(Congruence const& c);
  bool       cong_ess_equal(Congruence const& c1, Congruence const& c2);

  //! c2 <=_end c1: every c2-class of ends is a union of c1-classes of ends
  //! and ends(Dom c2) lies in ends(Dom c1).
  bool refines_end(Congruence const& c2, Congruence const& c1);

  //! Second decision path: works on the max normal forms and checks, from
  //! the side of c2, that the c1-class of each point of Dom(c2) stays inside
  //! its c2-class.
  bool refines_end_via_max(Congruence const& c2, Congruence const& c1);

  Congruence cong_meet(Congruence const& c1, Congruence const& c2);
  Congruence cong_join(Congruence const& c1, Congruence const& c2);

  //! The fiber congruence of phi (of its pc-preserving form).
  Congruence part(Hom const& phi);

  //! x -> least (j = 0) or greatest (j = 1) word of x's block.
  Hom func(Congruence const& c, int j);

}  // namespace mk1

#endif  // MK1_CONGRUENCE_HPP_
