#ifndef MK1_GENWORDS_HPP_
#define MK1_GENWORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mk1/hom.hpp"

namespace mk1 {

  //! Counts elementary steps of a brute-force search and throws
  //! ResourceError once the limit is exceeded.
  class Budget {
   public:
    static constexpr std::uint64_t default_limit = std::uint64_t(1) << 20;

    explicit Budget(std::uint64_t limit = default_limit) : _limit(limit) {}

    void spend(std::uint64_t n = 1) {
      _used += n;
      if (_used > _limit) {
        throw ResourceError("budget of " + std::to_string(_limit)
                            + " evaluations exceeded");
      }
    }
    std::uint64_t used() const noexcept {
      return _used;
    }
    std::uint64_t limit() const noexcept {
      return _limit;
    }

   private:
    std::uint64_t _limit;
    std::uint64_t _used = 0;
  };

  //! Named generator tables over one alphabet.
  class GammaSet {
   public:
    explicit GammaSet(Alphabet alphabet) : _alphabet(alphabet) {}

    void add(std::string const& name, Hom h);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    Hom const& at(std::string const& name) const;
    bool       contains(std::string const& name) const {
      return _tables.count(name) > 0;
    }
    std::map<std::string, Hom> const& tables() const noexcept {
      return _tables;
    }

    //! max(1, max over members of the longest domain or image word).
    std::size_t c() const noexcept;

   private:
    Alphabet                   _alphabet;
    std::map<std::string, Hom> _tables;
  };

  //! A generator name or the transposition of positions i and i+1.
  struct Atom {
    enum class Kind { gen, tau };
    Kind        kind;
    std::string name;   // gen
    std::size_t i = 0;  // tau, i >= 1

    static Atom gen(std::string n) {
      return Atom{Kind::gen, std::move(n), 0};
    }
    static Atom tau(std::size_t i);

    std::size_t length() const noexcept {
      return kind == Kind::gen ? 1 : i + 1;
    }
    std::string str() const;

    bool operator==(Atom const&) const = default;
  };

  //! A word over Gamma u tau, applied right to left.
  class GenWord {
   public:
    GenWord(std::shared_ptr<GammaSet const> gamma, std::vector<Atom> atoms);

    GammaSet const& gamma() const noexcept {
      return *_gamma;
    }
    std::shared_ptr<GammaSet const> const& gamma_ptr() const noexcept {
      return _gamma;
    }
    std::vector<Atom> const& atoms() const noexcept {
      return _atoms;
    }
    Alphabet const& alphabet() const noexcept {
      return _gamma->alphabet();
    }

    std::string str() const;

   private:
    std::shared_ptr<GammaSet const> _gamma;
    std::vector<Atom>               _atoms;
  };

  //! The table of tau_{i,i+1}: u x y -> u y x on A^{i+1}.
  Hom tau_table(Alphabet const& alphabet, std::size_t i);

  std::size_t word_length(GenWord const& w);

  std::optional<Word> apply(GenWord const& w, Word const& z);

  //! Status of a partial input z: defined at z, undefined on every extension
  //! of z, or undecided until more letters are known.
  enum class Status { defined, dead, open };
  Status status(GenWord const& w, Word const& z);

  //! Fold of compose_unextended over the atoms.
  Hom        expand_unextended(GenWord const& w, Budget& budget);
  MonoidElem expand_to_table(GenWord const& w, Budget& budget);
  MonoidElem expand_to_table(GenWord const& w);

  bool dom_member(GenWord const& w, Word const& z);
  bool domc_member(GenWord const& w, Word const& z);

  //! domC of the unextended composite, by a search over the input tree.
  std::vector<Word> domc_words(GenWord const& w, Budget& budget);

  bool image_member_bruteforce(GenWord const& w, Word const& z, Budget& budget);

  bool is_surjective_program(GenWord const& w, Budget& budget);
  bool r_leq_pi2(GenWord const& psi, GenWord const& phi, Budget& budget);
  bool r_upper_bound_check(GenWord const& phi, Hom const& alpha, Budget& budget);

}  // namespace mk1

#endif  // MK1_GENWORDS_HPP_
