#ifndef MK1_HOM_HPP_
#define MK1_HOM_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mk1/core.hpp"

namespace mk1 {

  struct Entry {
    Word in;
    Word out;

    bool operator==(Entry const&) const = default;
    auto operator<=>(Entry const&) const = default;
  };

  //! A right-ideal homomorphism given by its table x_i -> y_i.
  //!
  //! The domain words form a prefix code; the table is kept sorted by domain
  //! word, so structural equality is canonical.
  class Hom {
   public:
    explicit Hom(Alphabet alphabet) : _alphabet(alphabet) {}
    Hom(Alphabet alphabet, std::vector<Entry> entries);

    static Hom identity(Alphabet alphabet);
    static Hom zero(Alphabet alphabet) {
      return Hom(alphabet);
    }
    //! id_{PA*}.
    static Hom partial_identity(PrefixCode const& p);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Entry> const& entries() const noexcept {
      return _entries;
    }
    std::size_t size() const noexcept {
      return _entries.size();
    }
    bool is_zero() const noexcept {
      return _entries.empty();
    }

    PrefixCode domain_code() const;

    //! Index of the entry whose domain word is a prefix of w.
    std::optional<std::size_t> find(Word const& w) const;

    //! Some domain word strictly extends w.
    bool has_extension(Word const& w) const;

    std::size_t max_in_length() const noexcept;
    std::size_t max_out_length() const noexcept;

    std::string str() const;

    bool operator==(Hom const&) const = default;

   private:
    Alphabet           _alphabet;
    std::vector<Entry> _entries;
  };

  //! A Hom in normal form (maximal essentially-equal extension).
  class MonoidElem {
   public:
    Hom const& table() const noexcept {
      return _hom;
    }
    operator Hom const&() const noexcept {  // NOLINT(runtime/explicit)
      return _hom;
    }
    bool operator==(MonoidElem const&) const = default;

   private:
    friend MonoidElem max_extend(Hom const&);
    explicit MonoidElem(Hom h) : _hom(std::move(h)) {}
    Hom _hom;
  };

  std::optional<Word> evaluate(Hom const& phi, Word const& w);

  MonoidElem max_extend(Hom const& phi);

  //! Applies extension rules one at a time, choosing among all applicable
  //! sites with `pick(n)` in [0, n).  Used to test confluence.
  Hom max_extend_in_order(Hom const& phi,
                          std::function<std::size_t(std::size_t)> const& pick);

  Hom restrict_step(Hom const& phi, Word const& x);

  //! The composite phi o psi (psi first) before normalization.
  Hom compose_unextended(Hom const& phi, Hom const& psi);
  MonoidElem compose(Hom const& phi, Hom const& psi);

  bool eq_in_M(Hom const& phi, Hom const& psi);

  PrefixCode image_code(Hom const& phi);
  bool       is_pc_preserving(Hom const& phi);
  Hom        restrict_to_pc_preserving(Hom const& phi);
  //! phi itself if already pc-preserving, else the leveled restriction.
  Hom        pc_form(Hom const& phi);
  Hom        max_extend_classwise(Hom const& phi);

  bool is_idempotent(Hom const& phi);
  //! Checks phi(y t) = y t for y in image_code(phi), |y t| >= l(domC).
  bool is_idempotent_fast(Hom const& phi);

  Hom inverse(Hom const& phi);

  //! Fibers of a pc-preserving table, keyed by image, in image order.
  std::vector<std::pair<Word, std::vector<Word>>> fibers(Hom const& phi);

}  // namespace mk1

#endif  // MK1_HOM_HPP_
