#ifndef MK1_CORE_HPP_
#define MK1_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mk1/errors.hpp"

namespace mk1 {

  using Letter = std::uint8_t;

  //! A finite alphabet {a_0, ..., a_{k-1}} with 2 <= k <= 26.
  class Alphabet {
   public:
    explicit Alphabet(int k);

    int k() const noexcept {
      return _k;
    }

    bool contains(Letter x) const noexcept {
      return x < _k;
    }

    static char symbol(Letter x) noexcept {
      return static_cast<char>('a' + x);
    }

    bool operator==(Alphabet const&) const = default;

   private:
    int _k;
  };

  //! A word over an alphabet, stored as letter indices.
  //!
  //! Words do not carry their alphabet; containers (PrefixCode, Hom,
  //! Congruence) do, and check letters on construction.  The built-in order is
  //! the dictionary order: lexicographic, with a proper prefix smaller.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters)
        : _letters(letters.begin(), letters.end()) {}

    static Word from_raw(std::string raw) {
      Word w;
      w._letters = std::move(raw);
      return w;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return static_cast<Letter>(_letters[i]);
    }
    Letter back() const noexcept {
      return static_cast<Letter>(_letters.back());
    }

    void push_back(Letter x) {
      _letters.push_back(static_cast<char>(x));
    }
    void pop_back() {
      _letters.pop_back();
    }

    Word prefix(std::size_t n) const {
      return from_raw(_letters.substr(0, n));
    }
    Word suffix_from(std::size_t n) const {
      return from_raw(_letters.substr(n));
    }
    Word parent() const {
      return prefix(_letters.size() - 1);
    }

    bool is_prefix_of(Word const& other) const noexcept {
      return other._letters.size() >= _letters.size()
             && other._letters.compare(0, _letters.size(), _letters) == 0;
    }
    bool is_strict_prefix_of(Word const& other) const noexcept {
      return _letters.size() < other._letters.size() && is_prefix_of(other);
    }
    bool comparable(Word const& other) const noexcept {
      return is_prefix_of(other) || other.is_prefix_of(*this);
    }

    Word& operator+=(Word const& other) {
      _letters += other._letters;
      return *this;
    }
    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }
    friend Word operator+(Word lhs, Letter x) {
      lhs.push_back(x);
      return lhs;
    }

    std::string const& raw() const noexcept {
      return _letters;
    }

    //! Letters rendered as 'a', 'b', ...; the empty word as "-".
    std::string str() const;

    bool operator==(Word const&) const = default;
    std::strong_ordering operator<=>(Word const& other) const {
      return _letters.compare(other._letters) <=> 0;
    }

   private:
    std::string _letters;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      return std::hash<std::string>{}(w.raw());
    }
  };

  //! Parses "ab", "-" (empty word); letters must lie in the alphabet.
  Word parse_word(std::string_view text, Alphabet const& alphabet);

  //! Throws AlphabetMismatch if some letter of w is outside the alphabet.
  void check_letters(Word const& w, Alphabet const& alphabet);

  //! Dictionary order; checks both words against the alphabet.
  bool dict_leq(Alphabet const& alphabet, Word const& u, Word const& v);

  //! All words of length n in dictionary order.
  std::vector<Word> words_of_length(Alphabet const& alphabet, std::size_t n);

  //! A finite prefix code, kept in dictionary order.
  class PrefixCode {
   public:
    explicit PrefixCode(Alphabet alphabet) : _alphabet(alphabet) {}

    //! Validates letters and the antichain property.
    PrefixCode(Alphabet alphabet, std::vector<Word> words);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Word> const& words() const noexcept {
      return _words;
    }
    std::size_t size() const noexcept {
      return _words.size();
    }
    bool empty() const noexcept {
      return _words.empty();
    }
    auto begin() const noexcept {
      return _words.begin();
    }
    auto end() const noexcept {
      return _words.end();
    }

    bool contains(Word const& w) const;

    //! The member that is a prefix of w, if any.
    std::optional<Word> prefix_of(Word const& w) const;

    //! True iff w lies in the right ideal generated by the code.
    bool generates(Word const& w) const {
      return prefix_of(w).has_value();
    }

    //! Members having w as a (not necessarily strict) prefix.
    std::vector<Word> below(Word const& w) const;

    //! Length of a longest member; 0 for the empty code.
    std::size_t max_length() const noexcept;

    std::string str() const;

    bool operator==(PrefixCode const&) const = default;

   private:
    Alphabet          _alphabet;
    std::vector<Word> _words;
  };

  //! Words of S with no strict prefix in S.
  PrefixCode prune(Alphabet const& alphabet, std::vector<Word> words);

  bool is_maximal_saturation(PrefixCode const& p);
  bool is_maximal_kraft(PrefixCode const& p);
  //! Maximality of a prefix code; the two methods above must agree.
  bool is_maximal(PrefixCode const& p);

  PrefixCode ideal_intersection(PrefixCode const& p, PrefixCode const& q);
  PrefixCode ideal_union(PrefixCode const& p, PrefixCode const& q);

  //! C with CA* disjoint from PA* and CA* u PA* end-equal to QA*.
  PrefixCode complement_code(PrefixCode const& p, PrefixCode const& q);

  //! ends(QA*) is contained in ends(PA*).
  bool ends_subset(PrefixCode const& q, PrefixCode const& p);
  bool ends_equal(PrefixCode const& p, PrefixCode const& q);

  PrefixCode code_restrict_step(PrefixCode const& p, Word const& c);
  PrefixCode code_extend_step(PrefixCode const& p, Word const& c);

  //! Applies code_extend_step until none applies.
  PrefixCode code_max_extend(PrefixCode const& p);

  //! The words t with |t| = n such that some sibling path from the root to
  //! `path` branches off: {path[0..j) b : b != path[j]}, plus `path` itself.
  //! This is the maximal prefix code obtained by restricting along `path`.
  std::vector<Word> path_code(Alphabet const& alphabet, Word const& path);

}  // namespace mk1

#endif  // MK1_CORE_HPP_
