#include "mk1/core.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace mk1 {

  Alphabet::Alphabet(int k) : _k(k) {
    if (k < 2 || k > 26) {
      throw DomainError("alphabet size must satisfy 2 <= k <= 26, got "
                        + std::to_string(k));
    }
  }

  std::string Word::str() const {
    if (_letters.empty()) {
      return "-";
    }
    std::string out;
    out.reserve(_letters.size());
    for (char c : _letters) {
      out.push_back(Alphabet::symbol(static_cast<Letter>(c)));
    }
    return out;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    if (text == "-" || text == "ε") {
      return Word();
    }
    if (text.empty()) {
      throw ParseError("empty token where a word was expected (use '-')");
    }
    Word w;
    for (char c : text) {
      if (c < 'a' || c > 'z') {
        throw ParseError("invalid letter '" + std::string(1, c) + "' in word '"
                         + std::string(text) + "'");
      }
      auto x = static_cast<Letter>(c - 'a');
      if (!alphabet.contains(x)) {
        throw AlphabetMismatch("letter '" + std::string(1, c)
                               + "' outside alphabet k="
                               + std::to_string(alphabet.k()));
      }
      w.push_back(x);
    }
    return w;
  }

  void check_letters(Word const& w, Alphabet const& alphabet) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!alphabet.contains(w[i])) {
        throw AlphabetMismatch("word " + w.str() + " uses a letter outside k="
                               + std::to_string(alphabet.k()));
      }
    }
  }

  bool dict_leq(Alphabet const& alphabet, Word const& u, Word const& v) {
    check_letters(u, alphabet);
    check_letters(v, alphabet);
    return u <= v;
  }

  std::vector<Word> words_of_length(Alphabet const& alphabet, std::size_t n) {
    std::vector<Word> out{Word()};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Word> next;
      next.reserve(out.size() * alphabet.k());
      for (auto const& w : out) {
        for (int a = 0; a < alphabet.k(); ++a) {
          next.push_back(w + static_cast<Letter>(a));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PrefixCode
  ////////////////////////////////////////////////////////////////////////

  PrefixCode::PrefixCode(Alphabet alphabet, std::vector<Word> words)
      : _alphabet(alphabet), _words(std::move(words)) {
    for (auto const& w : _words) {
      check_letters(w, _alphabet);
    }
    std::sort(_words.begin(), _words.end());
    // In dictionary order a word and any of its extensions are separated only
    // by other extensions, so adjacent pairs suffice.
    for (std::size_t i = 1; i < _words.size(); ++i) {
      if (_words[i - 1].is_prefix_of(_words[i])) {
        throw DomainError("not a prefix code: " + _words[i - 1].str()
                          + " is a prefix of " + _words[i].str());
      }
    }
  }

  bool PrefixCode::contains(Word const& w) const {
    return std::binary_search(_words.begin(), _words.end(), w);
  }

  std::optional<Word> PrefixCode::prefix_of(Word const& w) const {
    auto it = std::upper_bound(_words.begin(), _words.end(), w);
    if (it != _words.begin() && std::prev(it)->is_prefix_of(w)) {
      return *std::prev(it);
    }
    return std::nullopt;
  }

  std::vector<Word> PrefixCode::below(Word const& w) const {
    std::vector<Word> out;
    for (auto it = std::lower_bound(_words.begin(), _words.end(), w);
         it != _words.end() && w.is_prefix_of(*it);
         ++it) {
      out.push_back(*it);
    }
    return out;
  }

  std::size_t PrefixCode::max_length() const noexcept {
    std::size_t n = 0;
    for (auto const& w : _words) {
      n = std::max(n, w.size());
    }
    return n;
  }

  std::string PrefixCode::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < _words.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += _words[i].str();
    }
    return out + "}";
  }

  PrefixCode prune(Alphabet const& alphabet, std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::vector<Word> kept;
    for (auto& w : words) {
      if (kept.empty() || !kept.back().is_prefix_of(w)) {
        kept.push_back(std::move(w));
      }
    }
    return PrefixCode(alphabet, std::move(kept));
  }

  ////////////////////////////////////////////////////////////////////////
  // Maximality
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // The words in [first, last) are a sorted antichain extending a vertex
    // at depth `depth`.  The subtree they span is saturated when every
    // non-leaf vertex has all k children.  Extensions of one child form a
    // contiguous run, in letter order.
    using Iter = std::vector<Word>::const_iterator;
    bool saturated_range(int k, std::size_t depth, Iter first, Iter last) {
      if (first == last) {
        return false;
      }
      if (first->size() == depth) {
        return std::next(first) == last;
      }
      for (int a = 0; a < k; ++a) {
        Iter run = first;
        while (run != last && (*run)[depth] == a) {
          ++run;
        }
        if (!saturated_range(k, depth + 1, first, run)) {
          return false;
        }
        first = run;
      }
      return first == last;
    }

    bool saturated(Alphabet const&          alphabet,
                   Word const&              y,
                   std::vector<Word> const& leaves) {
      return saturated_range(alphabet.k(), y.size(), leaves.begin(), leaves.end());
    }
  }  // namespace

  bool is_maximal_saturation(PrefixCode const& p) {
    return !p.empty() && saturated(p.alphabet(), Word(), p.words());
  }

  bool is_maximal_kraft(PrefixCode const& p) {
    using boost::multiprecision::cpp_int;
    if (p.empty()) {
      return false;
    }
    std::size_t const L = p.max_length();
    // Common denominator k^L; machine integers while it fits.
    std::uint64_t whole = 1;
    bool          fits  = true;
    for (std::size_t i = 0; i < L && fits; ++i) {
      fits = whole <= (std::uint64_t(1) << 56) / static_cast<std::uint64_t>(p.alphabet().k());
      whole *= static_cast<std::uint64_t>(p.alphabet().k());
    }
    if (fits) {
      std::uint64_t sum = 0;
      for (auto const& w : p) {
        std::uint64_t t = 1;
        for (std::size_t i = w.size(); i < L; ++i) {
          t *= static_cast<std::uint64_t>(p.alphabet().k());
        }
        sum += t;
      }
      return sum == whole;
    }
    cpp_int const k   = p.alphabet().k();
    cpp_int       sum = 0;
    for (auto const& w : p) {
      sum += boost::multiprecision::pow(k, static_cast<unsigned>(L - w.size()));
    }
    return sum == boost::multiprecision::pow(k, static_cast<unsigned>(L));
  }

  bool is_maximal(PrefixCode const& p) {
    bool const sat = is_maximal_saturation(p);
    if (sat != is_maximal_kraft(p)) {
      throw InternalError("Kraft and saturation disagree on " + p.str());
    }
    return sat;
  }

  ////////////////////////////////////////////////////////////////////////
  // Right-ideal operations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void check_same(Alphabet const& a, Alphabet const& b) {
      if (!(a == b)) {
        throw AlphabetMismatch("alphabet mismatch: k=" + std::to_string(a.k())
                               + " vs k=" + std::to_string(b.k()));
      }
    }
  }  // namespace

  PrefixCode ideal_intersection(PrefixCode const& p, PrefixCode const& q) {
    check_same(p.alphabet(), q.alphabet());
    std::vector<Word> words;
    for (auto const& x : p) {
      if (q.generates(x)) {
        words.push_back(x);
      }
    }
    for (auto const& x : q) {
      if (p.generates(x)) {
        words.push_back(x);
      }
    }
    return prune(p.alphabet(), std::move(words));
  }

  PrefixCode ideal_union(PrefixCode const& p, PrefixCode const& q) {
    check_same(p.alphabet(), q.alphabet());
    std::vector<Word> words(p.begin(), p.end());
    words.insert(words.end(), q.begin(), q.end());
    return prune(p.alphabet(), std::move(words));
  }

  PrefixCode complement_code(PrefixCode const& p, PrefixCode const& q) {
    check_same(p.alphabet(), q.alphabet());
    if (p.empty()) {
      throw DomainError("complement_code: P must be nonempty");
    }
    for (auto const& x : p) {
      if (!q.generates(x)) {
        throw DomainError("complement_code: " + x.str()
                          + " lies outside QA*");
      }
    }
    std::size_t const L = std::max(p.max_length(), q.max_length());
    std::vector<Word> out;
    for (auto const& y : q) {
      for (auto const& t : words_of_length(p.alphabet(), L - y.size())) {
        Word x = y + t;
        if (!p.generates(x)) {
          out.push_back(std::move(x));
        }
      }
    }
    return code_max_extend(PrefixCode(p.alphabet(), std::move(out)));
  }

  bool ends_subset(PrefixCode const& q, PrefixCode const& p) {
    check_same(p.alphabet(), q.alphabet());
    for (auto const& y : q) {
      if (p.prefix_of(y)) {
        continue;
      }
      if (!saturated(p.alphabet(), y, p.below(y))) {
        return false;
      }
    }
    return true;
  }

  bool ends_equal(PrefixCode const& p, PrefixCode const& q) {
    return ends_subset(p, q) && ends_subset(q, p);
  }

  PrefixCode code_restrict_step(PrefixCode const& p, Word const& c) {
    if (!p.contains(c)) {
      throw RuleNotApplicable("restrict: " + c.str() + " is not in "
                              + p.str());
    }
    std::vector<Word> words;
    for (auto const& x : p) {
      if (x != c) {
        words.push_back(x);
      }
    }
    for (int a = 0; a < p.alphabet().k(); ++a) {
      words.push_back(c + static_cast<Letter>(a));
    }
    return PrefixCode(p.alphabet(), std::move(words));
  }

  PrefixCode code_extend_step(PrefixCode const& p, Word const& c) {
    for (int a = 0; a < p.alphabet().k(); ++a) {
      if (!p.contains(c + static_cast<Letter>(a))) {
        throw RuleNotApplicable("extend: " + c.str() + "A is not contained in "
                                + p.str());
      }
    }
    std::vector<Word> words;
    for (auto const& x : p) {
      if (x.empty() || x.parent() != c) {
        words.push_back(x);
      }
    }
    words.push_back(c);
    return PrefixCode(p.alphabet(), std::move(words));
  }

  PrefixCode code_max_extend(PrefixCode const& p) {
    int const         k     = p.alphabet().k();
    std::vector<Word> words = p.words();
    bool              changed = true;
    while (changed) {
      changed = false;
      std::vector<Word> next;
      std::size_t       i = 0;
      while (i < words.size()) {
        // siblings c a_0 .. c a_{k-1} are consecutive in dictionary order
        Word const& w = words[i];
        if (!w.empty() && w.back() == 0 && i + k <= words.size()) {
          Word const c  = w.parent();
          bool       ok = true;
          for (int a = 0; a < k && ok; ++a) {
            ok = words[i + a] == c + static_cast<Letter>(a);
          }
          if (ok) {
            next.push_back(c);
            i += k;
            changed = true;
            continue;
          }
        }
        next.push_back(w);
        ++i;
      }
      std::sort(next.begin(), next.end());
      words = std::move(next);
    }
    return PrefixCode(p.alphabet(), std::move(words));
  }

  std::vector<Word> path_code(Alphabet const& alphabet, Word const& path) {
    std::vector<Word> out;
    for (std::size_t j = 0; j < path.size(); ++j) {
      for (int b = 0; b < alphabet.k(); ++b) {
        if (b != path[j]) {
          out.push_back(path.prefix(j) + static_cast<Letter>(b));
        }
      }
    }
    out.push_back(path);
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace mk1
