#include "mk1/congruence.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <tuple>

namespace mk1 {

  Congruence::Congruence(Alphabet alphabet, std::vector<std::vector<Word>> blocks)
      : _alphabet(alphabet), _blocks(std::move(blocks)) {
    for (auto& b : _blocks) {
      if (b.empty()) {
        throw DomainError("congruence blocks must be nonempty");
      }
      for (auto const& w : b) {
        check_letters(w, _alphabet);
      }
      std::sort(b.begin(), b.end());
    }
    std::sort(_blocks.begin(), _blocks.end());
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      for (auto const& w : _blocks[i]) {
        _index.emplace_back(w, i);
      }
    }
    std::sort(_index.begin(), _index.end());
    for (std::size_t i = 1; i < _index.size(); ++i) {
      if (_index[i - 1].first.is_prefix_of(_index[i].first)) {
        throw DomainError("congruence domain is not a prefix code: "
                          + _index[i - 1].first.str() + " vs "
                          + _index[i].first.str());
      }
    }
  }

  PrefixCode Congruence::domain_code() const {
    std::vector<Word> words;
    for (auto const& [w, i] : _index) {
      words.push_back(w);
    }
    return PrefixCode(_alphabet, std::move(words));
  }

  std::optional<std::pair<std::size_t, Word>>
  Congruence::locate(Word const& w) const {
    auto it = std::upper_bound(
        _index.begin(),
        _index.end(),
        w,
        [](Word const& v, std::pair<Word, std::size_t> const& e) {
          return v < e.first;
        });
    if (it == _index.begin()) {
      return std::nullopt;
    }
    --it;
    if (!it->first.is_prefix_of(w)) {
      return std::nullopt;
    }
    return std::make_pair(it->second, w.suffix_from(it->first.size()));
  }

  std::size_t Congruence::max_length() const noexcept {
    std::size_t n = 0;
    for (auto const& [w, i] : _index) {
      n = std::max(n, w.size());
    }
    return n;
  }

  std::string Congruence::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += "{";
      for (std::size_t j = 0; j < _blocks[i].size(); ++j) {
        if (j > 0) {
          out += ",";
        }
        out += _blocks[i][j].str();
      }
      out += "}";
    }
    return out + "}";
  }

  std::optional<bool> trace(Congruence const& c, Word const& u, Word const& v) {
    auto lu = c.locate(u);
    auto lv = c.locate(v);
    if (!lu || !lv) {
      return std::nullopt;
    }
    return *lu == *lv;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<Word> shifted(std::vector<Word> const& b, Letter a) {
      std::vector<Word> out;
      out.reserve(b.size());
      for (auto const& w : b) {
        out.push_back(w + a);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<Word> sorted(std::vector<Word> b) {
      std::sort(b.begin(), b.end());
      return b;
    }
  }  // namespace

  Congruence cong_restrict_step(Congruence const&        c,
                                std::vector<Word> const& block) {
    auto const                     target = sorted(block);
    std::vector<std::vector<Word>> out;
    bool                           found = false;
    for (auto const& b : c.blocks()) {
      if (b == target) {
        found = true;
        for (int a = 0; a < c.alphabet().k(); ++a) {
          out.push_back(shifted(b, static_cast<Letter>(a)));
        }
      } else {
        out.push_back(b);
      }
    }
    if (!found) {
      throw RuleNotApplicable("restrict: the given set is not a block of "
                              + c.str());
    }
    return Congruence(c.alphabet(), std::move(out));
  }

  Congruence cong_extend_step(Congruence const& c, std::vector<Word> const& b) {
    auto const base = sorted(b);
    int const  k    = c.alphabet().k();
    std::vector<std::vector<Word>> wanted;
    for (int a = 0; a < k; ++a) {
      wanted.push_back(shifted(base, static_cast<Letter>(a)));
    }
    std::vector<std::vector<Word>> out;
    std::size_t                    hits = 0;
    for (auto const& blk : c.blocks()) {
      if (std::find(wanted.begin(), wanted.end(), blk) != wanted.end()) {
        ++hits;
      } else {
        out.push_back(blk);
      }
    }
    if (base.empty() || hits != static_cast<std::size_t>(k)) {
      throw RuleNotApplicable("extend: not every B a_i is a block of "
                              + c.str());
    }
    out.push_back(base);
    return Congruence(c.alphabet(), std::move(out));
  }

  Congruence cong_max(Congruence const& c) {
    int const  k   = c.alphabet().k();
    Congruence cur = c;
    while (true) {
      std::map<std::vector<Word>, std::uint32_t> seen;
      std::optional<std::vector<Word>>           rule;
      for (auto const& b : cur.blocks()) {
        Letter const a  = b.front().empty() ? 0 : b.front().back();
        bool         ok = true;
        std::vector<Word> stripped;
        for (auto const& w : b) {
          if (w.empty() || w.back() != a) {
            ok = false;
            break;
          }
          stripped.push_back(w.parent());
        }
        if (!ok) {
          continue;
        }
        std::sort(stripped.begin(), stripped.end());
        auto& mask = seen[stripped];
        mask |= 1u << a;
        if (mask == (1u << k) - 1) {
          rule = stripped;
          break;
        }
      }
      if (!rule) {
        return cur;
      }
      cur = cong_extend_step(cur, *rule);
    }
  }

  bool cong_ess_equal(Congruence const& c1, Congruence const& c2) {
    if (!(c1.alphabet() == c2.alphabet())) {
      throw AlphabetMismatch("congruence alphabet mismatch");
    }
    return cong_max(c1) == cong_max(c2);
  }

  ////////////////////////////////////////////////////////////////////////
  // Refinement
  ////////////////////////////////////////////////////////////////////////

  bool refines_end(Congruence const& c2, Congruence const& c1) {
    if (!(c1.alphabet() == c2.alphabet())) {
      throw AlphabetMismatch("congruence alphabet mismatch");
    }
    if (!ends_subset(c2.domain_code(), c1.domain_code())) {
      return false;
    }
    std::size_t const L2 = c2.max_length();
    for (auto const& b : c1.blocks()) {
      Word const& p0 = b.front();
      for (std::size_t i = 1; i < b.size(); ++i) {
        Word const&       p = b[i];
        std::size_t const shortest = std::min(p0.size(), p.size());
        std::size_t const m = L2 > shortest ? L2 - shortest : 0;
        for (auto const& t : words_of_length(c1.alphabet(), m)) {
          if (c2.locate(p0 + t) != c2.locate(p + t)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool refines_end_via_max(Congruence const& c2, Congruence const& c1) {
    if (!(c1.alphabet() == c2.alphabet())) {
      throw AlphabetMismatch("congruence alphabet mismatch");
    }
    Congruence const  m1 = cong_max(c1);
    Congruence const  m2 = cong_max(c2);
    std::size_t const L  = m1.max_length() + m2.max_length();
    for (auto const& blk : m2.blocks()) {
      for (auto const& d : blk) {
        std::size_t const pad = L > d.size() ? L - d.size() : 0;
        for (auto const& t : words_of_length(m1.alphabet(), pad)) {
          Word const w  = d + t;
          auto const l1 = m1.locate(w);
          if (!l1) {
            return false;
          }
          auto const l2 = m2.locate(w);
          for (auto const& p : m1.blocks()[l1->first]) {
            if (m2.locate(p + l1->second) != l2) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice operations
  ////////////////////////////////////////////////////////////////////////

  Congruence cong_meet(Congruence const& c1, Congruence const& c2) {
    if (!(c1.alphabet() == c2.alphabet())) {
      throw AlphabetMismatch("congruence alphabet mismatch");
    }
    using Key = std::tuple<std::size_t, Word, std::size_t, Word>;
    std::map<Key, std::vector<Word>> classes;
    for (auto const& d :
         ideal_intersection(c1.domain_code(), c2.domain_code())) {
      auto l1 = c1.locate(d);
      auto l2 = c2.locate(d);
      classes[Key{l1->first, l1->second, l2->first, l2->second}].push_back(d);
    }
    std::vector<std::vector<Word>> blocks;
    for (auto& [key, b] : classes) {
      blocks.push_back(std::move(b));
    }
    return cong_max(Congruence(c1.alphabet(), std::move(blocks)));
  }

  namespace {
    // A domain word of `a` that is a strict prefix of a domain word of `b`.
    std::optional<Word> strictly_above(Congruence const& a,
                                       PrefixCode const& b) {
      for (auto const& d : a.domain_code()) {
        auto below = b.below(d);
        if (!below.empty() && below.front() != d) {
          return d;
        }
      }
      return std::nullopt;
    }

    Congruence restrict_block_of(Congruence const& c, Word const& d) {
      return cong_restrict_step(c, c.blocks()[c.locate(d)->first]);
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
      while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i         = parent[i];
      }
      return i;
    }
  }  // namespace

  Congruence cong_join(Congruence const& c1, Congruence const& c2) {
    if (!(c1.alphabet() == c2.alphabet())) {
      throw AlphabetMismatch("congruence alphabet mismatch");
    }
    // Restrict class-wise until neither domain code has a word strictly above
    // a word of the other; then related ends share their suffix and the
    // closure is a finite union-find over blocks.
    std::size_t const cap = 2 * (c1.max_length() + c2.max_length()) + 4;
    Congruence        a   = c1;
    Congruence        b   = c2;
    while (true) {
      if (auto d = strictly_above(a, b.domain_code())) {
        a = restrict_block_of(a, *d);
      } else if (auto e = strictly_above(b, a.domain_code())) {
        b = restrict_block_of(b, *e);
      } else {
        break;
      }
      if (a.max_length() > cap || b.max_length() > cap) {
        throw DomainError(
            "cong_join: the join is not a prefix code congruence within "
            "length "
            + std::to_string(cap));
      }
    }
    std::vector<Word> words;
    for (auto const& w : a.domain_code()) {
      words.push_back(w);
    }
    for (auto const& w : b.domain_code()) {
      words.push_back(w);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    auto index_of = [&words](Word const& w) {
      return static_cast<std::size_t>(
          std::lower_bound(words.begin(), words.end(), w) - words.begin());
    };
    std::vector<std::size_t> parent(words.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (auto const* c : {&a, &b}) {
      for (auto const& blk : c->blocks()) {
        std::size_t const r = find_root(parent, index_of(blk.front()));
        for (auto const& w : blk) {
          parent[find_root(parent, index_of(w))] = r;
        }
      }
    }
    std::map<std::size_t, std::vector<Word>> classes;
    for (std::size_t i = 0; i < words.size(); ++i) {
      classes[find_root(parent, i)].push_back(words[i]);
    }
    std::vector<std::vector<Word>> blocks;
    for (auto& [r, blk] : classes) {
      blocks.push_back(std::move(blk));
    }
    return cong_max(Congruence(c1.alphabet(), std::move(blocks)));
  }

  ////////////////////////////////////////////////////////////////////////
  // part / func
  ////////////////////////////////////////////////////////////////////////

  Congruence part(Hom const& phi) {
    std::vector<std::vector<Word>> blocks;
    for (auto& [y, xs] : fibers(pc_form(phi))) {
      blocks.push_back(std::move(xs));
    }
    return Congruence(phi.alphabet(), std::move(blocks));
  }

  Hom func(Congruence const& c, int j) {
    if (j != 0 && j != 1) {
      throw DomainError("func: j must be 0 or 1");
    }
    std::vector<Entry> t;
    for (auto const& b : c.blocks()) {
      Word const& rep = j == 0 ? b.front() : b.back();
      for (auto const& x : b) {
        t.push_back({x, rep});
      }
    }
    return Hom(c.alphabet(), std::move(t));
  }

}  // namespace mk1
