#include "mk1/hom.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace mk1 {

  Hom::Hom(Alphabet alphabet, std::vector<Entry> entries)
      : _alphabet(alphabet), _entries(std::move(entries)) {
    for (auto const& e : _entries) {
      check_letters(e.in, _alphabet);
      check_letters(e.out, _alphabet);
    }
    std::sort(_entries.begin(), _entries.end());
    for (std::size_t i = 1; i < _entries.size(); ++i) {
      if (_entries[i - 1].in.is_prefix_of(_entries[i].in)) {
        throw DomainError("table domain is not a prefix code: "
                          + _entries[i - 1].in.str() + " is a prefix of "
                          + _entries[i].in.str());
      }
    }
  }

  Hom Hom::identity(Alphabet alphabet) {
    return Hom(alphabet, {Entry{Word(), Word()}});
  }

  Hom Hom::partial_identity(PrefixCode const& p) {
    std::vector<Entry> entries;
    for (auto const& x : p) {
      entries.push_back({x, x});
    }
    return Hom(p.alphabet(), std::move(entries));
  }

  PrefixCode Hom::domain_code() const {
    std::vector<Word> words;
    words.reserve(_entries.size());
    for (auto const& e : _entries) {
      words.push_back(e.in);
    }
    return PrefixCode(_alphabet, std::move(words));
  }

  std::optional<std::size_t> Hom::find(Word const& w) const {
    auto it = std::upper_bound(
        _entries.begin(), _entries.end(), w, [](Word const& v, Entry const& e) {
          return v < e.in;
        });
    if (it != _entries.begin() && std::prev(it)->in.is_prefix_of(w)) {
      return static_cast<std::size_t>(std::prev(it) - _entries.begin());
    }
    return std::nullopt;
  }

  bool Hom::has_extension(Word const& w) const {
    auto it = std::upper_bound(
        _entries.begin(), _entries.end(), w, [](Word const& v, Entry const& e) {
          return v < e.in;
        });
    return it != _entries.end() && w.is_strict_prefix_of(it->in);
  }

  std::size_t Hom::max_in_length() const noexcept {
    std::size_t n = 0;
    for (auto const& e : _entries) {
      n = std::max(n, e.in.size());
    }
    return n;
  }

  std::size_t Hom::max_out_length() const noexcept {
    std::size_t n = 0;
    for (auto const& e : _entries) {
      n = std::max(n, e.out.size());
    }
    return n;
  }

  std::string Hom::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += _entries[i].in.str() + "->" + _entries[i].out.str();
    }
    return out + "]";
  }

  std::optional<Word> evaluate(Hom const& phi, Word const& w) {
    auto i = phi.find(w);
    if (!i) {
      return std::nullopt;
    }
    auto const& e = phi.entries()[*i];
    return e.out + w.suffix_from(e.in.size());
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Does the extension rule fire on the k entries starting at i?
    bool extension_site(std::vector<Entry> const& t, std::size_t i, int k) {
      Entry const& first = t[i];
      if (first.in.empty() || first.in.back() != 0 || first.out.empty()
          || first.out.back() != 0 || i + k > t.size()) {
        return false;
      }
      Word const x = first.in.parent();
      Word const y = first.out.parent();
      for (int a = 0; a < k; ++a) {
        auto const& e = t[i + a];
        if (e.in != x + static_cast<Letter>(a)
            || e.out != y + static_cast<Letter>(a)) {
          return false;
        }
      }
      return true;
    }

    void apply_site(std::vector<Entry>& t, std::size_t i, int k) {
      Entry merged{t[i].in.parent(), t[i].out.parent()};
      t.erase(t.begin() + i, t.begin() + i + k);
      t.insert(t.begin() + i, std::move(merged));
    }
  }  // namespace

  MonoidElem max_extend(Hom const& phi) {
    int const          k = phi.alphabet().k();
    std::vector<Entry> t = phi.entries();
    bool               changed = true;
    while (changed) {
      changed = false;
      std::vector<Entry> next;
      next.reserve(t.size());
      std::size_t i = 0;
      while (i < t.size()) {
        if (extension_site(t, i, k)) {
          next.push_back({t[i].in.parent(), t[i].out.parent()});
          i += k;
          changed = true;
        } else {
          next.push_back(std::move(t[i]));
          ++i;
        }
      }
      t = std::move(next);
    }
    return MonoidElem(Hom(phi.alphabet(), std::move(t)));
  }

  Hom max_extend_in_order(
      Hom const&                                      phi,
      std::function<std::size_t(std::size_t)> const& pick) {
    int const          k = phi.alphabet().k();
    std::vector<Entry> t = phi.entries();
    while (true) {
      std::vector<std::size_t> sites;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (extension_site(t, i, k)) {
          sites.push_back(i);
        }
      }
      if (sites.empty()) {
        break;
      }
      apply_site(t, sites[pick(sites.size())], k);
    }
    return Hom(phi.alphabet(), std::move(t));
  }

  Hom restrict_step(Hom const& phi, Word const& x) {
    std::vector<Entry> t;
    bool               found = false;
    for (auto const& e : phi.entries()) {
      if (e.in == x) {
        found = true;
        for (int a = 0; a < phi.alphabet().k(); ++a) {
          t.push_back({e.in + static_cast<Letter>(a),
                       e.out + static_cast<Letter>(a)});
        }
      } else {
        t.push_back(e);
      }
    }
    if (!found) {
      throw RuleNotApplicable("restrict: " + x.str()
                              + " is not a domain word of " + phi.str());
    }
    return Hom(phi.alphabet(), std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition
  ////////////////////////////////////////////////////////////////////////

  Hom compose_unextended(Hom const& phi, Hom const& psi) {
    if (!(phi.alphabet() == psi.alphabet())) {
      throw AlphabetMismatch("compose: alphabet mismatch");
    }
    auto const&        pe = phi.entries();
    std::vector<Entry> t;
    for (auto const& [x, y] : psi.entries()) {
      if (auto i = phi.find(y)) {
        t.push_back({x, pe[*i].out + y.suffix_from(pe[*i].in.size())});
        continue;
      }
      auto it = std::lower_bound(
          pe.begin(), pe.end(), y, [](Entry const& e, Word const& v) {
            return e.in < v;
          });
      for (; it != pe.end() && y.is_prefix_of(it->in); ++it) {
        t.push_back({x + it->in.suffix_from(y.size()), it->out});
      }
    }
    return Hom(phi.alphabet(), std::move(t));
  }

  MonoidElem compose(Hom const& phi, Hom const& psi) {
    return max_extend(compose_unextended(phi, psi));
  }

  bool eq_in_M(Hom const& phi, Hom const& psi) {
    if (!(phi.alphabet() == psi.alphabet())) {
      throw AlphabetMismatch("eq: alphabet mismatch");
    }
    return max_extend(phi) == max_extend(psi);
  }

  ////////////////////////////////////////////////////////////////////////
  // Images and pc-preservation
  ////////////////////////////////////////////////////////////////////////

  PrefixCode image_code(Hom const& phi) {
    std::vector<Word> ys;
    ys.reserve(phi.size());
    for (auto const& e : phi.entries()) {
      ys.push_back(e.out);
    }
    return prune(phi.alphabet(), std::move(ys));
  }

  bool is_pc_preserving(Hom const& phi) {
    std::vector<Word> ys;
    for (auto const& e : phi.entries()) {
      ys.push_back(e.out);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (std::size_t i = 1; i < ys.size(); ++i) {
      if (ys[i - 1].is_prefix_of(ys[i])) {
        return false;
      }
    }
    return true;
  }

  Hom restrict_to_pc_preserving(Hom const& phi) {
    std::size_t const  L = phi.max_out_length();
    std::vector<Entry> t;
    for (auto const& [x, y] : phi.entries()) {
      for (auto const& w : words_of_length(phi.alphabet(), L - y.size())) {
        t.push_back({x + w, y + w});
      }
    }
    return Hom(phi.alphabet(), std::move(t));
  }

  Hom pc_form(Hom const& phi) {
    return is_pc_preserving(phi) ? phi : restrict_to_pc_preserving(phi);
  }

  std::vector<std::pair<Word, std::vector<Word>>> fibers(Hom const& phi) {
    std::map<Word, std::vector<Word>> by_image;
    for (auto const& e : phi.entries()) {
      by_image[e.out].push_back(e.in);
    }
    return {by_image.begin(), by_image.end()};
  }

  Hom max_extend_classwise(Hom const& phi) {
    if (!is_pc_preserving(phi)) {
      throw DomainError("max_extend_classwise: table is not pc-preserving");
    }
    int const k = phi.alphabet().k();
    Hom       cur = phi;
    while (true) {
      std::map<Word, std::vector<Word>> by_image;
      for (auto const& e : cur.entries()) {
        by_image[e.out].push_back(e.in);
      }
      std::optional<std::pair<Word, std::vector<Word>>> rule;
      for (auto const& [z, xs] : by_image) {
        if (z.empty() || z.back() != 0) {
          continue;
        }
        Word const        y = z.parent();
        std::vector<Word> base;
        bool              ok = true;
        for (int a = 0; a < k && ok; ++a) {
          auto it = by_image.find(y + static_cast<Letter>(a));
          if (it == by_image.end()) {
            ok = false;
            break;
          }
          std::vector<Word> stripped;
          for (auto const& x : it->second) {
            if (x.empty() || x.back() != a) {
              ok = false;
              break;
            }
            stripped.push_back(x.parent());
          }
          std::sort(stripped.begin(), stripped.end());
          if (a == 0) {
            base = std::move(stripped);
          } else if (stripped != base) {
            ok = false;
          }
        }
        if (ok) {
          rule.emplace(y, std::move(base));
          break;
        }
      }
      if (!rule) {
        return cur;
      }
      auto const& [y, cls] = *rule;
      std::vector<Entry> t;
      for (auto const& e : cur.entries()) {
        if (e.out.empty() || !y.is_prefix_of(e.out)
            || e.out.size() != y.size() + 1) {
          t.push_back(e);
        }
      }
      for (auto const& x : cls) {
        t.push_back({x, y});
      }
      cur = Hom(cur.alphabet(), std::move(t));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents and inverses
  ////////////////////////////////////////////////////////////////////////

  bool is_idempotent(Hom const& phi) {
    bool const slow = compose(phi, phi).table() == max_extend(phi).table();
    if (slow != is_idempotent_fast(phi)) {
      throw InternalError("idempotent checks disagree on " + phi.str());
    }
    return slow;
  }

  bool is_idempotent_fast(Hom const& phi) {
    std::size_t const m = phi.max_in_length();
    for (auto const& y : image_code(phi)) {
      std::size_t const pad = m > y.size() ? m - y.size() : 0;
      for (auto const& t : words_of_length(phi.alphabet(), pad)) {
        Word const z = y + t;
        auto       v = evaluate(phi, z);
        if (!v || *v != z) {
          return false;
        }
      }
    }
    return true;
  }

  Hom inverse(Hom const& phi) {
    if (phi.is_zero()) {
      throw DomainError("inverse: the zero element has no inverse");
    }
    std::vector<Entry> t;
    for (auto const& y : image_code(phi)) {
      std::optional<Word> best;
      for (auto const& e : phi.entries()) {
        if (e.out == y && (!best || e.in < *best)) {
          best = e.in;
        }
      }
      t.push_back({y, *best});
    }
    return Hom(phi.alphabet(), std::move(t));
  }

}  // namespace mk1
