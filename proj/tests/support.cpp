#include "support.hpp"

#include <algorithm>
#include <set>

#include "mk1/text_io.hpp"

namespace mk1::testing {

  Word W(std::string_view text, int k) {
    return parse_word(text, Alphabet(k));
  }

  PrefixCode P(std::string_view braces, int k) {
    return parse_code(braces, Alphabet(k));
  }

  Hom H(std::string_view text, int k) {
    Alphabet const     A(k);
    std::vector<Entry> t;
    while (!text.empty()) {
      auto const       comma = text.find(',');
      std::string_view item  = text.substr(0, comma);
      text.remove_prefix(comma == std::string_view::npos ? text.size() : comma + 1);
      auto const arrow = item.find("->");
      auto       strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') {
          s.remove_prefix(1);
        }
        while (!s.empty() && s.back() == ' ') {
          s.remove_suffix(1);
        }
        return s;
      };
      t.push_back({parse_word(strip(item.substr(0, arrow)), A),
                   parse_word(strip(item.substr(arrow + 2)), A)});
    }
    return Hom(A, std::move(t));
  }

  Congruence C(std::string_view text, int k) {
    Alphabet const                 A(k);
    std::vector<std::vector<Word>> blocks;
    std::vector<Word>              cur;
    std::size_t                    i = 0;
    auto flush_word = [&](std::size_t end) {
      if (end > i) {
        cur.push_back(parse_word(text.substr(i, end - i), A));
      }
      i = end + 1;
    };
    for (std::size_t j = 0; j <= text.size(); ++j) {
      if (j == text.size() || text[j] == ' ' || text[j] == '|') {
        flush_word(j);
        if ((j == text.size() || text[j] == '|') && !cur.empty()) {
          blocks.push_back(std::move(cur));
          cur.clear();
        }
      }
    }
    return Congruence(A, std::move(blocks));
  }

  oracle::Str raw(std::string_view letters) {
    oracle::Str out;
    if (letters != "-") {
      for (char c : letters) {
        out.push_back(static_cast<char>(c - 'a'));
      }
    }
    return out;
  }

  oracle::Code raw_code(std::vector<std::string_view> const& letters) {
    oracle::Code out;
    for (auto w : letters) {
      out.push_back(raw(w));
    }
    return out;
  }

  oracle::Code to_oracle(PrefixCode const& p) {
    oracle::Code c;
    for (auto const& w : p) {
      c.push_back(w.raw());
    }
    return c;
  }

  oracle::Table to_oracle(Hom const& h) {
    oracle::Table t;
    for (auto const& e : h.entries()) {
      t.emplace_back(e.in.raw(), e.out.raw());
    }
    return t;
  }

  PrefixCode from_oracle(int k, oracle::Code const& c) {
    std::vector<Word> words;
    for (auto const& s : c) {
      words.push_back(Word::from_raw(s));
    }
    return PrefixCode(Alphabet(k), std::move(words));
  }

  bool same_element(Hom const& a, Hom const& b) {
    auto const        ta = to_oracle(a);
    auto const        tb = to_oracle(b);
    std::size_t const L  = std::max(oracle::table_depth(ta), oracle::table_depth(tb)) + 1;
    return oracle::agree_on(a.alphabet().k(), ta, tb, L);
  }

  PrefixCode random_code(std::mt19937_64& rng, Alphabet const& A, std::size_t max_depth) {
    std::vector<Word>                      out;
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<Word>                      stack{Word()};
    while (!stack.empty()) {
      Word w = std::move(stack.back());
      stack.pop_back();
      if (w.size() == max_depth || u(rng) < 0.4) {
        out.push_back(std::move(w));
        continue;
      }
      for (int a = 0; a < A.k(); ++a) {
        // Dropping a child keeps the code non-maximal now and then.
        if (u(rng) < 0.85) {
          stack.push_back(w + static_cast<Letter>(a));
        }
      }
    }
    return PrefixCode(A, std::move(out));
  }

  Hom random_hom(std::mt19937_64& rng, Alphabet const& A, std::size_t max_depth,
                 std::size_t max_image) {
    std::uniform_int_distribution<std::size_t> len(0, max_image);
    std::uniform_int_distribution<int>         letter(0, A.k() - 1);
    std::vector<Entry>                         t;
    for (auto const& x : random_code(rng, A, max_depth)) {
      Word y;
      for (std::size_t i = len(rng); i > 0; --i) {
        y.push_back(static_cast<Letter>(letter(rng)));
      }
      t.push_back({x, y});
    }
    return Hom(A, std::move(t));
  }

  std::vector<Hom> depth_family(std::size_t depth) {
    Alphabet const          A(2);
    auto const              images = oracle::words_upto(2, depth);
    std::set<std::string>   seen;
    std::vector<Hom>        out;
    for (auto const& code : oracle::prefix_codes_upto(2, depth)) {
      std::vector<std::size_t> pick(code.size(), 0);
      while (true) {
        std::vector<Entry> t;
        for (std::size_t i = 0; i < code.size(); ++i) {
          t.push_back({Word::from_raw(code[i]), Word::from_raw(images[pick[i]])});
        }
        Hom h = max_extend(Hom(A, std::move(t))).table();
        if (seen.insert(h.str()).second) {
          out.push_back(std::move(h));
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == images.size()) {
          pick[i] = 0;
          ++i;
        }
        if (i == pick.size()) {
          break;
        }
      }
    }
    return out;
  }

  std::shared_ptr<GammaSet const> sample_gamma() {
    auto g = std::make_shared<GammaSet>(Alphabet(2));
    g->add("NOT", H("a->b, b->a"));
    g->add("PUSH", H("- -> b"));
    g->add("POP", H("a -> -"));
    g->add("MIX", H("aa->a, ab->ba, b->bb"));
    g->add("CUT", H("ba->a"));
    return g;
  }

  GenWord random_genword(std::mt19937_64& rng, std::shared_ptr<GammaSet const> const& gamma,
                         std::size_t max_atoms, std::size_t max_tau) {
    std::vector<std::string> names;
    for (auto const& [name, h] : gamma->tables()) {
      names.push_back(name);
    }
    std::uniform_int_distribution<std::size_t> count(0, max_atoms);
    std::uniform_int_distribution<std::size_t> which(0, names.size() - 1);
    std::uniform_int_distribution<std::size_t> tau(1, max_tau);
    std::bernoulli_distribution                is_gen(0.6);
    std::vector<Atom>                          atoms;
    for (std::size_t i = count(rng); i > 0; --i) {
      atoms.push_back(is_gen(rng) ? Atom::gen(names[which(rng)]) : Atom::tau(tau(rng)));
    }
    return GenWord(gamma, std::move(atoms));
  }

}  // namespace mk1::testing
