#include "mk1/genwords.hpp"

#include <algorithm>
#include <set>

namespace mk1 {

  void GammaSet::add(std::string const& name, Hom h) {
    if (!(h.alphabet() == _alphabet)) {
      throw AlphabetMismatch("generator " + name + " has alphabet k="
                             + std::to_string(h.alphabet().k()));
    }
    if (name.empty() || _tables.count(name)) {
      throw DomainError("generator names must be nonempty and unique: '"
                        + name + "'");
    }
    _tables.emplace(name, std::move(h));
  }

  Hom const& GammaSet::at(std::string const& name) const {
    auto it = _tables.find(name);
    if (it == _tables.end()) {
      throw DomainError("unknown generator '" + name + "'");
    }
    return it->second;
  }

  std::size_t GammaSet::c() const noexcept {
    std::size_t c = 1;
    for (auto const& [name, h] : _tables) {
      c = std::max({c, h.max_in_length(), h.max_out_length()});
    }
    return c;
  }

  Atom Atom::tau(std::size_t i) {
    if (i < 1) {
      throw DomainError("tau index must be at least 1");
    }
    return Atom{Kind::tau, "", i};
  }

  std::string Atom::str() const {
    return kind == Kind::gen ? name : "τ" + std::to_string(i);
  }

  GenWord::GenWord(std::shared_ptr<GammaSet const> gamma,
                   std::vector<Atom>               atoms)
      : _gamma(std::move(gamma)), _atoms(std::move(atoms)) {
    for (auto const& a : _atoms) {
      if (a.kind == Atom::Kind::gen) {
        _gamma->at(a.name);
      } else if (a.i < 1) {
        throw DomainError("tau index must be at least 1");
      }
    }
  }

  std::string GenWord::str() const {
    std::string out;
    for (auto const& a : _atoms) {
      if (!out.empty()) {
        out += " ";
      }
      out += a.str();
    }
    return out;
  }

  Hom tau_table(Alphabet const& alphabet, std::size_t i) {
    std::vector<Entry> t;
    for (auto const& x : words_of_length(alphabet, i + 1)) {
      Word y = x.prefix(i - 1);
      y.push_back(x[i]);
      y.push_back(x[i - 1]);
      t.push_back({x, y});
    }
    return Hom(alphabet, std::move(t));
  }

  std::size_t word_length(GenWord const& w) {
    std::size_t n = 0;
    for (auto const& a : w.atoms()) {
      n += a.length();
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Runs the atoms right to left on z; `out` holds the result if defined.
    Status run(GenWord const& w, Word const& z, Word& out) {
      out = z;
      auto const& atoms = w.atoms();
      for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
        if (it->kind == Atom::Kind::tau) {
          std::size_t const i = it->i;
          if (out.size() < i + 1) {
            return Status::open;
          }
          std::string raw = out.raw();
          std::swap(raw[i - 1], raw[i]);
          out = Word::from_raw(std::move(raw));
          continue;
        }
        Hom const& h = w.gamma().at(it->name);
        if (auto j = h.find(out)) {
          auto const& e = h.entries()[*j];
          out           = e.out + out.suffix_from(e.in.size());
        } else {
          return h.has_extension(out) ? Status::open : Status::dead;
        }
      }
      return Status::defined;
    }
  }  // namespace

  Status status(GenWord const& w, Word const& z) {
    Word out;
    return run(w, z, out);
  }

  std::optional<Word> apply(GenWord const& w, Word const& z) {
    Word out;
    if (run(w, z, out) != Status::defined) {
      return std::nullopt;
    }
    return out;
  }

  Hom expand_unextended(GenWord const& w, Budget& budget) {
    Alphabet const& A   = w.alphabet();
    Hom             acc = Hom::identity(A);
    auto const&     atoms = w.atoms();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
      Hom const t = it->kind == Atom::Kind::tau ? tau_table(A, it->i)
                                                : w.gamma().at(it->name);
      acc = compose_unextended(t, acc);
      budget.spend(acc.size() + 1);
    }
    return acc;
  }

  MonoidElem expand_to_table(GenWord const& w, Budget& budget) {
    MonoidElem        result = max_extend(expand_unextended(w, budget));
    std::size_t const bound  = w.gamma().c() * word_length(w);
    Hom const&        t      = result.table();
    if (t.max_in_length() > bound || image_code(t).max_length() > bound) {
      throw InternalError("depth bound c*|w| = " + std::to_string(bound)
                          + " violated by " + w.str());
    }
    return result;
  }

  MonoidElem expand_to_table(GenWord const& w) {
    Budget budget;
    return expand_to_table(w, budget);
  }

  bool dom_member(GenWord const& w, Word const& z) {
    return status(w, z) == Status::defined;
  }

  bool domc_member(GenWord const& w, Word const& z) {
    return dom_member(w, z) && (z.empty() || !dom_member(w, z.parent()));
  }

  std::vector<Word> domc_words(GenWord const& w, Budget& budget) {
    int const         k = w.alphabet().k();
    std::vector<Word> out;
    std::vector<Word> stack{Word()};
    while (!stack.empty()) {
      Word z = std::move(stack.back());
      stack.pop_back();
      budget.spend();
      switch (status(w, z)) {
        case Status::defined:
          out.push_back(std::move(z));
          break;
        case Status::open:
          for (int a = 0; a < k; ++a) {
            stack.push_back(z + static_cast<Letter>(a));
          }
          break;
        case Status::dead:
          break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool image_member_bruteforce(GenWord const& w, Word const& z, Budget& budget) {
    int const         k     = w.alphabet().k();
    std::size_t const bound = z.size() + w.gamma().c() * word_length(w);
    std::vector<Word> stack{Word()};
    while (!stack.empty()) {
      Word x = std::move(stack.back());
      stack.pop_back();
      budget.spend();
      Word         y;
      Status const st = run(w, x, y);
      if (st == Status::dead) {
        continue;
      }
      if (st == Status::defined) {
        if (y == z) {
          return true;
        }
        // w(x t) = w(x) t, so only prefixes of z can still lead to z
        if (!y.is_strict_prefix_of(z)) {
          continue;
        }
      }
      if (x.size() < bound) {
        for (int a = 0; a < k; ++a) {
          stack.push_back(x + static_cast<Letter>(a));
        }
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded deciders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Images w(x) for x in domC with |x| <= bound.
    std::vector<Word> images(GenWord const&  w,
                             Budget&         budget,
                             std::size_t     bound = SIZE_MAX) {
      std::vector<Word> out;
      for (auto const& x : domc_words(w, budget)) {
        if (x.size() <= bound) {
          out.push_back(*apply(w, x));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    bool some_prefix_of(std::vector<Word> const& sorted_words, Word const& z) {
      // Any member that is a prefix of z is <= z; check each candidate length.
      for (std::size_t n = 0; n <= z.size(); ++n) {
        if (std::binary_search(sorted_words.begin(), sorted_words.end(),
                               z.prefix(n))) {
          return true;
        }
      }
      return false;
    }

    bool some_extension_of(std::vector<Word> const& sorted_words, Word const& z) {
      auto it = std::lower_bound(sorted_words.begin(), sorted_words.end(), z);
      return it != sorted_words.end() && z.is_prefix_of(*it);
    }
  }  // namespace

  bool is_surjective_program(GenWord const& w, Budget& budget) {
    int const               k = w.alphabet().k();
    std::size_t const       N = w.gamma().c() * word_length(w);
    std::vector<Word> const im = images(w, budget, N);
    // forall y in A^N exists x: w(x) is a prefix of y.  A node whose prefix
    // is an image covers all y below it.
    std::vector<Word> stack{Word()};
    while (!stack.empty()) {
      Word z = std::move(stack.back());
      stack.pop_back();
      budget.spend();
      if (some_prefix_of(im, z)) {
        continue;
      }
      if (z.size() == N) {
        return false;
      }
      for (int a = 0; a < k; ++a) {
        stack.push_back(z + static_cast<Letter>(a));
      }
    }
    return true;
  }

  bool r_leq_pi2(GenWord const& psi, GenWord const& phi, Budget& budget) {
    if (!(psi.alphabet() == phi.alphabet())) {
      throw AlphabetMismatch("r_leq_pi2: alphabet mismatch");
    }
    int const               k     = psi.alphabet().k();
    std::vector<Word> const fphi  = images(phi, budget);
    for (auto const& y : images(psi, budget)) {
      budget.spend();
      // exists s: phi(s) pref psi(x)
      if (some_prefix_of(fphi, y)) {
        continue;
      }
      // exists r0: psi(x) pref phi(r0)
      if (!some_extension_of(fphi, y)) {
        return false;
      }
      // forall r, z with psi(x) pref z spref phi(r): z lies below an image,
      // or every child z a_i is a prefix of some image.
      std::set<Word> seen;
      auto it = std::lower_bound(fphi.begin(), fphi.end(), y);
      for (; it != fphi.end() && y.is_prefix_of(*it); ++it) {
        for (std::size_t n = y.size(); n < it->size(); ++n) {
          Word const z = it->prefix(n);
          if (!seen.insert(z).second) {
            continue;
          }
          budget.spend();
          if (some_prefix_of(fphi, z)) {
            continue;
          }
          for (int a = 0; a < k; ++a) {
            if (!some_extension_of(fphi, z + static_cast<Letter>(a))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool r_upper_bound_check(GenWord const& phi, Hom const& alpha, Budget& budget) {
    if (!(phi.alphabet() == alpha.alphabet())) {
      throw AlphabetMismatch("r_upper_bound_check: alphabet mismatch");
    }
    int const        k  = phi.alphabet().k();
    PrefixCode const im = image_code(alpha);
    std::size_t      ld = 0;
    for (auto const& x : domc_words(phi, budget)) {
      ld = std::max(ld, x.size());
    }
    std::size_t const N = ld + im.max_length();

    // forall v of length `rest`: o v in imC(alpha) A*
    auto all_inside = [&](Word const& o, std::size_t rest) {
      std::vector<std::pair<Word, std::size_t>> st{{o, rest}};
      while (!st.empty()) {
        auto [u, r] = std::move(st.back());
        st.pop_back();
        budget.spend();
        if (im.generates(u)) {
          continue;
        }
        if (r == 0) {
          return false;
        }
        for (int a = 0; a < k; ++a) {
          st.emplace_back(u + static_cast<Letter>(a), r - 1);
        }
      }
      return true;
    };

    std::vector<Word> stack{Word()};
    while (!stack.empty()) {
      Word x = std::move(stack.back());
      stack.pop_back();
      budget.spend();
      Word         y;
      Status const st = run(phi, x, y);
      if (st == Status::dead) {
        continue;  // no extension of x lies in Dom(phi)
      }
      if (st == Status::defined) {
        // the words of A^N below x map to y v with |v| = N - |x|
        std::size_t const rest = N > x.size() ? N - x.size() : 0;
        if (!all_inside(y, rest)) {
          return false;
        }
        continue;
      }
      if (x.size() < N) {
        for (int a = 0; a < k; ++a) {
          stack.push_back(x + static_cast<Letter>(a));
        }
      }
    }
    return true;
  }

}  // namespace mk1
