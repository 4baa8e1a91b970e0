#include "mk1/density.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "mk1/green.hpp"

namespace mk1 {

  namespace {

    // Dictionary-least word of length L in PA* but not in QA*.
    std::optional<Word> escape_word(PrefixCode const& p,
                                    PrefixCode const& q,
                                    std::size_t       L) {
      for (auto const& x : p) {
        if (x.size() > L) {
          continue;
        }
        for (auto const& t : words_of_length(p.alphabet(), L - x.size())) {
          Word w = x + t;
          if (!q.generates(w)) {
            return w;
          }
        }
      }
      return std::nullopt;
    }

    // A domain word x of Phi and a suffix s such that every end through x s
    // lies outside Dom(psi).
    std::optional<std::pair<Word, Word>> outside_branch(Hom const& Phi,
                                                        Hom const& psi) {
      std::size_t const L = psi.max_in_length();
      for (auto const& e : Phi.entries()) {
        std::size_t const m = L > e.in.size() ? L - e.in.size() : 0;
        for (auto const& s : words_of_length(Phi.alphabet(), m)) {
          if (!evaluate(psi, e.in + s)) {
            return std::make_pair(e.in, s);
          }
        }
      }
      return std::nullopt;
    }

    std::vector<Word> fiber_of(Hom const& Phi, Word const& x) {
      Word const&       y = Phi.entries()[*Phi.find(x)].out;
      std::vector<Word> out;
      for (auto const& e : Phi.entries()) {
        if (e.out == y) {
          out.push_back(e.in);
        }
      }
      return out;
    }

    // A fiber Q of Psi (image y), a path zeta such that every q zeta reaches
    // the depth of Phi's domain, and the grouping of Q by Phi(q zeta), with at
    // least two groups.
    struct Split {
      Word                           y;
      std::vector<Word>              fiber;
      Word                           zeta;
      std::vector<std::vector<Word>> groups;
    };

    std::optional<Split> find_split(Hom const& Phi, Hom const& Psi) {
      std::size_t const L = Phi.max_in_length();
      for (auto const& [y, qs] : fibers(Psi)) {
        std::size_t shortest = qs.front().size();
        for (auto const& q : qs) {
          shortest = std::min(shortest, q.size());
        }
        std::size_t const m = L > shortest ? L - shortest : 0;
        for (auto const& zeta : words_of_length(Phi.alphabet(), m)) {
          std::map<Word, std::vector<Word>> by_value;
          for (auto const& q : qs) {
            auto v = evaluate(Phi, q + zeta);
            if (!v) {
              throw InternalError("find_split: domains are not end-equal");
            }
            by_value[*v].push_back(q);
          }
          if (by_value.size() < 2) {
            continue;
          }
          Split s{y, qs, zeta, {}};
          for (auto& [v, g] : by_value) {
            s.groups.push_back(std::move(g));
          }
          std::sort(s.groups.begin(), s.groups.end());
          return s;
        }
      }
      return std::nullopt;
    }

    // Entries of Psi other than the fiber with image y, plus that fiber
    // restricted along zeta with the branch zeta itself left out.
    std::vector<Entry> without_branch(Hom const& Psi,
                                      Word const& y,
                                      Word const& zeta) {
      std::vector<Entry> t;
      for (auto const& e : Psi.entries()) {
        if (e.out != y) {
          t.push_back(e);
          continue;
        }
        for (auto const& w : path_code(Psi.alphabet(), zeta)) {
          if (w != zeta) {
            t.push_back({e.in + w, e.out + w});
          }
        }
      }
      return t;
    }

    Letter letter(int a) {
      return static_cast<Letter>(a);
    }

  }  // namespace

  Hom r_between(Hom const& phi, Hom const& psi) {
    if (!r_leq(psi, phi) || r_leq(phi, psi)) {
      throw OrderViolation("r_between: need psi <_R phi strictly");
    }
    PrefixCode const  p = image_code(phi);
    PrefixCode const  q = image_code(psi);
    std::size_t const L = std::max(p.max_length(), q.max_length()) + 1;
    auto              w = escape_word(p, q, L);
    if (!w) {
      throw InternalError("r_between: no escape word");
    }
    std::vector<Word> d(q.begin(), q.end());
    d.push_back(*w);
    return Hom::partial_identity(prune(phi.alphabet(), std::move(d)));
  }

  Hom l_between(Hom const& phi, Hom const& psi) {
    if (!l_leq(psi, phi) || l_leq(phi, psi)) {
      throw OrderViolation("l_between: need psi <_L phi strictly");
    }
    Alphabet const& A   = phi.alphabet();
    Hom const       Phi = pc_form(phi);

    if (!ends_subset(phi.domain_code(), psi.domain_code())) {
      // Drop the a_1-branch below x s, simultaneously for the whole fiber of
      // x, so the domain stays a union of classes of phi.
      auto branch = outside_branch(Phi, psi);
      if (!branch) {
        throw InternalError("l_between: no branch outside Dom(psi)");
      }
      auto const& [x, s]  = *branch;
      auto const  fiber   = fiber_of(Phi, x);
      Word const  dropped = s + letter(0);
      std::vector<Entry> t;
      for (auto const& e : Phi.entries()) {
        if (!std::binary_search(fiber.begin(), fiber.end(), e.in)) {
          t.push_back(e);
          continue;
        }
        for (auto const& w : path_code(A, dropped)) {
          if (w != dropped) {
            t.push_back({e.in + w, e.out + w});
          }
        }
      }
      return Hom(A, std::move(t));
    }

    Hom const Psi   = pc_form(psi);
    auto      split = find_split(Phi, Psi);
    if (!split) {
      throw InternalError("l_between: no fiber of psi splits under phi");
    }
    auto const& [y, qs, zeta, groups] = *split;
    std::size_t const s = groups.size();
    std::size_t       depth = 0;
    for (std::size_t n = 1; n < s; n *= A.k()) {
      ++depth;
    }
    auto const         codes = words_of_length(A, depth);
    std::vector<Entry> t     = without_branch(Psi, y, zeta);
    Word const         base  = y + zeta;
    for (std::size_t j = 0; j < s; ++j) {
      for (auto const& q : groups[j]) {
        t.push_back({q + zeta + letter(0), base + letter(0) + codes[j]});
      }
    }
    for (int a = 1; a < A.k(); ++a) {
      for (auto const& q : qs) {
        t.push_back({q + zeta + letter(a), base + letter(a)});
      }
    }
    return Hom(A, std::move(t));
  }

  Hom l_between_in_Rclass(Hom const& phi, Hom const& psi) {
    if (!r_equiv(phi, psi) || !l_leq(psi, phi) || l_leq(phi, psi)) {
      throw OrderViolation(
          "l_between_in_Rclass: need phi R-equivalent to psi and psi <_L phi "
          "strictly");
    }
    Alphabet const& A   = phi.alphabet();
    int const       k   = A.k();
    Hom const       Phi = pc_form(phi);
    Hom const       Psi = pc_form(psi);

    if (!ends_subset(phi.domain_code(), psi.domain_code())) {
      auto branch = outside_branch(Phi, psi);
      if (!branch) {
        throw InternalError("l_between_in_Rclass: no branch outside Dom(psi)");
      }
      auto const& [x, s] = *branch;
      auto const [y1, q1] = fibers(Psi).front();
      std::vector<Entry> t;
      for (auto const& e : Psi.entries()) {
        if (e.out != y1) {
          t.push_back(e);
        }
      }
      // Q1 a1 moves down to y1 a1 a1; the freed images y1 a1 a_j (j >= 2)
      // are taken by a new class U a1 a_j outside Dom(psi).
      for (auto const& q : q1) {
        t.push_back({q + letter(0), y1 + letter(0) + letter(0)});
        for (int a = 1; a < k; ++a) {
          t.push_back({q + letter(a), y1 + letter(a)});
        }
      }
      for (auto const& u : fiber_of(Phi, x)) {
        for (int a = 1; a < k; ++a) {
          t.push_back({u + s + letter(0) + letter(a),
                       y1 + letter(0) + letter(a)});
        }
      }
      return Hom(A, std::move(t));
    }

    auto split = find_split(Phi, Psi);
    if (!split) {
      throw InternalError("l_between_in_Rclass: no fiber splits under phi");
    }
    auto const& [y, qs, zeta, groups] = *split;
    std::vector<Word> const& p1 = groups.front();
    std::vector<Word>        rest;
    for (auto const& q : qs) {
      if (!std::binary_search(p1.begin(), p1.end(), q)) {
        rest.push_back(q);
      }
    }
    Word const base = y + zeta;
    // Classes P1 a_i, (Q1 \ P1) a_i for i < k, and Q1 a_k, in this order,
    // receive base.{a1a1, ..., a1ak, a2, ..., ak}.
    std::vector<Word> images;
    for (int a = 0; a < k; ++a) {
      images.push_back(base + letter(0) + letter(a));
    }
    for (int a = 1; a < k; ++a) {
      images.push_back(base + letter(a));
    }
    std::vector<Entry> t = without_branch(Psi, y, zeta);
    std::array<std::vector<Word> const*, 2> const classes{&p1, &rest};
    std::size_t                                   n = 0;
    for (int a = 0; a + 1 < k; ++a) {
      for (auto const* cls : classes) {
        for (auto const& q : *cls) {
          t.push_back({q + zeta + letter(a), images[n]});
        }
        ++n;
      }
    }
    for (auto const& q : qs) {
      t.push_back({q + zeta + letter(k - 1), images[n]});
    }
    return Hom(A, std::move(t));
  }

  Hom r_between_in_Lclass(Hom const& phi, Hom const& psi) {
    if (!l_equiv(phi, psi) || !r_leq(psi, phi) || r_leq(phi, psi)) {
      throw OrderViolation(
          "r_between_in_Lclass: need phi L-equivalent to psi and psi <_R phi "
          "strictly");
    }
    Alphabet const&   A   = phi.alphabet();
    Hom const         Psi = pc_form(psi);
    PrefixCode const  p   = image_code(phi);
    PrefixCode const  q   = image_code(Psi);
    std::size_t const L   = std::max(p.max_length(), q.max_length()) + 1;
    auto              w   = escape_word(p, q, L);
    if (!w) {
      throw InternalError("r_between_in_Lclass: no escape word");
    }
    auto const [v1, p1] = fibers(Psi).front();
    std::vector<Entry> t;
    for (auto const& e : Psi.entries()) {
      if (e.out != v1) {
        t.push_back(e);
      }
    }
    // P1 a2 keeps the old image v1; the other branches of P1 go to the
    // fresh region below w.
    for (auto const& x : p1) {
      for (int a = 0; a < A.k(); ++a) {
        if (a == 1) {
          t.push_back({x + letter(a), v1});
        } else {
          t.push_back({x + letter(a), *w + letter(a)});
        }
      }
    }
    return Hom(A, std::move(t));
  }

}  // namespace mk1
