#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace mk1::oracle {

  std::vector<Str> words_exact(int k, std::size_t n) {
    std::vector<Str> out{Str()};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Str> next;
      for (auto const& w : out) {
        for (int a = 0; a < k; ++a) {
          next.push_back(w + static_cast<char>(a));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  std::vector<Str> words_upto(int k, std::size_t n) {
    std::vector<Str> out;
    for (std::size_t i = 0; i <= n; ++i) {
      auto w = words_exact(k, i);
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  namespace {
    // Codes inside the subtree at `root` of the given remaining depth.
    void codes_below(int k, Str const& root, std::size_t depth, std::vector<Code>& out) {
      out.push_back({});
      out.push_back({root});
      if (depth == 0) {
        return;
      }
      std::vector<std::vector<Code>> per_child(k);
      for (int a = 0; a < k; ++a) {
        codes_below(k, root + static_cast<char>(a), depth - 1, per_child[a]);
      }
      // Cartesian product over children, skipping the all-empty choice
      // (already counted as {}).
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per_child[i].size()) {
          pick[i] = 0;
          ++i;
        }
        if (i == pick.size()) {
          break;
        }
        Code c;
        for (int a = 0; a < k; ++a) {
          auto const& part = per_child[a][pick[a]];
          c.insert(c.end(), part.begin(), part.end());
        }
        out.push_back(std::move(c));
      }
    }
  }  // namespace

  std::vector<Code> prefix_codes_upto(int k, std::size_t depth) {
    std::vector<Code> out;
    codes_below(k, Str(), depth, out);
    return out;
  }

  bool has_prefix_in(Code const& code, Str const& w) {
    return std::any_of(code.begin(), code.end(), [&](Str const& p) {
      return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
    });
  }

  std::size_t max_len(Code const& code) {
    std::size_t n = 0;
    for (auto const& w : code) {
      n = std::max(n, w.size());
    }
    return n;
  }

  bool ends_subset(int k, Code const& q, Code const& p) {
    std::size_t const L = std::max(max_len(q), max_len(p));
    for (auto const& w : words_exact(k, L)) {
      if (has_prefix_in(q, w) && !has_prefix_in(p, w)) {
        return false;
      }
    }
    return true;
  }

  bool kraft_is_one(int k, Code const& code) {
    std::size_t const L = max_len(code);
    std::uint64_t     total = 0, whole = 1;
    for (std::size_t i = 0; i < L; ++i) {
      whole *= k;
    }
    for (auto const& w : code) {
      std::uint64_t t = 1;
      for (std::size_t i = w.size(); i < L; ++i) {
        t *= k;
      }
      total += t;
    }
    return !code.empty() && total == whole;
  }

  std::optional<Str> eval(Table const& t, Str const& w) {
    for (auto const& [x, y] : t) {
      if (x.size() <= w.size() && w.compare(0, x.size(), x) == 0) {
        return y + w.substr(x.size());
      }
    }
    return std::nullopt;
  }

  bool agree_on(int k, Table const& a, Table const& b, std::size_t L) {
    for (auto const& w : words_exact(k, L)) {
      if (eval(a, w) != eval(b, w)) {
        return false;
      }
    }
    return true;
  }

  std::size_t table_depth(Table const& t) {
    std::size_t n = 0;
    for (auto const& [x, y] : t) {
      n = std::max({n, x.size(), y.size()});
    }
    return n;
  }

  bool is_composite_on(int k, Table const& ab, Table const& a, Table const& b,
                       std::size_t L) {
    for (auto const& w : words_exact(k, L)) {
      auto const mid  = eval(b, w);
      auto const want = mid ? eval(a, *mid) : std::nullopt;
      if (eval(ab, w) != want) {
        return false;
      }
    }
    return true;
  }

  namespace {
    std::size_t in_depth(Table const& t) {
      std::size_t n = 0;
      for (auto const& [x, y] : t) {
        n = std::max(n, x.size());
      }
      return n;
    }

    std::size_t out_depth(Table const& t) {
      std::size_t n = 0;
      for (auto const& [x, y] : t) {
        n = std::max(n, y.size());
      }
      return n;
    }

    Code domain(Table const& t) {
      Code c;
      for (auto const& [x, y] : t) {
        c.push_back(x);
      }
      return c;
    }
  }  // namespace

  bool r_below(int k, Table const& psi, Table const& phi) {
    Code im_psi, im_phi;
    for (auto const& [x, y] : psi) {
      im_psi.push_back(y);
    }
    for (auto const& [x, y] : phi) {
      im_phi.push_back(y);
    }
    return ends_subset(k, im_psi, im_phi);
  }

  bool l_below(int k, Table const& psi, Table const& phi) {
    if (!ends_subset(k, domain(psi), domain(phi))) {
      return false;
    }
    // phi(x0 u) = phi(x1) with x0, x1 domain words forces |x0 u| <= in + out.
    auto const words = words_upto(k, in_depth(phi) + out_depth(phi));
    auto const tails = words_exact(k, in_depth(psi));
    std::vector<std::optional<Str>> val;
    for (auto const& x : words) {
      val.push_back(eval(phi, x));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        if (!val[i] || val[i] != val[j]) {
          continue;
        }
        for (auto const& t : tails) {
          if (eval(psi, words[i] + t) != eval(psi, words[j] + t)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::optional<bool> related(Blocks const& c, Str const& u, Str const& v) {
    auto locate = [&](Str const& w) -> std::optional<std::pair<std::size_t, Str>> {
      for (std::size_t b = 0; b < c.size(); ++b) {
        for (auto const& p : c[b]) {
          if (p.size() <= w.size() && w.compare(0, p.size(), p) == 0) {
            return std::make_pair(b, w.substr(p.size()));
          }
        }
      }
      return std::nullopt;
    };
    auto const lu = locate(u);
    auto const lv = locate(v);
    if (!lu || !lv) {
      return std::nullopt;
    }
    return *lu == *lv;
  }

  bool refines(int k, Blocks const& c2, Blocks const& c1) {
    Code d1, d2;
    std::size_t depth2 = 0;
    for (auto const& b : c1) {
      d1.insert(d1.end(), b.begin(), b.end());
    }
    for (auto const& b : c2) {
      d2.insert(d2.end(), b.begin(), b.end());
      depth2 = std::max(depth2, max_len(b));
    }
    if (!ends_subset(k, d2, d1)) {
      return false;
    }
    auto const tails = words_exact(k, depth2);
    for (auto const& b : c1) {
      for (auto const& p : b) {
        for (auto const& q : b) {
          for (auto const& t : tails) {
            Str const u = p + t, v = q + t;
            if ((has_prefix_in(d2, u) || has_prefix_in(d2, v)) && related(c2, u, v) != true) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::vector<std::vector<Code>> set_partitions(Code const& items) {
    std::vector<std::vector<Code>> out;
    std::vector<Code>              cur;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == items.size()) {
        out.push_back(cur);
        return;
      }
      for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(items[i]);
        go(i + 1);
        cur[b].pop_back();
      }
      cur.push_back({items[i]});
      go(i + 1);
      cur.pop_back();
    };
    go(0);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean formulas
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::shared_ptr<BoolNode> grow(std::mt19937_64& rng, int vars, int depth) {
      auto n = std::make_shared<BoolNode>();
      std::uniform_int_distribution<int> pick(0, 9);
      int const r = depth == 0 ? 0 : pick(rng);
      if (r <= 2 || vars == 0) {
        if (vars == 0 || pick(rng) == 0) {
          n->kind  = BoolNode::konst;
          n->value = pick(rng) % 2;
        } else {
          n->kind  = BoolNode::var;
          n->index = std::uniform_int_distribution<int>(0, vars - 1)(rng);
        }
        return n;
      }
      if (r == 3) {
        n->kind = BoolNode::neg;
        n->args.push_back(grow(rng, vars, depth - 1));
        return n;
      }
      n->kind = r <= 5 ? BoolNode::conj : r <= 8 ? BoolNode::disj : BoolNode::exor;
      int const arity = 2 + (pick(rng) == 0);
      for (int i = 0; i < arity; ++i) {
        n->args.push_back(grow(rng, vars, depth - 1));
      }
      return n;
    }

    std::string render(BoolNode const& n, int m) {
      switch (n.kind) {
        case BoolNode::konst:
          return n.value ? "1" : "0";
        case BoolNode::var:
          return n.index < m ? "x" + std::to_string(n.index + 1)
                             : "y" + std::to_string(n.index - m + 1);
        default:
          break;
      }
      std::string s = n.kind == BoolNode::neg    ? "(not"
                      : n.kind == BoolNode::conj ? "(and"
                      : n.kind == BoolNode::disj ? "(or"
                                                 : "(xor";
      for (auto const& a : n.args) {
        s += " " + render(*a, m);
      }
      return s + ")";
    }
  }  // namespace

  RandomFormula random_formula(std::mt19937_64& rng, int m, int n, int depth) {
    auto root = grow(rng, m + n, depth);
    return {root, m, n, render(*root, m)};
  }

  bool eval_bool(BoolNode const& f, std::vector<bool> const& v) {
    switch (f.kind) {
      case BoolNode::konst:
        return f.value;
      case BoolNode::var:
        return v.at(f.index);
      case BoolNode::neg:
        return !eval_bool(*f.args[0], v);
      case BoolNode::conj: {
        bool r = true;
        for (auto const& a : f.args) {
          r = r && eval_bool(*a, v);
        }
        return r;
      }
      case BoolNode::disj: {
        bool r = false;
        for (auto const& a : f.args) {
          r = r || eval_bool(*a, v);
        }
        return r;
      }
      case BoolNode::exor: {
        int ones = 0;
        for (auto const& a : f.args) {
          ones += eval_bool(*a, v);
        }
        return ones % 2 == 1;
      }
    }
    return false;
  }

  bool eval_bits(BoolNode const& f, int vars, std::uint64_t bits) {
    std::vector<bool> v(vars);
    for (int p = 0; p < vars; ++p) {
      v[p] = (bits >> (vars - 1 - p)) & 1;
    }
    return eval_bool(f, v);
  }

  bool forall_exists(BoolNode const& f, int m_exists, int n_forall) {
    int const vars = m_exists + n_forall;
    for (std::uint64_t y = 0; y < (1ULL << n_forall); ++y) {
      bool any = false;
      for (std::uint64_t x = 0; x < (1ULL << m_exists); ++x) {
        std::vector<bool> v(vars);
        for (int i = 0; i < m_exists; ++i) {
          v[i] = (x >> (m_exists - 1 - i)) & 1;
        }
        for (int i = 0; i < n_forall; ++i) {
          v[m_exists + i] = (y >> (n_forall - 1 - i)) & 1;
        }
        any = any || eval_bool(f, v);
      }
      if (!any) {
        return false;
      }
    }
    return true;
  }

  bool tautology(BoolNode const& f, int vars) {
    for (std::uint64_t r = 0; r < (1ULL << vars); ++r) {
      if (!eval_bits(f, vars, r)) {
        return false;
      }
    }
    return true;
  }

}  // namespace mk1::oracle
