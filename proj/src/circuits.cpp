#include "mk1/circuits.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mk1 {

  namespace {
    using Node = Formula::Node;
    using Op   = Formula::Op;

    std::shared_ptr<Node> make(Op op, std::vector<std::shared_ptr<Node>> args) {
      auto n  = std::make_shared<Node>();
      n->op   = op;
      n->args = std::move(args);
      return n;
    }

    std::shared_ptr<Node> clone(Node const& n) {
      auto c = std::make_shared<Node>(n);
      return c;
    }

    void max_indices(Node const& n, std::size_t& m, std::size_t& k) {
      if (n.op == Op::var_x) {
        m = std::max(m, n.index);
      } else if (n.op == Op::var_y) {
        k = std::max(k, n.index);
      }
      for (auto const& a : n.args) {
        max_indices(*a, m, k);
      }
    }

    bool eval(Node const& n, std::size_t m, std::vector<bool> const& v) {
      switch (n.op) {
        case Op::konst:
          return n.value;
        case Op::var_x:
          return v[n.index - 1];
        case Op::var_y:
          return v[m + n.index - 1];
        case Op::op_not:
          return !eval(*n.args[0], m, v);
        case Op::op_and:
          return std::all_of(n.args.begin(), n.args.end(), [&](auto const& a) {
            return eval(*a, m, v);
          });
        case Op::op_or:
          return std::any_of(n.args.begin(), n.args.end(), [&](auto const& a) {
            return eval(*a, m, v);
          });
        case Op::op_xor: {
          bool r = false;
          for (auto const& a : n.args) {
            r = r != eval(*a, m, v);
          }
          return r;
        }
      }
      return false;
    }

    std::string render(Node const& n) {
      switch (n.op) {
        case Op::konst:
          return n.value ? "1" : "0";
        case Op::var_x:
          return "x" + std::to_string(n.index);
        case Op::var_y:
          return "y" + std::to_string(n.index);
        default:
          break;
      }
      std::string head = n.op == Op::op_not   ? "not"
                         : n.op == Op::op_and ? "and"
                         : n.op == Op::op_or  ? "or"
                                              : "xor";
      std::string out = "(" + head;
      for (auto const& a : n.args) {
        out += " " + render(*a);
      }
      return out + ")";
    }

    class Parser {
     public:
      explicit Parser(std::string_view s) : _s(s) {}

      std::shared_ptr<Node> parse_all() {
        auto n = parse();
        skip();
        if (_pos != _s.size()) {
          fail("trailing input");
        }
        return n;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("formula: " + what + " at offset "
                         + std::to_string(_pos));
      }

      void skip() {
        while (_pos < _s.size()
               && std::isspace(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
      }

      std::string token() {
        skip();
        std::size_t start = _pos;
        while (_pos < _s.size() && _s[_pos] != '(' && _s[_pos] != ')'
               && !std::isspace(static_cast<unsigned char>(_s[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a token");
        }
        return std::string(_s.substr(start, _pos - start));
      }

      std::shared_ptr<Node> parse() {
        skip();
        if (_pos >= _s.size()) {
          fail("unexpected end of input");
        }
        if (_s[_pos] != '(') {
          return atom(token());
        }
        ++_pos;
        std::string const head = token();
        Op                op;
        if (head == "not") {
          op = Op::op_not;
        } else if (head == "and") {
          op = Op::op_and;
        } else if (head == "or") {
          op = Op::op_or;
        } else if (head == "xor") {
          op = Op::op_xor;
        } else {
          fail("unknown operator '" + head + "'");
        }
        std::vector<std::shared_ptr<Node>> args;
        while (true) {
          skip();
          if (_pos >= _s.size()) {
            fail("missing ')'");
          }
          if (_s[_pos] == ')') {
            ++_pos;
            break;
          }
          args.push_back(parse());
        }
        if (op == Op::op_not ? args.size() != 1 : args.empty()) {
          fail("wrong number of arguments to '" + head + "'");
        }
        return make(op, std::move(args));
      }

      std::shared_ptr<Node> atom(std::string const& t) {
        auto n = std::make_shared<Node>();
        if (t == "0" || t == "1" || t == "true" || t == "false") {
          n->op    = Op::konst;
          n->value = t == "1" || t == "true";
          return n;
        }
        if (t.size() >= 2 && (t[0] == 'x' || t[0] == 'y')
            && std::all_of(t.begin() + 1, t.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          n->op    = t[0] == 'x' ? Op::var_x : Op::var_y;
          n->index = std::stoul(t.substr(1));
          if (n->index == 0) {
            fail("variable indices start at 1");
          }
          return n;
        }
        fail("bad atom '" + t + "'");
      }

      std::string_view _s;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Formula::Formula(std::shared_ptr<Node const> root, std::size_t m, std::size_t n)
      : _root(std::move(root)), _m(m), _n(n) {
    std::size_t mm = 0, nn = 0;
    max_indices(*_root, mm, nn);
    if (mm > _m || nn > _n) {
      throw DomainError("formula uses variables beyond its declared arity");
    }
    if (_m + _n > 62) {
      throw DomainError("formula arity above 62 is not supported");
    }
  }

  Formula Formula::parse(std::string_view text) {
    auto        root = Parser(text).parse_all();
    std::size_t m = 0, n = 0;
    max_indices(*root, m, n);
    return Formula(root, m, n);
  }

  Formula Formula::parse(std::string_view text, std::size_t m, std::size_t n) {
    return Formula(Parser(text).parse_all(), m, n);
  }

  Formula Formula::constant(bool v) {
    auto n   = std::make_shared<Node>();
    n->op    = Op::konst;
    n->value = v;
    return Formula(n, 0, 0);
  }

  Formula Formula::x(std::size_t i) {
    auto n   = std::make_shared<Node>();
    n->op    = Op::var_x;
    n->index = i;
    return Formula(n, i, 0);
  }

  Formula Formula::y(std::size_t i) {
    auto n   = std::make_shared<Node>();
    n->op    = Op::var_y;
    n->index = i;
    return Formula(n, 0, i);
  }

  Formula Formula::negation(Formula const& a) {
    return Formula(make(Op::op_not, {clone(a.root())}), a.m(), a.n());
  }

  namespace {
    Formula binary(Op op, Formula const& a, Formula const& b) {
      return Formula(make(op, {clone(a.root()), clone(b.root())}),
                     std::max(a.m(), b.m()),
                     std::max(a.n(), b.n()));
    }
  }  // namespace

  Formula Formula::conjunction(Formula const& a, Formula const& b) {
    return binary(Op::op_and, a, b);
  }
  Formula Formula::disjunction(Formula const& a, Formula const& b) {
    return binary(Op::op_or, a, b);
  }
  Formula Formula::exclusive_or(Formula const& a, Formula const& b) {
    return binary(Op::op_xor, a, b);
  }

  Formula Formula::with_blocks(std::size_t m, std::size_t n) const {
    return Formula(_root, m, n);
  }

  std::string Formula::str() const {
    return render(*_root);
  }

  bool eval_formula(Formula const& f, std::vector<bool> const& assignment) {
    if (assignment.size() != f.arity()) {
      throw DomainError("eval_formula: expected " + std::to_string(f.arity())
                        + " values, got " + std::to_string(assignment.size()));
    }
    return eval(f.root(), f.m(), assignment);
  }

  bool eval_formula_bits(Formula const& f, std::uint64_t bits) {
    std::size_t const a = f.arity();
    std::vector<bool> v(a);
    for (std::size_t p = 0; p < a; ++p) {
      v[p] = (bits >> (a - 1 - p)) & 1;
    }
    return eval(f.root(), f.m(), v);
  }

  bool forall_exists_eval(Formula const& f,
                          std::size_t    n_forall,
                          std::size_t    m_exists,
                          std::uint64_t  budget) {
    if (n_forall + m_exists != f.arity()) {
      throw DomainError("forall_exists_eval: block sizes do not match arity "
                        + std::to_string(f.arity()));
    }
    if ((std::uint64_t(1) << f.arity()) > budget) {
      throw ResourceError("forall_exists_eval: 2^"
                          + std::to_string(f.arity()) + " exceeds budget");
    }
    for (std::uint64_t y = 0; y < (std::uint64_t(1) << n_forall); ++y) {
      bool found = false;
      for (std::uint64_t x = 0; x < (std::uint64_t(1) << m_exists) && !found;
           ++x) {
        found = eval_formula_bits(f, (x << n_forall) | y);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_tautology(Formula const& f) {
    for (std::uint64_t r = 0; r < (std::uint64_t(1) << f.arity()); ++r) {
      if (!eval_formula_bits(f, r)) {
        return false;
      }
    }
    return true;
  }

  Formula qbf1_transform(Formula const& f) {
    Formula b = Formula::y(f.n() + 1);
    return Formula::disjunction(b, f).with_blocks(f.m(), f.n() + 1);
  }

  ////////////////////////////////////////////////////////////////////////
  // Truth tables
  ////////////////////////////////////////////////////////////////////////

  TruthFun::TruthFun(std::size_t m, std::size_t n, std::vector<std::uint64_t> rows)
      : _m(m), _n(n), _rows(std::move(rows)) {
    if (m > 30 || n > 63) {
      throw DomainError("truth table too large");
    }
    if (_rows.size() != (std::size_t(1) << m)) {
      throw DomainError("truth table needs exactly 2^m rows");
    }
    for (auto r : _rows) {
      if (n < 64 && (r >> n) != 0) {
        throw DomainError("truth table row wider than n bits");
      }
    }
  }

  TruthFun gadget_surj(Formula const& f, std::size_t m, std::size_t n) {
    if (f.m() > m || f.n() > n) {
      throw DomainError("gadget_surj: formula uses more than m + n variables");
    }
    Formula const     g   = f.with_blocks(m, n);
    std::size_t const a   = m + n;
    std::uint64_t const ones = (std::uint64_t(1) << n) - 1;
    if (!eval_formula_bits(g, (std::uint64_t(1) << a) - 1)) {
      throw DomainError("gadget_surj: formula must be 1 on the all-ones input");
    }
    std::vector<std::uint64_t> rows(std::size_t(1) << a);
    for (std::uint64_t r = 0; r < rows.size(); ++r) {
      rows[r] = eval_formula_bits(g, r) ? (r & ones) : ones;
    }
    return TruthFun(a, n, std::move(rows));
  }

  namespace {
    TruthFun injectiveness_gadget(Formula const& b,
                                  std::size_t    n,
                                  std::uint64_t  otherwise) {
      if (b.n() != 0 || b.m() > n) {
        throw DomainError("gadget_inj: B must use only x1..xn");
      }
      Formula const              g = b.with_blocks(n, 0);
      std::vector<std::uint64_t> rows(std::size_t(1) << (n + 1));
      for (std::uint64_t r = 0; r < rows.size(); ++r) {
        bool const bit = r & 1;
        rows[r] = (!bit || eval_formula_bits(g, r >> 1)) ? r : otherwise;
      }
      return TruthFun(n + 1, n + 1, std::move(rows));
    }
  }  // namespace

  TruthFun gadget_inj(Formula const& b, std::size_t n) {
    return injectiveness_gadget(b, n, 0);
  }

  TruthFun gadget_inj_printed(Formula const& b, std::size_t n) {
    return injectiveness_gadget(b, n, 1);
  }

  TruthFun truth_table(Formula const& f) {
    std::vector<std::uint64_t> rows(std::size_t(1) << f.arity());
    for (std::uint64_t r = 0; r < rows.size(); ++r) {
      rows[r] = eval_formula_bits(f, r);
    }
    return TruthFun(f.arity(), 1, std::move(rows));
  }

  bool is_surjective_fun(TruthFun const& f) {
    std::vector<bool> hit(std::size_t(1) << f.n());
    for (auto r : f.rows()) {
      hit[r] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_injective_fun(TruthFun const& f) {
    std::set<std::uint64_t> seen(f.rows().begin(), f.rows().end());
    return seen.size() == f.rows().size();
  }

  namespace {
    Word bits_to_word(std::uint64_t v, std::size_t len) {
      Word w;
      for (std::size_t p = 0; p < len; ++p) {
        w.push_back(static_cast<Letter>((v >> (len - 1 - p)) & 1));
      }
      return w;
    }
  }  // namespace

  Hom to_element(TruthFun const& f) {
    std::vector<Entry> t;
    for (std::uint64_t x = 0; x < f.rows().size(); ++x) {
      t.push_back({bits_to_word(x, f.m()), bits_to_word(f(x), f.n())});
    }
    return Hom(Alphabet(2), std::move(t));
  }

  bool zero_word_check(Formula const& b) {
    Alphabet const A(2);
    Hom const      beta = to_element(truth_table(b));
    Hom const      id_a = Hom::partial_identity(PrefixCode(A, {Word{0}}));
    return compose(id_a, beta).table().is_zero();
  }

}  // namespace mk1
