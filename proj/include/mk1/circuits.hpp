#ifndef MK1_CIRCUITS_HPP_
#define MK1_CIRCUITS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mk1/hom.hpp"

namespace mk1 {

  //! Boolean formula over two variable blocks: x1..xm (existential block,
  //! listed first) and y1..yn (universal block).  Assignments are flattened
  //! as x1..xm y1..yn.
  class Formula {
   public:
    enum class Op { konst, var_x, var_y, op_not, op_and, op_or, op_xor };

    struct Node {
      Op                                 op;
      std::size_t                        index = 0;  // variables: 1-based
      bool                               value = false;
      std::vector<std::shared_ptr<Node>> args;
    };

    Formula(std::shared_ptr<Node const> root, std::size_t m, std::size_t n);

    //! Parses an s-expression; block sizes default to the largest index used.
    static Formula parse(std::string_view text);
    static Formula parse(std::string_view text, std::size_t m, std::size_t n);

    static Formula constant(bool v);
    static Formula x(std::size_t i);
    static Formula y(std::size_t i);
    static Formula negation(Formula const& a);
    static Formula conjunction(Formula const& a, Formula const& b);
    static Formula disjunction(Formula const& a, Formula const& b);
    static Formula exclusive_or(Formula const& a, Formula const& b);

    std::size_t m() const noexcept {
      return _m;
    }
    std::size_t n() const noexcept {
      return _n;
    }
    std::size_t arity() const noexcept {
      return _m + _n;
    }
    Node const& root() const noexcept {
      return *_root;
    }

    //! Same tree with the block sizes widened.
    Formula with_blocks(std::size_t m, std::size_t n) const;

    std::string str() const;

   private:
    std::shared_ptr<Node const> _root;
    std::size_t                 _m;
    std::size_t                 _n;
  };

  bool eval_formula(Formula const& f, std::vector<bool> const& assignment);
  //! Assignment packed in an integer, first variable in the highest bit.
  bool eval_formula_bits(Formula const& f, std::uint64_t bits);

  bool forall_exists_eval(Formula const& f,
                          std::size_t    n_forall,
                          std::size_t    m_exists,
                          std::uint64_t  budget = std::uint64_t(1) << 20);

  bool is_tautology(Formula const& f);

  //! b or f, with b a new universal variable y_{n+1}.
  Formula qbf1_transform(Formula const& f);

  //! Truth table with m input bits and n output bits.  Row r is the input
  //! whose first bit is the highest bit of r; outputs are packed the same way.
  class TruthFun {
   public:
    TruthFun(std::size_t m, std::size_t n, std::vector<std::uint64_t> rows);

    std::size_t m() const noexcept {
      return _m;
    }
    std::size_t n() const noexcept {
      return _n;
    }
    std::vector<std::uint64_t> const& rows() const noexcept {
      return _rows;
    }
    std::uint64_t operator()(std::uint64_t x) const {
      return _rows[x];
    }

    bool operator==(TruthFun const&) const = default;

   private:
    std::size_t                _m;
    std::size_t                _n;
    std::vector<std::uint64_t> _rows;
  };

  //! C(x, y) = y if f(x, y) = 1, else 1^n; input is x then y.
  TruthFun gadget_surj(Formula const& f, std::size_t m, std::size_t n);

  //! F(x, b) = (x, b) if B(x) = 1 or b = 0, else 0^{n+1}.
  TruthFun gadget_inj(Formula const& b, std::size_t n);
  //! As above with else-output (0, ..., 0, 1).
  TruthFun gadget_inj_printed(Formula const& b, std::size_t n);

  //! The single-output function of f.
  TruthFun truth_table(Formula const& f);

  bool is_surjective_fun(TruthFun const& f);
  bool is_injective_fun(TruthFun const& f);

  //! Table over {a, b} with 0 -> a, 1 -> b; domain A^m.
  Hom to_element(TruthFun const& f);

  //! id_{aA*} o beta = 0, beta the element of the single-output function of B.
  bool zero_word_check(Formula const& b);

}  // namespace mk1

#endif  // MK1_CIRCUITS_HPP_
