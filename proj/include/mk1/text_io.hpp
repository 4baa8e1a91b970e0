#ifndef MK1_TEXT_IO_HPP_
#define MK1_TEXT_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "mk1/circuits.hpp"
#include "mk1/congruence.hpp"
#include "mk1/genwords.hpp"
#include "mk1/hom.hpp"

namespace mk1 {

  //! "alphabet k=<n>" followed by "map <word> -> <word>" lines.
  Hom         parse_hom(std::string_view text);
  std::string write_hom(Hom const& h);

  //! "alphabet k=<n>" followed by "block w1, w2, ..." lines.
  Congruence  parse_cong(std::string_view text);
  std::string write_cong(Congruence const& c);

  //! Brace form {aa,ab,b}; {} is the empty code.
  PrefixCode parse_code(std::string_view text, Alphabet const& alphabet);

  //! Header lines "gamma <file.hom> as <NAME>", an optional
  //! "apply-order: right-to-left", and one "word: ..." line.  Relative
  //! paths are resolved against `base_dir`.
  GenWord     parse_gen(std::string_view text, std::filesystem::path const& base_dir);
  GenWord     parse_gen_words(std::shared_ptr<GammaSet const> gamma,
                              std::string_view                word_text);

  //! "truthfun m=<m> n=<n>" and one hex row per line.
  TruthFun    parse_truthfun(std::string_view text);
  std::string write_truthfun(TruthFun const& f);

  std::string read_file(std::filesystem::path const& path);
  void        write_file(std::filesystem::path const& path, std::string const& text);

}  // namespace mk1

#endif  // MK1_TEXT_IO_HPP_
