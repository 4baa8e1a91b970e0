#include "mk1/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

namespace mk1 {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    struct Line {
      std::size_t      number;
      std::string_view text;
    };

    // Non-blank, non-comment lines, trimmed.
    std::vector<Line> content_lines(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      while (!text.empty()) {
        ++number;
        auto const       nl   = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        line = trim(line);
        if (!line.empty() && line.front() != '#') {
          out.push_back({number, line});
        }
      }
      return out;
    }

    [[noreturn]] void fail(char const* what, Line const& line, std::string const& msg) {
      throw ParseError(std::string(what) + " line " + std::to_string(line.number)
                       + ": " + msg);
    }

    std::optional<Alphabet> alphabet_header(std::string_view line) {
      static std::regex const re(R"(alphabet\s+k\s*=\s*(\d+))");
      std::match_results<std::string_view::const_iterator> m;
      if (!std::regex_match(line.begin(), line.end(), m, re)) {
        return std::nullopt;
      }
      return Alphabet(std::stoi(m[1].str()));
    }

    Alphabet expect_header(char const* what, std::vector<Line> const& lines) {
      if (lines.empty()) {
        throw ParseError(std::string(what) + ": missing 'alphabet k=<n>' header");
      }
      auto a = alphabet_header(lines.front().text);
      if (!a) {
        fail(what, lines.front(), "expected 'alphabet k=<n>'");
      }
      return *a;
    }

    std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      while (true) {
        auto const i = s.find(sep);
        out.push_back(trim(s.substr(0, i)));
        if (i == std::string_view::npos) {
          return out;
        }
        s.remove_prefix(i + 1);
      }
    }
  }  // namespace

  Hom parse_hom(std::string_view text) {
    auto const         lines = content_lines(text);
    Alphabet const     A     = expect_header(".hom", lines);
    std::vector<Entry> t;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::string_view s = lines[i].text;
      if (s.substr(0, 4) != "map " && s.substr(0, 4) != "map\t") {
        fail(".hom", lines[i], "expected 'map <word> -> <word>'");
      }
      s.remove_prefix(4);
      auto const arrow = s.find("->");
      if (arrow == std::string_view::npos) {
        fail(".hom", lines[i], "missing '->'");
      }
      try {
        t.push_back({parse_word(trim(s.substr(0, arrow)), A),
                     parse_word(trim(s.substr(arrow + 2)), A)});
      } catch (Error const& e) {
        fail(".hom", lines[i], e.what());
      }
    }
    return Hom(A, std::move(t));
  }

  std::string write_hom(Hom const& h) {
    std::string out = "alphabet k=" + std::to_string(h.alphabet().k()) + "\n";
    for (auto const& e : h.entries()) {
      out += "map " + e.in.str() + " -> " + e.out.str() + "\n";
    }
    return out;
  }

  Congruence parse_cong(std::string_view text) {
    auto const                     lines = content_lines(text);
    Alphabet const                 A     = expect_header(".cong", lines);
    std::vector<std::vector<Word>> blocks;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::string_view s = lines[i].text;
      if (s.substr(0, 6) != "block " && s.substr(0, 6) != "block\t") {
        fail(".cong", lines[i], "expected 'block w1, w2, ...'");
      }
      std::vector<Word> b;
      try {
        for (auto w : split(s.substr(6), ',')) {
          b.push_back(parse_word(w, A));
        }
      } catch (Error const& e) {
        fail(".cong", lines[i], e.what());
      }
      blocks.push_back(std::move(b));
    }
    return Congruence(A, std::move(blocks));
  }

  std::string write_cong(Congruence const& c) {
    std::string out = "alphabet k=" + std::to_string(c.alphabet().k()) + "\n";
    for (auto const& b : c.blocks()) {
      out += "block ";
      for (std::size_t i = 0; i < b.size(); ++i) {
        out += (i ? ", " : "") + b[i].str();
      }
      out += "\n";
    }
    return out;
  }

  PrefixCode parse_code(std::string_view text, Alphabet const& alphabet) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
      throw ParseError("prefix code must be written as {w1,w2,...}");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<Word> words;
    if (!text.empty()) {
      for (auto w : split(text, ',')) {
        words.push_back(parse_word(w, alphabet));
      }
    }
    return PrefixCode(alphabet, std::move(words));
  }

  namespace {
    std::optional<std::size_t> tau_index(std::string_view tok) {
      for (std::string_view head : {"τ", "tau", "t"}) {
        if (tok.substr(0, head.size()) == head && tok.size() > head.size()) {
          auto const digits = tok.substr(head.size());
          if (std::all_of(digits.begin(), digits.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
              })) {
            return std::stoul(std::string(digits));
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  GenWord parse_gen_words(std::shared_ptr<GammaSet const> gamma,
                          std::string_view                word_text) {
    std::vector<Atom>  atoms;
    std::istringstream in{std::string(word_text)};
    std::string        tok;
    while (in >> tok) {
      if (gamma->contains(tok)) {
        atoms.push_back(Atom::gen(tok));
      } else if (auto i = tau_index(tok)) {
        atoms.push_back(Atom::tau(*i));
      } else {
        throw ParseError("unknown atom '" + tok + "'");
      }
    }
    return GenWord(std::move(gamma), std::move(atoms));
  }

  GenWord parse_gen(std::string_view text, std::filesystem::path const& base_dir) {
    auto const                                         lines = content_lines(text);
    std::optional<Alphabet>                            alphabet;
    std::vector<std::pair<std::string, Hom>>           gens;
    std::optional<std::string_view>                    word;
    static std::regex const gamma_re(R"(gamma\s+(.+?)\s+as\s+(\S+))");
    for (auto const& line : lines) {
      std::string_view const s = line.text;
      std::match_results<std::string_view::const_iterator> m;
      if (auto a = alphabet_header(s)) {
        alphabet = a;
      } else if (std::regex_match(s.begin(), s.end(), m, gamma_re)) {
        std::filesystem::path p = m[1].str();
        if (p.is_relative()) {
          p = base_dir / p;
        }
        try {
          gens.emplace_back(m[2].str(), parse_hom(read_file(p)));
        } catch (Error const& e) {
          fail(".gen", line, e.what());
        }
      } else if (s.substr(0, 12) == "apply-order:") {
        if (trim(s.substr(12)) != "right-to-left") {
          fail(".gen", line, "only 'apply-order: right-to-left' is supported");
        }
      } else if (s.substr(0, 5) == "word:") {
        if (word) {
          fail(".gen", line, "more than one 'word:' line");
        }
        word = s.substr(5);
      } else {
        fail(".gen", line, "unrecognized line");
      }
    }
    if (!word) {
      throw ParseError(".gen: missing 'word:' line");
    }
    if (!alphabet) {
      if (gens.empty()) {
        throw ParseError(".gen: no generators and no 'alphabet k=<n>' line");
      }
      alphabet = gens.front().second.alphabet();
    }
    auto gamma = std::make_shared<GammaSet>(*alphabet);
    for (auto& [name, h] : gens) {
      gamma->add(name, std::move(h));
    }
    return parse_gen_words(std::move(gamma), *word);
  }

  TruthFun parse_truthfun(std::string_view text) {
    auto const lines = content_lines(text);
    if (lines.empty()) {
      throw ParseError("truthfun: empty input");
    }
    static std::regex const re(R"(truthfun\s+m\s*=\s*(\d+)\s+n\s*=\s*(\d+))");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(lines[0].text.begin(), lines[0].text.end(), m, re)) {
      fail("truthfun", lines[0], "expected 'truthfun m=<m> n=<n>'");
    }
    std::size_t const          mm = std::stoul(m[1].str());
    std::size_t const          nn = std::stoul(m[2].str());
    std::vector<std::uint64_t> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::string const s(lines[i].text);
      std::size_t       used = 0;
      try {
        rows.push_back(std::stoull(s, &used, 16));
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != s.size()) {
        fail("truthfun", lines[i], "bad hex row '" + s + "'");
      }
    }
    return TruthFun(mm, nn, std::move(rows));
  }

  std::string write_truthfun(TruthFun const& f) {
    std::string out = "truthfun m=" + std::to_string(f.m())
                      + " n=" + std::to_string(f.n()) + "\n";
    int const width = std::max<int>(1, static_cast<int>((f.n() + 3) / 4));
    char      buf[32];
    for (auto r : f.rows()) {
      std::snprintf(buf, sizeof buf, "%0*llx\n", width,
                    static_cast<unsigned long long>(r));
      out += buf;
    }
    return out;
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw ResourceError("cannot write " + path.string());
    }
  }

}  // namespace mk1
