// mk1: command-line front end for the Thompson-Higman monoid library.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>

#include "acceptance.hpp"
#include "mk1/circuits.hpp"
#include "mk1/congruence.hpp"
#include "mk1/density.hpp"
#include "mk1/genwords.hpp"
#include "mk1/green.hpp"
#include "mk1/hom.hpp"
#include "mk1/text_io.hpp"

namespace fs = std::filesystem;
using json   = nlohmann::json;
using namespace mk1;

namespace {

  struct Globals {
    bool                  as_json = false;
    std::string           out;
    std::uint64_t         budget = Budget::default_limit;
    std::optional<int>    k;
    std::uint64_t         seed = 20261018;
  };

  Globals g;

  std::string slurp(std::string const& path) {
    if (path == "-") {
      return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    return read_file(path);
  }

  Hom load_hom(std::string const& path) {
    Hom h = parse_hom(slurp(path));
    if (g.k && *g.k != h.alphabet().k()) {
      throw AlphabetMismatch(path + ": alphabet k=" + std::to_string(h.alphabet().k())
                             + " but --k " + std::to_string(*g.k));
    }
    return h;
  }

  Congruence load_cong(std::string const& path) {
    return parse_cong(slurp(path));
  }

  GenWord load_gen(std::string const& path) {
    fs::path const base = path == "-" ? fs::current_path() : fs::path(path).parent_path();
    return parse_gen(slurp(path), base);
  }

  json hom_json(Hom const& h) {
    json entries = json::array();
    for (auto const& e : h.entries()) {
      entries.push_back({e.in.str(), e.out.str()});
    }
    return {{"alphabet", h.alphabet().k()}, {"entries", entries}};
  }

  json cong_json(Congruence const& c) {
    json blocks = json::array();
    for (auto const& b : c.blocks()) {
      json words = json::array();
      for (auto const& w : b) {
        words.push_back(w.str());
      }
      blocks.push_back(words);
    }
    return {{"alphabet", c.alphabet().k()}, {"blocks", blocks}};
  }

  void emit_text(std::string const& text) {
    if (g.out.empty()) {
      std::cout << text;
    } else {
      write_file(g.out, text);
    }
  }

  void emit(std::string const& command, json const& value, std::string const& text) {
    if (g.as_json) {
      emit_text(json{{"command", command}, {"result", value}}.dump() + "\n");
    } else {
      emit_text(text);
    }
  }

  int decide(std::string const& command, bool answer) {
    emit(command, answer, answer ? "yes\n" : "no\n");
    return answer ? 0 : 1;
  }

  int emit_hom(std::string const& command, Hom const& h) {
    emit(command, hom_json(h), write_hom(h));
    return 0;
  }

  int emit_cong(std::string const& command, Congruence const& c) {
    emit(command, cong_json(c), write_cong(c));
    return 0;
  }

  int emit_truthfun(std::string const& command, TruthFun const& f, bool as_element) {
    if (as_element) {
      return emit_hom(command, to_element(f));
    }
    emit(command, {{"m", f.m()}, {"n", f.n()}, {"rows", f.rows()}}, write_truthfun(f));
    return 0;
  }

  bool starts_with_truthfun(std::string const& text) {
    auto const i = text.find_first_not_of(" \t\r\n");
    return i != std::string::npos && text.compare(i, 8, "truthfun") == 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson-Higman monoid M_{k,1}: normal forms, Green orders, "
               "density witnesses, generator words and circuit gadgets"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  app.add_flag("--json", g.as_json, "Structured JSON output");
  app.add_option("-o,--output", g.out, "Write the result to a file instead of stdout");
  app.add_option("--budget", g.budget, "Evaluation budget for brute-force searches");
  app.add_option("--k", g.k, "Expected alphabet size");
  app.add_option("--seed", g.seed, "Seed for randomized self-tests");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) {
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  std::string a, b;
  auto two_files = [&](char const* name, char const* help, char const* n1, char const* n2) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(n1, a)->required();
    sub->add_option(n2, b)->required();
    return sub;
  };
  auto one_file = [&](char const* name, char const* help, char const* n1) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(n1, a)->required();
    return sub;
  };

  // Tables
  on(one_file("normalize", "Maximal essentially-equal extension", "hom"),
     [&] { return emit_hom("normalize", max_extend(load_hom(a)).table()); });
  on(two_files("compose", "phi o psi (psi applied first)", "phi", "psi"),
     [&] { return emit_hom("compose", compose(load_hom(a), load_hom(b)).table()); });
  on(two_files("eq", "Equality in M_{k,1}", "phi", "psi"),
     [&] { return decide("eq", eq_in_M(load_hom(a), load_hom(b))); });
  on(one_file("inverse", "Inverse chi with phi chi phi = phi", "hom"),
     [&] { return emit_hom("inverse", inverse(load_hom(a))); });

  // Green orders
  on(two_files("r-leq", "psi <=_R phi", "psi", "phi"),
     [&] { return decide("r-leq", r_leq(load_hom(a), load_hom(b))); });
  on(two_files("l-leq", "psi <=_L phi", "psi", "phi"),
     [&] { return decide("l-leq", l_leq(load_hom(a), load_hom(b))); });
  on(two_files("r-equiv", "psi R-equivalent to phi", "psi", "phi"),
     [&] { return decide("r-equiv", r_equiv(load_hom(a), load_hom(b))); });
  on(two_files("l-equiv", "psi L-equivalent to phi", "psi", "phi"),
     [&] { return decide("l-equiv", l_equiv(load_hom(a), load_hom(b))); });
  on(two_files("r-mult", "alpha with psi = phi alpha", "psi", "phi"),
     [&] { return emit_hom("r-mult", r_multiplier(load_hom(a), load_hom(b))); });
  on(two_files("l-mult", "alpha with psi = alpha phi", "psi", "phi"),
     [&] { return emit_hom("l-mult", l_multiplier(load_hom(a), load_hom(b))); });

  // Congruences
  on(one_file("part", "Fiber congruence of a table", "hom"),
     [&] { return emit_cong("part", part(load_hom(a))); });
  int   j        = 0;
  auto* func_cmd = one_file("func", "Idempotent choosing block minima (j=0) or maxima (j=1)",
                            "cong");
  func_cmd->add_option("--j", j, "0 or 1")->check(CLI::Range(0, 1));
  on(func_cmd, [&] { return emit_hom("func", func(load_cong(a), j)); });
  on(one_file("cong-max", "Maximal essentially-equal extension", "cong"),
     [&] { return emit_cong("cong-max", cong_max(load_cong(a))); });
  on(two_files("cong-refines", "c2 <=_end c1", "c2", "c1"),
     [&] { return decide("cong-refines", refines_end(load_cong(a), load_cong(b))); });
  on(two_files("cong-meet", "Meet of two congruences", "c1", "c2"),
     [&] { return emit_cong("cong-meet", cong_meet(load_cong(a), load_cong(b))); });
  on(two_files("cong-join", "Join of two congruences", "c1", "c2"),
     [&] { return emit_cong("cong-join", cong_join(load_cong(a), load_cong(b))); });

  // Density
  on(two_files("density-r", "chi with psi <_R chi <_R phi", "phi", "psi"),
     [&] { return emit_hom("density-r", r_between(load_hom(a), load_hom(b))); });
  on(two_files("density-l", "chi with psi <_L chi <_L phi", "phi", "psi"),
     [&] { return emit_hom("density-l", l_between(load_hom(a), load_hom(b))); });
  on(two_files("density-l-in-r", "L-density inside an R-class", "phi", "psi"),
     [&] { return emit_hom("density-l-in-r", l_between_in_Rclass(load_hom(a), load_hom(b))); });
  on(two_files("density-r-in-l", "R-density inside an L-class", "phi", "psi"),
     [&] { return emit_hom("density-r-in-l", r_between_in_Lclass(load_hom(a), load_hom(b))); });

  // Generator words
  auto* gen_apply = two_files("gen-apply", "Apply a generator word to a word", "gen", "word");
  on(gen_apply, [&] {
    GenWord const w = load_gen(a);
    auto          y = apply(w, parse_word(b, w.alphabet()));
    emit("gen-apply", y ? json(y->str()) : json(nullptr),
         (y ? y->str() : std::string("undefined")) + "\n");
    return y ? 0 : 1;
  });
  on(one_file("gen-expand", "Expand a generator word to its table", "gen"), [&] {
    Budget budget(g.budget);
    return emit_hom("gen-expand", expand_to_table(load_gen(a), budget).table());
  });
  on(one_file("gen-surjective", "Bounded surjectivity search", "gen"), [&] {
    Budget budget(g.budget);
    return decide("gen-surjective", is_surjective_program(load_gen(a), budget));
  });
  on(two_files("gen-rleq-pi2", "psi <=_R phi by the bounded quantifier search", "psi", "phi"),
     [&] {
       Budget budget(g.budget);
       return decide("gen-rleq-pi2", r_leq_pi2(load_gen(a), load_gen(b), budget));
     });

  // Circuits
  std::size_t m = 0, n = 0;
  bool        element = false, printed = false;
  auto*       gs = app.add_subcommand("gadget-surj", "C(x,y) = y if f(x,y) else 1^n");
  gs->add_option("formula", a)->required();
  gs->add_option("--m", m)->required();
  gs->add_option("--n", n)->required();
  gs->add_flag("--element", element, "Emit the M_{2,1} table instead of the truth table");
  on(gs, [&] {
    return emit_truthfun("gadget-surj", gadget_surj(Formula::parse(a), m, n), element);
  });
  auto* gi = app.add_subcommand("gadget-inj", "F(x,b) = (x,b) if B(x) or b=0, else 0^{n+1}");
  gi->add_option("formula", a)->required();
  gi->add_option("--n", n)->required();
  gi->add_flag("--element", element, "Emit the M_{2,1} table instead of the truth table");
  gi->add_flag("--printed", printed, "Use the else-output 0^n 1");
  on(gi, [&] {
    Formula const f = Formula::parse(a);
    return emit_truthfun("gadget-inj", printed ? gadget_inj_printed(f, n) : gadget_inj(f, n),
                         element);
  });
  on(one_file("qbf1", "Add a universal variable b: (or b f)", "formula"), [&] {
    Formula const f = qbf1_transform(Formula::parse(a));
    emit("qbf1", {{"formula", f.str()}, {"m", f.m()}, {"n", f.n()}}, f.str() + "\n");
    return 0;
  });
  std::size_t n_forall = 0, m_exists = 0;
  auto*       qe = one_file("qbf-eval", "forall y exists x: f(x,y)", "formula");
  qe->add_option("--forall", n_forall, "Size of the universal block (y)");
  qe->add_option("--exists", m_exists, "Size of the existential block (x)");
  on(qe, [&] {
    Formula f = Formula::parse(a);
    if (qe->count("--forall") + qe->count("--exists") > 0) {
      f = f.with_blocks(m_exists, n_forall);
    }
    return decide("qbf-eval", forall_exists_eval(f, f.n(), f.m(), g.budget));
  });
  on(one_file("zero-word", "id_{aA*} o beta = 0 for the table beta of B", "formula"),
     [&] { return decide("zero-word", zero_word_check(Formula::parse(a))); });
  auto* is_s = app.add_subcommand("is-surjective", "Truth table or table: surjective?");
  is_s->add_option("input", a, "File, or - for stdin")->default_val("-");
  on(is_s, [&] {
    std::string const text = slurp(a);
    return decide("is-surjective", starts_with_truthfun(text)
                                       ? is_surjective_fun(parse_truthfun(text))
                                       : is_surjective_elem(parse_hom(text)));
  });
  auto* is_i = app.add_subcommand("is-injective", "Truth table or table: injective?");
  is_i->add_option("input", a, "File, or - for stdin")->default_val("-");
  on(is_i, [&] {
    std::string const text = slurp(a);
    return decide("is-injective", starts_with_truthfun(text)
                                      ? is_injective_fun(parse_truthfun(text))
                                      : is_monomorphism(parse_hom(text)));
  });

  // Self-test
  bool  full     = false;
  auto* selftest = app.add_subcommand("selftest", "Run the oracle suites");
  selftest->add_flag("--full", full, "Full acceptance sizes (slow)");
  on(selftest, [&] {
    acceptance::Options opt;
    opt.seed  = g.seed;
    opt.quick = !full;
    json results = json::array();
    bool ok      = true;
    acceptance::run_all(opt, [&](acceptance::Outcome const& o) {
      ok = ok && o.pass;
      if (g.as_json) {
        results.push_back({{"criterion", o.id}, {"title", o.title}, {"pass", o.pass},
                           {"detail", o.detail}, {"seconds", o.seconds}});
      } else {
        std::cout << acceptance::format(o) << std::endl;
      }
    });
    if (g.as_json) {
      emit_text(json{{"command", "selftest"}, {"result", results}}.dump() + "\n");
    }
    return ok ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "mk1: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (mk1::Error const& e) {
    std::cerr << "mk1: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "mk1: " << e.what() << "\n";
    return 2;
  }
}
