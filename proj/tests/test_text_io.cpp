#include <doctest.h>

#include <filesystem>
#include <random>

#include "mk1/text_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mk1;
using namespace mk1::testing;

TEST_SUITE("text_io") {
  TEST_CASE("hom files") {
    Hom const h = parse_hom("# sample\nalphabet k=2\n\nmap a -> aa\nmap b -> a\n");
    CHECK(h == H("a->aa, b->a"));
    CHECK(write_hom(h) == "alphabet k=2\nmap a -> aa\nmap b -> a\n");
    CHECK(parse_hom("alphabet k=2\nmap - -> -\n") == H("- -> -"));
    CHECK(parse_hom("alphabet k=3\n").is_zero());
  }

  TEST_CASE("hom parse errors name the line") {
    CHECK_THROWS_AS(parse_hom("map a -> b\n"), ParseError);
    CHECK_THROWS_AS(parse_hom("alphabet k=2\nmap a b\n"), ParseError);
    CHECK_THROWS_AS(parse_hom("alphabet k=2\nmap a -> c\n"), ParseError);
    CHECK_THROWS_AS(parse_hom("alphabet k=2\nmap a -> b\nmap ab -> a\n"), DomainError);
    try {
      parse_hom("alphabet k=2\nmap a -> b\nbogus\n");
      FAIL("no error");
    } catch (ParseError const& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("hom round trip") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 300; ++round) {
      Hom const h = random_hom(rng, Alphabet(2 + round % 3), 3, 3);
      CHECK(parse_hom(write_hom(h)) == h);
    }
  }

  TEST_CASE("congruence files") {
    Congruence const c = parse_cong("alphabet k=2\nblock a, ba\nblock bb\n");
    CHECK(c == C("a ba | bb"));
    CHECK(parse_cong(write_cong(c)) == c);
    CHECK(parse_cong(write_cong(C(""))) == C(""));
    CHECK_THROWS_AS(parse_cong("alphabet k=2\nblock a, ab\n"), DomainError);
  }

  TEST_CASE("codes") {
    CHECK(parse_code("{aa,ab,b}", Alphabet(2)) == P("{b,ab,aa}"));
    CHECK(parse_code("{ aa , b }", Alphabet(2)).size() == 2);
    CHECK(parse_code("{}", Alphabet(2)).empty());
    CHECK_THROWS_AS(parse_code("aa,b", Alphabet(2)), ParseError);
  }

  TEST_CASE("truth function files") {
    TruthFun const f(2, 5, {0x1f, 0, 3, 0x10});
    std::string const text = write_truthfun(f);
    CHECK(text == "truthfun m=2 n=5\n1f\n00\n03\n10\n");
    CHECK(parse_truthfun(text) == f);
    CHECK_THROWS_AS(parse_truthfun("truthfun m=1 n=1\n0\n"), Error);
    CHECK_THROWS_AS(parse_truthfun("truthfun m=1 n=1\n0\nz\n"), ParseError);
  }

  TEST_CASE("generator word files") {
    auto const dir = std::filesystem::temp_directory_path() / "mk1_text_io_test";
    std::filesystem::create_directories(dir);
    write_file(dir / "not.hom", write_hom(H("a->b, b->a")));
    write_file(dir / "br.hom", write_hom(H("a->ba, b->bb")));
    GenWord const w = parse_gen(
        "alphabet k=2\n"
        "gamma not.hom as NOT\n"
        "gamma br.hom as BR\n"
        "apply-order: right-to-left\n"
        "word: BR τ1 NOT\n",
        dir);
    CHECK(w.str() == "BR τ1 NOT");
    CHECK(w.gamma().at("BR") == H("a->ba, b->bb"));
    CHECK_THROWS_AS(parse_gen("gamma not.hom as NOT\napply-order: left-to-right\nword: NOT\n", dir),
                    ParseError);
    CHECK_THROWS_AS(parse_gen("gamma not.hom as NOT\n", dir), ParseError);
    CHECK_THROWS_AS(parse_gen("gamma missing.hom as M\nword: M\n", dir), Error);
    std::filesystem::remove_all(dir);
  }
}
