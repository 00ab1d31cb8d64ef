#include <doctest.h>

#include <filesystem>

#include "corpus.hpp"
#include "lamina/lamfile.hpp"

using namespace lamina;

namespace {

Angle A(long p, long q) { return Angle(p, q); }

std::size_t error_line(const std::string& text) {
  try {
    parse_lam(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t error_column(const std::string& text) {
  try {
    parse_lam(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse: minimal file") {
  LamFile f = parse_lam("degree 2\nclass 1/7 2/7 4/7\n");
  CHECK(f.degree == 2);
  CHECK(f.mode == Mode::Equivalence);
  CHECK(f.depth == 0);
  REQUIRE(f.classes.size() == 1);
  CHECK(f.classes[0] == AngleClass{A(1, 7), A(2, 7), A(4, 7)});
}

TEST_CASE("parse: errors carry locations") {
  CHECK(error_line("degree 2\nclass 1/7 4/7\nclass 2/7 5/7\n") == 3);
  CHECK(error_line("degree 2\nclass 1/7 1/x\n") == 2);
  CHECK(error_column("degree 2\nclass 1/7 1/x\n") == 11);
  CHECK(error_column("degree 2\nclass 1/7 1/7\n") == 11);
  CHECK(error_line("class 1/3 2/3\n") == 2);
  CHECK(error_line("degree 2\ndegree 3\n") == 2);
  CHECK(error_line("degree 1\n") == 1);
  CHECK(error_line("degree 2\nmode fuzzy\n") == 2);
  CHECK(error_line("degree 2\nclass 1/3\n") == 2);
  CHECK(error_line("degree 2\nwidget 1\n") == 2);
  CHECK(error_line("degree 2\nclass 1/3 2/3\nclass 2/3 1/3\n") == 3);
  CHECK(error_line("degree 2\nclass 1/3 2/3\npreimage-of 4: 1/6 5/6\n") == 3);
  CHECK(error_line("degree 2\nclass 3/2 1/3\n") == 2);
}

TEST_CASE("parse: geometric mode allows shared endpoints") {
  LamFile f = parse_lam("degree 2\nmode geometric\nclass 1/3 2/3\nclass 2/3 5/6\n");
  CHECK(f.mode == Mode::Geometric);
  CHECK(f.classes.size() == 2);
  CHECK(error_line("degree 2\nclass 1/3 2/3\nclass 2/3 5/6\n") == 3);
}

TEST_CASE("parse: lenient mode keeps linked classes") {
  LamFile f = parse_lam("degree 2\nclass 1/7 4/7\nclass 2/7 5/7\n", false);
  CHECK(f.classes.size() == 2);
  CHECK(error_line("degree 2\nclass 1/3 2/3\nclass 2/3 1/3\n") == 3);
}

TEST_CASE("serialize: canonical form") {
  std::string messy =
      "# comment\n"
      "depth 3\n"
      "degree 2   # trailing\n"
      "class 4/7 2/7 1/7\n"
      "class 22/28 18/28 level 1\n"
      "preimage-of 0: 11/14 9/14 1/14\n";
  LamFile f = parse_lam(messy);
  std::string canon = serialize(f);
  CHECK(canon ==
        "degree 2\nmode equivalence\ndepth 3\nclass 1/7 2/7 4/7\nclass 9/14 11/14 level 1\n"
        "preimage-of 0: 1/14 9/14 11/14\n");
  CHECK(serialize(parse_lam(canon)) == canon);
  CHECK(serialize(parse_lam("degree 2\nclass 0/1 1/2\n")) == "degree 2\nmode equivalence\ndepth 0\nclass 0 1/2\n");
}

TEST_CASE("serialize: preimage indices follow sorting") {
  LamFile f = parse_lam("degree 2\nclass 1/3 2/3\nclass 1/9 2/9\npreimage-of 0 : 1/6 5/6\n");
  REQUIRE(f.preimages.size() == 1);
  CHECK(f.classes[f.preimages[0].generator] == AngleClass{A(1, 3), A(2, 3)});
  CHECK(serialize(f).find("preimage-of 1: 1/6 5/6") != std::string::npos);
}

TEST_CASE("round trip over fixtures") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(LAMINA_FIXTURES)) {
    std::string text = read_text(entry.path().string());
    if (entry.path().extension() == ".lam") {
      ++seen;
      bool strict = entry.path().filename() != "crossing.lam";
      CHECK(serialize(parse_lam(text, strict)) == text);
    } else if (entry.path().extension() == ".fam") {
      ++seen;
      CHECK(serialize(parse_family(text)) == text);
    }
  }
  CHECK(seen >= 7);
}

TEST_CASE("round trip through laminations") {
  for (const auto& s : corpus::generated(100, 13)) {
    LamFile f = from_lamination(s.lam);
    std::string text = serialize(f);
    LamFile back = parse_lam(text);
    CHECK(serialize(back) == text);
    Lamination lam = to_lamination(back);
    CHECK(lam.size() == s.lam.size());
    CHECK(lam.depth() == s.lam.depth());
    for (std::size_t i = 0; i < lam.size(); ++i) {
      auto j = s.lam.find(lam[i]);
      REQUIRE(j);
      CHECK(lam.provenance()[i].level == s.lam.provenance()[*j].level);
    }
    CHECK(validate(lam).passed());
  }
}

TEST_CASE("family files") {
  FamilyFile f = parse_family("set 3/8 5/8\n# x\nset 1/8 7/8\n");
  REQUIRE(f.sets.size() == 2);
  CHECK(f.sets[0] == AngleClass{A(1, 8), A(7, 8)});
  CHECK(serialize(f) == "set 1/8 7/8\nset 3/8 5/8\n");
  CHECK_THROWS_AS(parse_family("sat 1/8\n"), ParseError);
}
