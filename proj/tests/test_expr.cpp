#include <string>

#include "doctest.h"
#include "ord/expr.hpp"
#include "support.hpp"

using namespace ts;
using ord::BinaryOp;
using ord::eval;
using ord::ExprAst;
using ord::parse;
using ord::print_json;
using ord::print_latex;
using ord::print_text;

TEST_CASE("parsing") {
  ExprAst ast = parse("w^2 + w*2 + 4");
  REQUIRE(ast.kind == ExprAst::Kind::Binary);
  CHECK(ast.op == BinaryOp::OrdAdd);
  CHECK(ast.children[0].op == BinaryOp::OrdAdd);  // left-associative
  CHECK(eval(ast) == mk({{fin(2), 1}, {fin(1), 2}, {fin(0), 4}}));

  ast = parse("(w+2) #^ 2");
  REQUIRE(ast.kind == ExprAst::Kind::Binary);
  CHECK(ast.op == BinaryOp::SjPow);
  CHECK(ast.children[0].op == BinaryOp::OrdAdd);
  CHECK(ast.children[1].kind == ExprAst::Kind::Literal);

  SUBCASE("errors carry the offset") {
    try {
      parse("w^");
      FAIL("expected a parse error");
    } catch (const ord::parse_error& e) {
      CHECK(e.offset == 2);
      CHECK(!e.expected.empty());
    }
    CHECK_THROWS_AS(parse("("), ord::parse_error);
    CHECK_THROWS_AS(parse("1 +"), ord::parse_error);
    CHECK_THROWS_AS(parse("q"), ord::parse_error);
    CHECK_THROWS_AS(parse("#"), ord::parse_error);
    CHECK_THROWS_AS(parse("1 2"), ord::parse_error);
    CHECK_THROWS_AS(parse(""), ord::parse_error);
    CHECK_THROWS_AS(parse("deg 3"), ord::parse_error);
  }
}

TEST_CASE("precedence and associativity") {
  // multiplication binds tighter than addition
  ExprAst ast = parse("w #+ w j* 2");
  CHECK(ast.op == BinaryOp::NatAdd);
  CHECK(ast.children[1].op == BinaryOp::JacMul);
  CHECK(eval(ast) == mk({{fin(1), 3}}));
  // exponentiation is right-associative
  ast = parse("2 ^ 1 ^ 2");
  CHECK(ast.op == BinaryOp::OrdPow);
  CHECK(ast.children[1].op == BinaryOp::OrdPow);
  CHECK(eval(ast) == fin(2));
  // exponentiation binds tighter than multiplication
  CHECK(eval(parse("w^2*3")) == mk({{fin(2), 3}}));
}

TEST_CASE("monus does not chain") {
  CHECK_THROWS_AS(parse("1 #- 2 #- 3"), ord::parse_error);
  CHECK_THROWS_AS(parse("1 + 2 #- 3"), ord::parse_error);
  CHECK_THROWS_AS(parse("1 #- 2 + 3"), ord::parse_error);
  CHECK_THROWS_AS(parse("1 #- 2 #+ 3"), ord::parse_error);
  CHECK(eval(parse("(5 #- 2) + 3")) == fin(6));
  CHECK(eval(parse("5 #- (2 #+ 1)")) == fin(2));
  CHECK(eval(parse("w #- (w + 1)")).is_zero());
}

TEST_CASE("unicode aliases") {
  CHECK(eval(parse("\xCF\x89")) == w());                       // ω
  CHECK(eval(parse("1 \xE2\x8A\x95 \xCF\x89")) == succ(w()));  // 1 ⊕ ω
  CHECK(eval(parse("2 \xC3\x97 \xCF\x89")) == w());            // 2 × ω
  CHECK(eval(parse("2 \xE2\x8A\x97 \xCF\x89")) == mk({{fin(1), 2}}));  // 2 ⊗ ω
}

TEST_CASE("evaluation") {
  CHECK(eval(parse("(w+2) #^ 2")) == mk({{fin(2), 1}, {fin(1), 4}, {fin(0), 4}}));
  CHECK(eval(parse("2 j* w")) == w());
  CHECK(eval(parse("deg(w^(w+1)*3 + w)")) == succ(w()));
  CHECK(eval(parse("succ(w)")) == succ(w()));
  CHECK(eval(parse("wdiv(w^2)")) == w());
  SUBCASE("domain errors carry the offending span") {
    try {
      eval(parse("1 + wdiv(w+1)"));
      FAIL("expected an eval error");
    } catch (const ord::eval_error& e) {
      CHECK(e.begin == 4);
      CHECK(e.end == 13);
    }
    CHECK_THROWS_AS(eval(parse("deg(0)")), ord::eval_error);
  }
}

TEST_CASE("spans nest") {
  ExprAst ast = parse("(w + 2) j^ succ(3)");
  CHECK(ast.begin == 0);
  CHECK(ast.end == 18);
  std::function<void(const ExprAst&)> walk = [&](const ExprAst& node) {
    for (const auto& child : node.children) {
      CHECK(child.begin >= node.begin);
      CHECK(child.end <= node.end);
      CHECK(child.begin < child.end);
      walk(child);
    }
  };
  walk(ast);
}

TEST_CASE("canonical text form") {
  CHECK(print_text(Ordinal{}) == "0");
  CHECK(print_text(fin(42)) == "42");
  CHECK(print_text(w()) == "w");
  CHECK(print_text(mk({{fin(2), 1}, {fin(1), 4}, {fin(0), 4}})) ==
        "w^2 + w*4 + 4");
  CHECK(print_text(wpow(succ(w()))) == "w^(w + 1)");
  CHECK(print_text(wpow(w())) == "w^w");
  CHECK(print_text(mk({{mk({{fin(1), 2}}), 3}})) == "w^(w*2)*3");
  CHECK(print_text(mk({{wpow(w()), 1}})) == "w^(w^w)");
}

TEST_CASE("latex and json forms") {
  CHECK(print_latex(Ordinal{}) == "0");
  CHECK(print_latex(mk({{fin(2), 1}, {fin(0), 3}})) == "\\omega^{2} + 3");
  CHECK(print_latex(mk({{fin(1), 2}})) == "\\omega \\cdot 2");
  CHECK(print_json(Ordinal{}) == "{\"terms\":[]}");
  CHECK(print_json(fin(3)) ==
        "{\"terms\":[{\"exp\":{\"terms\":[]},\"coeff\":\"3\"}]}");
  CHECK(print_json(mk({{fin(1), 2}})) ==
        "{\"terms\":[{\"exp\":{\"terms\":[{\"exp\":{\"terms\":[]},\"coeff\":"
        "\"1\"}]},\"coeff\":\"2\"}]}");
}

TEST_CASE("round trip on seeded ordinals") {
  for (const auto& a : seeded(1000, 71)) {
    CHECK(eval(parse(print_text(a))) == a);
  }
}

TEST_CASE("big literals survive") {
  std::string big = "123456789012345678901234567890";
  CHECK(eval(parse(big)) == fin(Nat(big)));
  CHECK(print_text(eval(parse(big))) == big);
}
