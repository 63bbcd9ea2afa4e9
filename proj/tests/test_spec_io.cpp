#include <doctest.h>

#include "commahom/cotorsion.hpp"
#include "commahom/errors.hpp"
#include "comma_fixtures.hpp"
#include "example_specs.hpp"
#include "fixtures.hpp"
#include "spec_io.hpp"

using namespace commahom;
using namespace fixtures;

namespace {

const std::string data_dir = COMMAHOM_DATA_DIR;
const std::string test_data_dir = COMMAHOM_TEST_DATA_DIR;

int parse_error_line(const std::string& text) {
  try {
    io::parse_algebra(text, "t");
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

int module_error_line(const AlgebraPtr& alg, const std::string& text) {
  try {
    io::parse_module(alg, text, "m");
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("bundled specs match the fixtures") {
  CHECK(same_algebra(io::load_algebra(data_dir + "/a2.alg"), a2()));
  CHECK(same_algebra(io::load_algebra(data_dir + "/example_s.alg"), example_s()));
  CHECK(same_algebra(io::load_algebra(data_dir + "/example_r.alg"), example_r()));
  CHECK(same_algebra(io::load_algebra(data_dir + "/example_lambda.alg"), example_lambda()));
  CHECK(same_algebra(io::parse_algebra(examples::kLambda), example_lambda()));
  CHECK(io::load_partition(data_dir + "/example.partition") == example_partition());
  auto m = io::load_module(example_s(), data_dir + "/string_4_6.mod");
  CHECK(is_iso(m, thin(example_s(), {"4", "6"}, {"a5"})));
}

TEST_CASE("format_algebra round trips") {
  for (auto alg : {a2(), example_lambda(), zero_square(Field::rationals()), one_loop(Field::prime(3))}) {
    auto back = io::parse_algebra(io::format_algebra(alg));
    CHECK(same_algebra(back, alg));
    CHECK(back->field() == alg->field());
  }
}

TEST_CASE("algebra parse errors carry line numbers") {
  CHECK(parse_error_line("vertex 1\nvertex 1\n") == 2);
  CHECK(parse_error_line("field GF(6)\nvertex 1\n") == 1);
  CHECK(parse_error_line("field F\n") == 1);
  CHECK(parse_error_line("vertex 1\n\n# comment\narrow a 1 -> 1\n") == 4);
  CHECK(parse_error_line("vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrelation a b\n") == 5);
  CHECK(parse_error_line("vertex 1\nrelation a a\n") == 2);
  CHECK(parse_error_line("vertex 1\narrow a: 1 -> 1\nrelation a\n") == 3);
  CHECK(parse_error_line("vertex 1\nbogus\n") == 2);
  CHECK(parse_error_line("# nothing\n") == 1);
  CHECK(parse_error_line("vertex 1\narrow x: 1 -> 1\n") == 2);  // not admissible
  CHECK_THROWS_AS(io::load_algebra(test_data_dir + "/bad_vertex.alg"), ParseError);
}

TEST_CASE("comments, spacing and fields") {
  auto alg = io::parse_algebra("field Q   # rationals\nvertex 1 2\narrow a:1->2\n");
  CHECK(alg->field() == Field::rationals());
  CHECK(alg->dimension() == 3);
  CHECK(io::parse_algebra("field GF(5)\nvertex x\n")->field() == Field::prime(5));
}

TEST_CASE("modules") {
  auto a = a2();
  CHECK(is_iso(io::parse_module(a, "standard P(1)"), proj(a, "1")));
  CHECK(is_iso(io::load_module(a, "I(2)"), inj(a, "2")));
  CHECK(is_iso(io::load_module(a, "E(2)"), inj(a, "2")));
  CHECK(is_iso(io::load_module(a, test_data_dir + "/p1_a2.mod"), proj(a, "1")));
  CHECK(is_iso(io::parse_module(a, "dims: 1=1 2=1\n"), direct_sum(simple(a, "1"), simple(a, "2"))));
  CHECK(io::parse_module(a, "dims: 2=0\n").is_zero());

  // Relations are checked on load.
  auto s = example_s();
  CHECK(module_error_line(s, "dims: 1=1 2=1 3=1\nmap a1 = [[1]]\nmap a2 = [[1]]\n") == 3);
  CHECK(module_error_line(a, "dims: 1=1 2=1\nmap a = [[1],[0]]\n") == 2);
  CHECK(module_error_line(a, "dims: 1=1\nmap b = [[1]]\n") == 2);
  CHECK(module_error_line(a, "map a = [[1]]\n") == 1);
  CHECK(module_error_line(a, "dims: 3=1\n") == 1);
  CHECK(module_error_line(a, "standard S(1)\ndims: 1=1\n") == 2);
  CHECK(module_error_line(a, "standard Q(1)\n") == 1);
  CHECK(module_error_line(a, "dims: 1=1 2=1\nmap a = [[1]\n") == 2);
  CHECK(module_error_line(a, "dims: 1=x\n") == 1);
  CHECK_THROWS_AS(io::load_module(a, "S(7)"), ParseError);

  auto q = a2(Field::rationals());
  auto m = io::parse_module(q, "dims: 1=2 2=1\nmap a = [[1/2, -3]]\n");
  CHECK(m.action(0)(0, 0) == Field::rationals().from_fraction(1, 2));
  CHECK(m.action(0)(0, 1) == Field::rationals().from_int(-3));
  CHECK(module_error_line(a2(Field::prime(3)), "dims: 1=1 2=1\nmap a = [[1/3]]\n") == 2);
}

TEST_CASE("partitions") {
  auto p = io::parse_partition("r: 7\ns 1 2\n");
  CHECK(p.at("7") == Side::r);
  CHECK(p.at("2") == Side::s);
  CHECK_THROWS_AS(io::parse_partition("r 1\ns 1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_partition("t 1\n"), ParseError);
}

TEST_CASE("class expressions") {
  auto a = a2();
  auto u = enumerate_universe(a, 3).indecomposables;
  io::ClassContext ctx{&u, nullptr};
  auto inj_spec = io::load_class("injectives");
  CHECK(same_class(io::resolve_class(a, inj_spec, ctx), injectives(a)));
  CHECK(same_class(io::resolve_class(a, io::parse_class("S(2)\nP(1)\n"), ctx), projectives(a)));
  CHECK(same_class(io::resolve_class(a, io::load_class("lperp(injectives)"), ctx), u));
  CHECK(same_class(io::resolve_class(a, io::load_class("rperp(lperp(S(1)))"), ctx),
                   right_perp(left_perp(ObjectClass(a, {simple(a, "1")}), u), u)));
  CHECK(io::parse_class("lperp(gi)\n").uses_gi());
  CHECK_FALSE(inj_spec.uses_gi());
  CHECK_THROWS_AS(io::resolve_class(a, io::load_class("gi"), ctx), Error);
  CHECK_THROWS_AS(io::load_class("lperp(nothing)"), ParseError);
  try {
    io::parse_class("all\n\nbogus\n", "c");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  // Module entries of a class file resolve relative to the file.
  auto from_file = io::parse_class("module p1_a2.mod\n", "c", test_data_dir);
  CHECK(same_class(io::resolve_class(a, from_file, ctx), ObjectClass(a, {proj(a, "1")})));
}
