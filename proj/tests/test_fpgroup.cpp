#include <doctest.h>

#include <set>

#include "ambix/fpgroup.hpp"

using namespace ambix;

TEST_SUITE_BEGIN("fpgroup");

TEST_CASE("presentation parsing") {
  auto P = parse_presentation("<a | a^5>");
  CHECK(P.generator_names == std::vector<std::string>{"a"});
  REQUIRE(P.relators.size() == 1);
  CHECK(P.relators[0].length() == 5);

  auto cox = parse_presentation("<t1,t2 | t1^2, t2^2, (t1*t2)^3>");
  CHECK(cox.generator_names.size() == 2);
  CHECK(cox.relators.size() == 3);
  CHECK(cox.relators[2].length() == 6);

  CHECK_THROWS_AS(parse_presentation("<a | b^2>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a | a^2>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<a | a^2"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<a, a | >"), ParseError);

  // commutator sugar
  auto com = parse_presentation("<x, y | [x,y]>");
  Word expect = parse_word("x^-1*y^-1*x*y", com);
  CHECK(com.relators[0] == expect);

  // round trip through the printer
  auto printed = print_presentation(cox);
  auto reparsed = parse_presentation(printed);
  CHECK(reparsed.generator_names == cox.generator_names);
  CHECK(reparsed.relators == cox.relators);
}

TEST_CASE("free reduction") {
  auto P = parse_presentation("<a, b |>");
  Word w = parse_word("a*b*b^-1*a^-1*a*b", P);
  CHECK(w.length() == 2);  // a*b
  CHECK(Word::reduced(w) == w);
  Word empty = parse_word("a*a^-1", P);
  CHECK(empty.empty());
  CHECK((w * w.inverse()).empty());
}

TEST_CASE("todd-coxeter examples") {
  auto c5 = todd_coxeter(parse_presentation("<a | a^5>"), {});
  CHECK(c5.coset_count() == 5);

  auto s3 = todd_coxeter(parse_presentation("<t1,t2 | t1^2, t2^2, (t1*t2)^3>"), {});
  CHECK(s3.coset_count() == 6);

  auto a5 = todd_coxeter(parse_presentation("<a,b | a^2, b^3, (a*b)^5>"), {});
  CHECK(a5.coset_count() == 60);

  // index of a subgroup: <a^2> inside Z/6
  auto P6 = parse_presentation("<a | a^6>");
  auto sub = todd_coxeter(P6, {parse_word("a^2", P6)});
  CHECK(sub.coset_count() == 2);

  CHECK_THROWS_AS(todd_coxeter(parse_presentation("<a, b |>"), {}, 500), LimitExceeded);
}

TEST_CASE("todd-coxeter is deterministic and relator-compatible") {
  auto P = parse_presentation("<a,b | a^2, b^3, (a*b)^5>");
  auto T1 = todd_coxeter(P, {});
  auto T2 = todd_coxeter(P, {});
  CHECK(T1.table == T2.table);

  auto [G, images] = perm_rep(T1);
  CHECK(G.order() == 60);
  for (auto& r : P.relators) CHECK(r.eval(images, T1.coset_count()).is_identity());

  // relators tracing back to every coset is the same as identity action
  auto s3 = todd_coxeter(parse_presentation("<t1,t2 | t1^2, t2^2, (t1*t2)^3>"), {});
  auto [G3, img3] = perm_rep(s3);
  CHECK(G3.order() == 6);
  CHECK(img3[0].order() == 2);
  CHECK(img3[1].order() == 2);
}

TEST_CASE("perm_rep single cycle and transposition images") {
  auto T = todd_coxeter(parse_presentation("<a | a^5>"), {});
  auto [G, images] = perm_rep(T);
  CHECK(G.order() == 5);
  REQUIRE(images.size() == 1);
  CHECK(images[0].cycle_lengths() == std::vector<int>{5});
}

TEST_CASE("(2,3,5) presentation maps onto the brute-force alternating model") {
  // independent model: permutations of order 2 and 3 with product of order 5
  auto a = parse_cycles("(1,2)(3,4)", 5);
  auto b = parse_cycles("(1,4,5)", 5);
  REQUIRE((a * b).order() == 5);
  auto model = std::make_shared<PermGroup>(PermGroup::from_generators({a, b}, 5));
  REQUIRE(model->order() == 60);

  auto P = parse_presentation("<a,b | a^2, b^3, (a*b)^5>");
  auto T = todd_coxeter(P, {});
  auto [G, images] = perm_rep(T);
  auto Gp = std::make_shared<PermGroup>(std::move(G));
  auto f = hom_by_images(Gp, model, {a, b});
  CHECK(f.surjective());
  CHECK(f.kernel_order() == 1);
}

TEST_SUITE_END();
