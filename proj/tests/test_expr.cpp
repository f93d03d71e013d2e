#include <doctest.h>

#include "refs.hpp"
#include "wm/expr.hpp"
#include "wm/gcmio.hpp"

using namespace wm;

TEST_CASE("expression evaluation") {
  const WeylGroup& aff = refs::affa1();
  auto r = eval_expr(aff, "s1 e(1,2) s2");
  CHECK(r.exact);
  CHECK(r.elem == idempotent_element(aff, aff.gcm().full_set()));

  auto unit = eval_expr(aff, "s1 s2 s1");
  CHECK(unit.elem == unit_element(aff, aff.from_word(std::vector<int>{0, 1, 0})));

  auto ident = eval_expr(aff, "e()");
  CHECK(ident.elem == unit_element(aff, aff.identity()));

  CHECK(eval_weyl_expr(aff, "s1 s1").is_identity());
  CHECK_THROWS_AS((void)eval_weyl_expr(aff, "s1 e(1,2)"), Error);
}

TEST_CASE("parse errors carry positions") {
  const WeylGroup& aff = refs::affa1();
  CHECK_THROWS_AS((void)eval_expr(aff, "s9"), Error);
  CHECK_THROWS_AS((void)eval_expr(aff, "t1"), Error);
  CHECK_THROWS_AS((void)eval_expr(aff, "e(1,"), Error);
  CHECK_THROWS_AS((void)eval_expr(aff, ""), Error);
  CHECK_THROWS_AS((void)eval_expr(aff, "e(1,3)"), Error);  // out of range
  try {
    (void)eval_expr(aff, "s1 t2");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
}

TEST_CASE("printed elements re-parse to equal elements") {
  for (const WeylGroup* wp : {&refs::affa1(), &refs::blockh2a1(), &refs::hyp3()})
    for (const MonoidElem& m : monoid_ball(*wp, 3)) {
      auto back = eval_expr(*wp, monoid_expr(*wp, m));
      CHECK(back.exact);
      CHECK(back.elem == m);
    }
}

TEST_CASE("display forms") {
  const WeylGroup& blk = refs::blockh2a1();
  MonoidElem m = from_parts(blk, blk.simple(2), subset_bit(0) | subset_bit(1),
                            blk.identity());
  CHECK(nf3_display(blk, m) == "e() | s3 | e({1,2}) | e()");
  CHECK(monoid_expr(blk, m) == "s3 e(1,2)");
  CHECK(lengths_display(lengths(m)) == "1 / 1 / 1");
  CHECK(nf1_display(blk, m) == "s3 · e({1,2}) · e()");
}

TEST_CASE("point parsing") {
  const WeylGroup& aff = refs::affa1();
  ConePoint p = parse_point(aff, "1,-2/3");
  CHECK(p.values == std::vector<Rat>{Rat(1), Rat(-2, 3)});
  CHECK_THROWS_AS((void)parse_point(aff, "1"), Error);
  CHECK_THROWS_AS((void)parse_point(aff, "1,x"), Error);
}

TEST_CASE("matrix file loading is strict") {
  Gcm g = load_gcm_text(R"({"A": [[2,-1],[-1,2]], "name": "demo"})");
  CHECK(g.rank() == 2);
  CHECK(g.name() == "demo");
  CHECK_THROWS_AS((void)load_gcm_text(R"({"A": [[2,-1],[-1]]})"), Error);
  CHECK_THROWS_AS((void)load_gcm_text(R"({"A": [[2,-1],[-1,2]], "x": 1})"), Error);
  CHECK_THROWS_AS((void)load_gcm_text(R"([1,2])"), Error);
  CHECK_THROWS_AS((void)load_gcm_text(R"({"A": [[2.5]]})"), Error);
  CHECK_THROWS_AS((void)load_gcm_text("not json"), Error);
}
