#include <doctest.h>

#include "refs.hpp"
#include "wm/cells.hpp"
#include "wm/expr.hpp"

using namespace wm;

TEST_CASE("closure order orientation") {
  const WeylGroup& aff = refs::affa1();
  MonoidElem o = idempotent_element(aff, aff.gcm().full_set());
  for (const WeylElem& u : aff.ball(3)) {
    CellLabel co{CellSigns::PP, o};
    CellLabel cu{CellSigns::PP, unit_element(aff, u)};
    CHECK(closure_leq(aff, co, cu));  // the zero cell is in every closure

    // Against the mixed orientation the zero cell closes over everything.
    CellLabel mo{CellSigns::MP, o};
    CellLabel mu{CellSigns::MP, unit_element(aff, u)};
    CHECK(closure_leq(aff, mo, mu));
    if (!u.is_identity()) CHECK_FALSE(closure_leq(aff, mu, mo));
  }
  CHECK(closure_leq(aff, CellLabel{CellSigns::MM, o},
                    CellLabel{CellSigns::MM, o}));
  CHECK_THROWS_AS((void)closure_leq(aff, CellLabel{CellSigns::PP, o},
                                    CellLabel{CellSigns::MM, o}),
                  Error);
}

TEST_CASE("product case selector on the block instance") {
  const WeylGroup& blk = refs::blockh2a1();
  MonoidElem e12 = idempotent_element(blk, subset_bit(0) | subset_bit(1));

  auto up = tits_product(blk, ProductConfig::SameSignLeft, '+', 2, e12);
  CHECK(up.delta == 1);
  REQUIRE(up.cells.size() == 1);
  MonoidElem s3e = multiply(blk, unit_element(blk, blk.simple(2)), e12).elem;
  CHECK(up.cells[0].elem == s3e);
  CHECK(up.cells[0].signs == CellSigns::PP);

  auto absorbed = tits_product(blk, ProductConfig::SameSignLeft, '+', 0, e12);
  CHECK(absorbed.delta == 0);
  REQUIRE(absorbed.cells.size() == 1);
  CHECK(absorbed.cells[0].elem == e12);

  auto down = tits_product(blk, ProductConfig::SameSignLeft, '+', 2, s3e);
  CHECK(down.delta == -1);
  REQUIRE(down.cells.size() == 2);
  CHECK(down.cells[0].elem == e12);
  CHECK(down.cells[1].elem == s3e);
}

TEST_CASE("selector matches deltas and the closure assertion everywhere") {
  for (const WeylGroup* wp : {&refs::affa1(), &refs::blockh2a1()}) {
    for (const MonoidElem& m : monoid_ball(*wp, 3))
      for (int i = 0; i < wp->rank(); ++i) {
        for (auto [config, eps, side] :
             {std::tuple{ProductConfig::SameSignLeft, '+', GenSide::Left},
              std::tuple{ProductConfig::SameSignLeft, '-', GenSide::Left},
              std::tuple{ProductConfig::SameSignRight, '+', GenSide::Right},
              std::tuple{ProductConfig::SameSignRight, '-', GenSide::Right},
              std::tuple{ProductConfig::MixedLeft, '+', GenSide::Left},
              std::tuple{ProductConfig::MixedRight, '-', GenSide::Right}}) {
          auto r = tits_product(*wp, config, eps, i, m);
          CHECK(r.delta == length_delta(*wp, side, i, m, r.kind));
          CHECK((r.cells.size() == 2) ==
                (r.delta == (config == ProductConfig::SameSignLeft ||
                                     config == ProductConfig::SameSignRight
                                 ? -1
                                 : 1)));
          // Rising same-sign products certify the closure relation.
          const bool same_sign = config == ProductConfig::SameSignLeft ||
                                 config == ProductConfig::SameSignRight;
          if (same_sign && r.delta == 1) {
            CellSigns signs = eps == '+' ? CellSigns::PP : CellSigns::MM;
            CHECK(closure_leq(*wp, CellLabel{signs, m}, r.cells[0]));
          }
        }
      }
  }
}

TEST_CASE("factor descriptors") {
  const WeylGroup& blk = refs::blockh2a1();
  MonoidElem unit_e = unit_element(blk, blk.identity());
  auto trivial = cell_factors(blk, unit_e, CellSigns::PP, 2);
  CHECK(trivial.finite_roots.empty());
  CHECK(trivial.torus_theta == 0);
  // A trivial special set leaves every window root in place.
  CHECK(trivial.window_right.size() ==
        blk.positive_real_roots(2).size());

  MonoidElem s3e = multiply(blk, unit_element(blk, blk.simple(2)),
                            idempotent_element(blk, subset_bit(0) | subset_bit(1)))
                       .elem;
  auto f = cell_factors(blk, s3e, CellSigns::PP, 2);
  CHECK(f.has_finite);
  CHECK(f.finite_side == GenSide::Left);
  REQUIRE(f.finite_roots.size() == 1);
  CHECK(f.finite_roots[0].coords == std::vector<Entry>{0, 0, 1});
  CHECK(f.torus_theta == (subset_bit(0) | subset_bit(1)));
  CHECK(f.torus_conjugator.is_identity());
  for (const auto& g : f.window_right)
    CHECK_FALSE(subset_of(g.support(), subset_bit(0) | subset_bit(1)));

  // The finite factor size is the length of the first normal-form part.
  for (const MonoidElem& m : monoid_ball(blk, 3)) {
    auto d = cell_factors(blk, m, CellSigns::PP, 3);
    CHECK(d.finite_roots.size() ==
          static_cast<size_t>(nf1_parts(blk, m).first.length()));
    auto mm = cell_factors(blk, m, CellSigns::MM, 3);
    CHECK(mm.finite_roots.size() ==
          static_cast<size_t>(nf2_parts(blk, m).second.length()));
    auto mp = cell_factors(blk, m, CellSigns::MP, 3);
    CHECK_FALSE(mp.has_finite);
  }
}

TEST_CASE("cell display") {
  const WeylGroup& aff = refs::affa1();
  CellLabel c{CellSigns::MP,
              idempotent_element(aff, aff.gcm().full_set())};
  CHECK(cell_display(aff, c) ==
        "B^- · e() | e() | e({1,2}) | e() · B^+");
}
