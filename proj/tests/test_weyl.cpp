#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "refs.hpp"

using namespace wm;

namespace {

WeylElem word_of(const WeylGroup& w, std::initializer_list<int> letters) {
  std::vector<int> v(letters);
  return w.from_word(v);
}

}  // namespace

TEST_CASE("generators are involutions and braid relations hold") {
  const WeylGroup& a2 = refs::a2();
  CHECK(a2.compose(a2.simple(0), a2.simple(0)) == a2.identity());
  CHECK(word_of(a2, {0, 1, 0}) == word_of(a2, {1, 0, 1}));

  // No relation between the generators when a12 a21 >= 4.
  const WeylGroup& aff = refs::affa1();
  std::set<std::vector<Entry>> seen;
  WeylElem cur = aff.identity();
  for (int k = 1; k <= 5; ++k) {
    cur = aff.compose(cur, word_of(aff, {0, 1}));
    CHECK(seen.insert(cur.matrix().data()).second);
    CHECK(cur.length() == 2 * k);
  }
}

TEST_CASE("lengths agree with breadth-first word enumeration") {
  for (const WeylGroup* wp : {&refs::a2(), &refs::affa1(), &refs::h2()}) {
    const auto oracle = oracles::bfs_lengths(*wp, 6);
    for (const WeylElem& u : wp->ball(6))
      CHECK(oracle.at(u.matrix().data()) == u.length());
  }
  CHECK(word_of(refs::a2(), {0, 1, 0}).length() == 3);
  CHECK(word_of(refs::affa1(), {0, 1, 0, 1, 0, 1}).length() == 6);
}

TEST_CASE("descents") {
  const WeylGroup& a2 = refs::a2();
  CHECK(a2.descents(a2.identity(), GenSide::Left) == 0);
  WeylElem longest = word_of(a2, {0, 1, 0});
  CHECK(a2.descents(longest, GenSide::Left) == a2.gcm().full_set());
  CHECK(a2.descents(word_of(a2, {0, 1}), GenSide::Right) == subset_bit(1));
}

TEST_CASE("exactly one of the two length steps holds, keyed by root sign") {
  for (const WeylGroup* wp : {&refs::a2(), &refs::affa1(), &refs::blockh2a1()}) {
    for (const WeylElem& u : wp->ball(4))
      for (int i = 0; i < wp->rank(); ++i) {
        const int lw = wp->compose(wp->simple(i), u).length();
        RootVector beta =
            wp->act_on_root(wp->inverse(u), wp->simple_root(i));
        if (beta.sign() == RootSign::Positive)
          CHECK(lw == u.length() + 1);
        else
          CHECK(lw == u.length() - 1);
      }
  }
}

TEST_CASE("bruhat order agrees with the subword oracle") {
  for (const WeylGroup* wp : {&refs::a2(), &refs::affa1(), &refs::h2()}) {
    const auto ball = wp->ball(6);
    for (const WeylElem& u : ball)
      for (const WeylElem& v : ball)
        CHECK(wp->bruhat_leq(u, v) == oracles::subword_leq(*wp, u, v));
  }
}

TEST_CASE("bruhat order axioms on balls") {
  const auto ball = refs::affa1().ball(6);
  const WeylGroup& w = refs::affa1();
  for (const WeylElem& u : ball) CHECK(w.bruhat_leq(u, u));
  for (const WeylElem& u : ball)
    for (const WeylElem& v : ball) {
      if (w.bruhat_leq(u, v) && w.bruhat_leq(v, u)) CHECK(u == v);
      for (const WeylElem& x : ball)
        if (w.bruhat_leq(u, v) && w.bruhat_leq(v, x))
          CHECK(w.bruhat_leq(u, x));
    }
}

TEST_CASE("identity is minimum; equal lengths compare only on equality") {
  const WeylGroup& a2 = refs::a2();
  for (const WeylElem& v : a2.ball(3)) CHECK(a2.bruhat_leq(a2.identity(), v));
  CHECK(a2.bruhat_leq(a2.simple(0), word_of(a2, {1, 0})));
  CHECK_FALSE(a2.bruhat_leq(a2.simple(0), a2.simple(1)));
}

TEST_CASE("coset minima") {
  const WeylGroup& a2 = refs::a2();
  CHECK(a2.coset_min(a2.simple(1), subset_bit(1), GenSide::Right) ==
        a2.identity());
  CHECK(a2.coset_min(word_of(a2, {0, 1}), subset_bit(1), GenSide::Right) ==
        a2.simple(0));
  CHECK(a2.coset_min(word_of(a2, {1, 0}), subset_bit(1), GenSide::Left) ==
        a2.simple(0));

  // l(w) = l(stripped part) + l(minimum), on both sides.
  for (const WeylGroup* wp : {&refs::a3(), &refs::affa1()}) {
    for (const WeylElem& u : wp->ball(5))
      for (Subset j = 0; j <= wp->gcm().full_set(); ++j) {
        WeylElem rmin = wp->coset_min(u, j, GenSide::Right);
        WeylElem rpart = wp->compose(wp->inverse(rmin), u);
        CHECK(u.length() == rmin.length() + rpart.length());
        for (int letter : rpart.word()) CHECK(subset_contains(j, letter));
        WeylElem lmin = wp->coset_min(u, j, GenSide::Left);
        WeylElem lpart = wp->compose(u, wp->inverse(lmin));
        CHECK(u.length() == lpart.length() + lmin.length());
        for (int letter : lpart.word()) CHECK(subset_contains(j, letter));
      }
  }
}

TEST_CASE("double coset minima and product-set membership") {
  const WeylGroup& a2 = refs::a2();
  CHECK(a2.double_coset_min(subset_bit(0), word_of(a2, {0, 1}), subset_bit(1)) ==
        a2.identity());
  CHECK(a2.in_product_set(subset_bit(0), word_of(a2, {0, 1}), subset_bit(1)));
  CHECK(a2.double_coset_min(subset_bit(0), a2.simple(1), subset_bit(0)) ==
        a2.simple(1));
  CHECK_FALSE(a2.in_product_set(subset_bit(0), a2.simple(1), subset_bit(0)));
  for (const WeylElem& u : a2.ball(3)) {
    CHECK(a2.double_coset_min(0, u, 0) == u);
    CHECK(a2.in_product_set(0, u, 0) == u.is_identity());
  }
}

TEST_CASE("ball sizes") {
  CHECK(refs::a2().ball(3).size() == 6);
  CHECK(refs::affa1().ball(4).size() == 9);
  CHECK(refs::hyp3().ball(0).size() == 1);
  CHECK_THROWS_AS((void)refs::hyp3().ball(8, refs::hyp3().gcm().full_set(), 100),
                  Error);
  // Parabolic restriction by generator mask.
  CHECK(refs::a3().ball(6, subset_bit(0) | subset_bit(2), 1000).size() == 4);
}

TEST_CASE("inversion sets") {
  const WeylGroup& a2 = refs::a2();
  CHECK(a2.inversion_set(a2.identity()).empty());
  auto phi_s1 = a2.inversion_set(a2.simple(0));
  REQUIRE(phi_s1.size() == 1);
  CHECK(phi_s1[0].coords == std::vector<Entry>{1, 0});
  auto s1a2 = a2.act_on_root(a2.simple(0), a2.simple_root(1));
  CHECK(s1a2.coords == std::vector<Entry>{1, 1});
  auto phi = a2.inversion_set(word_of(a2, {0, 1}));
  REQUIRE(phi.size() == 2);
  CHECK(phi[0].coords == std::vector<Entry>{1, 0});
  CHECK(phi[1].coords == std::vector<Entry>{1, 1});
}

TEST_CASE("inversion set size equals length; members are positive real") {
  for (const WeylGroup* wp : refs::all())
    for (const WeylElem& u : wp->ball(4)) {
      auto phi = wp->inversion_set(u);
      CHECK(static_cast<int>(phi.size()) == u.length());
      for (const auto& beta : phi) {
        CHECK(beta.sign() == RootSign::Positive);
        CHECK(wp->is_real_root(beta));
      }
    }
}

TEST_CASE("length is subadditive and dominates differences") {
  const auto ball = refs::h2().ball(4);
  const WeylGroup& w = refs::h2();
  for (const WeylElem& u : ball)
    for (const WeylElem& v : ball) {
      int luv = w.compose(u, v).length();
      CHECK(luv <= u.length() + v.length());
      CHECK(std::abs(u.length() - v.length()) <= luv);
    }
}

TEST_CASE("compose is associative with unit and inverses") {
  const auto ball = refs::blockh2a1().ball(3);
  const WeylGroup& w = refs::blockh2a1();
  for (const WeylElem& u : ball) {
    CHECK(w.compose(u, w.identity()) == u);
    CHECK(w.compose(w.identity(), u) == u);
    CHECK(w.compose(u, w.inverse(u)) == w.identity());
    for (const WeylElem& v : ball)
      for (const WeylElem& x : ball)
        CHECK(w.compose(w.compose(u, v), x) == w.compose(u, w.compose(v, x)));
  }
}

TEST_CASE("real root recognition") {
  const WeylGroup& a2 = refs::a2();
  CHECK(a2.is_real_root(a2.simple_root(0)));
  CHECK(a2.in_parabolic_orbit(a2.simple_root(0), subset_bit(0)));
  CHECK(a2.is_real_root(RootVector{{1, 1}}));

  // The primitive null root of the affine instance is imaginary.
  const WeylGroup& aff = refs::affa1();
  CHECK_FALSE(aff.is_real_root(RootVector{{1, 1}}));
  CHECK(aff.is_real_root(RootVector{{2, 1}}));
  CHECK(aff.is_real_root(RootVector{{-1, -2}}));
  CHECK_THROWS_AS((void)aff.is_real_root(RootVector{{1, -1}}), Error);
}

TEST_CASE("parabolic orbit membership matches brute-force enumeration") {
  for (const WeylGroup* wp : refs::all()) {
    const Gcm& g = wp->gcm();
    for (Subset j = 0; j <= g.full_set(); ++j) {
      const auto orbit = oracles::parabolic_root_orbit(*wp, j, 8);
      for (const auto& beta : wp->positive_real_roots(8)) {
        const bool claimed = subset_of(beta.support(), j);
        CHECK(claimed == (orbit.count(beta.coords) > 0));
      }
    }
  }
}

TEST_CASE("canonical words start with the smallest left descent") {
  for (const WeylElem& u : refs::a3().ball(5)) {
    if (u.is_identity()) continue;
    const int first = u.word().front();
    for (int i = 0; i < first; ++i)
      CHECK_FALSE(refs::a3().is_left_descent(u, i));
    CHECK(refs::a3().is_left_descent(u, first));
  }
}
