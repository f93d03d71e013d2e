#pragma once

// Weyl monoid elements in normal form III (w1, w2, theta, w3) with
// w1 in W^{theta u perp}, w2 in W_perp, w3 in {theta u perp}^W.
// Normal forms I and II are projections through the part bijections.

#include <optional>
#include <utility>
#include <vector>

#include "wm/titscone.hpp"
#include "wm/weyl.hpp"

namespace wm {

struct MonoidElem {
  Subset theta = 0;
  WeylElem w1, w2, w3;

  friend bool operator==(const MonoidElem& a, const MonoidElem& b) {
    return a.theta == b.theta && a.w1 == b.w1 && a.w2 == b.w2 && a.w3 == b.w3;
  }
  friend bool operator!=(const MonoidElem& a, const MonoidElem& b) {
    return !(a == b);
  }
};

bool monoid_less(const MonoidElem& a, const MonoidElem& b);

// All special subsets in ascending mask order.
std::vector<Subset> special_subsets(const Gcm& g);

MonoidElem unit_element(const WeylGroup& w, const WeylElem& u);
MonoidElem idempotent_element(const WeylGroup& w, Subset theta);

bool is_unit(const MonoidElem& m);
// Projection onto some face of the cone, i.e. a triple (c, e, c^{-1}).
bool is_idempotent(const MonoidElem& m);
// Projection onto an unconjugated face R(theta): all parts trivial.
bool is_standard_idempotent(const MonoidElem& m);

// Canonicalizes u . e(R(theta)) . v.  Throws NotSpecial.
MonoidElem from_parts(const WeylGroup& w, const WeylElem& u, Subset theta,
                      const WeylElem& v);

// Normal form I parts (W^theta, {theta u perp}^W) and II parts
// (W^{theta u perp}, theta^W).
std::pair<WeylElem, WeylElem> nf1_parts(const WeylGroup& w, const MonoidElem& m);
std::pair<WeylElem, WeylElem> nf2_parts(const WeylGroup& w, const MonoidElem& m);

// The Weyl group element w1 w2 w3 (for units, the unit itself).
WeylElem underlying_unit(const WeylGroup& w, const MonoidElem& m);

struct MulResult {
  MonoidElem elem;
  bool exact = true;
};

MulResult multiply(const WeylGroup& w, const MonoidElem& a,
                   const MonoidElem& b, const FaceBudget& budget = {});

MonoidElem inverse(const WeylGroup& w, const MonoidElem& m);

// Action on a cone point assumed to lie in X; nullopt means annihilated.
std::optional<ConePoint> act(const WeylGroup& w, const MonoidElem& m,
                             const ConePoint& p);
// Same, but first certifies membership of the point; throws PointNotInCone.
std::optional<ConePoint> act_checked(const WeylGroup& w, const MonoidElem& m,
                                     const ConePoint& p,
                                     long long descent_cap = kDefaultDescentCap);

// All elements with l_{-+} <= bound, sorted by monoid_less.
std::vector<MonoidElem> monoid_ball(const WeylGroup& w, int lmp_bound,
                                    std::size_t cap = WeylGroup::kDefaultBallCap);

}  // namespace wm
