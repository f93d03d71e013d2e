#pragma once

// Points of the Tits cone in coroot-evaluation coordinates, membership via
// the descent loop with sound non-membership certificates, facets, faces,
// containment, and exact-or-flagged face intersection.

#include <optional>
#include <vector>

#include "wm/weyl.hpp"

namespace wm {

struct ConePoint {
  std::vector<Rat> values;  // (lambda(h_1), ..., lambda(h_n))

  friend bool operator==(const ConePoint& a, const ConePoint& b) {
    return a.values == b.values;
  }
};

// 0 on `zero_set`, 1 elsewhere; lies in the closed fundamental chamber with
// facet type exactly `zero_set`.
ConePoint indicator_point(const Gcm& g, Subset zero_set);

ConePoint apply_to_point(const WeylGroup& w, const WeylElem& u,
                         const ConePoint& p);
bool vanishes_on(const ConePoint& p, Subset s);

// Coordinates of u . h_i in the coroot basis (integer vector).
std::vector<Entry> coroot_image(const WeylGroup& w, const WeylElem& u, int i);

struct Facet {
  Subset type = 0;
  WeylElem rep;  // canonical minimal representative in W^type
};

struct Face {
  Subset theta = 0;  // special
  WeylElem rep;      // canonical minimal representative in W^{theta u perp}

  friend bool operator==(const Face& a, const Face& b) {
    return a.theta == b.theta && a.rep == b.rep;
  }
  friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }
};

enum class Membership { InX, NotInX, Unknown };

struct TitsMembership {
  Membership status = Membership::Unknown;
  WeylElem transporter;   // InX only: point = transporter . (dominant point)
  Subset facet_type = 0;  // InX only
};

inline constexpr long long kDefaultDescentCap = 10000;

// Descent loop: reflect at the smallest negative coordinate until the closed
// chamber is reached.  NotInX is reported only on a sound certificate (the
// level functional of an affine component); otherwise Unknown after `cap`.
TitsMembership tits_membership(const WeylGroup& w, const ConePoint& p,
                               long long cap = kDefaultDescentCap);

Facet facet_of(const WeylGroup& w, const TitsMembership& m);

// Smallest face containing the facet: keep the non-finite components of the
// facet type, drop the finite ones.
Face face_generated(const WeylGroup& w, const Facet& f);

Face face_of_theta(const WeylGroup& w, Subset theta);  // rep = identity

// F2 subset of F1, decided on the characteristic relative-interior point.
bool face_contains(const WeylGroup& w, const Face& f1, const Face& f2);

// Integer rows r with F = X  intersect  {p : r . p == 0 for all rows}.
std::vector<std::vector<Entry>> face_conditions(const WeylGroup& w,
                                                const Face& f);

struct FaceBudget {
  int weight = 4;                 // max |coefficient| in the sample schedule
  int sample_cap = 4000;          // total samples attempted
  long long descent_cap = 256;    // per-sample membership descent bound
};

struct FaceMeet {
  Face face;
  bool exact = false;  // certified equal to F1 intersect F2
};

// Fixed-space method: V = joint vanishing space of both faces; samples of V
// accepted into X accumulate into a monotone candidate; certified Exact when
// V lies in the candidate's own vanishing space.
FaceMeet face_intersect(const WeylGroup& w, const Face& f1, const Face& f2,
                        const FaceBudget& budget = {});

}  // namespace wm
