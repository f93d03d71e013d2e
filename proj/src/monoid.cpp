#include "wm/monoid.hpp"

#include <algorithm>

namespace wm {

bool monoid_less(const MonoidElem& a, const MonoidElem& b) {
  if (a.theta != b.theta) return a.theta < b.theta;
  const int la = a.w1.length() + a.w2.length() + a.w3.length();
  const int lb = b.w1.length() + b.w2.length() + b.w3.length();
  if (la != lb) return la < lb;
  if (a.w1 != b.w1) return word_less(a.w1, b.w1);
  if (a.w2 != b.w2) return word_less(a.w2, b.w2);
  return word_less(a.w3, b.w3);
}

std::vector<Subset> special_subsets(const Gcm& g) {
  std::vector<Subset> out;
  for (Subset s = 0; s <= g.full_set(); ++s)
    if (g.is_special(s)) out.push_back(s);
  return out;
}

MonoidElem unit_element(const WeylGroup& w, const WeylElem& u) {
  return MonoidElem{0, w.identity(), u, w.identity()};
}

MonoidElem idempotent_element(const WeylGroup& w, Subset theta) {
  if (!w.gcm().is_special(theta))
    fail(Errc::NotSpecial, "subset " + subset_str(theta) + " is not special");
  return MonoidElem{theta, w.identity(), w.identity(), w.identity()};
}

bool is_unit(const MonoidElem& m) { return m.theta == 0; }

// Idempotents are the projections onto faces: w e(R(theta)) w^{-1}, in
// normal form III the triples (c, e, c^{-1}).
bool is_idempotent(const MonoidElem& m) {
  if (!m.w2.is_identity()) return false;
  if (m.w1.length() != m.w3.length()) return false;
  const int n = m.w1.matrix().n();
  return m.w3.matrix().mul(m.w1.matrix()) == Matx::identity(n);
}

bool is_standard_idempotent(const MonoidElem& m) {
  return m.w1.is_identity() && m.w2.is_identity() && m.w3.is_identity();
}

namespace {

// Component of an element of W_{theta u perp} in the direct factor W_perp:
// the subsequence of perp letters of any reduced word.
WeylElem perp_component(const WeylGroup& w, const WeylElem& q, Subset theta,
                        Subset perp) {
  std::vector<int> letters;
  for (int letter : q.word()) {
    if (subset_contains(perp, letter)) {
      letters.push_back(letter);
    } else if (!subset_contains(theta, letter)) {
      fail(Errc::Internal, "parabolic element has a letter outside its block");
    }
  }
  return w.from_word(letters);
}

}  // namespace

MonoidElem from_parts(const WeylGroup& w, const WeylElem& u, Subset theta,
                      const WeylElem& v) {
  const Gcm& g = w.gcm();
  if (!g.is_special(theta))
    fail(Errc::NotSpecial, "subset " + subset_str(theta) + " is not special");
  const Subset perp = g.theta_perp(theta);
  const Subset j = theta | perp;

  WeylElem w1 = w.coset_min(u, j, GenSide::Right);
  WeylElem p = w.compose(w.inverse(w1), u);  // in W_j
  WeylElem p_perp = perp_component(w, p, theta, perp);

  WeylElem x = w.compose(p_perp, v);
  WeylElem w3 = w.coset_min(x, j, GenSide::Left);
  WeylElem q = w.compose(x, w.inverse(w3));  // in W_j
  WeylElem w2 = perp_component(w, q, theta, perp);

  return MonoidElem{theta, std::move(w1), std::move(w2), std::move(w3)};
}

std::pair<WeylElem, WeylElem> nf1_parts(const WeylGroup& w,
                                        const MonoidElem& m) {
  return {w.compose(m.w1, m.w2), m.w3};
}

std::pair<WeylElem, WeylElem> nf2_parts(const WeylGroup& w,
                                        const MonoidElem& m) {
  return {m.w1, w.compose(m.w2, m.w3)};
}

WeylElem underlying_unit(const WeylGroup& w, const MonoidElem& m) {
  return w.compose(w.compose(m.w1, m.w2), m.w3);
}

MulResult multiply(const WeylGroup& w, const MonoidElem& a,
                   const MonoidElem& b, const FaceBudget& budget) {
  const Gcm& g = w.gcm();
  if (a.theta == 0) {
    WeylElem sigma = underlying_unit(w, a);
    auto [u2, v2] = nf1_parts(w, b);
    return {from_parts(w, w.compose(sigma, u2), b.theta, v2), true};
  }
  if (b.theta == 0) {
    WeylElem sigma = underlying_unit(w, b);
    auto [u1, v1] = nf1_parts(w, a);
    return {from_parts(w, u1, a.theta, w.compose(v1, sigma)), true};
  }

  auto [u1, v1] = nf1_parts(w, a);
  auto [u2, v2] = nf1_parts(w, b);
  // e(R(th1)) t e(R(th2)) with the connecting element stripped to its
  // double-coset minimal form; the stripped parts are absorbed.
  WeylElem t = w.compose(v1, u2);
  WeylElem d = w.double_coset_min(a.theta, t, b.theta);

  if (d.is_identity() && g.is_special(a.theta | b.theta))
    return {from_parts(w, u1, a.theta | b.theta, v2), true};

  // e(R(th1)) d e(R(th2)) = e(R(th1) n d R(th2)) d.
  Face f1{a.theta, w.identity()};
  Face f2{b.theta,
          w.coset_min(d, b.theta | g.theta_perp(b.theta), GenSide::Right)};
  FaceMeet meet = face_intersect(w, f1, f2, budget);
  WeylElem rep = meet.face.rep;
  MonoidElem res = from_parts(
      w, w.compose(u1, rep), meet.face.theta,
      w.compose(w.compose(w.inverse(rep), d), v2));
  return {res, meet.exact};
}

MonoidElem inverse(const WeylGroup& w, const MonoidElem& m) {
  // Normal form III maps to normal form III under the inverse map.
  return MonoidElem{m.theta, w.inverse(m.w3), w.inverse(m.w2), w.inverse(m.w1)};
}

std::optional<ConePoint> act(const WeylGroup& w, const MonoidElem& m,
                             const ConePoint& p) {
  ConePoint mid = apply_to_point(w, w.compose(m.w2, m.w3), p);
  if (!vanishes_on(mid, m.theta)) return std::nullopt;
  return apply_to_point(w, m.w1, mid);
}

std::optional<ConePoint> act_checked(const WeylGroup& w, const MonoidElem& m,
                                     const ConePoint& p,
                                     long long descent_cap) {
  TitsMembership mb = tits_membership(w, p, descent_cap);
  if (mb.status == Membership::NotInX)
    fail(Errc::PointNotInCone, "point lies outside the Tits cone");
  if (mb.status == Membership::Unknown)
    fail(Errc::PointNotInCone,
         "membership undecided within the descent cap");
  return act(w, m, p);
}

std::vector<MonoidElem> monoid_ball(const WeylGroup& w, int lmp_bound,
                                    std::size_t cap) {
  const Gcm& g = w.gcm();
  const auto full = w.ball(lmp_bound, g.full_set(), cap);
  std::vector<MonoidElem> out;
  for (Subset theta : special_subsets(g)) {
    const Subset perp = g.theta_perp(theta);
    const Subset j = theta | perp;
    std::vector<const WeylElem*> firsts, lasts;
    for (const auto& e : full) {
      if ((w.descents(e, GenSide::Right) & j) == 0) firsts.push_back(&e);
      if ((w.descents(e, GenSide::Left) & j) == 0) lasts.push_back(&e);
    }
    const auto mids = w.ball(lmp_bound, perp, cap);
    for (const WeylElem* w1 : firsts) {
      if (w1->length() > lmp_bound) break;
      for (const auto& w2 : mids) {
        if (w1->length() + w2.length() > lmp_bound) break;
        for (const WeylElem* w3 : lasts) {
          if (w1->length() + w2.length() + w3->length() > lmp_bound) break;
          out.push_back(MonoidElem{theta, *w1, w2, *w3});
          if (out.size() > cap)
            fail(Errc::ResourceBudgetExceeded,
                 "monoid ball exceeds cap of " + std::to_string(cap));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), monoid_less);
  return out;
}

}  // namespace wm
