#include "wm/lengths.hpp"

namespace wm {

LengthTriple lengths(const MonoidElem& m) {
  const long long l1 = m.w1.length(), l2 = m.w2.length(), l3 = m.w3.length();
  return LengthTriple{l1 + l2 - l3, -l1 + l2 + l3, l1 + l2 + l3};
}

long long length_of(const LengthTriple& t, LKind k) {
  switch (k) {
    case LKind::PP: return t.pp;
    case LKind::MM: return t.mm;
    case LKind::MP: return t.mp;
  }
  return 0;
}

RootVector delta_root(const WeylGroup& w, GenSide side, int i,
                      const MonoidElem& m) {
  if (side == GenSide::Left) {
    WeylElem first = nf1_parts(w, m).first;
    return w.act_on_root(w.inverse(first), w.simple_root(i));
  }
  WeylElem second = nf2_parts(w, m).second;
  return w.act_on_root(second, w.simple_root(i));
}

// The case tables partition the real roots into three classes: support in
// theta (the reflection is absorbed, delta 0 in every kind), support in perp
// (the middle part moves, delta = sign in every kind), and the generic class
// where the outer part on the acting side moves.  Real-root support is
// connected, so membership in W_J {alpha_j : j in J} is the support test.
int length_delta(const WeylGroup& w, GenSide side, int i, const MonoidElem& m,
                 LKind kind) {
  const RootVector beta = delta_root(w, side, i, m);
  const int sign = beta.sign() == RootSign::Positive ? 1 : -1;
  const Subset supp = beta.support();
  if (subset_of(supp, m.theta)) return 0;
  if (subset_of(supp, w.gcm().theta_perp(m.theta))) return sign;
  if (kind == LKind::MP) return sign;
  if (side == GenSide::Left) return kind == LKind::PP ? sign : -sign;
  return kind == LKind::PP ? -sign : sign;
}

}  // namespace wm
