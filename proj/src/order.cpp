#include "wm/order.hpp"

#include <algorithm>

#include "wm/expr.hpp"

namespace wm {

const char* order_kind_name(OrderKind k) noexcept {
  switch (k) {
    case OrderKind::PP: return "pp";
    case OrderKind::MM: return "mm";
    case OrderKind::MP: return "mp";
  }
  return "?";
}

OrderVerdict leq_pp(const WeylGroup& w, const MonoidElem& a,
                    const MonoidElem& b, int bound_multiplier) {
  OrderVerdict v;
  if (!subset_of(b.theta, a.theta)) return v;
  auto [a1, a2] = nf1_parts(w, a);
  auto [b1, b2] = nf1_parts(w, b);
  // From w2 >= w^{-1} w2' in Bruhat order the witness length is bounded by
  // l(w2) + l(w2').
  const int bound = (a2.length() + b2.length()) * bound_multiplier;
  v.search_bound = bound;
  const Subset jp = w.gcm().theta_perp(b.theta);
  for (const WeylElem& cand : w.ball_cached(bound, jp | a.theta)) {
    if (a1.length() > b1.length() + cand.length()) continue;
    if (cand.length() > b2.length() + a2.length()) continue;
    if (!w.in_product_set(jp, cand, a.theta)) continue;
    if (w.bruhat_leq(a1, w.compose(b1, cand)) &&
        w.bruhat_leq(w.compose(w.inverse(cand), b2), a2)) {
      v.holds = true;
      v.witness = cand;
      return v;
    }
  }
  return v;
}

OrderVerdict leq_mm(const WeylGroup& w, const MonoidElem& a,
                    const MonoidElem& b, int bound_multiplier) {
  return leq_pp(w, inverse(w, a), inverse(w, b), bound_multiplier);
}

OrderVerdict leq_mm_direct(const WeylGroup& w, const MonoidElem& a,
                           const MonoidElem& b, int bound_multiplier) {
  OrderVerdict v;
  if (!subset_of(b.theta, a.theta)) return v;
  auto [a1, a2] = nf2_parts(w, a);
  auto [b1, b2] = nf2_parts(w, b);
  // Reversed inequalities; the first one bounds the witness this time.
  const int bound = (a1.length() + b1.length()) * bound_multiplier;
  v.search_bound = bound;
  const Subset jp = w.gcm().theta_perp(b.theta);
  for (const WeylElem& cand : w.ball_cached(bound, jp | a.theta)) {
    if (!w.in_product_set(jp, cand, a.theta)) continue;
    if (w.bruhat_leq(w.compose(b1, cand), a1) &&
        w.bruhat_leq(a2, w.compose(w.inverse(cand), b2))) {
      v.holds = true;
      v.witness = cand;
      return v;
    }
  }
  return v;
}

OrderVerdict leq_mp(const WeylGroup& w, const MonoidElem& a,
                    const MonoidElem& b, int bound_multiplier) {
  OrderVerdict v;
  // The larger element of the relation carries the larger theta.
  if (!subset_of(a.theta, b.theta)) return v;
  auto [a1, a2] = nf1_parts(w, a);
  auto [b1, b2] = nf1_parts(w, b);
  const int bound = (a2.length() + b2.length()) * bound_multiplier;
  v.search_bound = bound;
  const Subset jp = w.gcm().theta_perp(a.theta);
  // Both conditions depend on the witness only through its coset against
  // W_{theta_b}, so right-minimal representatives against the intersection
  // are enough.
  const Subset dedupe = b.theta & jp;
  for (const WeylElem& cand : w.ball_cached(bound, jp)) {
    if ((w.descents(cand, GenSide::Right) & dedupe) != 0) continue;
    WeylElem lhs1 = w.coset_min(w.compose(a1, cand), b.theta, GenSide::Right);
    if (!w.bruhat_leq(lhs1, b1)) continue;
    WeylElem lhs2 = w.coset_min(w.compose(w.inverse(cand), a2), b.theta,
                                GenSide::Left);
    if (!w.bruhat_leq(lhs2, b2)) continue;
    v.holds = true;
    v.witness = cand;
    return v;
  }
  return v;
}

OrderVerdict order_leq(const WeylGroup& w, OrderKind kind, const MonoidElem& a,
                       const MonoidElem& b, int bound_multiplier) {
  switch (kind) {
    case OrderKind::PP: return leq_pp(w, a, b, bound_multiplier);
    case OrderKind::MM: return leq_mm(w, a, b, bound_multiplier);
    case OrderKind::MP: return leq_mp(w, a, b, bound_multiplier);
  }
  fail(Errc::Internal, "unknown order kind");
}

bool witness_valid(const WeylGroup& w, OrderKind kind, const MonoidElem& a,
                   const MonoidElem& b, const WeylElem& witness) {
  switch (kind) {
    case OrderKind::PP: {
      if (!subset_of(b.theta, a.theta)) return false;
      auto [a1, a2] = nf1_parts(w, a);
      auto [b1, b2] = nf1_parts(w, b);
      const Subset jp = w.gcm().theta_perp(b.theta);
      return w.in_product_set(jp, witness, a.theta) &&
             w.bruhat_leq(a1, w.compose(b1, witness)) &&
             w.bruhat_leq(w.compose(w.inverse(witness), b2), a2);
    }
    case OrderKind::MM:
      return witness_valid(w, OrderKind::PP, inverse(w, a), inverse(w, b),
                           witness);
    case OrderKind::MP: {
      if (!subset_of(a.theta, b.theta)) return false;
      auto [a1, a2] = nf1_parts(w, a);
      auto [b1, b2] = nf1_parts(w, b);
      const Subset jp = w.gcm().theta_perp(a.theta);
      for (int letter : witness.word())
        if (!subset_contains(jp, letter)) return false;
      return w.bruhat_leq(
                 w.coset_min(w.compose(a1, witness), b.theta, GenSide::Right),
                 b1) &&
             w.bruhat_leq(w.coset_min(w.compose(w.inverse(witness), a2),
                                      b.theta, GenSide::Left),
                          b2);
    }
  }
  return false;
}

std::vector<std::pair<int, int>> covers(const WeylGroup& w, OrderKind kind,
                                        std::span<const MonoidElem> ball) {
  const int n = static_cast<int>(ball.size());
  std::vector<std::vector<bool>> lt(static_cast<size_t>(n),
                                    std::vector<bool>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        lt[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            order_leq(w, kind, ball[static_cast<size_t>(i)],
                      ball[static_cast<size_t>(j)])
                .holds &&
            ball[static_cast<size_t>(i)] != ball[static_cast<size_t>(j)];
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!lt[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
      bool direct = true;
      for (int k = 0; k < n && direct; ++k)
        if (lt[static_cast<size_t>(i)][static_cast<size_t>(k)] &&
            lt[static_cast<size_t>(k)][static_cast<size_t>(j)])
          direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

std::string hasse_dot(const WeylGroup& w, OrderKind kind,
                      std::span<const MonoidElem> ball) {
  std::string out = "digraph hasse {\n";
  out += "  rankdir=BT;\n";
  for (size_t i = 0; i < ball.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + nf3_display(w, ball[i]) +
           "\"];\n";
  for (auto [lo, hi] : covers(w, kind, ball))
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace wm
