#include "wm/titscone.hpp"

#include <algorithm>

namespace wm {

ConePoint indicator_point(const Gcm& g, Subset zero_set) {
  ConePoint p;
  p.values.assign(static_cast<size_t>(g.rank()), Rat(1));
  for (int i : subset_members(zero_set)) p.values[static_cast<size_t>(i)] = Rat(0);
  return p;
}

namespace {

// sigma_j on coroot values: v_i <- v_i - a(i,j) v_j for every i.
void reflect_point(const Gcm& g, std::vector<Rat>& v, int j) {
  const Rat vj = v[static_cast<size_t>(j)];
  if (vj.is_zero()) return;
  for (int i = 0; i < g.rank(); ++i)
    v[static_cast<size_t>(i)] -= Rat(g.a(i, j)) * vj;
}

}  // namespace

ConePoint apply_to_point(const WeylGroup& w, const WeylElem& u,
                         const ConePoint& p) {
  ConePoint out = p;
  const auto& word = u.word();
  for (size_t t = word.size(); t-- > 0;)
    reflect_point(w.gcm(), out.values, word[t]);
  return out;
}

bool vanishes_on(const ConePoint& p, Subset s) {
  for (int i : subset_members(s))
    if (!p.values[static_cast<size_t>(i)].is_zero()) return false;
  return true;
}

std::vector<Entry> coroot_image(const WeylGroup& w, const WeylElem& u, int i) {
  // sigma_j h = h - alpha_j(h) h_j with alpha_j(h_r) = a(r,j):
  // y_j <- y_j - sum_r a(r,j) y_r.
  const Gcm& g = w.gcm();
  std::vector<Entry> y(static_cast<size_t>(g.rank()), 0);
  y[static_cast<size_t>(i)] = 1;
  const auto& word = u.word();
  for (size_t t = word.size(); t-- > 0;) {
    const int j = word[t];
    __int128 pairing = 0;
    for (int r = 0; r < g.rank(); ++r)
      pairing += static_cast<__int128>(g.a(r, j)) * y[static_cast<size_t>(r)];
    y[static_cast<size_t>(j)] =
        checked_narrow(y[static_cast<size_t>(j)] - pairing);
  }
  return y;
}

TitsMembership tits_membership(const WeylGroup& w, const ConePoint& p,
                               long long cap) {
  const Gcm& g = w.gcm();
  if (static_cast<int>(p.values.size()) != g.rank())
    fail(Errc::ParseError, "point dimension does not match the rank");

  // Certificates per affine component: the level functional is invariant,
  // nonnegative on the closed chamber, and zero there only at zero.
  for (const auto& comp : g.components()) {
    if (comp.type != BlockType::Affine) continue;
    Rat level(0);
    bool nonzero = false;
    for (int i : subset_members(comp.indices)) {
      level += Rat(comp.level_coroot[static_cast<size_t>(i)]) *
               p.values[static_cast<size_t>(i)];
      if (!p.values[static_cast<size_t>(i)].is_zero()) nonzero = true;
    }
    if (level.is_negative() || (level.is_zero() && nonzero))
      return TitsMembership{Membership::NotInX, WeylElem{}, 0};
  }

  std::vector<Rat> v = p.values;
  std::vector<int> word;
  for (long long step = 0; step < cap; ++step) {
    int neg = -1;
    for (int i = 0; i < g.rank(); ++i)
      if (v[static_cast<size_t>(i)].is_negative()) { neg = i; break; }
    if (neg < 0) {
      Subset type = 0;
      for (int i = 0; i < g.rank(); ++i)
        if (v[static_cast<size_t>(i)].is_zero()) type |= subset_bit(i);
      TitsMembership m;
      m.status = Membership::InX;
      m.transporter = w.from_word(word);
      m.facet_type = type;
      return m;
    }
    reflect_point(g, v, neg);
    word.push_back(neg);
  }
  return TitsMembership{Membership::Unknown, WeylElem{}, 0};
}

Facet facet_of(const WeylGroup& w, const TitsMembership& m) {
  if (m.status != Membership::InX)
    fail(Errc::Internal, "facet requested for a point not placed in the cone");
  Facet f;
  f.type = m.facet_type;
  f.rep = w.coset_min(m.transporter, m.facet_type, GenSide::Right);
  return f;
}

Face face_generated(const WeylGroup& w, const Facet& f) {
  Subset theta = 0;
  for (const auto& c : w.gcm().induced_components(f.type))
    if (c.type != BlockType::Finite) theta |= c.indices;
  Face out;
  out.theta = theta;
  out.rep = w.coset_min(f.rep, theta | w.gcm().theta_perp(theta), GenSide::Right);
  return out;
}

Face face_of_theta(const WeylGroup& w, Subset theta) {
  if (!w.gcm().is_special(theta))
    fail(Errc::NotSpecial, "subset " + subset_str(theta) + " is not special");
  return Face{theta, w.identity()};
}

bool face_contains(const WeylGroup& w, const Face& f1, const Face& f2) {
  // Characteristic relative-interior point of F2, pulled into the frame of
  // F1; membership in X is automatic, only the vanishing pattern matters.
  ConePoint p = apply_to_point(w, f2.rep, indicator_point(w.gcm(), f2.theta));
  ConePoint q = apply_to_point(w, w.inverse(f1.rep), p);
  return vanishes_on(q, f1.theta);
}

std::vector<std::vector<Entry>> face_conditions(const WeylGroup& w,
                                                const Face& f) {
  std::vector<std::vector<Entry>> rows;
  for (int i : subset_members(f.theta))
    rows.push_back(coroot_image(w, f.rep, i));
  return rows;
}

namespace {

// Kernel basis from the reduced row echelon form; integer-scaled, one vector
// per free column in ascending order.
std::vector<std::vector<Entry>> kernel_basis(
    std::vector<std::vector<Entry>> int_rows, int n) {
  std::vector<std::vector<Rat>> rows;
  for (auto& r : int_rows) {
    std::vector<Rat> q(r.begin(), r.end());
    rows.push_back(std::move(q));
  }
  std::vector<int> pivot_of_row;
  size_t row = 0;
  for (int col = 0; col < n && row < rows.size(); ++col) {
    size_t p = row;
    while (p < rows.size() && rows[p][static_cast<size_t>(col)].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[row]);
    Rat pv = rows[row][static_cast<size_t>(col)];
    for (int c = 0; c < n; ++c) rows[row][static_cast<size_t>(c)] /= pv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row) continue;
      Rat f = rows[r][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int c = 0; c < n; ++c)
        rows[r][static_cast<size_t>(c)] -= f * rows[row][static_cast<size_t>(c)];
    }
    pivot_of_row.push_back(col);
    ++row;
  }
  std::vector<std::vector<Entry>> basis;
  for (int f = 0; f < n; ++f) {
    if (std::find(pivot_of_row.begin(), pivot_of_row.end(), f) !=
        pivot_of_row.end())
      continue;
    std::vector<Rat> v(static_cast<size_t>(n), Rat(0));
    v[static_cast<size_t>(f)] = Rat(1);
    for (size_t r = 0; r < pivot_of_row.size(); ++r)
      v[static_cast<size_t>(pivot_of_row[r])] = -rows[r][static_cast<size_t>(f)];
    Entry lcm_den = 1;
    for (const Rat& q : v) lcm_den = std::lcm(lcm_den, q.den);
    std::vector<Entry> iv(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c)
      iv[static_cast<size_t>(c)] =
          checked_mul(v[static_cast<size_t>(c)].num,
                      lcm_den / v[static_cast<size_t>(c)].den);
    Entry g = 0;
    for (Entry e : iv) g = std::gcd(g, e < 0 ? -e : e);
    if (g > 1)
      for (auto& e : iv) e /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

bool conditions_annihilate(const std::vector<std::vector<Entry>>& rows,
                           const std::vector<Entry>& vec) {
  for (const auto& r : rows) {
    __int128 acc = 0;
    for (size_t c = 0; c < vec.size(); ++c)
      acc += static_cast<__int128>(r[c]) * vec[c];
    if (acc != 0) return false;
  }
  return true;
}

Face face_of_point(const WeylGroup& w, const ConePoint& p) {
  TitsMembership m = tits_membership(w, p, kDefaultDescentCap);
  if (m.status != Membership::InX)
    fail(Errc::Internal, "accumulated point escaped the cone");
  return face_generated(w, facet_of(w, m));
}

}  // namespace

FaceMeet face_intersect(const WeylGroup& w, const Face& f1, const Face& f2,
                        const FaceBudget& budget) {
  if (face_contains(w, f1, f2)) return {f2, true};
  if (face_contains(w, f2, f1)) return {f1, true};

  auto rows = face_conditions(w, f1);
  auto rows2 = face_conditions(w, f2);
  rows.insert(rows.end(), rows2.begin(), rows2.end());
  const int n = w.rank();
  const auto basis = kernel_basis(rows, n);
  const int d = static_cast<int>(basis.size());

  // The certificate: the joint vanishing space V lies inside the candidate's
  // own vanishing space, so candidate = X n V = F1 n F2.
  auto certified = [&](const Face& cand) {
    const auto cond = face_conditions(w, cand);
    for (const auto& b : basis)
      if (!conditions_annihilate(cond, b)) return false;
    return true;
  };

  std::vector<Rat> sum(static_cast<size_t>(n), Rat(0));
  Face candidate = face_of_point(w, ConePoint{sum});
  if (certified(candidate)) return {candidate, true};
  if (d == 0) return {candidate, false};

  // Deterministic schedule: coefficient vectors over {-m..m}^d, shells of
  // increasing max-norm m = 1..weight, lexicographic inside a shell.
  int tried = 0;
  std::vector<int> c(static_cast<size_t>(d), 0);
  for (int m = 1; m <= budget.weight && tried < budget.sample_cap; ++m) {
    std::fill(c.begin(), c.end(), -m);
    for (;;) {
      bool on_shell = false;
      for (int v : c)
        if (v == m || v == -m) { on_shell = true; break; }
      if (on_shell) {
        if (++tried > budget.sample_cap) break;
        std::vector<Entry> pt(static_cast<size_t>(n), 0);
        for (int k = 0; k < d; ++k)
          for (int col = 0; col < n; ++col)
            pt[static_cast<size_t>(col)] = checked_add(
                pt[static_cast<size_t>(col)],
                checked_mul(c[static_cast<size_t>(k)],
                            basis[static_cast<size_t>(k)][static_cast<size_t>(col)]));
        ConePoint sample;
        sample.values.assign(pt.begin(), pt.end());
        TitsMembership mb = tits_membership(w, sample, budget.descent_cap);
        if (mb.status == Membership::InX) {
          for (int col = 0; col < n; ++col)
            sum[static_cast<size_t>(col)] += Rat(pt[static_cast<size_t>(col)]);
          candidate = face_of_point(w, ConePoint{sum});
          if (certified(candidate)) return {candidate, true};
        }
      }
      int k = d - 1;
      while (k >= 0 && c[static_cast<size_t>(k)] == m) {
        c[static_cast<size_t>(k)] = -m;
        --k;
      }
      if (k < 0) break;
      ++c[static_cast<size_t>(k)];
    }
  }
  return {candidate, false};
}

}  // namespace wm
