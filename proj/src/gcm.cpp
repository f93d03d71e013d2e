#include "wm/gcm.hpp"

#include <algorithm>
#include <numeric>

namespace wm {

const char* block_type_name(BlockType t) noexcept {
  switch (t) {
    case BlockType::Finite: return "finite";
    case BlockType::Affine: return "affine";
    case BlockType::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {

// Fraction-free determinant (Bareiss).  Sizes here are tiny, entries small.
Entry det_bareiss(std::vector<__int128> m, int k) {
  if (k == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (int col = 0; col < k - 1; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r)
      if (m[static_cast<size_t>(r) * k + col] != 0) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < k; ++c)
        std::swap(m[static_cast<size_t>(pivot) * k + c],
                  m[static_cast<size_t>(col) * k + c]);
      sign = -sign;
    }
    for (int r = col + 1; r < k; ++r) {
      for (int c = col + 1; c < k; ++c) {
        __int128 v = m[static_cast<size_t>(r) * k + c] *
                         m[static_cast<size_t>(col) * k + col] -
                     m[static_cast<size_t>(r) * k + col] *
                         m[static_cast<size_t>(col) * k + c];
        m[static_cast<size_t>(r) * k + c] = v / prev;
      }
      m[static_cast<size_t>(r) * k + col] = 0;
    }
    prev = m[static_cast<size_t>(col) * k + col];
  }
  return checked_narrow(sign * m[static_cast<size_t>(k - 1) * k + (k - 1)]);
}

}  // namespace

Gcm Gcm::validate(const std::vector<std::vector<Entry>>& rows,
                  std::string name) {
  Gcm g;
  g.name_ = std::move(name);
  const int n = static_cast<int>(rows.size());
  if (n < 1) fail(Errc::ParseError, "matrix must have at least one row");
  if (n > 31) fail(Errc::ParseError, "rank above 31 is not supported");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n)
      fail(Errc::ParseError, "matrix is not square");
  g.n_ = n;
  g.a_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.a_[static_cast<size_t>(i) * n + j] = rows[i][j];

  for (int i = 0; i < n; ++i)
    if (g.a(i, i) != 2)
      fail(Errc::DiagonalNotTwo,
           "entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
               ") is " + std::to_string(g.a(i, i)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.a(i, j) > 0)
        fail(Errc::PositiveOffDiagonal,
             "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") is positive");
      if ((g.a(i, j) == 0) != (g.a(j, i) == 0))
        fail(Errc::ZeroPairViolation,
             "entries (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ") and transpose disagree on zero");
    }

  // Symmetrizer: propagate eps along edges of each component, rejecting
  // inconsistent cycles; then clear denominators to coprime integers.
  g.eps_.assign(n, Rat(0));
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comp_members;
  for (int start = 0; start < n; ++start) {
    if (comp_of[start] >= 0) continue;
    const int ci = static_cast<int>(comp_members.size());
    comp_members.emplace_back();
    std::vector<int> stack{start};
    comp_of[start] = ci;
    g.eps_[start] = Rat(1);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      comp_members[ci].push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j == i || g.a(i, j) == 0) continue;
        // eps[j]*a(i,j) == eps[i]*a(j,i)
        Rat want = g.eps_[i] * Rat(g.a(j, i), g.a(i, j));
        if (comp_of[j] < 0) {
          comp_of[j] = ci;
          g.eps_[j] = want;
          stack.push_back(j);
        } else if (g.eps_[j] != want) {
          fail(Errc::NotSymmetrizable,
               "inconsistent cycle through index " + std::to_string(j + 1));
        }
      }
    }
    std::sort(comp_members[ci].begin(), comp_members[ci].end());
    Entry lcm_den = 1;
    for (int i : comp_members[ci])
      lcm_den = std::lcm(lcm_den, g.eps_[i].den);
    Entry gcd_num = 0;
    for (int i : comp_members[ci]) {
      g.eps_[i] = g.eps_[i] * Rat(lcm_den);
      gcd_num = std::gcd(gcd_num, g.eps_[i].num);
    }
    for (int i : comp_members[ci]) g.eps_[i] = g.eps_[i] / Rat(gcd_num);
  }

  for (const auto& members : comp_members) {
    Subset s = subset_from_members(members);
    Component c;
    c.indices = s;
    c.type = g.classify(s);
    if (c.type == BlockType::Affine) {
      // Kernel of the transposed block: the level functional is the pairing
      // against sum c_i h_i and is invariant under the block's reflections.
      const auto idx = members;
      const int k = static_cast<int>(idx.size());
      std::vector<Rat> m(static_cast<size_t>(k) * k);
      for (int r = 0; r < k; ++r)
        for (int ccol = 0; ccol < k; ++ccol)
          m[static_cast<size_t>(r) * k + ccol] = Rat(g.a(idx[ccol], idx[r]));
      // Gaussian elimination to row echelon form.
      std::vector<int> pivot_col;
      int row = 0;
      for (int col = 0; col < k && row < k; ++col) {
        int p = -1;
        for (int r = row; r < k; ++r)
          if (!m[static_cast<size_t>(r) * k + col].is_zero()) { p = r; break; }
        if (p < 0) continue;
        for (int cc = 0; cc < k; ++cc)
          std::swap(m[static_cast<size_t>(p) * k + cc],
                    m[static_cast<size_t>(row) * k + cc]);
        Rat pv = m[static_cast<size_t>(row) * k + col];
        for (int r = 0; r < k; ++r) {
          if (r == row) continue;
          Rat f = m[static_cast<size_t>(r) * k + col] / pv;
          if (f.is_zero()) continue;
          for (int cc = 0; cc < k; ++cc)
            m[static_cast<size_t>(r) * k + cc] -=
                f * m[static_cast<size_t>(row) * k + cc];
        }
        pivot_col.push_back(col);
        ++row;
      }
      if (row != k - 1)
        fail(Errc::Internal, "affine block kernel is not one-dimensional");
      int free_col = 0;
      while (std::find(pivot_col.begin(), pivot_col.end(), free_col) !=
             pivot_col.end())
        ++free_col;
      std::vector<Rat> kern(k, Rat(0));
      kern[free_col] = Rat(1);
      for (int r = 0; r < row; ++r) {
        Rat pv = m[static_cast<size_t>(r) * k + pivot_col[r]];
        kern[pivot_col[r]] =
            -(m[static_cast<size_t>(r) * k + free_col] / pv);
      }
      Entry lcm_den = 1;
      for (const Rat& q : kern) lcm_den = std::lcm(lcm_den, q.den);
      std::vector<Entry> iv(k);
      Entry gg = 0;
      for (int t = 0; t < k; ++t) {
        iv[t] = checked_mul(kern[t].num, lcm_den / kern[t].den);
        gg = std::gcd(gg, iv[t] < 0 ? -iv[t] : iv[t]);
      }
      bool all_neg = std::all_of(iv.begin(), iv.end(),
                                 [](Entry v) { return v < 0; });
      for (auto& v : iv) {
        v /= gg;
        if (all_neg) v = -v;
      }
      if (!std::all_of(iv.begin(), iv.end(), [](Entry v) { return v > 0; }))
        fail(Errc::Internal, "affine kernel vector is not positive");
      c.level_coroot.assign(n, 0);
      for (int t = 0; t < k; ++t) c.level_coroot[idx[t]] = iv[t];
    }
    g.comps_.push_back(std::move(c));
  }
  std::sort(g.comps_.begin(), g.comps_.end(),
            [](const Component& x, const Component& y) {
              return x.indices < y.indices;
            });
  return g;
}

BlockType Gcm::classify(Subset subset) const {
  const auto idx = subset_members(subset);
  const int k = static_cast<int>(idx.size());
  if (k == 0) fail(Errc::Internal, "classify on empty subset");
  auto sub_det = [&](Subset pick) {
    const auto pid = subset_members(pick);
    const int kk = static_cast<int>(pid.size());
    std::vector<__int128> m(static_cast<size_t>(kk) * kk);
    for (int r = 0; r < kk; ++r)
      for (int c = 0; c < kk; ++c)
        m[static_cast<size_t>(r) * kk + c] = a(pid[r], pid[c]);
    return det_bareiss(std::move(m), kk);
  };
  // Finite iff every principal minor is positive; affine iff the full
  // determinant vanishes and every proper principal minor is positive.
  bool proper_positive = true;
  for (Subset pick = subset; pick != 0; pick = (pick - 1) & subset) {
    if (pick == subset) continue;
    if (sub_det(pick) <= 0) { proper_positive = false; break; }
  }
  Entry full = sub_det(subset);
  if (proper_positive && full > 0) return BlockType::Finite;
  if (proper_positive && full == 0) return BlockType::Affine;
  return BlockType::Indefinite;
}

std::vector<Component> Gcm::induced_components(Subset subset) const {
  std::vector<Component> out;
  Subset seen = 0;
  for (int i : subset_members(subset)) {
    if (subset_contains(seen, i)) continue;
    Subset comp = subset_bit(i);
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : subset_members(subset)) {
        if (subset_contains(comp, v) || a(u, v) == 0 || u == v) continue;
        comp |= subset_bit(v);
        stack.push_back(v);
      }
    }
    seen |= comp;
    Component c;
    c.indices = comp;
    c.type = classify(comp);
    out.push_back(std::move(c));
  }
  return out;
}

bool Gcm::is_special(Subset theta) const {
  if (theta == 0) return true;
  for (const auto& c : induced_components(theta))
    if (c.type == BlockType::Finite) return false;
  return true;
}

Subset Gcm::theta_perp(Subset theta) const {
  Subset out = 0;
  for (int i = 0; i < n_; ++i) {
    bool perp = true;
    for (int j : subset_members(theta))
      if (a(i, j) != 0) { perp = false; break; }
    if (perp) out |= subset_bit(i);
  }
  return out;
}

}  // namespace wm
