#include "wm/weyl.hpp"

#include <algorithm>
#include <set>

namespace wm {

Matx Matx::identity(int n) {
  Matx m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matx Matx::mul(const Matx& rhs) const {
  Matx out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < n_; ++k)
        acc += static_cast<__int128>(at(i, k)) * rhs.at(k, j);
      out.at(i, j) = checked_narrow(acc);
    }
  return out;
}

std::vector<Entry> Matx::apply(std::span<const Entry> v) const {
  std::vector<Entry> out(static_cast<size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    __int128 acc = 0;
    for (int k = 0; k < n_; ++k)
      acc += static_cast<__int128>(at(i, k)) * v[static_cast<size_t>(k)];
    out[static_cast<size_t>(i)] = checked_narrow(acc);
  }
  return out;
}

RootSign RootVector::sign() const {
  bool pos = false, neg = false;
  for (Entry c : coords) {
    if (c > 0) pos = true;
    if (c < 0) neg = true;
  }
  if (pos && !neg) return RootSign::Positive;
  if (neg && !pos) return RootSign::Negative;
  return RootSign::Mixed;
}

Subset RootVector::support() const {
  Subset s = 0;
  for (size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) s |= subset_bit(static_cast<int>(i));
  return s;
}

Entry RootVector::height() const {
  Entry h = 0;
  for (Entry c : coords) h = checked_add(h, c);
  return h;
}

WeylGroup::WeylGroup(Gcm gcm) : gcm_(std::move(gcm)) {
  gen_.reserve(static_cast<size_t>(rank()));
  for (int i = 0; i < rank(); ++i) gen_.push_back(gen_matrix(i));
}

// sigma_i alpha_j = alpha_j - a(i,j) alpha_i: identity with row i replaced.
Matx WeylGroup::gen_matrix(int i) const {
  Matx m = Matx::identity(rank());
  for (int j = 0; j < rank(); ++j) m.at(i, j) -= gcm_.a(i, j);
  return m;
}

// m <- S_i m with S_i = I - e_i a_{i.}: row i picks up -a(i,.) times the
// other rows; columns are independent, so the update runs in place.
void WeylGroup::left_mul_gen(Matx& m, int i) const {
  const int n = rank();
  for (int c = 0; c < n; ++c) {
    __int128 acc = m.at(i, c);
    for (int j = 0; j < n; ++j)
      acc -= static_cast<__int128>(gcm_.a(i, j)) * m.at(j, c);
    m.at(i, c) = checked_narrow(acc);
  }
}

// m <- m S_i: subtract col_i(m) tensor row_i(A).
void WeylGroup::right_mul_gen(Matx& m, int i) const {
  const int n = rank();
  for (int r = 0; r < n; ++r) {
    const Entry mri = m.at(r, i);
    if (mri == 0) continue;
    for (int c = 0; c < n; ++c)
      m.at(r, c) = checked_narrow(static_cast<__int128>(m.at(r, c)) -
                                  static_cast<__int128>(mri) * gcm_.a(i, c));
  }
}

// Strip the smallest-index left descent until the identity remains.  The
// left descents of w are read off the inverse matrix: i is a left descent
// exactly when w^{-1} alpha_i is negative, i.e. column i of inv is negative.
std::vector<int> WeylGroup::canonical_word(Matx m, Matx inv) const {
  std::vector<int> word;
  const int n = rank();
  for (;;) {
    int descent = -1;
    for (int i = 0; i < n && descent < 0; ++i)
      for (int r = 0; r < n; ++r)
        if (inv.at(r, i) < 0) { descent = i; break; }
    if (descent < 0) break;
    word.push_back(descent);
    left_mul_gen(m, descent);
    right_mul_gen(inv, descent);
  }
  if (!(m == Matx::identity(n)))
    fail(Errc::Internal, "descent stripping did not reach the identity");
  return word;
}

WeylElem WeylGroup::make_from_matrices(Matx m, Matx inv) const {
  WeylElem w;
  w.word_ = canonical_word(m, inv);
  w.mat_ = std::move(m);
  w.inv_ = std::move(inv);
  return w;
}

WeylElem WeylGroup::identity() const {
  WeylElem w;
  w.mat_ = Matx::identity(rank());
  w.inv_ = w.mat_;
  return w;
}

WeylElem WeylGroup::simple(int i) const {
  if (i < 0 || i >= rank()) fail(Errc::ParseError, "generator index out of range");
  WeylElem w;
  w.mat_ = gen_[static_cast<size_t>(i)];
  w.inv_ = w.mat_;
  w.word_ = {i};
  return w;
}

WeylElem WeylGroup::from_word(std::span<const int> word) const {
  Matx m = Matx::identity(rank());
  Matx inv = m;
  for (int i : word) {
    if (i < 0 || i >= rank())
      fail(Errc::ParseError, "generator index out of range");
    right_mul_gen(m, i);
    left_mul_gen(inv, i);
  }
  return make_from_matrices(std::move(m), std::move(inv));
}

WeylElem WeylGroup::compose(const WeylElem& u, const WeylElem& v) const {
  if (u.is_identity()) return v;
  if (v.is_identity()) return u;
  return make_from_matrices(u.mat_.mul(v.mat_), v.inv_.mul(u.inv_));
}

WeylElem WeylGroup::inverse(const WeylElem& u) const {
  return make_from_matrices(u.inv_, u.mat_);
}

bool WeylGroup::is_left_descent(const WeylElem& w, int i) const {
  for (int r = 0; r < rank(); ++r)
    if (w.inv_.at(r, i) < 0) return true;
  return false;
}

bool WeylGroup::is_right_descent(const WeylElem& w, int i) const {
  for (int r = 0; r < rank(); ++r)
    if (w.mat_.at(r, i) < 0) return true;
  return false;
}

Subset WeylGroup::descents(const WeylElem& w, GenSide side) const {
  Subset s = 0;
  for (int i = 0; i < rank(); ++i) {
    bool d = side == GenSide::Left ? is_left_descent(w, i)
                                   : is_right_descent(w, i);
    if (d) s |= subset_bit(i);
  }
  return s;
}

int WeylGroup::intern(const Matx& m) const {
  auto [it, inserted] = ids_.try_emplace(m.data(), static_cast<int>(ids_.size()));
  return it->second;
}

bool WeylGroup::bruhat_leq(const WeylElem& u, const WeylElem& v) const {
  if (u.length() == 0) return true;
  if (u.length() > v.length()) return false;
  if (u.length() == v.length()) return u == v;
  std::uint64_t key;
  {
    std::lock_guard<std::mutex> lock(mu_);
    key = (static_cast<std::uint64_t>(intern(u.mat_)) << 32) |
          static_cast<std::uint32_t>(intern(v.mat_));
    auto it = bruhat_memo_.find(key);
    if (it != bruhat_memo_.end()) return it->second;
  }
  // Lifting step on the smallest left descent of v, which is the first
  // letter of its canonical word.
  const int s = v.word_.front();
  WeylElem sv = compose(simple(s), v);
  bool res = is_left_descent(u, s) ? bruhat_leq(compose(simple(s), u), sv)
                                   : bruhat_leq(u, sv);
  {
    std::lock_guard<std::mutex> lock(mu_);
    bruhat_memo_.emplace(key, res);
  }
  return res;
}

WeylElem WeylGroup::coset_min(const WeylElem& w, Subset j, GenSide side) const {
  WeylElem cur = w;
  for (;;) {
    int hit = -1;
    for (int i : subset_members(j)) {
      bool d = side == GenSide::Right ? is_right_descent(cur, i)
                                      : is_left_descent(cur, i);
      if (d) { hit = i; break; }
    }
    if (hit < 0) return cur;
    cur = side == GenSide::Right ? compose(cur, simple(hit))
                                 : compose(simple(hit), cur);
  }
}

WeylElem WeylGroup::double_coset_min(Subset j, const WeylElem& w,
                                     Subset k) const {
  WeylElem cur = w;
  for (;;) {
    WeylElem next = coset_min(coset_min(cur, j, GenSide::Left), k, GenSide::Right);
    if (next == cur) return cur;
    cur = next;
  }
}

bool WeylGroup::in_product_set(Subset j, const WeylElem& w, Subset k) const {
  Subset letters = 0;
  for (int i : w.word()) letters |= subset_bit(i);
  if (subset_of(letters, j) || subset_of(letters, k)) return true;
  return double_coset_min(j, w, k).is_identity();
}

std::vector<WeylElem> WeylGroup::ball(int max_len, Subset mask,
                                      std::size_t cap) const {
  std::vector<WeylElem> out{identity()};
  std::set<std::vector<Entry>> seen{out.front().matrix().data()};
  std::vector<WeylElem> layer = out;
  for (int len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<WeylElem> next;
    for (const WeylElem& w : layer)
      for (int i : subset_members(mask)) {
        if (is_right_descent(w, i)) continue;  // length would drop
        WeylElem cand = compose(w, simple(i));
        if (seen.insert(cand.matrix().data()).second) {
          if (seen.size() > cap)
            fail(Errc::ResourceBudgetExceeded,
                 "ball exceeds cap of " + std::to_string(cap));
          next.push_back(std::move(cand));
        }
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<WeylElem> WeylGroup::ball(int max_len) const {
  return ball(max_len, gcm_.full_set(), kDefaultBallCap);
}

const std::vector<WeylElem>& WeylGroup::ball_cached(int max_len,
                                                    Subset mask) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ball_cache_.find({max_len, mask});
    if (it != ball_cache_.end()) return *it->second;
  }
  auto computed = std::make_unique<std::vector<WeylElem>>(
      ball(max_len, mask, kDefaultBallCap));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] =
      ball_cache_.try_emplace({max_len, mask}, std::move(computed));
  return *it->second;
}

RootVector WeylGroup::simple_root(int i) const {
  RootVector r;
  r.coords.assign(static_cast<size_t>(rank()), 0);
  r.coords[static_cast<size_t>(i)] = 1;
  return r;
}

RootVector WeylGroup::act_on_root(const WeylElem& w,
                                  const RootVector& beta) const {
  RootVector out;
  out.coords = w.matrix().apply(beta.coords);
  return out;
}

std::vector<RootVector> WeylGroup::inversion_set(const WeylElem& w) const {
  // From a reduced word s_{i1}..s_{ik}: beta_m = s_{i1}..s_{i_{m-1}} alpha_{i_m}.
  std::vector<RootVector> out;
  const auto& word = w.word();
  for (size_t m = 0; m < word.size(); ++m) {
    std::vector<Entry> v(static_cast<size_t>(rank()), 0);
    v[static_cast<size_t>(word[m])] = 1;
    for (size_t t = m; t-- > 0;) {
      const int letter = word[t];
      __int128 pairing = 0;
      for (int j = 0; j < rank(); ++j)
        pairing += static_cast<__int128>(gcm_.a(letter, j)) * v[static_cast<size_t>(j)];
      v[static_cast<size_t>(letter)] =
          checked_narrow(v[static_cast<size_t>(letter)] - pairing);
    }
    out.push_back(RootVector{std::move(v)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool WeylGroup::is_real_root(const RootVector& beta) const {
  RootSign sg = beta.sign();
  if (sg == RootSign::Mixed)
    fail(Errc::NotARoot, "mixed-sign vector is not a root");
  std::vector<Entry> v = beta.coords;
  if (sg == RootSign::Negative)
    for (auto& c : v) c = -c;
  for (;;) {
    int nonzero = 0, simple_at = -1;
    for (int i = 0; i < rank(); ++i)
      if (v[static_cast<size_t>(i)] != 0) { ++nonzero; simple_at = i; }
    if (nonzero == 0) return false;
    if (nonzero == 1 && v[static_cast<size_t>(simple_at)] == 1) return true;
    int pick = -1;
    Entry pairing = 0;
    for (int i = 0; i < rank() && pick < 0; ++i) {
      __int128 p = 0;
      for (int j = 0; j < rank(); ++j)
        p += static_cast<__int128>(gcm_.a(i, j)) * v[static_cast<size_t>(j)];
      if (p > 0) { pick = i; pairing = checked_narrow(p); }
    }
    if (pick < 0) return false;  // stalled inside the imaginary cone
    v[static_cast<size_t>(pick)] -= pairing;
    for (Entry c : v)
      if (c < 0) return false;
  }
}

bool WeylGroup::in_parabolic_orbit(const RootVector& beta, Subset j) const {
  return is_real_root(beta) && subset_of(beta.support(), j);
}

std::vector<RootVector> WeylGroup::positive_real_roots(int height_cap) const {
  std::set<std::vector<Entry>> seen;
  std::vector<std::vector<Entry>> queue;
  for (int i = 0; i < rank(); ++i) {
    auto r = simple_root(i).coords;
    seen.insert(r);
    queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    auto v = std::move(queue.back());
    queue.pop_back();
    for (int i = 0; i < rank(); ++i) {
      __int128 p = 0;
      for (int j = 0; j < rank(); ++j)
        p += static_cast<__int128>(gcm_.a(i, j)) * v[static_cast<size_t>(j)];
      std::vector<Entry> w = v;
      w[static_cast<size_t>(i)] = checked_narrow(w[static_cast<size_t>(i)] - p);
      bool positive = true;
      Entry height = 0;
      for (Entry c : w) {
        if (c < 0) { positive = false; break; }
        height = checked_add(height, c);
      }
      if (!positive || height > height_cap) continue;
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  std::vector<RootVector> out;
  for (auto& v : seen) out.push_back(RootVector{v});
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords < b.coords;
  });
  return out;
}

}  // namespace wm
