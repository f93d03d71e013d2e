#pragma once

// Weyl group elements as exact integer matrices on root-lattice coordinates,
// with canonical reduced words, Bruhat order, coset and double-coset
// machinery, ball enumeration, and real-root computations.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "wm/gcm.hpp"
#include "wm/rational.hpp"
#include "wm/subsets.hpp"

namespace wm {

// Dense n-by-n integer matrix, row major.  Products accumulate in 128 bits
// and reject results that leave the safe 64-bit range.
class Matx {
 public:
  Matx() = default;
  explicit Matx(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
  static Matx identity(int n);

  int n() const { return n_; }
  Entry at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  Entry& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<Entry>& data() const { return a_; }

  Matx mul(const Matx& rhs) const;
  std::vector<Entry> apply(std::span<const Entry> v) const;

  friend bool operator==(const Matx& a, const Matx& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator<(const Matx& a, const Matx& b) { return a.a_ < b.a_; }

 private:
  int n_ = 0;
  std::vector<Entry> a_;
};

// Group element: the faithful action matrix (plus the matrix of the inverse
// for cheap left-descent tests) and the canonical reduced word produced by
// repeatedly stripping the smallest-index left descent.
// Matrix equality is element equality.
class WeylElem {
 public:
  WeylElem() = default;

  const Matx& matrix() const { return mat_; }
  const Matx& inverse_matrix() const { return inv_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const WeylElem& a, const WeylElem& b) {
    return a.mat_ == b.mat_;
  }
  friend bool operator!=(const WeylElem& a, const WeylElem& b) {
    return !(a == b);
  }

 private:
  friend class WeylGroup;
  Matx mat_;
  Matx inv_;
  std::vector<int> word_;
};

enum class GenSide { Left, Right };

enum class RootSign { Positive, Negative, Mixed };

struct RootVector {
  std::vector<Entry> coords;  // in simple-root coordinates

  RootSign sign() const;
  Subset support() const;
  Entry height() const;  // sum of coordinates

  friend bool operator==(const RootVector& a, const RootVector& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const RootVector& a, const RootVector& b) {
    return a.coords < b.coords;
  }
};

class WeylGroup {
 public:
  explicit WeylGroup(Gcm gcm);

  const Gcm& gcm() const { return gcm_; }
  int rank() const { return gcm_.rank(); }

  WeylElem identity() const;
  WeylElem simple(int i) const;
  WeylElem from_word(std::span<const int> word) const;
  WeylElem compose(const WeylElem& u, const WeylElem& v) const;
  WeylElem inverse(const WeylElem& u) const;

  bool is_left_descent(const WeylElem& w, int i) const;
  bool is_right_descent(const WeylElem& w, int i) const;
  Subset descents(const WeylElem& w, GenSide side) const;

  // Lifting recursion, memoized; agrees with the subword characterization.
  bool bruhat_leq(const WeylElem& u, const WeylElem& v) const;

  // Minimal representative of w W_J (Right) or W_J w (Left).
  WeylElem coset_min(const WeylElem& w, Subset j, GenSide side) const;
  // Unique minimal representative of W_J w W_K.
  WeylElem double_coset_min(Subset j, const WeylElem& w, Subset k) const;
  bool in_product_set(Subset j, const WeylElem& w, Subset k) const;

  // All elements of length <= max_len whose letters lie in `mask`, sorted by
  // (length, canonical word).  Throws ResourceBudgetExceeded past `cap`.
  std::vector<WeylElem> ball(int max_len, Subset mask, std::size_t cap) const;
  std::vector<WeylElem> ball(int max_len) const;
  // Shared cached copy; keyed by (max_len, mask), default cap.
  const std::vector<WeylElem>& ball_cached(int max_len, Subset mask) const;

  RootVector simple_root(int i) const;
  RootVector act_on_root(const WeylElem& w, const RootVector& beta) const;
  std::vector<RootVector> inversion_set(const WeylElem& w) const;

  // Height descent; rejects Mixed input.  A positive real root descends to a
  // simple root through reflections that keep all coordinates nonnegative.
  bool is_real_root(const RootVector& beta) const;
  // For beta already known real: support containment in J.
  bool in_parabolic_orbit(const RootVector& beta, Subset j) const;
  std::vector<RootVector> positive_real_roots(int height_cap) const;

  static constexpr std::size_t kDefaultBallCap = 1000000;

 private:
  Matx gen_matrix(int i) const;
  void left_mul_gen(Matx& m, int i) const;   // m <- S_i m, a row update
  void right_mul_gen(Matx& m, int i) const;  // m <- m S_i, a column update
  std::vector<int> canonical_word(Matx m, Matx inv) const;
  WeylElem make_from_matrices(Matx m, Matx inv) const;
  int intern(const Matx& m) const;

  Gcm gcm_;
  std::vector<Matx> gen_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<Entry>, int> ids_;
  mutable std::unordered_map<std::uint64_t, bool> bruhat_memo_;
  mutable std::map<std::pair<int, Subset>, std::unique_ptr<std::vector<WeylElem>>>
      ball_cache_;
};

// Deterministic total order used for sorted output: (length, word lex).
inline bool word_less(const WeylElem& a, const WeylElem& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

}  // namespace wm
