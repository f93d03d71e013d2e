#pragma once

// Symbolic Bruhat/Birkhoff cell algebra: closure order between equal-sign
// cells, the simple-reflection product case selector, and the factor
// descriptors of the cell product decompositions.  The ambient groups are
// never modeled; cells are labels.

#include "wm/order.hpp"

namespace wm {

// Sign pairs of the cells in scope.
enum class CellSigns { PP, MM, MP };

const char* cell_signs_name(CellSigns s) noexcept;

struct CellLabel {
  CellSigns signs = CellSigns::PP;
  MonoidElem elem;

  friend bool operator==(const CellLabel& a, const CellLabel& b) {
    return a.signs == b.signs && a.elem == b.elem;
  }
};

// Whether cell(a) lies in the Zariski closure of cell(b).  For equal-sign
// cells this is the matching extended order; for mixed-sign cells the
// closure order runs against the (-,+) order orientation.  Throws
// SignMismatch when the labels carry different sign pairs.
bool closure_leq(const WeylGroup& w, const CellLabel& a, const CellLabel& b);

enum class ProductConfig {
  SameSignLeft,   // (B^e s_i B^e)(B^e m B^e)
  SameSignRight,  // (B^e m B^e)(B^e s_i B^e)
  MixedLeft,      // (B^- s_i B^-)(B^- m B^+)
  MixedRight,     // (B^- m B^+)(B^+ s_i B^+)
};

struct TitsProductResult {
  int delta = 0;                  // the keying length delta
  LKind kind = LKind::PP;         // which extended length keys the case
  std::vector<CellLabel> cells;   // resulting cell set, flipped cell first
};

// `eps` ('+' or '-') selects the sign in the same-sign configurations and is
// ignored for the mixed ones.
TitsProductResult tits_product(const WeylGroup& w, ProductConfig config,
                               char eps, int i, const MonoidElem& m);

struct CellFactors {
  bool has_finite = false;
  GenSide finite_side = GenSide::Left;
  std::vector<RootVector> finite_roots;  // inversion-set factor
  Subset torus_theta = 0;
  WeylElem torus_conjugator;
  // Truncated root windows of the infinite factors, positive representatives.
  std::vector<RootVector> window_left, window_right;
  int height_cap = 8;
};

inline constexpr int kDefaultHeightCap = 8;

CellFactors cell_factors(const WeylGroup& w, const MonoidElem& m,
                         CellSigns signs, int height_cap = kDefaultHeightCap);

std::string cell_display(const WeylGroup& w, const CellLabel& c);

}  // namespace wm
