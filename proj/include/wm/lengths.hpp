#pragma once

// The three extended length functions and the simple-reflection delta rules,
// computed from the sign and support class of a single real root.

#include "wm/monoid.hpp"

namespace wm {

struct LengthTriple {
  long long pp = 0;
  long long mm = 0;
  long long mp = 0;

  friend bool operator==(const LengthTriple& a, const LengthTriple& b) {
    return a.pp == b.pp && a.mm == b.mm && a.mp == b.mp;
  }
};

enum class LKind { PP, MM, MP };

LengthTriple lengths(const MonoidElem& m);
long long length_of(const LengthTriple& t, LKind k);

// Delta of the chosen extended length under sigma_i . m (Left) or
// m . sigma_i (Right), computed without building the product.
// Zero exactly when the product equals m.
int length_delta(const WeylGroup& w, GenSide side, int i, const MonoidElem& m,
                 LKind kind);

// The classifying root: w1^{-1} alpha_i over normal form I (Left) or
// w2 alpha_i over normal form II (Right).
RootVector delta_root(const WeylGroup& w, GenSide side, int i,
                      const MonoidElem& m);

}  // namespace wm
