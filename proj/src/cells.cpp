#include "wm/cells.hpp"

#include "wm/expr.hpp"

namespace wm {

const char* cell_signs_name(CellSigns s) noexcept {
  switch (s) {
    case CellSigns::PP: return "++";
    case CellSigns::MM: return "--";
    case CellSigns::MP: return "-+";
  }
  return "?";
}

bool closure_leq(const WeylGroup& w, const CellLabel& a, const CellLabel& b) {
  if (a.signs != b.signs)
    fail(Errc::SignMismatch, "cells carry different sign pairs");
  switch (a.signs) {
    case CellSigns::PP: return leq_pp(w, a.elem, b.elem).holds;
    case CellSigns::MM: return leq_mm(w, a.elem, b.elem).holds;
    case CellSigns::MP:
      // A mixed cell lies in the closure of another exactly when the other
      // element precedes it in the (-,+) order.
      return leq_mp(w, b.elem, a.elem).holds;
  }
  fail(Errc::Internal, "unknown cell signs");
}

TitsProductResult tits_product(const WeylGroup& w, ProductConfig config,
                               char eps, int i, const MonoidElem& m) {
  const bool same_sign =
      config == ProductConfig::SameSignLeft || config == ProductConfig::SameSignRight;
  const bool left =
      config == ProductConfig::SameSignLeft || config == ProductConfig::MixedLeft;
  TitsProductResult out;
  if (same_sign) {
    if (eps != '+' && eps != '-')
      fail(Errc::ParseError, "sign must be '+' or '-'");
    out.kind = eps == '+' ? LKind::PP : LKind::MM;
  } else {
    out.kind = config == ProductConfig::MixedLeft ? LKind::PP : LKind::MM;
  }
  const GenSide side = left ? GenSide::Left : GenSide::Right;
  out.delta = length_delta(w, side, i, m, out.kind);

  const CellSigns signs =
      same_sign ? (eps == '+' ? CellSigns::PP : CellSigns::MM) : CellSigns::MP;
  MonoidElem gen = unit_element(w, w.simple(i));
  MonoidElem flipped =
      left ? multiply(w, gen, m).elem : multiply(w, m, gen).elem;

  const int single_delta = same_sign ? 1 : -1;
  if (out.delta == 0) {
    out.cells = {CellLabel{signs, m}};
  } else if (out.delta == single_delta) {
    out.cells = {CellLabel{signs, flipped}};
  } else {
    out.cells = {CellLabel{signs, flipped}, CellLabel{signs, m}};
  }
  return out;
}

namespace {

// Roots of the truncated unipotent factor: positive real roots up to the cap
// whose image under `u` is positive with support escaping theta.
std::vector<RootVector> window_roots(const WeylGroup& w, const WeylElem& u,
                                     Subset theta, int cap) {
  std::vector<RootVector> out;
  for (const RootVector& g : w.positive_real_roots(cap)) {
    RootVector image = w.act_on_root(u, g);
    if (image.sign() != RootSign::Positive) continue;
    if (subset_of(image.support(), theta)) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace

CellFactors cell_factors(const WeylGroup& w, const MonoidElem& m,
                         CellSigns signs, int height_cap) {
  CellFactors out;
  out.height_cap = height_cap;
  out.torus_theta = m.theta;
  switch (signs) {
    case CellSigns::PP: {
      auto [first, second] = nf1_parts(w, m);
      out.has_finite = true;
      out.finite_side = GenSide::Left;
      out.finite_roots = w.inversion_set(first);
      out.torus_conjugator = second;
      out.window_right = window_roots(w, second, m.theta, height_cap);
      break;
    }
    case CellSigns::MM: {
      auto [first, second] = nf2_parts(w, m);
      out.has_finite = true;
      out.finite_side = GenSide::Right;
      out.finite_roots = w.inversion_set(w.inverse(second));
      out.torus_conjugator = first;
      out.window_left = window_roots(w, w.inverse(first), m.theta, height_cap);
      break;
    }
    case CellSigns::MP: {
      auto [first, second] = nf1_parts(w, m);
      out.has_finite = false;
      out.torus_conjugator = second;
      out.window_left = window_roots(w, w.inverse(first), m.theta, height_cap);
      out.window_right = window_roots(w, second, m.theta, height_cap);
      break;
    }
  }
  return out;
}

std::string cell_display(const WeylGroup& w, const CellLabel& c) {
  const char* names = cell_signs_name(c.signs);
  return std::string("B^") + names[0] + " · " + nf3_display(w, c.elem) +
         " · B^" + names[1];
}

}  // namespace wm
