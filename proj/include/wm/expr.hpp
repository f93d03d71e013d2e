#pragma once

// The shared element-expression grammar and the printed forms.
//   word := atom+ ;  atom := "s"<int> | "e(" <int> ("," <int>)* ")" | "e()"
// Pure s-words evaluate to units; e(...) atoms are idempotent factors.

#include <string>

#include "wm/lengths.hpp"
#include "wm/monoid.hpp"

namespace wm {

struct EvalResult {
  MonoidElem elem;
  bool exact = true;
};

// Throws ParseError with a byte position on malformed input.
EvalResult eval_expr(const WeylGroup& w, const std::string& text,
                     const FaceBudget& budget = {});

// Rejects expressions containing e(...) atoms.
WeylElem eval_weyl_expr(const WeylGroup& w, const std::string& text);

// "s1 s2", or "e()" for the identity.
std::string weyl_expr(const WeylElem& u);

// Grammar form that re-parses to an equal element: "s.. s.. e(i,..) s..".
std::string monoid_expr(const WeylGroup& w, const MonoidElem& m);

// Display forms.
std::string nf3_display(const WeylGroup& w, const MonoidElem& m);
std::string nf1_display(const WeylGroup& w, const MonoidElem& m);
std::string nf2_display(const WeylGroup& w, const MonoidElem& m);
std::string face_display(const WeylGroup& w, const Face& f);
std::string lengths_display(const LengthTriple& t);

// Parses "w . R({i,...})" (the face display shape, "." or the middle dot).
Face parse_face(const WeylGroup& w, const std::string& text);

// Comma-separated rationals, e.g. "1,-2/3,0".
ConePoint parse_point(const WeylGroup& w, const std::string& text);

}  // namespace wm
