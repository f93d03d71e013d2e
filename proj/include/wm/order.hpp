#pragma once

// Decision procedures for the three extended Bruhat orders, with explicit
// witnesses, plus cover computation and Hasse export over enumerated balls.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wm/lengths.hpp"
#include "wm/monoid.hpp"

namespace wm {

enum class OrderKind { PP, MM, MP };

const char* order_kind_name(OrderKind k) noexcept;

struct OrderVerdict {
  bool holds = false;
  std::optional<WeylElem> witness;  // first hit in enumeration order
  int search_bound = 0;
};

// a <=_{++} b.  Witness search over W_{perp(theta_b)} W_{theta_a} inside the
// ball of radius l(w2 parts) (sound and complete for the product criterion);
// `bound_multiplier` widens the radius for completeness cross-checks.
OrderVerdict leq_pp(const WeylGroup& w, const MonoidElem& a,
                    const MonoidElem& b, int bound_multiplier = 1);

// a <=_{--} b via the inverse map into <=_{++}.
OrderVerdict leq_mm(const WeylGroup& w, const MonoidElem& a,
                    const MonoidElem& b, int bound_multiplier = 1);

// Direct criterion on normal form II parts; must agree with leq_mm.
OrderVerdict leq_mm_direct(const WeylGroup& w, const MonoidElem& a,
                           const MonoidElem& b, int bound_multiplier = 1);

// a <=_{-+} b, the witness ranging over coset-minimal elements of the
// perpendicular parabolic of the smaller element.
OrderVerdict leq_mp(const WeylGroup& w, const MonoidElem& a,
                    const MonoidElem& b, int bound_multiplier = 1);

OrderVerdict order_leq(const WeylGroup& w, OrderKind kind, const MonoidElem& a,
                       const MonoidElem& b, int bound_multiplier = 1);

// Re-checks a positive verdict's witness against the raw inequalities.
bool witness_valid(const WeylGroup& w, OrderKind kind, const MonoidElem& a,
                   const MonoidElem& b, const WeylElem& witness);

// Strict-order covering pairs (indices into `ball`) by transitive reduction.
std::vector<std::pair<int, int>> covers(const WeylGroup& w, OrderKind kind,
                                        std::span<const MonoidElem> ball);

// DOT digraph, edges from covered to covering element, NF-III node labels.
std::string hasse_dot(const WeylGroup& w, OrderKind kind,
                      std::span<const MonoidElem> ball);

}  // namespace wm
