#pragma once

// Generalized Cartan matrices: validation, symmetrizer, connected
// components with their finite/affine/indefinite classification, special
// subsets and perpendicular sets.

#include <string>
#include <vector>

#include "wm/errors.hpp"
#include "wm/rational.hpp"
#include "wm/subsets.hpp"

namespace wm {

enum class BlockType { Finite, Affine, Indefinite };

const char* block_type_name(BlockType t) noexcept;

struct Component {
  Subset indices = 0;
  BlockType type = BlockType::Finite;
  // Primitive positive integer kernel vector of the transposed block, indexed
  // over the full rank with zeros off the component.  Affine blocks only.
  std::vector<Entry> level_coroot;
};

class Gcm {
 public:
  // Checks the defining conditions together with symmetrizability and fills
  // in the derived data.  Throws Error on the first violated condition.
  static Gcm validate(const std::vector<std::vector<Entry>>& rows,
                      std::string name = "");

  int rank() const { return n_; }
  Entry a(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  const std::string& name() const { return name_; }

  // Symmetrizer eps with eps[j]*a(i,j) == eps[i]*a(j,i), normalized to
  // coprime positive integers on each connected component.
  const std::vector<Rat>& symmetrizer() const { return eps_; }

  const std::vector<Component>& components() const { return comps_; }

  Subset full_set() const { return full_subset(n_); }

  // Principal-minor trichotomy applied to the induced submatrix, which must
  // be connected (a component of some subset).
  BlockType classify(Subset connected_subset) const;

  // Connected components of the submatrix induced on `subset`, each with
  // its classification, in increasing order of smallest member.
  std::vector<Component> induced_components(Subset subset) const;

  bool is_special(Subset theta) const;
  Subset theta_perp(Subset theta) const;

 private:
  int n_ = 0;
  std::vector<Entry> a_;
  std::vector<Rat> eps_;
  std::vector<Component> comps_;
  std::string name_;
};

}  // namespace wm
