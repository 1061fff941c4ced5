#pragma once

// Top-degree Orlik-Solomon component of the central arrangement obtained by
// localizing at a layer, with the action of the layer's stabilizer.

#include <cstdint>
#include <map>
#include <vector>

#include "arrstab/labelled_partition.hpp"
#include "arrstab/numeric.hpp"
#include "arrstab/weyl_action.hpp"

namespace arrstab {

class LocalOrlikSolomon {
 public:
  // interval must hold every admissible element below or equal to p (and may hold more).
  LocalOrlikSolomon(const LabelledPartition& p, const std::vector<LabelledPartition>& candidates);
  // Enumerates the candidates itself.
  LocalOrlikSolomon(const LabelledPartition& p, Family family, GroundSpace space);

  int degree() const { return degree_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<LabelledPartition>& atoms() const { return atoms_; }
  std::size_t circuit_count() const { return circuits_; }

  // w must fix the layer.
  Rational trace(const SignedPermutation& w) const;

 private:
  int rank_of(std::uint64_t atom_set) const;

  LabelledPartition layer_;
  int degree_ = 0;
  std::vector<LabelledPartition> atoms_;
  std::vector<std::pair<std::uint64_t, int>> flats_;  // atoms below each interval element, and its rank
  std::map<std::vector<int>, std::size_t> monomial_index_;
  std::vector<std::vector<int>> monomials_;
  RowSpaceReducer relations_;
  std::size_t dimension_ = 1;
  std::size_t circuits_ = 0;
};

}  // namespace arrstab
