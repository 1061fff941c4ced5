#pragma once

// Layers built directly from integer characters: Smith normal form splits
// the kernel of a character matrix on X^n into connected components.
//
// A point of X^n is stored through its image in (R/Z)^g per coordinate, with
// g = 0, 1, 2 for C, C^x, E. Linear layers are subspaces, so g = 0 carries
// no offsets.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrstab/labelled_partition.hpp"
#include "arrstab/layer_poset.hpp"
#include "arrstab/numeric.hpp"
#include "arrstab/weyl_action.hpp"

namespace arrstab {

struct SmithNormalForm {
  IntMatrix U, D, V, V_inverse;  // U * M * V = D
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);
// Checks U M V = D, diagonal shape, divisibility and |det U| = |det V| = 1.
bool certify(const IntMatrix& m, const SmithNormalForm& snf);

// While auditing, every smith_normal_form result is certified before it is
// returned (std::logic_error on failure) and counted.
void set_snf_audit(bool on);
std::size_t snf_audit_count();

// Row Hermite normal form with zero rows removed: positive pivots, entries
// above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

using TorusValue = std::vector<Rational>;  // g entries in [0, 1)
using TorusPoint = std::vector<TorusValue>;  // n coordinates

TorusValue torsion_value(TorsionPoint z, int g);
std::optional<TorsionPoint> as_torsion(const TorusValue& v);

// chi(x) = value
struct Constraint {
  std::vector<Integer> character;
  TorusValue value;
};

class GeometricLayer {
 public:
  // Canonical representative of {x : basis x = values}; basis must be saturated.
  GeometricLayer(int n, int g, const IntMatrix& basis, std::vector<TorusValue> values);

  static GeometricLayer whole_space(int n, int g);

  int n() const { return n_; }
  int torus_rank() const { return g_; }
  int rank() const { return static_cast<int>(basis_.rows()); }
  int dimension() const { return n_ - rank(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<TorusValue>& values() const { return values_; }
  const TorusPoint& witness() const { return witness_; }

  bool contains(const TorusPoint& x) const;
  std::vector<Constraint> constraints() const;

  bool operator==(const GeometricLayer& o) const {
    return n_ == o.n_ && g_ == o.g_ && basis_ == o.basis_ && values_ == o.values_;
  }
  bool operator<(const GeometricLayer& o) const;

  nlohmann::ordered_json to_json() const;

 private:
  int n_;
  int g_;
  IntMatrix basis_;
  std::vector<TorusValue> values_;
  TorusPoint witness_;
};

// Connected components of the solution set of the constraints in X^n.
std::vector<GeometricLayer> components_of(const std::vector<Constraint>& constraints, int n, GroundSpace space);

// Reverse inclusion: lower contains upper.
bool leq(const GeometricLayer& lower, const GeometricLayer& upper);

// w.F = {w.x : x in F} with (w.x)_{sigma(i)} = eps_i x_i.
GeometricLayer act(const SignedPermutation& w, const GeometricLayer& f);

// Positive roots as integer characters.
std::vector<std::vector<Integer>> positive_roots(Family family, int n);
// Components of the kernels of the positive roots.
std::vector<GeometricLayer> arrangement(Family family, GroundSpace space, int n);

struct GeometricPoset {
  std::vector<GeometricLayer> layers;  // sorted by rank, then canonical order
  std::vector<std::vector<std::size_t>> up_covers;
  std::vector<std::size_t> rank_counts;

  std::optional<std::size_t> index_of(const GeometricLayer& f) const;
  std::size_t cover_count() const;
};

// Closure of the arrangement under intersection and splitting into components.
GeometricPoset geometric_layer_poset(Family family, GroundSpace space, int n, std::optional<int> max_rank);

// The layer cut out by the coordinate description of a labelled partition.
GeometricLayer layer_of(const LabelledPartition& p, GroundSpace space);

struct IsomorphismReport {
  bool passed = false;
  std::string witness;  // first failure, empty on success
  std::size_t elements = 0;
  std::size_t covers = 0;
  std::vector<std::size_t> rank_counts;

  nlohmann::ordered_json to_json() const;
};

// Checks that the labelled-partition map is a W-equivariant isomorphism of
// ranked posets onto the layers found by the lattice computation.
IsomorphismReport verify_layer_isomorphism(Family family, GroundSpace space, int n, std::optional<int> max_rank);

nlohmann::ordered_json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Integer& z);

}  // namespace arrstab
