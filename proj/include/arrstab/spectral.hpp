#pragma once

// The Leray E2-page of the arrangement complement as class functions,
// its induced-piece decomposition, and Betti numbers where E2 = E_infinity.

#include <vector>

#include <json.hpp>

#include "arrstab/characters.hpp"
#include "arrstab/labelled_partition.hpp"
#include "arrstab/weyl_action.hpp"

namespace arrstab {

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graded trace of w on H^*(F_p) where F_p is the product of one copy of X per
// unlabelled pair; coefficient d is the trace on H^d. Pairs made of single
// coordinates are skipped when include_singletons is false.
std::vector<Rational> ambient_trace_polynomial(const SignedPermutation& w, const LabelledPartition& p,
                                               GroundSpace space, bool include_singletons = true);
Rational ambient_trace(const SignedPermutation& w, const LabelledPartition& p, int degree, GroundSpace space);

// Trace of w (fixing p) on the top Orlik-Solomon component of the localization at p.
Rational local_os_trace(const SignedPermutation& w, const LabelledPartition& p, Family family, GroundSpace space);

ClassFunction e2_character(int p, int q, int n, Family family, GroundSpace space);

// sum over rank-q layers of dim H^p(F) * |mu(0, F)|, from the layer poset.
Integer e2_dimension(int p, int q, int n, Family family, GroundSpace space);

struct InducedPiece {
  IntegerLabelledPartition lambda;  // unpadded orbit label, a partition of q
  int r = 0;                        // degree carried by the non-singleton factors
  Partition alpha;                  // nonzero degrees on singleton factors
  int k = 0;
  LabelledPartition representative;  // left-justified, on k coordinates
  std::size_t subgroup_order = 0;
  ClassFunction inner;    // on G_k
  ClassFunction induced;  // Ind_{G_k x G_{n-k}}^{G_n} (inner x trivial)

  nlohmann::ordered_json to_json() const;
};

std::vector<InducedPiece> e2_pieces(int p, int q, int n, Family family, GroundSpace space);

struct E2Cell {
  int p = 0, q = 0, n = 0;
  Family family = Family::A;
  GroundSpace space{};
  ClassFunction character;
  std::vector<InducedPiece> pieces;
  Integer dim;
  bool pieces_match = false;
  Decomposition decomposition;

  nlohmann::ordered_json to_json() const;
};

E2Cell e2_cell(int p, int q, int n, Family family, GroundSpace space);

struct Cohomology {
  int i = 0, n = 0;
  Family family = Family::A;
  GroundSpace space{};
  ClassFunction character;
  Integer dim;
  Decomposition decomposition;

  nlohmann::ordered_json to_json() const;
};

// H^i for linear and toric spaces, where the spectral sequence degenerates at E2.
Cohomology betti(int i, int n, Family family, GroundSpace space);

// Dispatches to betti or the elliptic degree-one computation; elliptic i >= 2 is refused.
Cohomology cohomology(int i, int n, Family family, GroundSpace space);

}  // namespace arrstab
