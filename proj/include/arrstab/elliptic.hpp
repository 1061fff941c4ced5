#pragma once

// Degree-one elliptic computations: the differential E2^{0,1} -> E2^{2,0}
// and the injectivity check for type A in higher degrees.

#include <string>
#include <vector>

#include <json.hpp>

#include "arrstab/labelled_partition.hpp"
#include "arrstab/numeric.hpp"
#include "arrstab/spectral.hpp"

namespace arrstab {

// Basis of H^2(E^n): x_a x_b (a < b), y_a y_b (a < b), then x_a y_b for all a, b.
std::vector<std::string> h2_basis_labels(int n);
std::size_t h2_index_xy(int n, int a, int b);  // 0-based indices

struct Degree1Differential {
  int n = 0;
  Family family = Family::A;
  std::vector<LabelledPartition> generators;  // rank-one layers, one column each
  std::vector<std::string> row_labels;
  RatMatrix matrix;
  std::size_t rank = 0;

  std::size_t nullity() const { return generators.size() - rank; }
  nlohmann::ordered_json to_json() const;
};

Degree1Differential elliptic_d2_degree1(int n, Family family);

// Action of w on H^2(E^n) (x_j -> eps_j x_sigma(j), same for y) and on the
// generators (g_F -> g_{wF}), as matrices in the bases above.
RatMatrix h2_action(const SignedPermutation& w, int n);
RatMatrix generator_action(const SignedPermutation& w, const std::vector<LabelledPartition>& generators);

// H^1 = E2^{1,0} + ker d2.
Cohomology elliptic_h1(int n, Family family);
ClassFunction kernel_character(const Degree1Differential& d);

struct InjectivityCertificate {
  int n = 0, q = 0;
  std::size_t rows = 0, cols = 0, rank = 0;
  bool injective = false;

  nlohmann::ordered_json to_json() const;
};

// Rank of d: E2^{0,q} -> E2^{2,q-1} for the type A elliptic arrangement in the
// monomial basis g_{i1 j1} ... g_{iq jq}, i_s > j_s, i_1 > ... > i_q.
InjectivityCertificate typeA_elliptic_injectivity(int n, int q);

}  // namespace arrstab
