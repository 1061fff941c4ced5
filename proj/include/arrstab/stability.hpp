#pragma once

// Representation-stability scans of H^i over a window of n.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrstab/characters.hpp"
#include "arrstab/labelled_partition.hpp"
#include "arrstab/spectral.hpp"

namespace arrstab {

struct StabilityReport {
  int i = 0;
  Family family = Family::A;
  GroundSpace space{};
  int n_lo = 0, n_hi = 0;
  std::vector<Integer> dims;                       // one per n in the window
  std::vector<Decomposition> decompositions;       // padded names, one per n
  std::map<Irrep, std::vector<Integer>> multiplicities;  // by stable name
  std::vector<Integer> trivial_multiplicities;
  std::optional<int> onset;  // first n from which every multiplicity is constant
  bool certified = false;    // onset lies strictly before the window end
  int predicted_bound = 0;
  std::vector<Rational> dimension_polynomial;  // coefficients of 1, n, n^2, ...
  int polynomial_degree = -1;
  int fit_points = 0;
  bool polynomial_determined = false;  // at least 2i+2 stable points, so a degree <= 2i fit is overdetermined

  GroupKind group() const { return group_of(family); }
  std::string summary() const;
  nlohmann::ordered_json to_json() const;
};

int stability_bound(int i, Family family, GroundSpace space);

StabilityReport stability_scan(int i, Family family, GroundSpace space, int n_lo, int n_hi);

// Exact interpolating polynomial through (x_k, y_k), coefficients by ascending degree.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace arrstab
