#pragma once

// The hyperoctahedral group W_n = S_n x| (Z/2)^n as signed permutations, and
// its action on labelled partitions.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrstab/labelled_partition.hpp"

namespace arrstab {

class SignedPermutation {
 public:
  SignedPermutation() = default;
  // sigma is 0-based one-line notation, eps entries are +1 or -1.
  SignedPermutation(std::vector<int> sigma, std::vector<int> eps);

  static SignedPermutation identity(int n);
  static SignedPermutation transposition(int n, int i, int j);  // 0-based, signs +
  static SignedPermutation sign_flip(int n, int i);

  int n() const { return static_cast<int>(sigma_.size()); }
  int image(int i) const { return sigma_[static_cast<std::size_t>(i)]; }
  int sign(int i) const { return eps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& eps() const { return eps_; }

  bool is_identity() const;
  bool is_unsigned() const;
  // Image of a barred-element code: w.k = sigma(k), barred when eps_k = -1.
  int act_element(int code) const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> sigma_;
  std::vector<int> eps_;
};

// (w1 * w2)(x) = w1(w2(x)).
SignedPermutation compose(const SignedPermutation& w1, const SignedPermutation& w2);
SignedPermutation invert(const SignedPermutation& w);

struct SignedCycleType {
  std::vector<int> pos;  // cycle lengths with sign product +1, decreasing
  std::vector<int> neg;  // cycle lengths with sign product -1, decreasing

  int size() const;
  auto operator<=>(const SignedCycleType&) const = default;
  // "(2,1|1)"
  std::string key() const;
};

SignedCycleType cycle_type(const SignedPermutation& w);
SignedCycleType parse_cycle_type(const std::string& key);
// Consecutive cycles, positive ones first; a negative cycle carries its sign on its last entry.
SignedPermutation class_representative(const SignedCycleType& c);

// Whether the acting group is W_n (true) or S_n (type A).
inline bool signed_group(Family f) { return f != Family::A; }

// Adjacent transpositions, plus the sign flip at the first coordinate for W_n.
std::vector<SignedPermutation> generators(int n, bool with_signs);
// Every element of W_n or S_n in a fixed order.
std::vector<SignedPermutation> all_elements(int n, bool with_signs);

LabelledPartition act(const SignedPermutation& w, const LabelledPartition& p);

std::vector<LabelledPartition> orbit_of(const LabelledPartition& p, bool with_signs);

// Schreier generators of {w : w.p = p}; identity-free, deduplicated.
std::vector<SignedPermutation> stabilizer(const LabelledPartition& p, bool with_signs);

// Closure of a generating set into the full subgroup (for small n).
std::vector<SignedPermutation> generated_subgroup(const std::vector<SignedPermutation>& gens, int n);

// Rank slice grouped by hat value. For n <= 4 each fiber is checked against
// the generator-closure orbit of its first member; a mismatch throws.
std::map<IntegerLabelledPartition, std::vector<LabelledPartition>> orbits_by_hat(Family family, GroundSpace space,
                                                                                  int n, int rank);

nlohmann::ordered_json to_json(const SignedPermutation& w);
SignedPermutation signed_permutation_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SignedCycleType& c);

}  // namespace arrstab
