#pragma once

// Exact character theory of S_n and W_n. Conjugacy classes of both groups
// are indexed by SignedCycleType (S_n uses only the positive part);
// irreducibles by partitions (S_n) and bipartitions (W_n).

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrstab/numeric.hpp"
#include "arrstab/weyl_action.hpp"

namespace arrstab {

enum class GroupKind { S, W };

inline GroupKind group_of(Family f) { return f == Family::A ? GroupKind::S : GroupKind::W; }
std::string to_string(GroupKind g);
GroupKind parse_group(std::string_view s);

using Partition = std::vector<int>;

// All partitions of n, largest first in lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);
std::string partition_string(const Partition& p);  // "(2,1)", "()"

// An irreducible: a partition for S_n (minus stays empty) or a bipartition for W_n.
struct Irrep {
  Partition plus;
  Partition minus;

  int size() const;
  auto operator<=>(const Irrep&) const = default;
  std::string name(GroupKind g) const;  // "(3,1)" or "((2),(1))"
};

// Classes in serialization order: by |negative part|, then each part from
// largest partition down.
std::vector<SignedCycleType> conjugacy_classes(GroupKind g, int n);
std::vector<Irrep> irreducibles(GroupKind g, int n);
std::string class_key(GroupKind g, const SignedCycleType& c);

Integer group_order(GroupKind g, int n);
Integer centralizer_order(GroupKind g, const SignedCycleType& c);
Integer class_size(GroupKind g, const SignedCycleType& c);

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupKind g, int n);  // zero function

  GroupKind group() const { return group_; }
  int n() const { return n_; }
  const std::vector<SignedCycleType>& classes() const;
  std::size_t class_count() const { return values_.size(); }
  std::size_t index_of(const SignedCycleType& c) const;

  Rational& operator[](std::size_t i) { return values_[i]; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  Rational& at(const SignedCycleType& c) { return values_[index_of(c)]; }
  const Rational& at(const SignedCycleType& c) const { return values_[index_of(c)]; }
  const std::vector<Rational>& values() const { return values_; }

  // Value at the identity class.
  Rational degree() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a *= s; }
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  bool operator==(const ClassFunction& o) const {
    return group_ == o.group_ && n_ == o.n_ && values_ == o.values_;
  }

  nlohmann::ordered_json to_json() const;

 private:
  void check_compatible(const ClassFunction& o) const;

  GroupKind group_ = GroupKind::W;
  int n_ = 0;
  std::vector<Rational> values_;
};

ClassFunction class_function_from_json(const nlohmann::json& j);

struct CharacterTable {
  GroupKind group;
  int n;
  std::vector<Irrep> irreps;
  std::vector<SignedCycleType> classes;
  std::vector<Integer> class_sizes;
  Integer order;
  std::vector<std::vector<Integer>> values;  // [irrep][class]

  nlohmann::ordered_json to_json() const;
};

// Built once per (group, n) and shared; thread-safe. With ARR_STAB_CACHE_DIR
// set, tables are read from and written to JSON files in that directory.
const CharacterTable& character_table(GroupKind g, int n);

Integer sn_irr_char(const Partition& lambda, const Partition& mu);
Integer wn_irr_char(const Irrep& lambda, const SignedCycleType& c);

ClassFunction irreducible_character(GroupKind g, const Irrep& lambda);
ClassFunction trivial_character(GroupKind g, int n);
ClassFunction regular_character(GroupKind g, int n);

Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// Ind_{G_k x G_{n-k}}^{G_n} (inner x trivial).
ClassFunction induce_from_parabolic(int k, const ClassFunction& inner, int n);

// Ind_H^G psi for an explicit subgroup H of G_n given by all its elements
// and the values of psi on them.
ClassFunction induce_from_subgroup(GroupKind g, int n, const std::vector<SignedPermutation>& subgroup,
                                   const std::vector<Rational>& psi);

class NotACharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Decomposition = std::vector<std::pair<Irrep, Integer>>;

// Nonzero multiplicities in irreducible order; throws NotACharacter when a
// multiplicity is negative or fractional, or the reconstruction differs.
Decomposition decompose(const ClassFunction& f);
ClassFunction compose_character(GroupKind g, int n, const Decomposition& d);
std::string decomposition_string(GroupKind g, const Decomposition& d);
nlohmann::ordered_json to_json(GroupKind g, const Decomposition& d);

// V(lambda)_n: the first part of plus becomes n - |lambda|.
Irrep pad_name(GroupKind g, const Irrep& stable, int n);
// Inverse of pad_name: drop the first part of plus.
Irrep stable_name(const Irrep& padded);

ClassFunction restrict_to_symmetric(const ClassFunction& f);

// Class function on the index-2 type D subgroup of W_n, classes found by
// brute-force conjugacy (n <= 4).
struct DClassFunction {
  int n = 0;
  std::vector<SignedPermutation> representatives;
  std::vector<Integer> class_sizes;
  std::vector<Rational> values;

  Rational inner_product(const DClassFunction& o) const;
};

DClassFunction restrict_to_type_d(const ClassFunction& f);

}  // namespace arrstab
