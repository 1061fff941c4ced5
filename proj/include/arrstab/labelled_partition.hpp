#pragma once

// Labelled partitions of the barred set {1, 1~, ..., n, n~}: the combinatorial
// model for layers of root-system arrangements.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace arrstab {

enum class Family { A, B, C, D };
enum class SpaceKind { Linear, Toric, Elliptic };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

std::string to_string(Family f);
std::string to_string(SpaceKind k);
Family parse_family(std::string_view s);
SpaceKind parse_space(std::string_view s);

// A two-torsion point, stored as a bit vector under XOR. e is 0; the names
// are e, a, b, ab. On the multiplicative torus a is -1.
using TorsionPoint = std::uint8_t;

std::string torsion_name(TorsionPoint z);
TorsionPoint parse_torsion(std::string_view name);

// C, C^x or an elliptic curve, seen through its two-torsion and its Betti numbers.
struct GroundSpace {
  SpaceKind kind = SpaceKind::Linear;

  int torsion_bits() const;
  int torsion_order() const { return 1 << torsion_bits(); }
  std::array<int, 3> betti() const;
  // Trace of the inversion map x -> x^{-1} on H^d of one factor.
  int inversion_trace(int degree) const;
};

inline GroundSpace space_of(SpaceKind k) { return GroundSpace{k}; }

// Elements of the barred set are coded as 2*(index-1) + barred.
inline int element_code(int index, bool barred) { return 2 * (index - 1) + (barred ? 1 : 0); }
inline int bar(int code) { return code ^ 1; }
inline int element_index(int code) { return code / 2 + 1; }
inline bool element_barred(int code) { return (code & 1) != 0; }

std::string element_name(int code);  // "3" or "3-"
int parse_element(std::string_view name);

class LabelledPartition {
 public:
  struct Block {
    std::vector<int> elements;
    std::optional<TorsionPoint> label;
    bool operator==(const Block&) const = default;
  };

  // Validates the bar-closure and labelling rules and stores the canonical form.
  LabelledPartition(int n, std::vector<Block> blocks);

  static LabelledPartition bottom(int n);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  // Index of the block holding an element code.
  int block_of(int code) const { return block_of_[static_cast<std::size_t>(code)]; }
  int bar_block(int block) const { return block_of(bar(blocks_[static_cast<std::size_t>(block)].elements.front())); }

  int rank() const;
  int unlabelled_block_count() const;
  std::optional<int> labelled_block(TorsionPoint z) const;

  bool admissible(Family family, GroundSpace space) const;

  bool operator==(const LabelledPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator<(const LabelledPartition& o) const;

  std::string to_string() const;

 private:
  int n_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
};

// Blocks sorted internally by (index, bar), blocks by (size desc, min element).
LabelledPartition canonical_form(const LabelledPartition& p);

// Partition of an integer labelled by two-torsion points.
struct IntegerLabelledPartition {
  int n = 0;
  std::array<int, 4> labelled{};  // value at each torsion point; 0 means absent
  std::vector<int> unlabelled;    // weakly decreasing

  bool operator==(const IntegerLabelledPartition&) const = default;
  auto operator<=>(const IntegerLabelledPartition&) const = default;
  std::string to_string() const;
};

IntegerLabelledPartition hat(const LabelledPartition& p);

// Raise each unlabelled part by one and fill with ones up to n.
IntegerLabelledPartition pad(const IntegerLabelledPartition& lambda, int n);
// Inverse of pad on its image.
IntegerLabelledPartition unpad(const IntegerLabelledPartition& padded);

bool leq(const LabelledPartition& lower, const LabelledPartition& upper);

// All admissible labelled partitions of the family/space, sorted by rank and
// then canonical order. max_rank prunes during generation.
std::vector<LabelledPartition> enumerate(Family family, GroundSpace space, int n,
                                         std::optional<int> max_rank = std::nullopt);

nlohmann::ordered_json to_json(const LabelledPartition& p);
LabelledPartition labelled_partition_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const IntegerLabelledPartition& p);

}  // namespace arrstab
