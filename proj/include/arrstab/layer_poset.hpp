#pragma once

// The ranked poset of labelled partitions of one family/space, with covers,
// Moebius function and lower intervals.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "arrstab/labelled_partition.hpp"
#include "arrstab/numeric.hpp"

namespace arrstab {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LayerPoset {
 public:
  static LayerPoset build(Family family, GroundSpace space, int n, std::optional<int> max_rank = std::nullopt);
  // Elements must contain a unique rank-0 element; they are sorted here.
  static LayerPoset from_elements(Family family, GroundSpace space, int n, std::vector<LabelledPartition> elements);

  Family family() const { return family_; }
  GroundSpace space() const { return space_; }
  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t bottom() const { return 0; }

  const LabelledPartition& element(std::size_t i) const { return elements_[i]; }
  const std::vector<LabelledPartition>& elements() const { return elements_; }
  int rank_of(std::size_t i) const { return elements_[i].rank(); }
  std::optional<std::size_t> index_of(const LabelledPartition& p) const;
  std::size_t require_index(const LabelledPartition& p) const;

  // up_covers()[i] lists the elements covering i.
  const std::vector<std::vector<std::size_t>>& up_covers() const { return up_; }
  const std::vector<std::vector<std::size_t>>& down_covers() const { return down_; }
  std::size_t cover_count() const;
  std::vector<std::size_t> rank_counts() const;
  int max_rank() const;

  bool leq(std::size_t a, std::size_t b) const;
  // Indices of all elements below or equal to b, in poset order.
  std::vector<std::size_t> lower_interval(std::size_t b) const;

  Integer mobius(std::size_t a, std::size_t b) const;
  Integer mobius_from_bottom(std::size_t b) const;

  LayerPoset localization(const LabelledPartition& p) const;
  // dim H^q of the localized complement for q = 0..rank, via Whitney sums.
  std::vector<Integer> local_os_dims(const LabelledPartition& p) const;

  nlohmann::ordered_json to_json() const;
  std::string to_dot() const;
  std::string to_table() const;

 private:
  LayerPoset() = default;
  void compute_covers();

  Family family_ = Family::A;
  GroundSpace space_{};
  int n_ = 0;
  std::vector<LabelledPartition> elements_;
  std::vector<std::size_t> rank_start_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;

  struct MobiusCache {
    std::mutex mutex;
    std::unordered_map<std::size_t, Integer> values;
  };
  std::shared_ptr<MobiusCache> mobius_cache_ = std::make_shared<MobiusCache>();
};

// Explicit equations of the layer of a labelled partition: each unlabelled
// pair {S, S~} identifies its coordinates up to inversion with one free
// coordinate, each labelled block pins its coordinates to the torsion point.
struct CoordinateLayer {
  struct Factor {
    std::vector<std::pair<int, int>> members;  // (0-based index, +1 or -1): x_i = t^sign
  };
  struct Constant {
    std::vector<int> indices;
    TorsionPoint value = 0;
  };
  int n = 0;
  std::vector<Factor> factors;
  std::vector<Constant> constants;

  int dimension() const { return static_cast<int>(factors.size()); }
  std::string to_string() const;
};

CoordinateLayer coordinate_layer(const LabelledPartition& p);

}  // namespace arrstab
