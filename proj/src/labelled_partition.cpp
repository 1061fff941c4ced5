#include "arrstab/labelled_partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace arrstab {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

std::string to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::Linear: return "linear";
    case SpaceKind::Toric: return "toric";
    case SpaceKind::Elliptic: return "elliptic";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  throw UsageError("unknown family '" + std::string(s) + "' (expected A, B, C or D)");
}

SpaceKind parse_space(std::string_view s) {
  if (s == "linear") return SpaceKind::Linear;
  if (s == "toric") return SpaceKind::Toric;
  if (s == "elliptic") return SpaceKind::Elliptic;
  throw UsageError("unknown space '" + std::string(s) + "' (expected linear, toric or elliptic)");
}

std::string torsion_name(TorsionPoint z) {
  static const char* names[] = {"e", "a", "b", "ab"};
  if (z > 3) throw UsageError("torsion point out of range");
  return names[z];
}

TorsionPoint parse_torsion(std::string_view name) {
  if (name == "e") return 0;
  if (name == "a") return 1;
  if (name == "b") return 2;
  if (name == "ab") return 3;
  throw UsageError("unknown torsion point '" + std::string(name) + "'");
}

int GroundSpace::torsion_bits() const {
  switch (kind) {
    case SpaceKind::Linear: return 0;
    case SpaceKind::Toric: return 1;
    case SpaceKind::Elliptic: return 2;
  }
  return 0;
}

std::array<int, 3> GroundSpace::betti() const {
  switch (kind) {
    case SpaceKind::Linear: return {1, 0, 0};
    case SpaceKind::Toric: return {1, 1, 0};
    case SpaceKind::Elliptic: return {1, 2, 1};
  }
  return {1, 0, 0};
}

int GroundSpace::inversion_trace(int degree) const {
  if (degree < 0 || degree > 2) return 0;
  const int b = betti()[static_cast<std::size_t>(degree)];
  return degree % 2 == 0 ? b : -b;
}

std::string element_name(int code) {
  return std::to_string(element_index(code)) + (element_barred(code) ? "-" : "");
}

int parse_element(std::string_view name) {
  bool barred = false;
  if (!name.empty() && name.back() == '-') {
    barred = true;
    name.remove_suffix(1);
  }
  if (name.empty()) throw UsageError("empty element name");
  int idx = 0;
  for (char c : name) {
    if (c < '0' || c > '9') throw UsageError("bad element name '" + std::string(name) + "'");
    idx = idx * 10 + (c - '0');
  }
  if (idx < 1) throw UsageError("element index must be positive");
  return element_code(idx, barred);
}

namespace {

bool block_less(const LabelledPartition::Block& a, const LabelledPartition::Block& b) {
  if (a.elements.size() != b.elements.size()) return a.elements.size() > b.elements.size();
  return a.elements.front() < b.elements.front();
}

}  // namespace

LabelledPartition::LabelledPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw UsageError("partition size must be nonnegative");
  const int total = 2 * n;
  for (auto& b : blocks_) {
    if (b.elements.empty()) throw UsageError("empty block");
    std::sort(b.elements.begin(), b.elements.end());
  }
  std::sort(blocks_.begin(), blocks_.end(), block_less);
  block_of_.assign(static_cast<std::size_t>(total), -1);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int x : blocks_[i].elements) {
      if (x < 0 || x >= total) throw UsageError("element outside the barred set of size " + std::to_string(n));
      if (block_of_[static_cast<std::size_t>(x)] != -1) throw UsageError("element " + element_name(x) + " repeated");
      block_of_[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
  }
  for (int x = 0; x < total; ++x)
    if (block_of_[static_cast<std::size_t>(x)] == -1) throw UsageError("element " + element_name(x) + " missing");
  unsigned used = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    std::vector<int> barred(b.elements.size());
    std::transform(b.elements.begin(), b.elements.end(), barred.begin(), bar);
    std::sort(barred.begin(), barred.end());
    const auto& other = blocks_[static_cast<std::size_t>(block_of(barred.front()))].elements;
    if (other != barred) throw UsageError("partition is not closed under bar");
    const bool invariant = barred == b.elements;
    if (invariant != b.label.has_value()) throw UsageError("a block is labelled iff it is bar-invariant");
    if (b.label) {
      if (*b.label > 3) throw UsageError("label out of range");
      if (used & (1u << *b.label)) throw UsageError("labels must be distinct");
      used |= 1u << *b.label;
    }
  }
}

LabelledPartition LabelledPartition::bottom(int n) {
  std::vector<Block> blocks;
  for (int x = 0; x < 2 * n; ++x) blocks.push_back({{x}, std::nullopt});
  return LabelledPartition(n, std::move(blocks));
}

int LabelledPartition::unlabelled_block_count() const {
  return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return !b.label; }));
}

int LabelledPartition::rank() const { return n_ - unlabelled_block_count() / 2; }

std::optional<int> LabelledPartition::labelled_block(TorsionPoint z) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].label && *blocks_[i].label == z) return static_cast<int>(i);
  return std::nullopt;
}

bool LabelledPartition::admissible(Family family, GroundSpace space) const {
  for (const auto& b : blocks_) {
    if (b.label) {
      if (family == Family::A) return false;
      if (*b.label >= space.torsion_order()) return false;
      if (b.elements.size() == 2) {
        if (family == Family::D) return false;
        if (family == Family::B && *b.label != 0) return false;
      }
    } else if (family == Family::A) {
      const bool first = element_barred(b.elements.front());
      for (int x : b.elements)
        if (element_barred(x) != first) return false;
    }
  }
  return true;
}

bool LabelledPartition::operator<(const LabelledPartition& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  const auto key = [](const Block& b) { return std::make_pair(b.elements, b.label ? int(*b.label) : -1); };
  return std::lexicographical_compare(blocks_.begin(), blocks_.end(), o.blocks_.begin(), o.blocks_.end(),
                                      [&](const Block& a, const Block& b) { return key(a) < key(b); });
}

std::string LabelledPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ',';
    os << '{';
    for (std::size_t j = 0; j < blocks_[i].elements.size(); ++j) {
      if (j) os << ',';
      os << element_name(blocks_[i].elements[j]);
    }
    os << '}';
    if (blocks_[i].label) os << '_' << torsion_name(*blocks_[i].label);
  }
  os << '}';
  return os.str();
}

LabelledPartition canonical_form(const LabelledPartition& p) { return LabelledPartition(p.n(), p.blocks()); }

std::string IntegerLabelledPartition::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int z = 0; z < 4; ++z) {
    if (labelled[static_cast<std::size_t>(z)] == 0) continue;
    if (!first) os << ',';
    os << labelled[static_cast<std::size_t>(z)] << '_' << torsion_name(static_cast<TorsionPoint>(z));
    first = false;
  }
  for (int part : unlabelled) {
    if (!first) os << ',';
    os << part;
    first = false;
  }
  os << ')';
  return os.str();
}

IntegerLabelledPartition hat(const LabelledPartition& p) {
  IntegerLabelledPartition out;
  out.n = p.n();
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    const auto& b = p.blocks()[i];
    const int size = static_cast<int>(b.elements.size());
    if (b.label) {
      out.labelled[*b.label] = size / 2;
    } else if (static_cast<int>(i) < p.bar_block(static_cast<int>(i))) {
      out.unlabelled.push_back(size);
    }
  }
  std::sort(out.unlabelled.rbegin(), out.unlabelled.rend());
  return out;
}

IntegerLabelledPartition pad(const IntegerLabelledPartition& lambda, int n) {
  const int ell = static_cast<int>(lambda.unlabelled.size());
  if (n < lambda.n + ell) {
    throw RangeError("cannot pad " + lambda.to_string() + " to size " + std::to_string(n) + ": need n >= " +
                     std::to_string(lambda.n + ell));
  }
  IntegerLabelledPartition out;
  out.n = n;
  out.labelled = lambda.labelled;
  for (int part : lambda.unlabelled) out.unlabelled.push_back(part + 1);
  for (int i = 0; i < n - lambda.n - ell; ++i) out.unlabelled.push_back(1);
  return out;
}

IntegerLabelledPartition unpad(const IntegerLabelledPartition& padded) {
  IntegerLabelledPartition out;
  out.labelled = padded.labelled;
  out.n = padded.n - static_cast<int>(padded.unlabelled.size());
  for (int part : padded.unlabelled)
    if (part > 1) out.unlabelled.push_back(part - 1);
  return out;
}

bool leq(const LabelledPartition& lower, const LabelledPartition& upper) {
  if (lower.n() != upper.n()) throw UsageError("comparing labelled partitions of different sizes");
  for (const auto& b : lower.blocks()) {
    const int target = upper.block_of(b.elements.front());
    for (int x : b.elements)
      if (upper.block_of(x) != target) return false;
    if (b.label) {
      const auto& ub = upper.blocks()[static_cast<std::size_t>(target)];
      if (!ub.label || *ub.label != *b.label) return false;
    }
  }
  return true;
}

namespace {

struct Draft {
  std::vector<int> elements;
  int label;  // -1 for the representative of an unlabelled pair
};

class Enumerator {
 public:
  Enumerator(Family family, GroundSpace space, int n, std::optional<int> max_rank)
      : family_(family), space_(space), n_(n), max_rank_(max_rank) {}

  std::vector<LabelledPartition> run() {
    std::vector<Draft> drafts;
    recurse(0, 0, 0u, drafts);
    std::sort(out_.begin(), out_.end(), [](const LabelledPartition& a, const LabelledPartition& b) {
      if (a.rank() != b.rank()) return a.rank() < b.rank();
      return a < b;
    });
    return std::move(out_);
  }

 private:
  void recurse(int i, int merged, unsigned used, std::vector<Draft>& drafts) {
    if (i == n_) {
      emit(drafts);
      return;
    }
    const int x = element_code(i + 1, false);
    // Every element that does not open a new unlabelled pair raises the rank by one.
    if (!max_rank_ || merged + 1 <= *max_rank_) {
      // Index loop: the recursion appends to drafts and may reallocate it.
      for (std::size_t k = 0; k < drafts.size(); ++k) {
        if (drafts[k].label < 0) {
          drafts[k].elements.push_back(x);
          recurse(i + 1, merged + 1, used, drafts);
          drafts[k].elements.pop_back();
          if (family_ != Family::A) {
            drafts[k].elements.push_back(bar(x));
            recurse(i + 1, merged + 1, used, drafts);
            drafts[k].elements.pop_back();
          }
        } else {
          drafts[k].elements.push_back(x);
          drafts[k].elements.push_back(bar(x));
          recurse(i + 1, merged + 1, used, drafts);
          drafts[k].elements.pop_back();
          drafts[k].elements.pop_back();
        }
      }
      if (family_ != Family::A) {
        for (int z = 0; z < space_.torsion_order(); ++z) {
          if (used & (1u << z)) continue;
          drafts.push_back({{x, bar(x)}, z});
          recurse(i + 1, merged + 1, used | (1u << z), drafts);
          drafts.pop_back();
        }
      }
    }
    drafts.push_back({{x}, -1});
    recurse(i + 1, merged, used, drafts);
    drafts.pop_back();
  }

  void emit(const std::vector<Draft>& drafts) {
    std::vector<LabelledPartition::Block> blocks;
    for (const auto& d : drafts) {
      if (d.label >= 0) {
        if (d.elements.size() == 2) {
          if (family_ == Family::D) return;
          if (family_ == Family::B && d.label != 0) return;
        }
        blocks.push_back({d.elements, static_cast<TorsionPoint>(d.label)});
      } else {
        std::vector<int> barred(d.elements.size());
        std::transform(d.elements.begin(), d.elements.end(), barred.begin(), bar);
        blocks.push_back({d.elements, std::nullopt});
        blocks.push_back({std::move(barred), std::nullopt});
      }
    }
    out_.emplace_back(n_, std::move(blocks));
  }

  Family family_;
  GroundSpace space_;
  int n_;
  std::optional<int> max_rank_;
  std::vector<LabelledPartition> out_;
};

}  // namespace

std::vector<LabelledPartition> enumerate(Family family, GroundSpace space, int n, std::optional<int> max_rank) {
  if (n < 1) throw UsageError("enumerate requires n >= 1");
  if (max_rank && (*max_rank < 0 || *max_rank > n)) throw UsageError("max_rank must lie in 0..n");
  return Enumerator(family, space, n, max_rank).run();
}

nlohmann::ordered_json to_json(const LabelledPartition& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n();
  auto blocks = nlohmann::ordered_json::array();
  auto labels = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    auto b = nlohmann::ordered_json::array();
    for (int x : p.blocks()[i].elements) b.push_back(element_name(x));
    blocks.push_back(std::move(b));
    if (p.blocks()[i].label) labels[std::to_string(i)] = torsion_name(*p.blocks()[i].label);
  }
  j["blocks"] = std::move(blocks);
  j["labels"] = std::move(labels);
  return j;
}

LabelledPartition labelled_partition_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<LabelledPartition::Block> blocks;
  for (const auto& b : j.at("blocks")) {
    LabelledPartition::Block block;
    for (const auto& e : b) block.elements.push_back(parse_element(e.get<std::string>()));
    blocks.push_back(std::move(block));
  }
  if (j.contains("labels")) {
    for (const auto& [key, value] : j.at("labels").items()) {
      const auto idx = static_cast<std::size_t>(std::stoul(key));
      if (idx >= blocks.size()) throw UsageError("label refers to a missing block");
      blocks[idx].label = parse_torsion(value.get<std::string>());
    }
  }
  return LabelledPartition(n, std::move(blocks));
}

nlohmann::ordered_json to_json(const IntegerLabelledPartition& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  auto labelled = nlohmann::ordered_json::object();
  for (int z = 0; z < 4; ++z)
    if (p.labelled[static_cast<std::size_t>(z)] > 0)
      labelled[torsion_name(static_cast<TorsionPoint>(z))] = p.labelled[static_cast<std::size_t>(z)];
  j["labelled"] = std::move(labelled);
  j["unlabelled"] = p.unlabelled;
  return j;
}

}  // namespace arrstab
