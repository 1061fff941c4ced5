#include "arrstab/layer_poset.hpp"

#include <algorithm>
#include <sstream>

namespace arrstab {

LayerPoset LayerPoset::build(Family family, GroundSpace space, int n, std::optional<int> max_rank) {
  return from_elements(family, space, n, enumerate(family, space, n, max_rank));
}

LayerPoset LayerPoset::from_elements(Family family, GroundSpace space, int n,
                                     std::vector<LabelledPartition> elements) {
  LayerPoset p;
  p.family_ = family;
  p.space_ = space;
  p.n_ = n;
  std::sort(elements.begin(), elements.end(), [](const LabelledPartition& a, const LabelledPartition& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a < b;
  });
  if (elements.empty() || elements.front().rank() != 0 || (elements.size() > 1 && elements[1].rank() == 0))
    throw DomainError("poset needs a unique rank-0 element");
  p.elements_ = std::move(elements);
  const int top = p.elements_.back().rank();
  p.rank_start_.assign(static_cast<std::size_t>(top) + 2, p.elements_.size());
  for (std::size_t i = p.elements_.size(); i-- > 0;) p.rank_start_[static_cast<std::size_t>(p.rank_of(i))] = i;
  for (int r = top; r >= 0; --r)
    p.rank_start_[static_cast<std::size_t>(r)] =
        std::min(p.rank_start_[static_cast<std::size_t>(r)], p.rank_start_[static_cast<std::size_t>(r) + 1]);
  p.compute_covers();
  return p;
}

void LayerPoset::compute_covers() {
  up_.assign(elements_.size(), {});
  down_.assign(elements_.size(), {});
  for (int r = 0; r + 1 < static_cast<int>(rank_start_.size()) - 1; ++r) {
    for (std::size_t a = rank_start_[static_cast<std::size_t>(r)]; a < rank_start_[static_cast<std::size_t>(r) + 1]; ++a)
      for (std::size_t b = rank_start_[static_cast<std::size_t>(r) + 1];
           b < rank_start_[static_cast<std::size_t>(r) + 2]; ++b)
        if (arrstab::leq(elements_[a], elements_[b])) {
          up_[a].push_back(b);
          down_[b].push_back(a);
        }
  }
}

std::optional<std::size_t> LayerPoset::index_of(const LabelledPartition& p) const {
  if (p.n() != n_) return std::nullopt;
  const int r = p.rank();
  if (r + 1 >= static_cast<int>(rank_start_.size())) return std::nullopt;
  const auto first = elements_.begin() + static_cast<std::ptrdiff_t>(rank_start_[static_cast<std::size_t>(r)]);
  const auto last = elements_.begin() + static_cast<std::ptrdiff_t>(rank_start_[static_cast<std::size_t>(r) + 1]);
  const auto it = std::lower_bound(first, last, p);
  if (it == last || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t LayerPoset::require_index(const LabelledPartition& p) const {
  const auto i = index_of(p);
  if (!i) throw DomainError(p.to_string() + " is not an element of the poset");
  return *i;
}

std::size_t LayerPoset::cover_count() const {
  std::size_t c = 0;
  for (const auto& u : up_) c += u.size();
  return c;
}

std::vector<std::size_t> LayerPoset::rank_counts() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r + 1 < rank_start_.size(); ++r) out.push_back(rank_start_[r + 1] - rank_start_[r]);
  return out;
}

int LayerPoset::max_rank() const { return elements_.back().rank(); }

bool LayerPoset::leq(std::size_t a, std::size_t b) const { return arrstab::leq(elements_[a], elements_[b]); }

std::vector<std::size_t> LayerPoset::lower_interval(std::size_t b) const {
  std::vector<std::size_t> out;
  const std::size_t end = rank_start_[static_cast<std::size_t>(rank_of(b)) + 1];
  for (std::size_t a = 0; a < end; ++a)
    if (a == b || (rank_of(a) < rank_of(b) && leq(a, b))) out.push_back(a);
  return out;
}

Integer LayerPoset::mobius(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) throw DomainError("mobius of an incomparable pair");
  if (a == bottom()) return mobius_from_bottom(b);
  std::vector<std::size_t> interval;
  for (std::size_t y : lower_interval(b))
    if (leq(a, y)) interval.push_back(y);
  std::unordered_map<std::size_t, Integer> mu;
  for (std::size_t y : interval) {
    if (y == a) {
      mu[y] = 1;
      continue;
    }
    Integer s = 0;
    for (std::size_t x : interval)
      if (x != y && rank_of(x) < rank_of(y) && leq(x, y)) s += mu.at(x);
    mu[y] = -s;
  }
  return mu.at(b);
}

Integer LayerPoset::mobius_from_bottom(std::size_t b) const {
  {
    std::lock_guard lock(mobius_cache_->mutex);
    const auto it = mobius_cache_->values.find(b);
    if (it != mobius_cache_->values.end()) return it->second;
  }
  Integer value = 1;
  if (b != bottom()) {
    value = 0;
    for (std::size_t y : lower_interval(b))
      if (y != b) value -= mobius_from_bottom(y);
  }
  std::lock_guard lock(mobius_cache_->mutex);
  mobius_cache_->values.emplace(b, value);
  return value;
}

LayerPoset LayerPoset::localization(const LabelledPartition& p) const {
  const std::size_t b = require_index(p);
  std::vector<LabelledPartition> sub;
  for (std::size_t y : lower_interval(b)) sub.push_back(elements_[y]);
  return from_elements(family_, space_, n_, std::move(sub));
}

std::vector<Integer> LayerPoset::local_os_dims(const LabelledPartition& p) const {
  const std::size_t b = require_index(p);
  std::vector<Integer> dims(static_cast<std::size_t>(rank_of(b)) + 1);
  for (std::size_t y : lower_interval(b)) dims[static_cast<std::size_t>(rank_of(y))] += abs(mobius_from_bottom(y));
  return dims;
}

nlohmann::ordered_json LayerPoset::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = to_string(family_);
  j["space"] = to_string(space_.kind);
  j["n"] = n_;
  auto elems = nlohmann::ordered_json::array();
  auto ranks = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    elems.push_back(arrstab::to_json(elements_[i]));
    ranks.push_back(rank_of(i));
  }
  auto covers = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < up_.size(); ++a)
    for (std::size_t b : up_[a]) covers.push_back({a, b});
  j["rank_counts"] = rank_counts();
  j["elements"] = std::move(elems);
  j["ranks"] = std::move(ranks);
  j["covers"] = std::move(covers);
  j["bottom"] = bottom();
  return j;
}

std::string LayerPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph layers {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < elements_.size(); ++i)
    os << "  n" << i << " [label=\"" << elements_[i].to_string() << "\"];\n";
  for (std::size_t r = 0; r + 1 < rank_start_.size(); ++r) {
    os << "  { rank=same;";
    for (std::size_t i = rank_start_[r]; i < rank_start_[r + 1]; ++i) os << " n" << i << ';';
    os << " }\n";
  }
  for (std::size_t a = 0; a < up_.size(); ++a)
    for (std::size_t b : up_[a]) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string LayerPoset::to_table() const {
  std::ostringstream os;
  os << "# " << to_string(family_) << ' ' << to_string(space_.kind) << " n=" << n_ << ": " << size()
     << " elements, " << cover_count() << " covers\n";
  for (std::size_t r = 0; r + 1 < rank_start_.size(); ++r) {
    os << "rank " << r << " (" << rank_start_[r + 1] - rank_start_[r] << ")\n";
    for (std::size_t i = rank_start_[r]; i < rank_start_[r + 1]; ++i) {
      os << "  " << i << "  " << elements_[i].to_string();
      if (!down_[i].empty()) {
        os << "  covers";
        for (std::size_t d : down_[i]) os << ' ' << d;
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string CoordinateLayer::to_string() const {
  std::ostringstream os;
  bool first = true;
  const auto sep = [&] {
    if (!first) os << ", ";
    first = false;
  };
  for (const auto& f : factors) {
    if (f.members.size() < 2) continue;
    sep();
    for (std::size_t k = 0; k < f.members.size(); ++k) {
      if (k) os << '=';
      os << 'x' << f.members[k].first + 1 << (f.members[k].second < 0 ? "^-1" : "");
    }
  }
  for (const auto& c : constants) {
    sep();
    for (int i : c.indices) os << 'x' << i + 1 << '=';
    os << torsion_name(c.value);
  }
  if (first) os << "(no constraints)";
  os << "; dim " << dimension();
  return os.str();
}

CoordinateLayer coordinate_layer(const LabelledPartition& p) {
  CoordinateLayer out;
  out.n = p.n();
  for (std::size_t i = 0; i < p.blocks().size(); ++i) {
    const auto& b = p.blocks()[i];
    if (b.label) {
      CoordinateLayer::Constant c;
      c.value = *b.label;
      for (int x : b.elements)
        if (!element_barred(x)) c.indices.push_back(element_index(x) - 1);
      out.constants.push_back(std::move(c));
    } else if (static_cast<int>(i) < p.bar_block(static_cast<int>(i))) {
      CoordinateLayer::Factor f;
      for (int x : b.elements) f.members.emplace_back(element_index(x) - 1, element_barred(x) ? -1 : 1);
      out.factors.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace arrstab
