#include "arrstab/weyl_action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arrstab {

SignedPermutation::SignedPermutation(std::vector<int> sigma, std::vector<int> eps)
    : sigma_(std::move(sigma)), eps_(std::move(eps)) {
  if (sigma_.size() != eps_.size()) throw UsageError("sigma and eps have different lengths");
  std::vector<bool> seen(sigma_.size(), false);
  for (int s : sigma_) {
    if (s < 0 || s >= n() || seen[static_cast<std::size_t>(s)]) throw UsageError("sigma is not a permutation");
    seen[static_cast<std::size_t>(s)] = true;
  }
  for (int e : eps_)
    if (e != 1 && e != -1) throw UsageError("eps entries must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  return SignedPermutation(std::move(s), std::vector<int>(static_cast<std::size_t>(n), 1));
}

SignedPermutation SignedPermutation::transposition(int n, int i, int j) {
  auto w = identity(n);
  std::swap(w.sigma_[static_cast<std::size_t>(i)], w.sigma_[static_cast<std::size_t>(j)]);
  return w;
}

SignedPermutation SignedPermutation::sign_flip(int n, int i) {
  auto w = identity(n);
  w.eps_[static_cast<std::size_t>(i)] = -1;
  return w;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (image(i) != i || sign(i) != 1) return false;
  return true;
}

bool SignedPermutation::is_unsigned() const {
  return std::all_of(eps_.begin(), eps_.end(), [](int e) { return e == 1; });
}

int SignedPermutation::act_element(int code) const {
  const int i = element_index(code) - 1;
  const bool barred = element_barred(code) != (sign(i) < 0);
  return element_code(image(i) + 1, barred);
}

SignedPermutation compose(const SignedPermutation& w1, const SignedPermutation& w2) {
  if (w1.n() != w2.n()) throw UsageError("composing signed permutations of different sizes");
  const int n = w1.n();
  std::vector<int> s(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    s[static_cast<std::size_t>(k)] = w1.image(w2.image(k));
    e[static_cast<std::size_t>(k)] = w2.sign(k) * w1.sign(w2.image(k));
  }
  return SignedPermutation(std::move(s), std::move(e));
}

SignedPermutation invert(const SignedPermutation& w) {
  const int n = w.n();
  std::vector<int> s(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    s[static_cast<std::size_t>(w.image(k))] = k;
    e[static_cast<std::size_t>(w.image(k))] = w.sign(k);
  }
  return SignedPermutation(std::move(s), std::move(e));
}

int SignedCycleType::size() const {
  return std::accumulate(pos.begin(), pos.end(), 0) + std::accumulate(neg.begin(), neg.end(), 0);
}

std::string SignedCycleType::key() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pos.size(); ++i) os << (i ? "," : "") << pos[i];
  os << '|';
  for (std::size_t i = 0; i < neg.size(); ++i) os << (i ? "," : "") << neg[i];
  os << ')';
  return os.str();
}

SignedCycleType cycle_type(const SignedPermutation& w) {
  SignedCycleType c;
  std::vector<bool> seen(static_cast<std::size_t>(w.n()), false);
  for (int i = 0; i < w.n(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, sign = 1;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = w.image(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      sign *= w.sign(j);
      ++len;
    }
    (sign > 0 ? c.pos : c.neg).push_back(len);
  }
  std::sort(c.pos.rbegin(), c.pos.rend());
  std::sort(c.neg.rbegin(), c.neg.rend());
  return c;
}

namespace {

std::vector<int> parse_parts(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty part in '" + s + "'");
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size() || v <= 0) throw UsageError("bad part '" + item + "'");
    out.push_back(v);
  }
  if (!std::is_sorted(out.rbegin(), out.rend())) throw UsageError("parts must be weakly decreasing");
  return out;
}

}  // namespace

SignedCycleType parse_cycle_type(const std::string& key) {
  if (key.size() < 3 || key.front() != '(' || key.back() != ')') throw UsageError("bad class key '" + key + "'");
  const auto bar_pos = key.find('|');
  if (bar_pos == std::string::npos) throw UsageError("bad class key '" + key + "'");
  SignedCycleType c;
  c.pos = parse_parts(key.substr(1, bar_pos - 1));
  c.neg = parse_parts(key.substr(bar_pos + 1, key.size() - bar_pos - 2));
  return c;
}

SignedPermutation class_representative(const SignedCycleType& c) {
  const int n = c.size();
  std::vector<int> s(static_cast<std::size_t>(n)), e(static_cast<std::size_t>(n), 1);
  int start = 0;
  const auto place = [&](int len, bool negative) {
    for (int j = 0; j < len; ++j) s[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
    if (negative) e[static_cast<std::size_t>(start + len - 1)] = -1;
    start += len;
  };
  for (int len : c.pos) place(len, false);
  for (int len : c.neg) place(len, true);
  return SignedPermutation(std::move(s), std::move(e));
}

std::vector<SignedPermutation> generators(int n, bool with_signs) {
  std::vector<SignedPermutation> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(SignedPermutation::transposition(n, i, i + 1));
  if (with_signs && n >= 1) gens.push_back(SignedPermutation::sign_flip(n, 0));
  return gens;
}

std::vector<SignedPermutation> all_elements(int n, bool with_signs) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const int sign_patterns = with_signs ? 1 << n : 1;
  do {
    for (int mask = 0; mask < sign_patterns; ++mask) {
      std::vector<int> eps(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) eps[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      out.emplace_back(perm, std::move(eps));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

LabelledPartition act(const SignedPermutation& w, const LabelledPartition& p) {
  if (w.n() != p.n()) throw UsageError("acting on a labelled partition of a different size");
  std::vector<LabelledPartition::Block> blocks;
  blocks.reserve(p.blocks().size());
  for (const auto& b : p.blocks()) {
    LabelledPartition::Block nb;
    nb.label = b.label;
    for (int x : b.elements) nb.elements.push_back(w.act_element(x));
    blocks.push_back(std::move(nb));
  }
  return LabelledPartition(p.n(), std::move(blocks));
}

std::vector<LabelledPartition> orbit_of(const LabelledPartition& p, bool with_signs) {
  const auto gens = generators(p.n(), with_signs);
  std::set<LabelledPartition> seen{p};
  std::deque<LabelledPartition> work{p};
  while (!work.empty()) {
    const auto cur = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      auto next = act(g, cur);
      if (seen.insert(next).second) work.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<SignedPermutation> stabilizer(const LabelledPartition& p, bool with_signs) {
  const int n = p.n();
  const auto gens = generators(n, with_signs);
  std::map<LabelledPartition, SignedPermutation> transversal;
  transversal.emplace(p, SignedPermutation::identity(n));
  std::deque<LabelledPartition> work{p};
  while (!work.empty()) {
    const auto cur = work.front();
    work.pop_front();
    const auto t = transversal.at(cur);
    for (const auto& g : gens) {
      auto next = act(g, cur);
      if (!transversal.count(next)) {
        transversal.emplace(next, compose(g, t));
        work.push_back(std::move(next));
      }
    }
  }
  std::set<SignedPermutation> out;
  for (const auto& [point, t] : transversal) {
    for (const auto& g : gens) {
      const auto s = compose(invert(transversal.at(act(g, point))), compose(g, t));
      if (!s.is_identity()) out.insert(s);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<SignedPermutation> generated_subgroup(const std::vector<SignedPermutation>& gens, int n) {
  std::set<SignedPermutation> seen{SignedPermutation::identity(n)};
  std::deque<SignedPermutation> work{SignedPermutation::identity(n)};
  while (!work.empty()) {
    const auto cur = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      auto next = compose(g, cur);
      if (seen.insert(next).second) work.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::map<IntegerLabelledPartition, std::vector<LabelledPartition>> orbits_by_hat(Family family, GroundSpace space,
                                                                                  int n, int rank) {
  std::map<IntegerLabelledPartition, std::vector<LabelledPartition>> fibers;
  for (auto& p : enumerate(family, space, n, rank))
    if (p.rank() == rank) fibers[hat(p)].push_back(std::move(p));
  if (n <= 4) {
    for (auto& [key, members] : fibers) {
      std::sort(members.begin(), members.end());
      if (orbit_of(members.front(), signed_group(family)) != members)
        throw std::logic_error("hat fiber " + key.to_string() + " is not a single orbit");
    }
  } else {
    for (auto& [key, members] : fibers) std::sort(members.begin(), members.end());
  }
  return fibers;
}

nlohmann::ordered_json to_json(const SignedPermutation& w) {
  nlohmann::ordered_json j;
  auto sigma = nlohmann::ordered_json::array();
  for (int s : w.sigma()) sigma.push_back(s + 1);
  j["sigma"] = std::move(sigma);
  j["eps"] = w.eps();
  return j;
}

SignedPermutation signed_permutation_from_json(const nlohmann::json& j) {
  auto sigma = j.at("sigma").get<std::vector<int>>();
  for (int& s : sigma) --s;
  std::vector<int> eps = j.contains("eps") ? j.at("eps").get<std::vector<int>>()
                                           : std::vector<int>(sigma.size(), 1);
  return SignedPermutation(std::move(sigma), std::move(eps));
}

nlohmann::ordered_json to_json(const SignedCycleType& c) {
  nlohmann::ordered_json j;
  j["pos"] = c.pos;
  j["neg"] = c.neg;
  return j;
}

}  // namespace arrstab
