#include "arrstab/orlik_solomon.hpp"

#include <algorithm>
#include <functional>

#include "arrstab/layer_poset.hpp"

namespace arrstab {

namespace {

// Sign of the permutation sorting v (entries distinct), and v sorted.
int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

void for_each_subset(int m, int size, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      visit(cur);
      return;
    }
    for (int i = start; i < m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::uint64_t mask_of(const std::vector<int>& s) {
  std::uint64_t m = 0;
  for (int i : s) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

LocalOrlikSolomon::LocalOrlikSolomon(const LabelledPartition& p, Family family, GroundSpace space)
    : LocalOrlikSolomon(p, enumerate(family, space, p.n(), p.rank())) {}

LocalOrlikSolomon::LocalOrlikSolomon(const LabelledPartition& p, const std::vector<LabelledPartition>& candidates)
    : layer_(p), degree_(p.rank()) {
  std::vector<const LabelledPartition*> interval;
  for (const auto& y : candidates)
    if (y.rank() <= degree_ && leq(y, p)) interval.push_back(&y);
  for (const auto* y : interval)
    if (y->rank() == 1) atoms_.push_back(*y);
  std::sort(atoms_.begin(), atoms_.end());
  if (atoms_.size() > 63) throw DomainError("localization has too many hyperplanes");
  for (const auto* y : interval) {
    std::uint64_t m = 0;
    for (std::size_t a = 0; a < atoms_.size(); ++a)
      if (leq(atoms_[a], *y)) m |= std::uint64_t{1} << a;
    flats_.emplace_back(m, y->rank());
  }
  if (degree_ == 0) return;

  const int m = static_cast<int>(atoms_.size());
  for_each_subset(m, degree_, [&](const std::vector<int>& s) {
    monomial_index_.emplace(s, monomials_.size());
    monomials_.push_back(s);
  });
  const std::size_t cols = monomials_.size();
  RatMatrix rel(0, cols);
  const auto add_row = [&](const std::vector<std::pair<std::vector<int>, int>>& terms) {
    std::vector<Rational> row(cols);
    bool any = false;
    for (auto [s, c] : terms) {
      const int sign = sort_with_sign(s);
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
      row[monomial_index_.at(s)] += c * sign;
      any = true;
    }
    if (any) rel.append_row(row);
  };
  // Dependent q-sets vanish.
  for (const auto& s : monomials_)
    if (rank_of(mask_of(s)) < degree_) add_row({{s, 1}});
  // e_T * boundary(e_C) for circuits C and T disjoint from C.
  for (int size = 2; size <= degree_ + 1; ++size) {
    for_each_subset(m, size, [&](const std::vector<int>& c) {
      const std::uint64_t cm = mask_of(c);
      if (rank_of(cm) == size) return;
      for (int drop = 0; drop < size; ++drop)
        if (rank_of(cm & ~(std::uint64_t{1} << c[static_cast<std::size_t>(drop)])) != size - 1) return;
      ++circuits_;
      const int tsize = degree_ + 1 - size;
      for_each_subset(m, tsize, [&](const std::vector<int>& t) {
        if (mask_of(t) & cm) return;
        std::vector<std::pair<std::vector<int>, int>> terms;
        for (int k = 0; k < size; ++k) {
          std::vector<int> word = t;
          for (int j = 0; j < size; ++j)
            if (j != k) word.push_back(c[static_cast<std::size_t>(j)]);
          terms.emplace_back(std::move(word), k % 2 ? -1 : 1);
        }
        add_row(terms);
      });
    });
  }
  relations_ = RowSpaceReducer(std::move(rel));
  dimension_ = relations_.quotient_basis().size();
}

int LocalOrlikSolomon::rank_of(std::uint64_t atom_set) const {
  int best = degree_ + 1;
  for (auto [m, r] : flats_)
    if ((m & atom_set) == atom_set) best = std::min(best, r);
  if (best > degree_) throw DomainError("atom set has no upper bound in the interval");
  return best;
}

Rational LocalOrlikSolomon::trace(const SignedPermutation& w) const {
  if (!(act(w, layer_) == layer_)) throw DomainError("element does not fix " + layer_.to_string());
  if (degree_ == 0) return 1;
  std::vector<int> image(atoms_.size());
  for (std::size_t a = 0; a < atoms_.size(); ++a) {
    const auto moved = act(w, atoms_[a]);
    const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), moved);
    if (it == atoms_.end() || !(*it == moved)) throw DomainError("atom image outside the localization");
    image[a] = static_cast<int>(it - atoms_.begin());
  }
  Rational tr = 0;
  const std::size_t cols = monomials_.size();
  for (std::size_t col : relations_.quotient_basis()) {
    std::vector<int> s;
    for (int a : monomials_[col]) s.push_back(image[static_cast<std::size_t>(a)]);
    const int sign = sort_with_sign(s);
    std::vector<Rational> v(cols);
    v[monomial_index_.at(s)] = sign;
    relations_.reduce(v);
    tr += v[col];
  }
  return tr;
}

}  // namespace arrstab
