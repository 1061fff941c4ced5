#include "arrstab/elliptic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "arrstab/characters.hpp"
#include "arrstab/layer_poset.hpp"
#include "arrstab/weyl_action.hpp"

namespace arrstab {

namespace {

std::size_t pair_count(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

std::size_t pair_index(int n, int a, int b) {
  return static_cast<std::size_t>(a * n - a * (a + 1) / 2 + (b - a - 1));
}

std::size_t h2_dimension(int n) { return 2 * pair_count(n) + static_cast<std::size_t>(n * n); }

// Class of a rank-one layer in H^2(E^n).
std::vector<Rational> layer_class(const LabelledPartition& p) {
  const int n = p.n();
  std::vector<Rational> v(h2_dimension(n));
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    const auto& blk = p.blocks()[b];
    if (blk.label) {
      if (blk.elements.size() != 2) continue;
      const int i = element_index(blk.elements.front()) - 1;
      v[h2_index_xy(n, i, i)] += 1;
      return v;
    }
    if (blk.elements.size() == 2 && static_cast<int>(b) < p.bar_block(static_cast<int>(b))) {
      const int i = element_index(blk.elements[0]) - 1;
      const int j = element_index(blk.elements[1]) - 1;
      const int s = element_barred(blk.elements[0]) == element_barred(blk.elements[1]) ? 1 : -1;
      // (x_i - s x_j)(y_i - s y_j)
      v[h2_index_xy(n, i, i)] += 1;
      v[h2_index_xy(n, i, j)] -= s;
      v[h2_index_xy(n, j, i)] -= s;
      v[h2_index_xy(n, j, j)] += 1;
      return v;
    }
  }
  throw DomainError(p.to_string() + " is not a rank-one layer");
}

}  // namespace

std::size_t h2_index_xy(int n, int a, int b) { return 2 * pair_count(n) + static_cast<std::size_t>(a * n + b); }

std::vector<std::string> h2_basis_labels(int n) {
  std::vector<std::string> out;
  for (const char* v : {"x", "y"})
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) out.push_back(std::string(v) + std::to_string(a + 1) + v + std::to_string(b + 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.push_back("x" + std::to_string(a + 1) + "y" + std::to_string(b + 1));
  return out;
}

Degree1Differential elliptic_d2_degree1(int n, Family family) {
  Degree1Differential d;
  d.n = n;
  d.family = family;
  for (auto& p : enumerate(family, GroundSpace{SpaceKind::Elliptic}, n, 1))
    if (p.rank() == 1) d.generators.push_back(std::move(p));
  d.row_labels = h2_basis_labels(n);
  d.matrix = RatMatrix(h2_dimension(n), d.generators.size());
  for (std::size_t c = 0; c < d.generators.size(); ++c) {
    const auto v = layer_class(d.generators[c]);
    for (std::size_t r = 0; r < v.size(); ++r) d.matrix(r, c) = v[r];
  }
  d.rank = rank(d.matrix);
  return d;
}

nlohmann::ordered_json Degree1Differential::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["rows"] = row_labels;
  auto cols = nlohmann::ordered_json::array();
  for (const auto& g : generators) cols.push_back(g.to_string());
  j["columns"] = std::move(cols);
  auto m = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < matrix.cols(); ++c) row.push_back(matrix(r, c).get_num().get_si());
    m.push_back(std::move(row));
  }
  j["matrix"] = std::move(m);
  j["rank"] = rank;
  j["nullity"] = nullity();
  return j;
}

RatMatrix h2_action(const SignedPermutation& w, int n) {
  RatMatrix m(h2_dimension(n), h2_dimension(n));
  for (int block = 0; block < 2; ++block)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        int sa = w.image(a), sb = w.image(b);
        int sign = w.sign(a) * w.sign(b);
        if (sa > sb) {
          std::swap(sa, sb);
          sign = -sign;
        }
        const std::size_t off = static_cast<std::size_t>(block) * pair_count(n);
        m(off + pair_index(n, sa, sb), off + pair_index(n, a, b)) = sign;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      m(h2_index_xy(n, w.image(a), w.image(b)), h2_index_xy(n, a, b)) = w.sign(a) * w.sign(b);
  return m;
}

RatMatrix generator_action(const SignedPermutation& w, const std::vector<LabelledPartition>& generators) {
  RatMatrix m(generators.size(), generators.size());
  for (std::size_t c = 0; c < generators.size(); ++c) {
    const auto moved = act(w, generators[c]);
    const auto it = std::find(generators.begin(), generators.end(), moved);
    if (it == generators.end()) throw DomainError("generator image is not a rank-one layer");
    m(static_cast<std::size_t>(it - generators.begin()), c) = 1;
  }
  return m;
}

ClassFunction kernel_character(const Degree1Differential& d) {
  const GroupKind g = group_of(d.family);
  ClassFunction chi(g, d.n);
  const RatMatrix k = kernel_basis(d.matrix);
  if (k.cols() == 0) return chi;
  const SubspaceCoordinates coords(k);
  const auto& classes = chi.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto w = class_representative(classes[c]);
    const RatMatrix image = generator_action(w, d.generators) * k;
    Rational tr = 0;
    for (std::size_t i = 0; i < k.cols(); ++i) tr += coords.coordinates(image.col(i), true)[i];
    chi[c] = tr;
  }
  return chi;
}

Cohomology elliptic_h1(int n, Family family) {
  const GroundSpace space{SpaceKind::Elliptic};
  const auto d = elliptic_d2_degree1(n, family);
  Cohomology h;
  h.i = 1;
  h.n = n;
  h.family = family;
  h.space = space;
  h.character = e2_character(1, 0, n, family, space) + kernel_character(d);
  h.dim = h.character.degree().get_num();
  if (h.dim != Integer(2 * n) + Integer(static_cast<unsigned long>(d.nullity())))
    throw std::logic_error("elliptic H^1 character disagrees with the kernel dimension");
  h.decomposition = decompose(h.character);
  return h;
}

nlohmann::ordered_json InjectivityCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["q"] = q;
  j["rows"] = rows;
  j["columns"] = cols;
  j["rank"] = rank;
  j["injective"] = injective;
  return j;
}

namespace {

using Monomial = std::vector<std::pair<int, int>>;  // (i_s, j_s), i_s > j_s, i decreasing

std::vector<Monomial> arnold_monomials(int n, int q) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int)> rec = [&](int max_i) {
    if (static_cast<int>(cur.size()) == q) {
      out.push_back(cur);
      return;
    }
    for (int i = max_i; i >= 1; --i)
      for (int j = 0; j < i; ++j) {
        cur.emplace_back(i, j);
        rec(i - 1);
        cur.pop_back();
      }
  };
  rec(n - 1);
  return out;
}

std::vector<int> forest_roots(int n, const Monomial& m) {
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  for (auto [i, j] : m) next[static_cast<std::size_t>(i)] = j;
  std::vector<int> root(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    int c = a;
    while (next[static_cast<std::size_t>(c)] >= 0) c = next[static_cast<std::size_t>(c)];
    root[static_cast<std::size_t>(a)] = c;
  }
  return root;
}

}  // namespace

InjectivityCertificate typeA_elliptic_injectivity(int n, int q) {
  if (n < 2 || q < 1 || q >= n) throw UsageError("injectivity check needs n >= 2 and 1 <= q < n");
  InjectivityCertificate cert;
  cert.n = n;
  cert.q = q;
  const auto source = arnold_monomials(n, q);
  const auto targets = arnold_monomials(n, q - 1);
  std::map<Monomial, std::size_t> target_offset;
  std::size_t rows = 0;
  for (const auto& t : targets) {
    target_offset.emplace(t, rows);
    const std::size_t k = static_cast<std::size_t>(n - (q - 1));
    rows += k * (k - 1) + k * k;
  }
  cert.rows = rows;
  cert.cols = source.size();
  RatMatrix d(rows, source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const auto& m = source[c];
    for (std::size_t s = 0; s < m.size(); ++s) {
      Monomial rest = m;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
      const auto root = forest_roots(n, rest);
      std::vector<int> roots(root.begin(), root.end());
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      const auto pos = [&](int a) {
        return static_cast<int>(std::lower_bound(roots.begin(), roots.end(), root[static_cast<std::size_t>(a)]) - roots.begin());
      };
      const int k = static_cast<int>(roots.size());
      const std::size_t base = target_offset.at(rest) + static_cast<std::size_t>(k * (k - 1));
      const int sign = s % 2 ? -1 : 1;
      const auto [i, j] = m[s];
      // (x_i - x_j)(y_i - y_j) restricted to the layer of the remaining factors
      const std::pair<int, int> terms[] = {{i, i}, {i, j}, {j, i}, {j, j}};
      const int coeff[] = {1, -1, -1, 1};
      for (int t = 0; t < 4; ++t) {
        const std::size_t row = base + static_cast<std::size_t>(pos(terms[t].first) * k + pos(terms[t].second));
        d(row, c) += sign * coeff[t];
      }
    }
  }
  cert.rank = rank(d);
  cert.injective = cert.rank == cert.cols;
  return cert;
}

}  // namespace arrstab
