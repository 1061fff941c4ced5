#include "arrstab/stability.hpp"

#include <set>

namespace arrstab {

int stability_bound(int i, Family family, GroundSpace space) {
  if (family == Family::A && space.kind == SpaceKind::Elliptic) return 4 * i - 2;
  return 4 * i;
}

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  if (ys.size() != m) throw UsageError("interpolation needs matching point lists");
  // Newton divided differences, then expand into the monomial basis.
  std::vector<Rational> c = ys;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t k = m - 1; k >= j; --k) c[k] = (c[k] - c[k - 1]) / (xs[k] - xs[k - j]);
  std::vector<Rational> poly(m);
  for (std::size_t k = m; k-- > 0;) {
    // poly = poly * (x - xs[k]) + c[k]
    std::vector<Rational> next(m);
    for (std::size_t d = 0; d + 1 < m; ++d) next[d + 1] += poly[d];
    for (std::size_t d = 0; d < m; ++d) next[d] -= poly[d] * xs[k];
    next[0] += c[k];
    poly = std::move(next);
  }
  return poly;
}

StabilityReport stability_scan(int i, Family family, GroundSpace space, int n_lo, int n_hi) {
  if (i < 0) throw UsageError("degree must be nonnegative");
  if (n_lo < 1 || n_hi < n_lo) throw UsageError("invalid window");
  if (n_hi < i + 1) throw UsageError("window must reach n >= i + 1");
  if (space.kind == SpaceKind::Elliptic && i >= 2) throw UnsupportedError("unsupported: elliptic degree ≥ 2");

  StabilityReport r;
  r.i = i;
  r.family = family;
  r.space = space;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  r.predicted_bound = stability_bound(i, family, space);

  std::vector<std::map<Irrep, Integer>> stable(static_cast<std::size_t>(n_hi - n_lo + 1));
  std::set<Irrep> names;
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto h = cohomology(i, n, family, space);
    r.dims.push_back(h.dim);
    r.decompositions.push_back(h.decomposition);
    Integer trivial = 0;
    auto& row = stable[static_cast<std::size_t>(n - n_lo)];
    for (const auto& [irrep, mult] : h.decomposition) {
      row[stable_name(irrep)] += mult;
      names.insert(stable_name(irrep));
      if (irrep.minus.empty() && irrep.plus.size() == 1) trivial += mult;
    }
    r.trivial_multiplicities.push_back(trivial);
  }
  for (const auto& name : names) {
    auto& seq = r.multiplicities[name];
    for (const auto& row : stable) {
      const auto it = row.find(name);
      seq.push_back(it == row.end() ? Integer(0) : it->second);
    }
  }

  int onset = n_hi;
  while (onset > n_lo && stable[static_cast<std::size_t>(onset - 1 - n_lo)] == stable.back()) --onset;
  r.onset = onset;
  r.certified = onset < n_hi;

  if (r.certified) {
    std::vector<Rational> xs, ys;
    for (int n = onset; n <= n_hi; ++n) {
      xs.emplace_back(n);
      ys.emplace_back(r.dims[static_cast<std::size_t>(n - n_lo)]);
    }
    r.fit_points = static_cast<int>(xs.size());
    r.polynomial_determined = r.fit_points >= 2 * i + 2;
    if (r.polynomial_determined) {
      r.dimension_polynomial = interpolate(xs, ys);
      r.polynomial_degree = -1;
      for (std::size_t d = 0; d < r.dimension_polynomial.size(); ++d)
        if (r.dimension_polynomial[d] != 0) r.polynomial_degree = static_cast<int>(d);
    }
  }
  return r;
}

std::string StabilityReport::summary() const {
  if (!certified) return "inconclusive ≥ " + std::to_string(n_hi);
  const int o = *onset;
  return "onset " + std::to_string(o) + (o <= predicted_bound ? " within bound " : " exceeds bound ") +
         std::to_string(predicted_bound);
}

nlohmann::ordered_json StabilityReport::to_json() const {
  const GroupKind g = group();
  nlohmann::ordered_json j;
  j["i"] = i;
  j["n_range"] = {n_lo, n_hi};
  auto d = nlohmann::ordered_json::array();
  for (const auto& x : dims) d.push_back(x.get_str());
  j["dims"] = std::move(d);
  auto per_n = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < decompositions.size(); ++k) {
    nlohmann::ordered_json e;
    e["n"] = n_lo + static_cast<int>(k);
    e["decomposition"] = decomposition_string(g, decompositions[k]);
    per_n.push_back(std::move(e));
  }
  j["per_n"] = std::move(per_n);
  auto mults = nlohmann::ordered_json::array();
  for (const auto& [name, seq] : multiplicities) {
    nlohmann::ordered_json e;
    e["stable_name"] = name.name(g);
    auto s = nlohmann::ordered_json::array();
    for (const auto& x : seq) s.push_back(x.get_str());
    e["multiplicities"] = std::move(s);
    mults.push_back(std::move(e));
  }
  j["multiplicities"] = std::move(mults);
  auto triv = nlohmann::ordered_json::array();
  for (const auto& x : trivial_multiplicities) triv.push_back(x.get_str());
  j["trivial_multiplicities"] = std::move(triv);
  j["onset"] = certified ? nlohmann::ordered_json(*onset) : nlohmann::ordered_json(nullptr);
  j["certified"] = certified;
  j["predicted_bound"] = predicted_bound;
  j["summary"] = summary();
  if (certified) {
    j["fit_points"] = fit_points;
    j["polynomial_determined"] = polynomial_determined;
  }
  if (polynomial_determined) {
    auto poly = nlohmann::ordered_json::array();
    for (const auto& c : dimension_polynomial) poly.push_back(c.get_str());
    j["dimension_polynomial"] = std::move(poly);
    j["polynomial_degree"] = polynomial_degree;
  }
  return j;
}

}  // namespace arrstab
