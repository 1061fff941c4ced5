#include "arrstab/lattice_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

namespace arrstab {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += f * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += f * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

std::atomic<bool> audit_on{false};
std::atomic<std::size_t> audit_count{0};

SmithNormalForm compute_snf(const IntMatrix& m);

}  // namespace

void set_snf_audit(bool on) { audit_on = on; }

std::size_t snf_audit_count() { return audit_count; }

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  auto s = compute_snf(m);
  if (audit_on) {
    if (!certify(m, s)) throw std::logic_error("Smith normal form failed its certificate");
    ++audit_count;
  }
  return s;
}

namespace {

SmithNormalForm compute_snf(const IntMatrix& m) {
  SmithNormalForm s;
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  s.U = IntMatrix::identity(rows);
  s.V = IntMatrix::identity(cols);
  s.V_inverse = IntMatrix::identity(cols);

  const auto swap_cols = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    s.V.swap_cols(x, y);
    s.V_inverse.swap_rows(x, y);
  };
  const auto swap_rows = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    s.U.swap_rows(x, y);
  };
  // col_target += f col_source
  const auto col_op = [&](std::size_t target, std::size_t source, const Integer& f) {
    add_col_multiple(a, target, source, f);
    add_col_multiple(s.V, target, source, f);
    add_row_multiple(s.V_inverse, source, target, -f);
  };
  const auto row_op = [&](std::size_t target, std::size_t source, const Integer& f) {
    add_row_multiple(a, target, source, f);
    add_row_multiple(s.U, target, source, f);
  };

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block as pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, -trunc_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, -trunc_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) {
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_op(t, bad, 1);
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(s.U, t);
    }
    s.invariant_factors.push_back(a(t, t));
  }
  s.rank = t;
  s.D = std::move(a);
  return s;
}

}  // namespace

bool certify(const IntMatrix& m, const SmithNormalForm& s) {
  if (s.U * m * s.V != s.D) return false;
  if (s.V * s.V_inverse != IntMatrix::identity(m.cols())) return false;
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i == j && i < s.rank) {
        if (s.D(i, j) <= 0) return false;
        if (i > 0 && s.D(i, j) % s.D(i - 1, j - 1) != 0) return false;
      } else if (s.D(i, j) != 0) {
        return false;
      }
    }
  return abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = row; i < a.rows(); ++i)
        if (a(i, col) != 0 && (best == a.rows() || abs(a(i, col)) < abs(a(best, col)))) best = i;
      if (best == a.rows()) break;
      a.swap_rows(row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        add_row_multiple(a, i, row, -trunc_div(a(i, col), a(row, col)));
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) negate_row(a, row);
    for (std::size_t i = 0; i < row; ++i) add_row_multiple(a, i, row, -floor_div(a(i, col), a(row, col)));
    ++row;
  }
  IntMatrix out(row, a.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

TorusValue torsion_value(TorsionPoint z, int g) {
  TorusValue v(static_cast<std::size_t>(g));
  for (int s = 0; s < g; ++s)
    if ((z >> s) & 1) v[static_cast<std::size_t>(s)] = Rational(1, 2);
  if (g < 2 && (z >> g) != 0) throw UsageError("torsion point does not exist on this space");
  return v;
}

std::optional<TorsionPoint> as_torsion(const TorusValue& v) {
  TorsionPoint z = 0;
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s] == Rational(1, 2))
      z |= static_cast<TorsionPoint>(1u << s);
    else if (v[s] != 0)
      return std::nullopt;
  }
  return z;
}

namespace {

// One solution of basis x = values when basis has full row rank.
TorusPoint particular_solution(int n, int g, const IntMatrix& basis, const std::vector<TorusValue>& values) {
  TorusPoint x(static_cast<std::size_t>(n), TorusValue(static_cast<std::size_t>(g)));
  if (basis.rows() == 0 || g == 0) return x;
  const auto s = smith_normal_form(basis);
  for (int slot = 0; slot < g; ++slot) {
    std::vector<Rational> y(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < s.rank; ++i) {
      Rational c = 0;
      for (std::size_t k = 0; k < basis.rows(); ++k) c += Rational(s.U(i, k)) * values[k][static_cast<std::size_t>(slot)];
      y[i] = c / Rational(s.invariant_factors[i]);
    }
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      Rational v = 0;
      for (std::size_t i = 0; i < s.rank; ++i) v += Rational(s.V(j, i)) * y[i];
      x[j][static_cast<std::size_t>(slot)] = mod_one(v);
    }
  }
  return x;
}

TorusValue evaluate(const std::vector<Integer>& chi, const TorusPoint& x, int g) {
  TorusValue out(static_cast<std::size_t>(g));
  for (int slot = 0; slot < g; ++slot) {
    Rational v = 0;
    for (std::size_t i = 0; i < chi.size(); ++i)
      if (chi[i] != 0) v += Rational(chi[i]) * x[i][static_cast<std::size_t>(slot)];
    out[static_cast<std::size_t>(slot)] = mod_one(v);
  }
  return out;
}

}  // namespace

GeometricLayer::GeometricLayer(int n, int g, const IntMatrix& basis, std::vector<TorusValue> values) : n_(n), g_(g) {
  if (basis.rows() != values.size()) throw DimensionError("one value per basis row required");
  if (basis.rows() > 0 && basis.cols() != static_cast<std::size_t>(n)) throw DimensionError("basis has wrong width");
  for (auto& v : values) {
    if (v.size() != static_cast<std::size_t>(g)) throw DimensionError("torus value has wrong length");
    for (auto& c : v) c = mod_one(c);
  }
  const auto point = particular_solution(n, g, basis, values);
  basis_ = hermite_normal_form(basis.rows() ? basis : IntMatrix(0, static_cast<std::size_t>(n)));
  if (basis_.rows() != basis.rows()) throw DimensionError("layer basis is not of full rank");
  for (std::size_t i = 0; i < basis_.rows(); ++i) values_.push_back(evaluate(basis_.row(i), point, g));
  witness_ = particular_solution(n, g, basis_, values_);
}

GeometricLayer GeometricLayer::whole_space(int n, int g) { return GeometricLayer(n, g, IntMatrix(0, static_cast<std::size_t>(n)), {}); }

bool GeometricLayer::contains(const TorusPoint& x) const {
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    if (evaluate(basis_.row(i), x, g_) != values_[i]) return false;
  return true;
}

std::vector<Constraint> GeometricLayer::constraints() const {
  std::vector<Constraint> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back({basis_.row(i), values_[i]});
  return out;
}

bool GeometricLayer::operator<(const GeometricLayer& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  if (g_ != o.g_) return g_ < o.g_;
  if (!(basis_ == o.basis_)) return basis_ < o.basis_;
  return values_ < o.values_;
}

nlohmann::ordered_json GeometricLayer::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["dimension"] = dimension();
  j["lattice"] = arrstab::to_json(basis_);
  auto offset = nlohmann::ordered_json::array();
  for (const auto& c : witness_) {
    if (const auto z = as_torsion(c)) {
      offset.push_back(torsion_name(*z));
    } else {
      auto parts = nlohmann::ordered_json::array();
      for (const auto& v : c) parts.push_back(v.get_str());
      offset.push_back(std::move(parts));
    }
  }
  j["offset"] = std::move(offset);
  return j;
}

std::vector<GeometricLayer> components_of(const std::vector<Constraint>& constraints, int n, GroundSpace space) {
  const int g = space.torsion_bits();
  IntMatrix m(constraints.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].character.size() != static_cast<std::size_t>(n)) throw DimensionError("character has wrong length");
    if (constraints[i].value.size() != static_cast<std::size_t>(g)) throw DimensionError("constraint value has wrong length");
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) m(i, j) = constraints[i].character[j];
  }
  const auto s = smith_normal_form(m);
  // Transformed right-hand side c' = U c, per torus slot.
  std::vector<TorusValue> rhs(constraints.size(), TorusValue(static_cast<std::size_t>(g)));
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (int slot = 0; slot < g; ++slot) {
      Rational v = 0;
      for (std::size_t k = 0; k < constraints.size(); ++k)
        v += Rational(s.U(i, k)) * constraints[k].value[static_cast<std::size_t>(slot)];
      rhs[i][static_cast<std::size_t>(slot)] = mod_one(v);
    }
  for (std::size_t i = s.rank; i < constraints.size(); ++i)
    for (const auto& v : rhs[i])
      if (v != 0) return {};

  const std::size_t r = s.rank;
  IntMatrix basis(r, static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) basis(i, j) = s.V_inverse(i, j);

  // Each row i of y = V^{-1} x solves d_i y_i = c'_i: d_i choices per slot.
  std::vector<std::size_t> radices;
  for (std::size_t i = 0; i < r; ++i)
    for (int slot = 0; slot < g; ++slot) radices.push_back(s.invariant_factors[i].get_ui());
  std::vector<std::size_t> digits(radices.size(), 0);
  std::set<GeometricLayer> out;
  for (;;) {
    std::vector<TorusValue> values(r, TorusValue(static_cast<std::size_t>(g)));
    for (std::size_t i = 0; i < r; ++i)
      for (int slot = 0; slot < g; ++slot) {
        const std::size_t k = digits[i * static_cast<std::size_t>(g) + static_cast<std::size_t>(slot)];
        values[i][static_cast<std::size_t>(slot)] =
            (rhs[i][static_cast<std::size_t>(slot)] + Rational(static_cast<unsigned long>(k))) /
            Rational(s.invariant_factors[i]);
      }
    out.emplace(n, g, basis, std::move(values));
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == radices[pos]) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return {out.begin(), out.end()};
}

bool leq(const GeometricLayer& lower, const GeometricLayer& upper) {
  if (lower.n() != upper.n() || lower.torus_rank() != upper.torus_rank())
    throw UsageError("comparing layers of different spaces");
  if (lower.rank() > upper.rank()) return false;
  IntMatrix stacked = upper.basis();
  for (std::size_t i = 0; i < lower.basis().rows(); ++i) stacked.append_row(lower.basis().row(i));
  if (rank(stacked) != static_cast<std::size_t>(upper.rank())) return false;
  return lower.contains(upper.witness());
}

GeometricLayer act(const SignedPermutation& w, const GeometricLayer& f) {
  if (w.n() != f.n()) throw UsageError("acting on a layer of a different size");
  IntMatrix basis(f.basis().rows(), static_cast<std::size_t>(f.n()));
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (int i = 0; i < f.n(); ++i)
      basis(r, static_cast<std::size_t>(w.image(i))) = f.basis()(r, static_cast<std::size_t>(i)) * w.sign(i);
  return GeometricLayer(f.n(), f.torus_rank(), basis, f.values());
}

std::vector<std::vector<Integer>> positive_roots(Family family, int n) {
  std::vector<std::vector<Integer>> roots;
  const auto unit = [n](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<Integer> v(static_cast<std::size_t>(n));
    for (auto [i, c] : entries) v[static_cast<std::size_t>(i)] += c;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(unit({{i, 1}, {j, -1}}));
      if (family != Family::A) roots.push_back(unit({{i, 1}, {j, 1}}));
    }
  for (int i = 0; i < n; ++i) {
    if (family == Family::B) roots.push_back(unit({{i, 1}}));
    if (family == Family::C) roots.push_back(unit({{i, 2}}));
  }
  return roots;
}

std::vector<GeometricLayer> arrangement(Family family, GroundSpace space, int n) {
  std::vector<GeometricLayer> out;
  const TorusValue zero(static_cast<std::size_t>(space.torsion_bits()));
  for (const auto& root : positive_roots(family, n)) {
    auto comps = components_of({{root, zero}}, n, space);
    out.insert(out.end(), comps.begin(), comps.end());
  }
  return out;
}

std::optional<std::size_t> GeometricPoset::index_of(const GeometricLayer& f) const {
  const auto it = std::lower_bound(layers.begin(), layers.end(), f, [](const GeometricLayer& a, const GeometricLayer& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a < b;
  });
  if (it == layers.end() || !(*it == f)) return std::nullopt;
  return static_cast<std::size_t>(it - layers.begin());
}

std::size_t GeometricPoset::cover_count() const {
  std::size_t c = 0;
  for (const auto& u : up_covers) c += u.size();
  return c;
}

GeometricPoset geometric_layer_poset(Family family, GroundSpace space, int n, std::optional<int> max_rank) {
  const int g = space.torsion_bits();
  const int top = max_rank.value_or(n);
  const auto hyperplanes = arrangement(family, space, n);
  std::vector<std::set<GeometricLayer>> by_rank(1);
  by_rank[0].insert(GeometricLayer::whole_space(n, g));
  for (int r = 0; r < top; ++r) {
    std::set<GeometricLayer> next;
    for (const auto& f : by_rank[static_cast<std::size_t>(r)]) {
      for (const auto& h : hyperplanes) {
        if (leq(h, f)) continue;
        auto cs = f.constraints();
        const auto hc = h.constraints();
        cs.insert(cs.end(), hc.begin(), hc.end());
        for (auto& c : components_of(cs, n, space)) {
          if (c.rank() != r + 1) throw std::logic_error("intersection with a hyperplane jumped rank");
          next.insert(std::move(c));
        }
      }
    }
    if (next.empty()) break;
    by_rank.push_back(std::move(next));
  }
  GeometricPoset p;
  std::vector<std::size_t> start;
  for (const auto& layer_set : by_rank) {
    start.push_back(p.layers.size());
    p.rank_counts.push_back(layer_set.size());
    p.layers.insert(p.layers.end(), layer_set.begin(), layer_set.end());
  }
  start.push_back(p.layers.size());
  p.up_covers.assign(p.layers.size(), {});
  for (std::size_t r = 0; r + 2 < start.size(); ++r)
    for (std::size_t a = start[r]; a < start[r + 1]; ++a)
      for (std::size_t b = start[r + 1]; b < start[r + 2]; ++b)
        if (leq(p.layers[a], p.layers[b])) p.up_covers[a].push_back(b);
  return p;
}

GeometricLayer layer_of(const LabelledPartition& p, GroundSpace space) {
  const int n = p.n();
  const int g = space.torsion_bits();
  const auto layer = coordinate_layer(p);
  std::vector<Constraint> cs;
  const TorusValue zero(static_cast<std::size_t>(g));
  for (const auto& f : layer.factors) {
    const auto [i0, s0] = f.members.front();
    for (std::size_t k = 1; k < f.members.size(); ++k) {
      const auto [ik, sk] = f.members[k];
      std::vector<Integer> chi(static_cast<std::size_t>(n));
      chi[static_cast<std::size_t>(i0)] += s0;
      chi[static_cast<std::size_t>(ik)] -= sk;
      cs.push_back({chi, zero});
    }
  }
  for (const auto& c : layer.constants)
    for (int i : c.indices) {
      std::vector<Integer> chi(static_cast<std::size_t>(n));
      chi[static_cast<std::size_t>(i)] = 1;
      cs.push_back({chi, torsion_value(c.value, g)});
    }
  auto comps = components_of(cs, n, space);
  if (comps.size() != 1) throw std::logic_error("coordinate layer of " + p.to_string() + " is not connected");
  return comps.front();
}

nlohmann::ordered_json IsomorphismReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed;
  j["elements"] = elements;
  j["covers"] = covers;
  j["rank_counts"] = rank_counts;
  if (!passed) j["witness"] = witness;
  return j;
}

IsomorphismReport verify_layer_isomorphism(Family family, GroundSpace space, int n, std::optional<int> max_rank) {
  IsomorphismReport rep;
  const auto comb = LayerPoset::build(family, space, n, max_rank);
  const auto geo = geometric_layer_poset(family, space, n, max_rank);
  rep.elements = comb.size();
  rep.covers = comb.cover_count();
  rep.rank_counts = comb.rank_counts();
  const auto fail = [&](std::string why) {
    rep.passed = false;
    rep.witness = std::move(why);
    return rep;
  };
  if (comb.size() != geo.layers.size())
    return fail("element counts differ: " + std::to_string(comb.size()) + " labelled partitions, " +
                std::to_string(geo.layers.size()) + " layers");
  if (comb.rank_counts() != geo.rank_counts) return fail("rank profiles differ");
  std::vector<std::size_t> image(comb.size());
  std::vector<bool> hit(geo.layers.size(), false);
  for (std::size_t i = 0; i < comb.size(); ++i) {
    const auto f = layer_of(comb.element(i), space);
    const auto j = geo.index_of(f);
    if (!j) return fail(comb.element(i).to_string() + " maps to a layer missing from the lattice poset");
    if (hit[*j]) return fail(comb.element(i).to_string() + " collides with another labelled partition");
    if (f.rank() != comb.rank_of(i)) return fail(comb.element(i).to_string() + " changes rank");
    hit[*j] = true;
    image[i] = *j;
  }
  std::set<std::pair<std::size_t, std::size_t>> mapped, actual;
  for (std::size_t a = 0; a < comb.size(); ++a)
    for (std::size_t b : comb.up_covers()[a]) mapped.emplace(image[a], image[b]);
  for (std::size_t a = 0; a < geo.layers.size(); ++a)
    for (std::size_t b : geo.up_covers[a]) actual.emplace(a, b);
  if (mapped != actual) {
    for (std::size_t a = 0; a < comb.size(); ++a)
      for (std::size_t b : comb.up_covers()[a])
        if (!actual.count({image[a], image[b]}))
          return fail("cover " + comb.element(a).to_string() + " < " + comb.element(b).to_string() +
                      " is not a cover of layers");
    return fail("the layer poset has covers with no labelled-partition counterpart");
  }
  for (const auto& w : generators(n, signed_group(family))) {
    for (std::size_t i = 0; i < comb.size(); ++i) {
      const auto moved = layer_of(act(w, comb.element(i)), space);
      if (!(moved == act(w, geo.layers[image[i]])))
        return fail("equivariance fails at " + comb.element(i).to_string());
    }
  }
  rep.passed = true;
  return rep;
}

nlohmann::ordered_json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

nlohmann::ordered_json to_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("matrix must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw UsageError("matrix rows must be arrays");
    std::vector<Integer> row;
    for (const auto& e : r) {
      if (e.is_number_integer())
        row.emplace_back(e.get<long>());
      else if (e.is_string())
        row.emplace_back(e.get<std::string>());
      else
        throw UsageError("matrix entries must be integers");
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace arrstab
