#include "arrstab/spectral.hpp"

#include <algorithm>
#include <optional>

#include "arrstab/elliptic.hpp"
#include "arrstab/layer_poset.hpp"
#include "arrstab/orlik_solomon.hpp"

namespace arrstab {

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Graded trace of a cycle of length m (sign product s) permuting m copies of X.
std::vector<Rational> cycle_trace(int m, int s, GroundSpace space) {
  std::vector<Rational> out(static_cast<std::size_t>(2 * m + 1));
  for (int d = 0; d <= 2; ++d) {
    const int b = space.betti()[static_cast<std::size_t>(d)];
    if (b == 0) continue;
    const int tr = s < 0 ? space.inversion_trace(d) : b;
    const int koszul = (d * (m - 1)) % 2 ? -1 : 1;
    out[static_cast<std::size_t>(d * m)] = koszul * tr;
  }
  return out;
}

Rational coefficient(const std::vector<Rational>& poly, int degree) {
  if (degree < 0 || degree >= static_cast<int>(poly.size())) return 0;
  return poly[static_cast<std::size_t>(degree)];
}

std::vector<LabelledPartition> rank_slice(const std::vector<LabelledPartition>& all, int q) {
  std::vector<LabelledPartition> out;
  for (const auto& p : all)
    if (p.rank() == q) out.push_back(p);
  return out;
}

nlohmann::ordered_json decomposition_json(GroupKind g, const Decomposition& d) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [irr, m] : d) {
    nlohmann::ordered_json e;
    e["irrep"] = irr.name(g);
    e["stable_name"] = stable_name(irr).name(g);
    e["multiplicity"] = m.fits_slong_p() ? nlohmann::ordered_json(m.get_si()) : nlohmann::ordered_json(m.get_str());
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

std::vector<Rational> ambient_trace_polynomial(const SignedPermutation& w, const LabelledPartition& p,
                                               GroundSpace space, bool include_singletons) {
  if (!(act(w, p) == p)) throw DomainError("element does not fix " + p.to_string());
  const int blocks = static_cast<int>(p.blocks().size());
  // rep block of each unlabelled pair -> (target rep, sign)
  std::vector<int> target(static_cast<std::size_t>(blocks), -1), sign(static_cast<std::size_t>(blocks), 0);
  std::vector<int> reps;
  for (int b = 0; b < blocks; ++b) {
    const auto& blk = p.blocks()[static_cast<std::size_t>(b)];
    if (blk.label || b > p.bar_block(b)) continue;
    if (!include_singletons && blk.elements.size() == 1) continue;
    reps.push_back(b);
    const int img = p.block_of(w.act_element(blk.elements.front()));
    const int rep = std::min(img, p.bar_block(img));
    target[static_cast<std::size_t>(b)] = rep;
    sign[static_cast<std::size_t>(b)] = img == rep ? 1 : -1;
  }
  std::vector<Rational> poly{1};
  std::vector<bool> seen(static_cast<std::size_t>(blocks), false);
  for (int b : reps) {
    if (seen[static_cast<std::size_t>(b)]) continue;
    int m = 0, s = 1;
    for (int c = b; !seen[static_cast<std::size_t>(c)]; c = target[static_cast<std::size_t>(c)]) {
      seen[static_cast<std::size_t>(c)] = true;
      s *= sign[static_cast<std::size_t>(c)];
      ++m;
    }
    poly = poly_mul(poly, cycle_trace(m, s, space));
  }
  return poly;
}

Rational ambient_trace(const SignedPermutation& w, const LabelledPartition& p, int degree, GroundSpace space) {
  return coefficient(ambient_trace_polynomial(w, p, space), degree);
}

Rational local_os_trace(const SignedPermutation& w, const LabelledPartition& p, Family family, GroundSpace space) {
  if (p.rank() == 0) {
    if (!(act(w, p) == p)) throw DomainError("element does not fix " + p.to_string());
    return 1;
  }
  return LocalOrlikSolomon(p, family, space).trace(w);
}

ClassFunction e2_character(int p, int q, int n, Family family, GroundSpace space) {
  if (p < 0 || q < 0 || q > n) throw UsageError("bidegree out of range");
  const GroupKind g = group_of(family);
  ClassFunction chi(g, n);
  const auto all = enumerate(family, space, n, q);
  const auto top = rank_slice(all, q);
  std::vector<std::optional<LocalOrlikSolomon>> os(top.size());
  const auto& classes = chi.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto w = class_representative(classes[c]);
    Rational v = 0;
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (!(act(w, top[i]) == top[i])) continue;
      const Rational amb = ambient_trace(w, top[i], p, space);
      if (amb == 0) continue;
      if (q == 0) {
        v += amb;
        continue;
      }
      if (!os[i]) os[i].emplace(top[i], all);
      v += amb * os[i]->trace(w);
    }
    chi[c] = v;
  }
  return chi;
}

Integer e2_dimension(int p, int q, int n, Family family, GroundSpace space) {
  const auto poset = LayerPoset::build(family, space, n, q);
  Integer total = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (poset.rank_of(i) != q) continue;
    const int pairs = poset.element(i).unlabelled_block_count() / 2;
    std::vector<Rational> poly{1};
    const auto b = space.betti();
    for (int k = 0; k < pairs; ++k) poly = poly_mul(poly, {Rational(b[0]), Rational(b[1]), Rational(b[2])});
    total += coefficient(poly, p).get_num() * abs(poset.mobius_from_bottom(i));
  }
  return total;
}

namespace {

LabelledPartition left_justified(const IntegerLabelledPartition& lambda, int t) {
  std::vector<LabelledPartition::Block> blocks;
  int next = 1;
  for (int z = 0; z < 4; ++z) {
    const int size = lambda.labelled[static_cast<std::size_t>(z)];
    if (size == 0) continue;
    LabelledPartition::Block b;
    b.label = static_cast<TorsionPoint>(z);
    for (int j = 0; j < size; ++j, ++next) {
      b.elements.push_back(element_code(next, false));
      b.elements.push_back(element_code(next, true));
    }
    blocks.push_back(std::move(b));
  }
  const auto add_pair = [&](int size) {
    LabelledPartition::Block s, sb;
    for (int j = 0; j < size; ++j, ++next) {
      s.elements.push_back(element_code(next, false));
      sb.elements.push_back(element_code(next, true));
    }
    blocks.push_back(std::move(s));
    blocks.push_back(std::move(sb));
  };
  for (int part : lambda.unlabelled) add_pair(part + 1);
  for (int j = 0; j < t; ++j) add_pair(1);
  return LabelledPartition(next - 1, std::move(blocks));
}

}  // namespace

std::vector<InducedPiece> e2_pieces(int p, int q, int n, Family family, GroundSpace space) {
  if (p < 0 || q < 0 || q > n) throw UsageError("bidegree out of range");
  const GroupKind g = group_of(family);
  const bool with_signs = signed_group(family);
  std::vector<InducedPiece> out;
  for (const auto& [padded, members] : orbits_by_hat(family, space, n, q)) {
    const auto lambda = unpad(padded);
    const int ell = static_cast<int>(lambda.unlabelled.size());
    const int singles = n - q - ell;
    for (int r = 0; r <= p; ++r) {
      for (const auto& alpha : partitions(p - r)) {
        const int t = static_cast<int>(alpha.size());
        if (t > singles) continue;
        if (std::any_of(alpha.begin(), alpha.end(), [&](int d) { return d > 2 || space.betti()[static_cast<std::size_t>(d)] == 0; }))
          continue;
        const int k = q + ell + t;
        const auto rep = left_justified(lambda, t);
        // Degree carried by each coordinate: alpha on the trailing t singletons.
        std::vector<int> deg(static_cast<std::size_t>(k), -1);
        for (int j = 0; j < t; ++j) deg[static_cast<std::size_t>(q + ell + j)] = alpha[static_cast<std::size_t>(j)];
        std::optional<LocalOrlikSolomon> os;
        if (q > 0) os.emplace(rep, family, space);
        std::vector<SignedPermutation> subgroup;
        std::vector<Rational> psi;
        for (auto& h : all_elements(k, with_signs)) {
          if (!(act(h, rep) == rep)) continue;
          bool keeps = true;
          for (int i = q + ell; i < k && keeps; ++i) keeps = deg[static_cast<std::size_t>(h.image(i))] == deg[static_cast<std::size_t>(i)];
          if (!keeps) continue;
          Rational v = coefficient(ambient_trace_polynomial(h, rep, space, false), r);
          if (v != 0) {
            std::vector<bool> seen(static_cast<std::size_t>(k), false);
            for (int i = q + ell; i < k; ++i) {
              if (seen[static_cast<std::size_t>(i)]) continue;
              int m = 0, s = 1;
              for (int c = i; !seen[static_cast<std::size_t>(c)]; c = h.image(c)) {
                seen[static_cast<std::size_t>(c)] = true;
                s *= h.sign(c);
                ++m;
              }
              v *= coefficient(cycle_trace(m, s, space), deg[static_cast<std::size_t>(i)] * m);
            }
          }
          if (v != 0 && os) v *= os->trace(h);
          subgroup.push_back(std::move(h));
          psi.push_back(v);
        }
        auto inner = induce_from_subgroup(g, k, subgroup, psi);
        if (std::all_of(inner.values().begin(), inner.values().end(), [](const Rational& x) { return x == 0; }))
          continue;
        auto induced = induce_from_parabolic(k, inner, n);
        out.push_back(InducedPiece{.lambda = lambda,
                                   .r = r,
                                   .alpha = alpha,
                                   .k = k,
                                   .representative = rep,
                                   .subgroup_order = subgroup.size(),
                                   .inner = std::move(inner),
                                   .induced = std::move(induced)});
      }
    }
  }
  return out;
}

nlohmann::ordered_json InducedPiece::to_json() const {
  nlohmann::ordered_json j;
  j["lambda"] = arrstab::to_json(lambda);
  j["r"] = r;
  j["alpha"] = alpha;
  j["k"] = k;
  j["representative"] = arrstab::to_json(representative);
  j["subgroup_order"] = subgroup_order;
  j["dim"] = induced.degree().get_str();
  j["inner_character"] = inner.to_json();
  j["inner_decomposition"] = decomposition_json(inner.group(), decompose(inner));
  return j;
}

E2Cell e2_cell(int p, int q, int n, Family family, GroundSpace space) {
  E2Cell cell;
  cell.p = p;
  cell.q = q;
  cell.n = n;
  cell.family = family;
  cell.space = space;
  cell.character = e2_character(p, q, n, family, space);
  cell.pieces = e2_pieces(p, q, n, family, space);
  ClassFunction sum(group_of(family), n);
  for (const auto& piece : cell.pieces) sum += piece.induced;
  cell.pieces_match = sum == cell.character;
  cell.dim = cell.character.degree().get_num();
  cell.decomposition = decompose(cell.character);
  return cell;
}

nlohmann::ordered_json E2Cell::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["q"] = q;
  j["n"] = n;
  j["dim"] = dim.get_str();
  j["character"] = character.to_json();
  j["decomposition"] = decomposition_json(character.group(), decomposition);
  j["pieces_match_character"] = pieces_match;
  auto ps = nlohmann::ordered_json::array();
  for (const auto& piece : pieces) ps.push_back(piece.to_json());
  j["pieces"] = std::move(ps);
  return j;
}

nlohmann::ordered_json Cohomology::to_json() const {
  nlohmann::ordered_json j;
  j["i"] = i;
  j["n"] = n;
  j["dim"] = dim.get_str();
  j["character"] = character.to_json();
  j["decomposition"] = decomposition_json(character.group(), decomposition);
  return j;
}

Cohomology betti(int i, int n, Family family, GroundSpace space) {
  if (space.kind == SpaceKind::Elliptic)
    throw UnsupportedError("elliptic cohomology is not computed by betti; use the degree-one elliptic computation");
  if (i < 0) throw UsageError("degree must be nonnegative");
  Cohomology h;
  h.i = i;
  h.n = n;
  h.family = family;
  h.space = space;
  h.character = ClassFunction(group_of(family), n);
  for (int q = 0; q <= std::min(i, n); ++q) {
    const int p = i - q;
    if (space.kind == SpaceKind::Linear && p > 0) continue;
    h.character += e2_character(p, q, n, family, space);
  }
  h.dim = h.character.degree().get_num();
  h.decomposition = decompose(h.character);
  return h;
}

Cohomology cohomology(int i, int n, Family family, GroundSpace space) {
  if (space.kind != SpaceKind::Elliptic) return betti(i, n, family, space);
  if (i < 0) throw UsageError("degree must be nonnegative");
  if (i >= 2) throw UnsupportedError("unsupported: elliptic degree ≥ 2");
  if (i == 1) return elliptic_h1(n, family);
  Cohomology h;
  h.i = 0;
  h.n = n;
  h.family = family;
  h.space = space;
  h.character = trivial_character(group_of(family), n);
  h.dim = 1;
  h.decomposition = decompose(h.character);
  return h;
}

}  // namespace arrstab
