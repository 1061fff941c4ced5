#include <doctest.h>

#include <functional>
#include <set>

#include "arrstab/lattice_oracle.hpp"
#include "arrstab/layer_poset.hpp"
#include "arrstab/weyl_action.hpp"
#include "oracles.hpp"

using namespace arrstab;
using oracle::lp;

namespace {

const GroundSpace kLinear{SpaceKind::Linear};
const GroundSpace kToric{SpaceKind::Toric};
const GroundSpace kElliptic{SpaceKind::Elliptic};

using Edge = std::pair<std::string, std::string>;

std::set<Edge> hasse(const LayerPoset& p) {
  std::set<Edge> out;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b : p.up_covers()[a]) out.emplace(p.element(a).to_string(), p.element(b).to_string());
  return out;
}

std::vector<oracle::Vec> atom_normals(const LayerPoset& p, std::size_t top) {
  std::vector<oracle::Vec> out;
  for (std::size_t a : p.lower_interval(top)) {
    if (p.rank_of(a) != 1) continue;
    const auto f = layer_of(p.element(a), p.space());
    oracle::Vec v;
    for (std::size_t c = 0; c < f.basis().cols(); ++c) v.push_back(f.basis()(0, c).get_si());
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("type C toric n=2 matches the drawn Hasse diagram") {
  const auto p = LayerPoset::build(Family::C, kToric, 2);
  CHECK(p.size() == 11);
  CHECK(p.rank_counts() == std::vector<std::size_t>{1, 6, 4});
  const std::string bot = LabelledPartition::bottom(2).to_string();
  const auto s = [](const char* t) { return lp(2, t).to_string(); };
  const std::string one_e = s("{1,1-}_e {2} {2-}"), two_e = s("{2,2-}_e {1} {1-}");
  const std::string one_a = s("{1,1-}_a {2} {2-}"), two_a = s("{2,2-}_a {1} {1-}");
  const std::string h = s("{1,2} {1-,2-}"), hp = s("{1,2-} {1-,2}");
  const std::string ea = s("{1,1-}_e {2,2-}_a"), ae = s("{1,1-}_a {2,2-}_e");
  const std::string top_e = s("{1,1-,2,2-}_e"), top_a = s("{1,1-,2,2-}_a");
  std::set<Edge> expect;
  for (const auto& x : {one_e, two_e, one_a, two_a, h, hp}) expect.emplace(bot, x);
  for (const auto& x : {one_e, two_a}) expect.emplace(x, ea);
  for (const auto& x : {two_e, one_a}) expect.emplace(x, ae);
  for (const auto& x : {one_e, two_e, h, hp}) expect.emplace(x, top_e);
  for (const auto& x : {one_a, two_a, h, hp}) expect.emplace(x, top_a);
  CHECK(hasse(p) == expect);
  CHECK(p.cover_count() == 18);
}

TEST_CASE("type B elliptic n=2 matches the drawn Hasse diagram") {
  const auto p = LayerPoset::build(Family::B, kElliptic, 2);
  CHECK(p.rank_counts() == std::vector<std::size_t>{1, 4, 4});
  const auto s = [](const char* t) { return lp(2, t).to_string(); };
  const std::string bot = LabelledPartition::bottom(2).to_string();
  const std::string one = s("{1,1-}_e {2} {2-}"), two = s("{2,2-}_e {1} {1-}");
  const std::string h = s("{1,2} {1-,2-}"), hp = s("{1,2-} {1-,2}");
  std::set<Edge> expect;
  for (const auto& x : {one, two, h, hp}) expect.emplace(bot, x);
  for (const auto* z : {"e", "a", "b", "ab"}) {
    const std::string top = s((std::string("{1,1-,2,2-}_") + z).c_str());
    expect.emplace(h, top);
    expect.emplace(hp, top);
    if (std::string(z) == "e") {
      expect.emplace(one, top);
      expect.emplace(two, top);
    }
  }
  CHECK(hasse(p) == expect);
}

TEST_CASE("Mobius function") {
  const auto p = LayerPoset::build(Family::C, kToric, 2);
  const auto top = p.require_index(lp(2, "{1,1-,2,2-}_e"));
  const auto h = p.require_index(lp(2, "{1,2} {1-,2-}"));
  CHECK(p.mobius(top, top) == 1);
  CHECK(p.mobius_from_bottom(top) == 3);
  CHECK(p.mobius_from_bottom(h) == -1);
  CHECK_THROWS_AS(p.mobius(top, h), DomainError);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a == b || !p.leq(a, b)) continue;
      Integer sum = 0;
      for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(a, z) && p.leq(z, b)) sum += p.mobius(a, z);
      CHECK(sum == 0);
    }
}

TEST_CASE("localization and local Orlik-Solomon dimensions") {
  const auto p = LayerPoset::build(Family::C, kToric, 2);
  CHECK(p.localization(LabelledPartition::bottom(2)).size() == 1);
  const auto top = lp(2, "{1,1-,2,2-}_e");
  const auto loc = p.localization(top);
  CHECK(loc.rank_counts() == std::vector<std::size_t>{1, 4, 1});
  CHECK(loc.mobius_from_bottom(loc.size() - 1) == 3);
  CHECK(p.local_os_dims(top) == std::vector<Integer>{1, 4, 3});
  CHECK(p.local_os_dims(lp(2, "{1,2} {1-,2-}")) == std::vector<Integer>{1, 1});
  CHECK(p.local_os_dims(LabelledPartition::bottom(2)) == std::vector<Integer>{1});
  CHECK(p.localization(lp(2, "{1,2} {1-,2-}")).rank_counts() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("local dimensions agree with Whitney's subset formula") {
  for (auto f : {Family::A, Family::B, Family::C, Family::D})
    for (auto space : {kLinear, kToric, kElliptic}) {
      const int n = 3;
      if (f == Family::D && n < 2) continue;
      const auto p = LayerPoset::build(f, space, n);
      for (std::size_t i = 0; i < p.size(); ++i) {
        const auto normals = atom_normals(p, i);
        CHECK(oracle::rational_rank(normals) == p.rank_of(i));
        CHECK(p.mobius_from_bottom(i) == oracle::whitney_mobius(normals));
        const auto pi = oracle::linear_poincare(normals, p.rank_of(i));
        const auto dims = p.local_os_dims(p.element(i));
        REQUIRE(dims.size() == static_cast<std::size_t>(p.rank_of(i) + 1));
        for (std::size_t q = 0; q < dims.size(); ++q) CHECK(dims[q] == pi[q]);
      }
    }
}

TEST_CASE("graded posets with alternating Mobius signs") {
  for (auto f : {Family::B, Family::C, Family::D})
    for (auto space : {kLinear, kToric, kElliptic}) {
      const auto p = LayerPoset::build(f, space, 3);
      std::function<void(std::size_t, int)> walk = [&](std::size_t x, int len) {
        CHECK(len == p.rank_of(x));
        for (std::size_t y : p.up_covers()[x]) walk(y, len + 1);
      };
      walk(p.bottom(), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        const Integer mu = p.mobius_from_bottom(i);
        CHECK(sgn(mu) == (p.rank_of(i) % 2 ? -1 : 1));
      }
      for (std::size_t i = 0; i < p.size(); ++i)
        for (const auto& g : generators(3, true)) {
          const auto moved = act(g, p.element(i));
          CHECK(p.localization(moved).rank_counts() == p.localization(p.element(i)).rank_counts());
        }
    }
}

TEST_CASE("type A fibers share local dimensions; B/C/D pairs meet in torsion-many layers") {
  for (auto space : {kLinear, kToric, kElliptic}) {
    const auto p = LayerPoset::build(Family::A, space, 4);
    std::map<IntegerLabelledPartition, std::vector<Integer>> seen;
    for (const auto& e : p.elements()) {
      const auto dims = p.local_os_dims(e);
      const auto [it, fresh] = seen.emplace(hat(e), dims);
      if (!fresh) CHECK(it->second == dims);
    }
  }
  for (auto f : {Family::B, Family::C, Family::D})
    for (auto space : {kToric, kElliptic}) {
      const auto p = LayerPoset::build(f, space, 3);
      const auto h = p.require_index(lp(3, "{1,2} {1-,2-} {3} {3-}"));
      const auto hp = p.require_index(lp(3, "{1,2-} {1-,2} {3} {3-}"));
      std::size_t both = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p.rank_of(i) == 2 && p.leq(h, i) && p.leq(hp, i)) ++both;
      CHECK(both == static_cast<std::size_t>(space.torsion_order()));
    }
}

TEST_CASE("coordinate layers") {
  const auto h = coordinate_layer(lp(3, "{1,2} {1-,2-} {3} {3-}"));
  CHECK(h.dimension() == 2);
  CHECK(h.to_string().find("x1=x2") != std::string::npos);
  const auto pt = coordinate_layer(lp(4, "{1,1-,2,2-,3,3-}_a {4} {4-}"));
  CHECK(pt.dimension() == 1);
  REQUIRE(pt.constants.size() == 1);
  CHECK(pt.constants[0].indices == std::vector<int>{0, 1, 2});
  CHECK(coordinate_layer(LabelledPartition::bottom(3)).dimension() == 3);
  for (const auto& e : enumerate(Family::C, kElliptic, 3)) CHECK(coordinate_layer(e).dimension() == 3 - e.rank());
}

TEST_CASE("exports are deterministic") {
  const auto one = LayerPoset::build(Family::A, kLinear, 1);
  CHECK(one.to_dot().find("n0 [label=") != std::string::npos);
  const auto p = LayerPoset::build(Family::C, kToric, 2);
  const auto dot = p.to_dot();
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 18);
  CHECK(dot == LayerPoset::build(Family::C, kToric, 2).to_dot());
  CHECK(p.to_json().dump() == LayerPoset::build(Family::C, kToric, 2).to_json().dump());
  const auto j = p.to_json();
  CHECK(j["elements"].size() == 11);
  CHECK(j["bottom"] == p.bottom());
}
