#include <doctest.h>

#include "arrstab/elliptic.hpp"
#include "arrstab/layer_poset.hpp"
#include "arrstab/orlik_solomon.hpp"
#include "arrstab/spectral.hpp"
#include "arrstab/stability.hpp"
#include "oracles.hpp"

using namespace arrstab;
using oracle::lp;

namespace {

const GroundSpace kLinear{SpaceKind::Linear};
const GroundSpace kToric{SpaceKind::Toric};
const GroundSpace kElliptic{SpaceKind::Elliptic};

Integer binom2(int n) { return Integer(n * (n - 1) / 2); }

Integer multiplicity(const Decomposition& d, const Irrep& irr) {
  for (const auto& [i, m] : d)
    if (i == irr) return m;
  return 0;
}

}  // namespace

TEST_CASE("ambient traces") {
  const auto bottom = LabelledPartition::bottom(3);
  CHECK(ambient_trace(SignedPermutation::identity(3), bottom, 1, kElliptic) == 6);
  CHECK(ambient_trace(SignedPermutation::sign_flip(1, 0), LabelledPartition::bottom(1), 1, kToric) == -1);
  for (const auto& w : all_elements(2, true)) {
    CHECK(ambient_trace(w, LabelledPartition::bottom(2), 0, kLinear) == 1);
    CHECK(ambient_trace(w, LabelledPartition::bottom(2), 1, kLinear) == 0);
  }
  CHECK_THROWS_AS(ambient_trace(SignedPermutation::transposition(2, 0, 1), lp(2, "{1,1-}_e {2} {2-}"), 1, kToric),
                  DomainError);
}

TEST_CASE("local Orlik-Solomon traces") {
  const auto h = lp(2, "{1,2} {1-,2-}");
  CHECK(local_os_trace(SignedPermutation::transposition(2, 0, 1), h, Family::C, kToric) == 1);
  const auto top = lp(2, "{1,1-,2,2-}_e");
  CHECK(local_os_trace(SignedPermutation::identity(2), top, Family::C, kToric) == 3);
  CHECK(local_os_trace(SignedPermutation::transposition(2, 0, 1), top, Family::C, kToric) == 1);
  CHECK_THROWS_AS(local_os_trace(SignedPermutation::transposition(2, 0, 1), lp(2, "{1,1-}_e {2} {2-}"), Family::C, kToric),
                  DomainError);
}

TEST_CASE("rank-two traces equal fixed atoms minus one") {
  // The top Orlik-Solomon piece of m concurrent lines is the augmentation
  // kernel of the permutation module on the lines.
  for (auto f : {Family::A, Family::B, Family::C, Family::D})
    for (auto space : {kLinear, kToric, kElliptic}) {
      const int n = f == Family::A ? 4 : 3;
      const auto poset = LayerPoset::build(f, space, n, 2);
      const auto group = all_elements(n, signed_group(f));
      for (std::size_t i = 0; i < poset.size(); ++i) {
        if (poset.rank_of(i) != 2) continue;
        const auto& p = poset.element(i);
        const LocalOrlikSolomon os(p, f, space);
        CHECK(Integer(static_cast<long>(os.dimension())) == poset.local_os_dims(p)[2]);
        for (const auto& w : group) {
          if (!(act(w, p) == p)) continue;
          long fixed = 0;
          for (const auto& a : os.atoms()) fixed += act(w, a) == a;
          CHECK(os.trace(w) == fixed - 1);
        }
      }
    }
}

TEST_CASE("E2 characters and dimensions") {
  const auto e10 = decompose(e2_character(1, 0, 2, Family::B, kToric));
  REQUIRE(e10.size() == 1);
  CHECK(e10[0].first == Irrep{{1}, {1}});
  for (int n = 2; n <= 5; ++n) {
    CHECK(e2_character(0, 1, n, Family::C, kToric).degree() == 2 * binom2(n) + 2 * n);
    CHECK(e2_character(0, 1, n, Family::A, kLinear).degree() == binom2(n));
  }
  for (auto f : {Family::A, Family::B, Family::C, Family::D})
    for (auto space : {kLinear, kToric, kElliptic})
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
          const int n = 4;
          const auto chi = e2_character(p, q, n, f, space);
          CHECK(chi.degree() == e2_dimension(p, q, n, f, space));
          CHECK_NOTHROW(decompose(chi));
        }
}

TEST_CASE("induced pieces") {
  const auto pieces = e2_pieces(0, 1, 2, Family::B, kToric);
  REQUIRE(pieces.size() == 2);
  std::vector<int> ks{pieces[0].k, pieces[1].k};
  std::sort(ks.begin(), ks.end());
  CHECK(ks == std::vector<int>{1, 2});
  for (const auto& piece : pieces) {
    CHECK(piece.induced.degree() == 2);
    if (piece.k == 1) CHECK(piece.lambda.to_string() == "(1_e)");
    if (piece.k == 2) CHECK(piece.lambda.to_string() == "(1)");
  }

  for (int n = 1; n <= 4; ++n) {
    const auto one = e2_pieces(1, 0, n, Family::C, kElliptic);
    REQUIRE(one.size() == 1);
    CHECK(one[0].k == 1);
    CHECK(one[0].r == 0);
    CHECK(one[0].alpha == Partition{1});
    CHECK(one[0].lambda.to_string() == "()");
    const auto zero = e2_pieces(0, 0, n, Family::C, kElliptic);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].k == 0);
    CHECK(zero[0].induced == trivial_character(GroupKind::W, n));
  }

  for (auto f : {Family::A, Family::B, Family::D})
    for (auto space : {kLinear, kToric, kElliptic})
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; p + q <= 2; ++q)
          for (int n = std::max(1, p + 2 * q); n <= 4; ++n) {
            if (f == Family::D && n < 2) continue;
            const auto cell = e2_cell(p, q, n, f, space);
            CHECK_MESSAGE(cell.pieces_match, to_string(f), " ", to_string(space.kind), " p=", p, " q=", q, " n=", n);
            for (const auto& piece : cell.pieces) CHECK(piece.k <= p + 2 * q);
          }
}

TEST_CASE("Betti numbers") {
  CHECK(betti(1, 5, Family::A, kLinear).dim == 10);
  CHECK(betti(1, 3, Family::C, kToric).dim == 15);
  CHECK(betti(2, 4, Family::A, kLinear).dim == 11);
  for (auto f : {Family::A, Family::B, Family::C, Family::D}) {
    const int n = f == Family::A ? 4 : 3;
    const auto pi = oracle::linear_poincare(oracle::roots(f, n), n);
    for (int i = 0; i <= n; ++i) CHECK(betti(i, n, f, kLinear).dim == pi[static_cast<std::size_t>(i)]);
  }
  CHECK_THROWS_AS(betti(1, 3, Family::A, kElliptic), UnsupportedError);
  CHECK_THROWS_AS(cohomology(2, 3, Family::B, kElliptic), UnsupportedError);
}

TEST_CASE("Euler characteristic agrees with the layer poset") {
  for (auto f : {Family::A, Family::B, Family::C, Family::D})
    for (auto space : {kLinear, kToric})
      for (int n = 2; n <= 4; ++n) {
        Integer alternating = 0;
        for (int i = 0; i <= n; ++i) alternating += (i % 2 ? -1 : 1) * betti(i, n, f, space).dim;
        const auto poset = LayerPoset::build(f, space, n);
        Integer expected = 0;
        for (std::size_t k = 0; k < poset.size(); ++k) {
          const int dim = n - poset.rank_of(k);
          const int euler = space.kind == SpaceKind::Linear ? 1 : (dim == 0 ? 1 : 0);
          expected += poset.mobius_from_bottom(k) * euler;
        }
        CHECK(alternating == expected);
      }
}

TEST_CASE("the degree-one elliptic differential") {
  for (auto f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 2; n <= 5; ++n) {
      const auto d = elliptic_d2_degree1(n, f);
      CHECK(d.matrix.rows() == static_cast<std::size_t>(n * (n - 1) + n * n));
      for (const auto& g : generators(n, signed_group(f)))
        CHECK(d.matrix * generator_action(g, d.generators) == h2_action(g, n) * d.matrix);
      const auto ker = kernel_character(d);
      CHECK(ker.degree() == Rational(static_cast<long>(d.nullity())));
      CHECK_NOTHROW(decompose(ker));
    }
  const auto d4 = elliptic_d2_degree1(4, Family::D);
  CHECK(d4.generators.size() == 12);
  CHECK(d4.rank == 10);
  CHECK(elliptic_h1(4, Family::A).dim == 8);
  CHECK(elliptic_h1(4, Family::B).dim == 14);
  CHECK(elliptic_h1(3, Family::C).dim == 18);
  CHECK(elliptic_h1(4, Family::D).dim == 10);
  CHECK(elliptic_h1(3, Family::D).dim == 6);
  CHECK(elliptic_h1(2, Family::D).dim == 4);
}

TEST_CASE("type A elliptic injectivity") {
  const auto c2 = typeA_elliptic_injectivity(2, 1);
  CHECK(c2.cols == 1);
  CHECK(c2.rows == 6);
  CHECK(c2.injective);
  CHECK(typeA_elliptic_injectivity(3, 1).injective);
  CHECK(typeA_elliptic_injectivity(4, 2).injective);
  CHECK_THROWS_AS(typeA_elliptic_injectivity(3, 3), UsageError);
  // In degree one the check agrees with the full equivariant differential.
  for (int n = 2; n <= 5; ++n) CHECK(typeA_elliptic_injectivity(n, 1).rank == elliptic_d2_degree1(n, Family::A).rank);
}

TEST_CASE("interpolation") {
  const std::vector<Rational> xs{1, 2, 3, 4}, ys{3, 8, 15, 24};  // n^2 + 2n
  const auto poly = interpolate(xs, ys);
  CHECK(poly == std::vector<Rational>{0, 2, 1, 0});
}

TEST_CASE("stability scans") {
  const auto lin = stability_scan(1, Family::A, kLinear, 2, 8);
  CHECK(lin.onset == 4);
  for (const auto& name : {Irrep{}, Irrep{{1}, {}}, Irrep{{2}, {}}}) {
    const auto& seq = lin.multiplicities.at(name);
    for (int n = 4; n <= 8; ++n) CHECK(seq[static_cast<std::size_t>(n - 2)] == 1);
  }
  const auto tor = stability_scan(1, Family::A, kToric, 2, 8);
  CHECK(tor.onset == 4);
  CHECK(tor.multiplicities.at(Irrep{}).back() == 2);
  CHECK(tor.multiplicities.at(Irrep{{1}, {}}).back() == 2);
  CHECK(tor.multiplicities.at(Irrep{{2}, {}}).back() == 1);
  const auto ell = stability_scan(1, Family::A, kElliptic, 2, 8);
  CHECK(ell.onset == 2);
  CHECK(ell.predicted_bound == 2);
  const auto c = stability_scan(1, Family::C, kToric, 2, 9);
  CHECK(c.polynomial_degree == 2);
  CHECK(c.dimension_polynomial[0] == 0);
  CHECK(c.dimension_polynomial[1] == 2);
  CHECK(c.dimension_polynomial[2] == 1);
  CHECK(c.polynomial_determined);
  const auto deg2 = stability_scan(2, Family::A, kLinear, 2, 8);
  CHECK(deg2.onset == 7);
  CHECK(deg2.certified);
  CHECK_FALSE(deg2.polynomial_determined);
  CHECK(deg2.dimension_polynomial.empty());
  const auto narrow = stability_scan(1, Family::A, kToric, 3, 4);
  CHECK_FALSE(narrow.certified);
  CHECK(narrow.summary() == "inconclusive ≥ 4");
  CHECK_THROWS_AS(stability_scan(1, Family::A, kToric, 1, 1), UsageError);
  CHECK_THROWS_AS(stability_scan(2, Family::A, kElliptic, 2, 5), UnsupportedError);
  const auto h = cohomology(1, 6, Family::A, kToric);
  CHECK(multiplicity(h.decomposition, Irrep{{6}, {}}) == 2);
}
