#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bockmas/group_ring.hpp"
#include "bockmas/massey.hpp"

using namespace bockmas;

namespace {

UgmaElem random_elem(const UgmaShape& S, SplitMix64& rng) {
  UgmaElem x = ugma_identity(S);
  for (size_t i = 0; i < S.size; ++i)
    for (size_t j = i + 1; j < S.size; ++j)
      for (auto& v : x.e[i][j]) v = static_cast<uint32_t>(rng.below(S.R.q));
  return x;
}

}  // namespace

TEST_CASE("ugma arithmetic") {
  UgmaShape S{ModRing(3, 2), 4, 2, 2};
  SplitMix64 rng(3);
  UgmaElem id = ugma_identity(S);
  for (int t = 0; t < 25; ++t) {
    UgmaElem x = random_elem(S, rng), y = random_elem(S, rng), z = random_elem(S, rng);
    CHECK(ugma_equal(S, ugma_mul(S, x, id), x, false));
    CHECK(ugma_equal(S, ugma_mul(S, id, x), x, false));
    CHECK(ugma_equal(S, ugma_mul(S, x, ugma_inverse(S, x)), id, false));
    CHECK(ugma_equal(S, ugma_mul(S, ugma_inverse(S, x), x), id, false));
    CHECK(ugma_equal(S, ugma_mul(S, ugma_mul(S, x, y), z), ugma_mul(S, x, ugma_mul(S, y, z)),
                     false));
  }
}

TEST_CASE("binomial homomorphisms and the modulus guard") {
  auto G = make_group(FiniteGroup::cyclic(9));
  Character chi = Character::from_generator_values(G, ModRing(3, 2), {1});
  UnipotentHom U = UnipotentHom::binomial(chi, ModRing(3, 1), 3);
  U.validate();
  for (uint32_t g = 0; g < 9; ++g) {
    CHECK(U.mat[g].at(0, 1) == chi(g) % 3);
    CHECK(U.mat[g].at(1, 2) == chi(g) % 3);
  }
  // size 4 over F_3 with a mod-3 character breaks binom(-, 3)
  auto C3 = make_group(FiniteGroup::cyclic(3));
  Character c3 = Character::from_generator_values(C3, ModRing(3, 1), {1});
  CHECK_THROWS_AS(UnipotentHom::binomial(c3, ModRing(3, 1), 4), hypothesis_error);
  // but a mod-9 character on the same group size is fine
  CHECK_NOTHROW(UnipotentHom::binomial(chi, ModRing(3, 1), 4).validate());
}

TEST_CASE("heisenberg coefficient homomorphism") {
  for (uint32_t m : {3u, 9u}) {
    auto H = make_group(FiniteGroup::heisenberg(m));
    UnipotentHom U = UnipotentHom::heisenberg_quotient(H, ModRing(3, 1));
    // generators map to the elementary coordinates
    CHECK(U.mat[H->gens[0]].at(0, 1) == 1);
    CHECK(U.mat[H->gens[0]].at(1, 2) == 0);
    CHECK(U.mat[H->gens[1]].at(0, 1) == 0);
    CHECK(U.mat[H->gens[1]].at(1, 2) == 1);
    uint32_t Z = H->mul(H->mul(H->gens[0], H->gens[1]),
                        H->inverse(H->mul(H->gens[1], H->gens[0])));
    CHECK(U.mat[Z].at(0, 2) == 1);
    CHECK(U.mat[Z].at(0, 1) == 0);
  }
}

TEST_CASE("star module and its corner sequence") {
  auto G = make_group(FiniteGroup::abelian({3, 3}));
  ModRing R(3, 1);
  Character chi = Character::from_generator_values(G, R, {1, 0});
  Character psi = Character::from_generator_values(G, R, {0, 1});
  UnipotentHom phi = UnipotentHom::binomial(chi, R, 2);
  UnipotentHom theta = UnipotentHom::binomial(psi, R, 2);
  GMod T = trivial_module(R, G, 1);
  GModSES S = star_ses(phi, theta, T);
  S.mid.validate();
  S.quo.validate();
  S.validate();
  CHECK(S.mid.dim == 4);
  CHECK(S.quo.dim == 3);
  // the star action is not the trivial action
  bool all_trivial = true;
  for (uint32_t g = 0; g < G->n && all_trivial; ++g)
    all_trivial = S.mid.act[g] == ModMatrix::identity(R, 4);
  CHECK_FALSE(all_trivial);
}

TEST_CASE("correspondence between cocycles and proper systems") {
  auto G = make_group(FiniteGroup::abelian({3, 3}));
  ModRing R(3, 1);
  Character chi = Character::from_generator_values(G, R, {1, 0});
  Character psi = Character::from_generator_values(G, R, {0, 1});
  UnipotentHom phi = UnipotentHom::binomial(chi, R, 2);
  UnipotentHom theta = UnipotentHom::binomial(psi, R, 2);

  // nontrivial T exercises the entrywise action
  GroupRing ring{R, G};
  Filtration F = augmentation_powers(ring, 2);
  QuotientCoords Q = quotient_coords(ring, F.powers[2], truncation_reps(F, 2, "bicyclic"));
  GMod T = quotient_module(GroupHom::identity(G), Q);

  GModSES S = star_ses(phi, theta, T);
  S.validate();
  Z1Space Zq = z1_space(S.quo);
  SplitMix64 rng(17);
  for (int t = 0; t < 8; ++t) {
    ModMatrix kp = Zq.evaluate(Zq.random_cocycle(rng));
    DefiningSystem D = system_from_cocycle(phi, theta, T, kp);
    D.validate();
    CHECK(cocycle_from_system(phi, theta, D) == kp);
    ModMatrix F2 = D.massey_cocycle();
    CHECK(is_cocycle2(T, F2));
  }
}

TEST_CASE("connecting map equals the attached Massey product") {
  SplitMix64 rng(29);
  // bicyclic shape a = b = 1
  {
    auto G = make_group(FiniteGroup::abelian({3, 3}));
    ModRing R(3, 1);
    Character chi = Character::from_generator_values(G, R, {1, 0});
    Character psi = Character::from_generator_values(G, R, {0, 1});
    UnipotentHom phi = UnipotentHom::binomial(chi, R, 2);
    UnipotentHom theta = UnipotentHom::binomial(psi, R, 2);
    GMod T = trivial_module(R, G, 1);
    GModSES S = star_ses(phi, theta, T);
    Z1Space Zq = z1_space(S.quo);
    for (int t = 0; t < 10; ++t) {
      ModMatrix kp = Zq.evaluate(Zq.random_cocycle(rng));
      ModMatrix conn = connecting2(S, kp);
      DefiningSystem D = system_from_cocycle(phi, theta, T, kp);
      D.validate();
      ModMatrix F2 = D.massey_cocycle();
      CHECK(is_cocycle2(T, conn));
      CHECK(cohomologous2(T, conn, F2));
    }
  }
  // cyclic shape a = 2, b = 0 over Z/9
  {
    auto G = make_group(FiniteGroup::cyclic(9));
    ModRing R(3, 1);
    Character chi = Character::from_generator_values(G, ModRing(3, 2), {1});
    UnipotentHom phi = UnipotentHom::binomial(chi, R, 3);
    UnipotentHom theta{G, R, 1, std::vector<ModMatrix>(G->n, ModMatrix::identity(R, 1))};
    GMod T = trivial_module(R, G, 1);
    GModSES S = star_ses(phi, theta, T);
    Z1Space Zq = z1_space(S.quo);
    for (int t = 0; t < 10; ++t) {
      ModMatrix kp = Zq.evaluate(Zq.random_cocycle(rng));
      ModMatrix conn = connecting2(S, kp);
      DefiningSystem D = system_from_cocycle(phi, theta, T, kp);
      D.validate();
      CHECK(cohomologous2(T, conn, D.massey_cocycle()));
    }
  }
}

TEST_CASE("evaluation map on the cyclic tower") {
  auto H = make_group(FiniteGroup::cyclic(3));
  ModRing R(3, 1);
  GroupRing ring{R, H};
  Filtration F = augmentation_powers(ring, 2);
  GMod T = trivial_module(R, H, 1);
  BocksteinSequence B = bockstein_ses(T, GroupHom::identity(H), F, 1, "cyclic");
  Character chi = Character::from_generator_values(H, R, {1});
  UnipotentHom phi = UnipotentHom::binomial(chi, R, 2);
  UnipotentHom theta{H, R, 1, std::vector<ModMatrix>(H->n, ModMatrix::identity(R, 1))};
  GModSES S = star_ses(phi, theta, T);
  PMap pm = p_map(phi, theta, T, B, S);
  // the single degree-1 monomial evaluates to the corner with coefficient 1
  CHECK(pm.Psub.rows == 1);
  CHECK(pm.Psub.at(0, 0) == 1);
}

TEST_CASE("evaluation matrices on the bicyclic tower") {
  auto H = make_group(FiniteGroup::abelian({3, 3}));
  ModRing R(3, 1);
  GroupRing ring{R, H};
  Filtration F = augmentation_powers(ring, 3);
  GMod T = trivial_module(R, H, 1);
  BocksteinSequence B = bockstein_ses(T, GroupHom::identity(H), F, 2, "bicyclic");
  Character chi = Character::from_generator_values(H, R, {1, 0});
  Character psi = Character::from_generator_values(H, R, {0, 1});
  REQUIRE(B.graded.labels == std::vector<std::string>{"x^2", "xy", "y^2"});

  // slot x^2: phi = binmat(chi, 3), theta trivial; corner row is (1, 0, 0)
  {
    UnipotentHom phi = UnipotentHom::binomial(chi, R, 3);
    UnipotentHom theta{H, R, 1, std::vector<ModMatrix>(H->n, ModMatrix::identity(R, 1))};
    GModSES S = star_ses(phi, theta, T);
    PMap pm = p_map(phi, theta, T, B, S);
    CHECK(pm.Psub.at(0, 0) == 1);
    CHECK(pm.Psub.at(1, 0) == 0);
    CHECK(pm.Psub.at(2, 0) == 0);
  }
  // slot xy: phi = binmat(chi, 2), theta = binmat(psi, 2); corner row (0, -1, 0)
  {
    UnipotentHom phi = UnipotentHom::binomial(chi, R, 2);
    UnipotentHom theta = UnipotentHom::binomial(psi, R, 2);
    GModSES S = star_ses(phi, theta, T);
    PMap pm = p_map(phi, theta, T, B, S);
    CHECK(pm.Psub.at(0, 0) == 0);
    CHECK(pm.Psub.at(1, 0) == R.neg(1));
    CHECK(pm.Psub.at(2, 0) == 0);
  }
}

TEST_CASE("evaluation of the central slot on the Heisenberg tower") {
  auto H = make_group(FiniteGroup::heisenberg(3));
  ModRing R(3, 1);
  GroupRing ring{R, H};
  Filtration F = augmentation_powers(ring, 3);
  GMod T = trivial_module(R, H, 1);
  BocksteinSequence B = bockstein_ses(T, GroupHom::identity(H), F, 2, "heisenberg");
  REQUIRE(B.graded.labels == std::vector<std::string>{"x^2", "y^2", "yx", "z"});

  UnipotentHom phi = UnipotentHom::heisenberg_quotient(H, R);
  UnipotentHom theta{H, R, 1, std::vector<ModMatrix>(H->n, ModMatrix::identity(R, 1))};
  GModSES S = star_ses(phi, theta, T);
  PMap pm = p_map(phi, theta, T, B, S);
  // p_z kills x^2, y^2, yx and sends z to the corner with coefficient 1
  CHECK(pm.Psub.at(0, 0) == 0);
  CHECK(pm.Psub.at(1, 0) == 0);
  CHECK(pm.Psub.at(2, 0) == 0);
  CHECK(pm.Psub.at(3, 0) == 1);
}
