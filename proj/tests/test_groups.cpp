#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "bockmas/errors.hpp"
#include "bockmas/groups.hpp"

using namespace bockmas;

TEST_CASE("cyclic and abelian constructors") {
  CHECK_THROWS_AS(FiniteGroup::cyclic(6), input_error);
  CHECK_THROWS_AS(FiniteGroup::abelian({3, 6}), input_error);
  FiniteGroup C3 = FiniteGroup::cyclic(3);
  CHECK(C3.n == 3);
  C3.check_axioms();
  FiniteGroup C9 = FiniteGroup::cyclic(9);
  CHECK(C9.n == 9);
  CHECK(C9.order_of(1) == 9);  // BFS labels the generator as element 1
  C9.check_axioms();
  FiniteGroup A33 = FiniteGroup::abelian({3, 3});
  CHECK(A33.n == 9);
  CHECK(A33.gens.size() == 2);
  CHECK(A33.is_abelian());
  A33.check_axioms();
  FiniteGroup T = FiniteGroup::cyclic(1);
  CHECK(T.n == 1);
  T.check_axioms();
}

TEST_CASE("heisenberg groups") {
  FiniteGroup H3 = FiniteGroup::heisenberg(3);
  CHECK(H3.n == 27);
  CHECK(!H3.is_abelian());
  H3.check_axioms();
  FiniteGroup H2 = FiniteGroup::heisenberg(2);
  CHECK(H2.n == 8);
  H2.check_axioms();
  // order multiset of the dihedral group of order 8: {1, 2^5, 4^2}
  std::map<size_t, int> orders;
  for (size_t g = 0; g < 8; ++g) orders[H2.order_of(static_cast<uint32_t>(g))]++;
  CHECK(orders == std::map<size_t, int>{{1, 1}, {2, 5}, {4, 2}});
  // commutator of the two canonical generators is central of order p
  for (auto* G : {&H3, &H2}) {
    uint32_t X = G->gens[0], Y = G->gens[1];
    uint32_t c = G->mul(G->mul(X, Y), G->inv[G->mul(Y, X)]);
    CHECK(c != 0);
    for (size_t g = 0; g < G->n; ++g)
      CHECK(G->mul(static_cast<uint32_t>(g), c) == G->mul(c, static_cast<uint32_t>(g)));
  }
  CHECK(FiniteGroup::heisenberg(9).n == 729);
}

TEST_CASE("table and permutation constructors") {
  FiniteGroup H3 = FiniteGroup::heisenberg(3);
  std::vector<std::vector<uint32_t>> t(27, std::vector<uint32_t>(27));
  for (size_t i = 0; i < 27; ++i)
    for (size_t j = 0; j < 27; ++j)
      t[i][j] = H3.mul(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
  FiniteGroup G = FiniteGroup::from_table(t);
  G.check_axioms();
  CHECK(G.n == 27);
  CHECK(G.bfs_order.size() == 27);
  // broken table: transpose one entry pair to kill associativity/latin property
  std::swap(t[1][1], t[1][2]);
  CHECK_THROWS_AS(FiniteGroup::from_table(t), input_error);

  FiniteGroup S3 = FiniteGroup::from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(S3.n == 6);
  S3.check_axioms();
  FiniteGroup C4 = FiniteGroup::from_permutations(4, {{1, 2, 3, 0}});
  CHECK(C4.n == 4);
  CHECK(C4.order_of(1) == 4);
  CHECK_THROWS_AS(FiniteGroup::from_permutations(3, {{0, 0, 1}}), input_error);
}

TEST_CASE("group homomorphisms") {
  GroupPtr G9 = make_group(FiniteGroup::cyclic(9));
  GroupPtr G3 = make_group(FiniteGroup::cyclic(3));
  GroupHom pi = GroupHom::from_generator_images(G9, G3, {1});
  CHECK(pi.is_surjective());
  CHECK(pi.kernel().size() == 3);
  // no injective hom Z/3 -> Z/9 sending the generator to an order-9 element
  CHECK_THROWS_AS(GroupHom::from_generator_images(G3, G9, {1}), input_error);
  GroupHom id = GroupHom::identity(G9);
  id.validate();
  CHECK(id.kernel().size() == 1);
}

TEST_CASE("characters") {
  GroupPtr A = make_group(FiniteGroup::abelian({3, 3}));
  Character chi = Character::from_generator_values(A, ModRing(3, 1), {1, 0});
  Character psi = Character::from_generator_values(A, ModRing(3, 1), {0, 1});
  chi.validate();
  psi.validate();
  CHECK(!chi.is_zero());
  Character sum = chi.plus(psi);
  sum.validate();
  CHECK(sum.value[A->mul(A->gens[0], A->gens[1])] == 2);
  CHECK(chi.scaled(3).is_zero());

  GroupPtr H = make_group(FiniteGroup::heisenberg(3));
  Character c = Character::from_generator_values(H, ModRing(3, 1), {1, 2});
  c.validate();
  // commutators die in every character
  uint32_t X = H->gens[0], Y = H->gens[1];
  uint32_t z = H->mul(H->mul(X, Y), H->inv[H->mul(Y, X)]);
  CHECK(c.value[z] == 0);
  // characters to Z/9 on an exponent-3 group cannot take unit values
  CHECK_THROWS_AS(Character::from_generator_values(H, ModRing(3, 2), {1, 0}), input_error);
}

TEST_CASE("coimage") {
  GroupPtr A = make_group(FiniteGroup::abelian({3, 3}));
  Character zero = Character::zero(A, ModRing(3, 1));
  Coimage triv = coimage(A, {zero});
  CHECK(triv.H->n == 1);
  Character chi = Character::from_generator_values(A, ModRing(3, 1), {1, 0});
  Character psi = Character::from_generator_values(A, ModRing(3, 1), {0, 1});
  Coimage full = coimage(A, {chi, psi});
  CHECK(full.H->n == 9);
  CHECK(full.projection.kernel().size() == 1);
  Coimage line = coimage(A, {chi});
  CHECK(line.H->n == 3);

  GroupPtr H = make_group(FiniteGroup::heisenberg(3));
  Character hc = Character::from_generator_values(H, ModRing(3, 1), {1, 0});
  Character hp = Character::from_generator_values(H, ModRing(3, 1), {0, 1});
  Coimage ab = coimage(H, {hc, hp});
  CHECK(ab.H->n == 9);
  CHECK(ab.H->is_abelian());
  // kernel is the center: the three central elements
  auto ker = ab.projection.kernel();
  CHECK(ker.size() == 3);
  for (uint32_t x : ker)
    for (size_t g = 0; g < H->n; ++g)
      CHECK(H->mul(static_cast<uint32_t>(g), x) == H->mul(x, static_cast<uint32_t>(g)));
}

TEST_CASE("abelian decomposition") {
  {
    auto d = decompose_abelian(make_group(FiniteGroup::cyclic(9)));
    CHECK(d.exponents == std::vector<uint32_t>{2});
    CHECK(d.chars.size() == 1);
  }
  {
    auto d = decompose_abelian(make_group(FiniteGroup::abelian({3, 9})));
    CHECK(d.exponents == std::vector<uint32_t>{1, 2});
  }
  {
    auto d = decompose_abelian(make_group(FiniteGroup::abelian({9, 3})));
    CHECK(d.exponents == std::vector<uint32_t>{1, 2});
  }
  {
    auto d = decompose_abelian(make_group(FiniteGroup::abelian({2, 4, 8})));
    CHECK(d.exponents == std::vector<uint32_t>{1, 2, 3});
    CHECK(d.p == 2);
  }
  {
    // shuffled labels: relabel the (Z/3)^2 table by a permutation fixing 0
    FiniteGroup A = FiniteGroup::abelian({3, 3});
    std::vector<uint32_t> sigma{0, 4, 7, 2, 8, 1, 5, 3, 6};
    std::vector<std::vector<uint32_t>> t(9, std::vector<uint32_t>(9));
    for (size_t i = 0; i < 9; ++i)
      for (size_t j = 0; j < 9; ++j)
        t[sigma[i]][sigma[j]] = sigma[A.mul(static_cast<uint32_t>(i), static_cast<uint32_t>(j))];
    auto d = decompose_abelian(make_group(FiniteGroup::from_table(t)));
    CHECK(d.exponents == std::vector<uint32_t>{1, 1});
  }
  CHECK_THROWS_AS(decompose_abelian(make_group(FiniteGroup::heisenberg(3))), input_error);
  CHECK_THROWS_AS(
      decompose_abelian(make_group(FiniteGroup::from_permutations(6, {{1, 2, 3, 4, 5, 0}}))),
      input_error);
  // trivial group decomposes to nothing
  auto d0 = decompose_abelian(make_group(FiniteGroup::cyclic(1)));
  CHECK(d0.gens.empty());
}

TEST_CASE("large group axiom check") {
  FiniteGroup H9 = FiniteGroup::heisenberg(9);
  H9.check_axioms();
  CHECK(H9.order_of(H9.gens[0]) == 9);
}
