#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bockmas/modring.hpp"

namespace bockmas {

// Finite group stored by full multiplication table.  Element 0 is the
// identity; for constructed groups the element order is BFS from the
// generator list, which fixes every downstream basis deterministically.
struct FiniteGroup {
  size_t n = 1;
  std::vector<uint32_t> table;  // table[g*n + h] = g*h
  std::vector<uint32_t> inv;
  std::vector<uint32_t> gens;
  // bfs_parent[g] = (g', i) with g = g' * gens[i]; identity maps to itself.
  std::vector<std::pair<uint32_t, uint32_t>> bfs_parent;
  std::vector<uint32_t> bfs_order;  // discovery order; first entry is 0
  std::string name;

  uint32_t mul(uint32_t g, uint32_t h) const { return table[size_t(g) * n + h]; }
  uint32_t inverse(uint32_t g) const { return inv[g]; }
  uint32_t pow(uint32_t g, uint64_t e) const;
  uint32_t conj(uint32_t g, uint32_t h) const;  // g h g^-1
  size_t order_of(uint32_t g) const;
  bool is_abelian() const;
  void check_axioms() const;  // exhaustive associativity; cost n^3

  static FiniteGroup cyclic(uint32_t m);
  static FiniteGroup abelian(const std::vector<uint32_t>& orders);
  static FiniteGroup heisenberg(uint32_t m);  // upper unitriangular 3x3 over Z/m
  static FiniteGroup from_table(const std::vector<std::vector<uint32_t>>& t,
                                std::vector<uint32_t> gens_in = {});
  static FiniteGroup from_permutations(uint32_t npoints,
                                       const std::vector<std::vector<uint32_t>>& perms);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

struct GroupHom {
  GroupPtr dom;
  GroupPtr cod;
  std::vector<uint32_t> image;  // one value per domain element

  uint32_t operator()(uint32_t g) const { return image[g]; }
  void validate() const;
  bool is_surjective() const;
  std::vector<uint32_t> kernel() const;

  static GroupHom identity(GroupPtr G);
  static GroupHom from_generator_images(GroupPtr dom, GroupPtr cod,
                                        const std::vector<uint32_t>& gen_images);
};

// Additive character G -> Z/p^t.  The character modulus is independent of the
// coefficient modulus used elsewhere.
struct Character {
  GroupPtr G;
  ModRing A;  // Z/p^t
  std::vector<uint32_t> value;

  uint32_t operator()(uint32_t g) const { return value[g]; }
  void validate() const;
  bool is_zero() const;
  Character plus(const Character& o) const;
  Character scaled(uint32_t c) const;

  static Character zero(GroupPtr G, ModRing A);
  static Character from_generator_values(GroupPtr G, ModRing A,
                                         const std::vector<uint32_t>& gen_values);
};

struct Coimage {
  GroupPtr H;
  GroupHom projection;  // G ->> H
};

// H = G / (intersection of character kernels), with the quotient map.
Coimage coimage(GroupPtr G, const std::vector<Character>& chars);

struct AbelianDecomposition {
  std::vector<uint32_t> gens;        // h_1, ..., h_c
  std::vector<uint32_t> exponents;   // orders p^{t_i}, t_1 <= ... <= t_c
  std::vector<Character> chars;      // coordinate characters, chars[i] mod p^{t_i}
  uint32_t p = 0;
};

// Requires H to be an abelian p-group; every g equals prod h_i^{chars[i](g)}.
AbelianDecomposition decompose_abelian(GroupPtr H);

}  // namespace bockmas
