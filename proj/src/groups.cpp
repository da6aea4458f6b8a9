#include "bockmas/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bockmas/errors.hpp"
#include "bockmas/fpmodule.hpp"
#include "bockmas/howell.hpp"

namespace bockmas {

namespace {

constexpr size_t kTableCap = 1024;

// m = p^t with t >= 1, else input error.
std::pair<uint32_t, uint32_t> prime_power(uint32_t m) {
  require_input(m >= 2, "expected a prime power >= 2");
  uint32_t p = 0;
  for (uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = m;
  uint32_t t = 0, r = m;
  while (r % p == 0) {
    r /= p;
    ++t;
  }
  require_input(r == 1, "expected a prime power");
  return {p, t};
}

using Elem = std::vector<uint32_t>;

// BFS closure from the identity under right multiplication by generators.
// Discovery order becomes the element numbering, so element 0 is the identity.
FiniteGroup build_group(const std::vector<Elem>& gen_elems, const Elem& id,
                        const std::function<Elem(const Elem&, const Elem&)>& mul,
                        std::string name, bool keep_trivial_gens = false) {
  std::map<Elem, uint32_t> index;
  std::vector<Elem> elems;
  std::vector<std::pair<uint32_t, uint32_t>> parent;
  index[id] = 0;
  elems.push_back(id);
  parent.push_back({0, 0});
  for (size_t head = 0; head < elems.size(); ++head) {
    Elem g = elems[head];
    for (size_t i = 0; i < gen_elems.size(); ++i) {
      Elem h = mul(g, gen_elems[i]);
      if (index.count(h)) continue;
      require_input(elems.size() < kTableCap, "group order exceeds the 1024-element cap");
      index[h] = static_cast<uint32_t>(elems.size());
      elems.push_back(std::move(h));
      parent.push_back({static_cast<uint32_t>(head), static_cast<uint32_t>(i)});
    }
  }
  size_t n = elems.size();
  FiniteGroup G;
  G.n = n;
  G.name = std::move(name);
  G.bfs_parent = std::move(parent);
  G.bfs_order.resize(n);
  for (size_t i = 0; i < n; ++i) G.bfs_order[i] = static_cast<uint32_t>(i);
  G.table.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      G.table[i * n + j] = index.at(mul(elems[i], elems[j]));
  G.inv.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (G.table[i * n + j] == 0) {
        G.inv[i] = static_cast<uint32_t>(j);
        break;
      }
  for (const Elem& ge : gen_elems) {
    uint32_t gi = index.at(ge);
    if (gi == 0 && !keep_trivial_gens) continue;
    G.gens.push_back(gi);
  }
  return G;
}

void validate_latin_table(const FiniteGroup& G) {
  size_t n = G.n;
  require_input(G.table.size() == n * n, "multiplication table has wrong size");
  for (uint32_t x : G.table) require_input(x < n, "table entry out of range");
  for (size_t i = 0; i < n; ++i) {
    require_input(G.table[i] == i, "element 0 must be a left identity");
    require_input(G.table[i * n] == i, "element 0 must be a right identity");
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (size_t j = 0; j < n; ++j) {
      uint32_t r = G.table[i * n + j], c = G.table[j * n + i];
      require_input(!seen_row[r] && !seen_col[c], "table row/column is not a permutation");
      seen_row[r] = seen_col[c] = true;
    }
  }
}

}  // namespace

uint32_t FiniteGroup::pow(uint32_t g, uint64_t e) const {
  uint32_t acc = 0, base = g;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint32_t FiniteGroup::conj(uint32_t g, uint32_t h) const {
  return mul(mul(g, h), inv[g]);
}

size_t FiniteGroup::order_of(uint32_t g) const {
  size_t k = 1;
  uint32_t x = g;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (table[i * n + j] != table[j * n + i]) return false;
  return true;
}

void FiniteGroup::check_axioms() const {
  validate_latin_table(*this);
  for (size_t i = 0; i < n; ++i)
    require_internal(mul(i, inv[i]) == 0 && mul(inv[i], i) == 0, "inverse table broken");
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        require_internal(mul(mul(a, b), c) == mul(a, mul(b, c)), "associativity fails");
}

FiniteGroup FiniteGroup::cyclic(uint32_t m) {
  if (m == 1) {
    FiniteGroup G;
    G.table = {0};
    G.inv = {0};
    G.bfs_parent = {{0, 0}};
    G.bfs_order = {0};
    G.name = "cyclic(1)";
    return G;
  }
  prime_power(m);
  auto mul = [m](const Elem& a, const Elem& b) { return Elem{(a[0] + b[0]) % m}; };
  return build_group({{1 % m}}, {0}, mul, "cyclic(" + std::to_string(m) + ")");
}

FiniteGroup FiniteGroup::abelian(const std::vector<uint32_t>& orders) {
  if (orders.empty()) return cyclic(1);
  std::string name = "abelian(";
  for (size_t i = 0; i < orders.size(); ++i) {
    prime_power(orders[i]);
    name += (i ? "," : "") + std::to_string(orders[i]);
  }
  name += ")";
  size_t r = orders.size();
  auto mul = [orders, r](const Elem& a, const Elem& b) {
    Elem c(r);
    for (size_t i = 0; i < r; ++i) c[i] = (a[i] + b[i]) % orders[i];
    return c;
  };
  std::vector<Elem> gens;
  for (size_t i = 0; i < r; ++i) {
    Elem e(r, 0);
    e[i] = 1 % orders[i];
    gens.push_back(e);
  }
  return build_group(gens, Elem(r, 0), mul, name);
}

FiniteGroup FiniteGroup::heisenberg(uint32_t m) {
  prime_power(m);
  // (a,b,c) encodes the matrix with rows (1,a,c),(0,1,b),(0,0,1).
  auto mul = [m](const Elem& x, const Elem& y) {
    return Elem{(x[0] + y[0]) % m, (x[1] + y[1]) % m,
                (x[2] + y[2] + x[0] * y[1]) % m};
  };
  return build_group({{1, 0, 0}, {0, 1, 0}}, {0, 0, 0}, mul,
                     "heisenberg(" + std::to_string(m) + ")");
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<uint32_t>>& t,
                                    std::vector<uint32_t> gens_in) {
  size_t n = t.size();
  require_input(n >= 1 && n <= kTableCap, "table size out of range");
  FiniteGroup G;
  G.n = n;
  G.name = "table(" + std::to_string(n) + ")";
  G.table.reserve(n * n);
  for (const auto& row : t) {
    require_input(row.size() == n, "table is not square");
    for (uint32_t x : row) G.table.push_back(x);
  }
  validate_latin_table(G);
  G.inv.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (G.table[i * n + j] == 0) {
        G.inv[i] = static_cast<uint32_t>(j);
        break;
      }
  // Associativity: exhaustive when affordable, else seeded sampling.
  if (n <= 256) {
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c)
          require_input(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)),
                        "table is not associative");
  } else {
    uint64_t state = 0x6b43a9b5d88f2a01ull;
    for (int k = 0; k < 2000000; ++k) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      uint32_t a = (state >> 33) % n, b = (state >> 13) % n, c = state % n;
      require_input(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)),
                    "table is not associative");
    }
  }
  for (uint32_t g : gens_in) require_input(g < n, "generator index out of range");
  if (gens_in.empty()) {
    // Greedy generating set in label order.
    std::vector<bool> reach(n, false);
    reach[0] = true;
    size_t count = 1;
    while (count < n) {
      uint32_t pick = 0;
      for (uint32_t g = 1; g < n; ++g)
        if (!reach[g]) {
          pick = g;
          break;
        }
      gens_in.push_back(pick);
      // closure update
      std::vector<uint32_t> stack{pick};
      reach[pick] = true;
      ++count;
      for (size_t h = 0; h < stack.size(); ++h)
        for (size_t j = 0; j < n; ++j)
          if (reach[j]) {
            for (uint32_t x : {G.mul(stack[h], j), G.mul(j, stack[h])})
              if (!reach[x]) {
                reach[x] = true;
                ++count;
                stack.push_back(x);
              }
          }
    }
  }
  G.gens = gens_in;
  // BFS order and parents over user labels.
  G.bfs_parent.assign(n, {0, 0});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  G.bfs_order.push_back(0);
  for (size_t head = 0; head < G.bfs_order.size(); ++head) {
    uint32_t g = G.bfs_order[head];
    for (size_t i = 0; i < G.gens.size(); ++i) {
      uint32_t h = G.mul(g, G.gens[i]);
      if (seen[h]) continue;
      seen[h] = true;
      G.bfs_parent[h] = {g, static_cast<uint32_t>(i)};
      G.bfs_order.push_back(h);
    }
  }
  require_input(G.bfs_order.size() == n, "generators do not generate the group");
  return G;
}

FiniteGroup FiniteGroup::from_permutations(uint32_t npoints,
                                           const std::vector<std::vector<uint32_t>>& perms) {
  require_input(npoints >= 1, "need at least one point");
  Elem id(npoints);
  for (uint32_t i = 0; i < npoints; ++i) id[i] = i;
  std::vector<Elem> gens;
  for (const auto& p : perms) {
    require_input(p.size() == npoints, "permutation length mismatch");
    std::vector<bool> seen(npoints, false);
    for (uint32_t x : p) {
      require_input(x < npoints && !seen[x], "not a permutation");
      seen[x] = true;
    }
    gens.push_back(p);
  }
  auto mul = [npoints](const Elem& f, const Elem& g) {
    Elem h(npoints);
    for (uint32_t x = 0; x < npoints; ++x) h[x] = g[f[x]];
    return h;
  };
  return build_group(gens, id, mul, "perm(" + std::to_string(npoints) + ")");
}

GroupHom GroupHom::identity(GroupPtr G) {
  GroupHom h;
  h.dom = G;
  h.cod = G;
  h.image.resize(G->n);
  for (size_t i = 0; i < G->n; ++i) h.image[i] = static_cast<uint32_t>(i);
  return h;
}

GroupHom GroupHom::from_generator_images(GroupPtr dom, GroupPtr cod,
                                         const std::vector<uint32_t>& gen_images) {
  require_input(gen_images.size() == dom->gens.size(), "one image per generator required");
  for (uint32_t im : gen_images) require_input(im < cod->n, "image out of range");
  GroupHom h;
  h.dom = dom;
  h.cod = cod;
  h.image.assign(dom->n, 0);
  for (uint32_t g : dom->bfs_order) {
    if (g == 0) continue;
    auto [par, gi] = dom->bfs_parent[g];
    h.image[g] = cod->mul(h.image[par], gen_images[gi]);
  }
  h.validate();
  return h;
}

void GroupHom::validate() const {
  require_internal(image.size() == dom->n, "hom image table size mismatch");
  require_input(image[0] == 0, "hom must preserve the identity");
  for (size_t g = 0; g < dom->n; ++g)
    for (size_t h = 0; h < dom->n; ++h)
      require_input(image[dom->mul(g, h)] == cod->mul(image[g], image[h]),
                    "map is not a homomorphism");
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(cod->n, false);
  size_t count = 0;
  for (uint32_t v : image)
    if (!hit[v]) {
      hit[v] = true;
      ++count;
    }
  return count == cod->n;
}

std::vector<uint32_t> GroupHom::kernel() const {
  std::vector<uint32_t> ker;
  for (size_t g = 0; g < dom->n; ++g)
    if (image[g] == 0) ker.push_back(static_cast<uint32_t>(g));
  return ker;
}

Character Character::zero(GroupPtr G, ModRing A) {
  Character c;
  c.G = G;
  c.A = A;
  c.value.assign(G->n, 0);
  return c;
}

Character Character::from_generator_values(GroupPtr G, ModRing A,
                                           const std::vector<uint32_t>& gen_values) {
  require_input(gen_values.size() == G->gens.size(), "one value per generator required");
  Character c = zero(G, A);
  for (uint32_t g : G->bfs_order) {
    if (g == 0) continue;
    auto [par, gi] = G->bfs_parent[g];
    c.value[g] = A.add(c.value[par], A.reduce_u64(gen_values[gi]));
  }
  c.validate();
  return c;
}

void Character::validate() const {
  require_internal(value.size() == G->n, "character table size mismatch");
  require_input(value[0] == 0, "character must kill the identity");
  for (size_t g = 0; g < G->n; ++g)
    for (size_t h = 0; h < G->n; ++h)
      require_input(value[G->mul(g, h)] == A.add(value[g], value[h]),
                    "values are not additive");
}

bool Character::is_zero() const {
  for (uint32_t v : value)
    if (v != 0) return false;
  return true;
}

Character Character::plus(const Character& o) const {
  require_internal(G.get() == o.G.get() && A == o.A, "character mismatch");
  Character c = *this;
  for (size_t g = 0; g < value.size(); ++g) c.value[g] = A.add(value[g], o.value[g]);
  return c;
}

Character Character::scaled(uint32_t s) const {
  Character c = *this;
  for (auto& v : c.value) v = A.mul(v, A.reduce_u64(s));
  return c;
}

Coimage coimage(GroupPtr G, const std::vector<Character>& chars) {
  for (const auto& c : chars)
    require_input(c.G.get() == G.get(), "characters must live on the given group");
  size_t n = G->n;
  // Right cosets of the common kernel; the kernel is normal since all
  // characters land in abelian groups.
  std::vector<uint32_t> ker;
  for (size_t g = 0; g < n; ++g) {
    bool in = true;
    for (const auto& c : chars)
      if (c.value[g] != 0) {
        in = false;
        break;
      }
    if (in) ker.push_back(static_cast<uint32_t>(g));
  }
  std::vector<uint32_t> rep(n);
  for (size_t g = 0; g < n; ++g) {
    uint32_t m = static_cast<uint32_t>(n);
    for (uint32_t x : ker) m = std::min(m, G->mul(static_cast<uint32_t>(g), x));
    rep[g] = m;
  }
  std::vector<uint32_t> reps;
  for (size_t g = 0; g < n; ++g)
    if (rep[g] == g) reps.push_back(static_cast<uint32_t>(g));
  std::map<uint32_t, uint32_t> rep_id;
  for (size_t i = 0; i < reps.size(); ++i) rep_id[reps[i]] = static_cast<uint32_t>(i);
  size_t m = reps.size();
  std::vector<std::vector<uint32_t>> ptable(m, std::vector<uint32_t>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) ptable[i][j] = rep_id.at(rep[G->mul(reps[i], reps[j])]);
  // Well-definedness on all pairs, not just representatives.
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      require_internal(ptable[rep_id.at(rep[g])][rep_id.at(rep[h])] ==
                           rep_id.at(rep[G->mul(g, h)]),
                       "coset multiplication is not well defined");
  // Provisional generators: images of G's generators.
  std::vector<uint32_t> pgens;
  for (uint32_t g : G->gens) {
    uint32_t c = rep_id.at(rep[g]);
    if (c != 0 && std::find(pgens.begin(), pgens.end(), c) == pgens.end())
      pgens.push_back(c);
  }
  auto mulp = [&ptable](const Elem& a, const Elem& b) { return Elem{ptable[a[0]][b[0]]}; };
  std::vector<Elem> gen_elems;
  for (uint32_t g : pgens) gen_elems.push_back({g});
  FiniteGroup H = build_group(gen_elems, {0}, mulp, "coimage");
  require_internal(H.n == m, "coimage generators do not cover the quotient");
  // Map provisional labels to final BFS labels by replaying the BFS.
  std::vector<uint32_t> relabel(m, 0);
  {
    std::vector<Elem> order;
    std::map<Elem, uint32_t> idx;
    order.push_back({0});
    idx[{0}] = 0;
    for (size_t head = 0; head < order.size(); ++head) {
      Elem g = order[head];
      for (const Elem& s : gen_elems) {
        Elem h = mulp(g, s);
        if (idx.count(h)) continue;
        idx[h] = static_cast<uint32_t>(order.size());
        order.push_back(h);
      }
    }
    for (const auto& [e, i] : idx) relabel[e[0]] = i;
  }
  Coimage out;
  out.H = make_group(std::move(H));
  out.projection.dom = G;
  out.projection.cod = out.H;
  out.projection.image.resize(n);
  for (size_t g = 0; g < n; ++g) out.projection.image[g] = relabel[rep_id.at(rep[g])];
  out.projection.validate();
  require_internal(out.projection.is_surjective(), "coimage projection must be onto");
  return out;
}

AbelianDecomposition decompose_abelian(GroupPtr H) {
  require_input(H->is_abelian(), "group is not abelian");
  AbelianDecomposition out;
  if (H->n == 1) return out;
  uint32_t p = 0;
  for (uint32_t d = 2; d <= H->n; ++d)
    if (H->n % d == 0) {
      p = d;
      break;
    }
  size_t r = H->n;
  while (r % p == 0) r /= p;
  require_input(r == 1, "group is not a p-group");
  out.p = p;
  // Prune the generator list to an irredundant one, extending if needed.
  std::vector<uint32_t> gens;
  std::vector<bool> reach(H->n, false);
  reach[0] = true;
  size_t count = 1;
  auto absorb = [&](uint32_t g) {
    std::vector<uint32_t> stack{g};
    if (!reach[g]) {
      reach[g] = true;
      ++count;
    }
    for (size_t h = 0; h < stack.size(); ++h)
      for (size_t j = 0; j < H->n; ++j)
        if (reach[j]) {
          uint32_t x = H->mul(stack[h], static_cast<uint32_t>(j));
          if (!reach[x]) {
            reach[x] = true;
            ++count;
            stack.push_back(x);
          }
        }
  };
  for (uint32_t g : H->gens)
    if (!reach[g]) {
      gens.push_back(g);
      absorb(g);
    }
  for (uint32_t g = 1; count < H->n && g < H->n; ++g)
    if (!reach[g]) {
      gens.push_back(g);
      absorb(g);
    }
  size_t k = gens.size();
  uint32_t T = 1;
  for (uint32_t g : gens) {
    size_t o = H->order_of(g), t = 0;
    while (o > 1) {
      o /= p;
      ++t;
    }
    T = std::max<uint32_t>(T, static_cast<uint32_t>(t));
  }
  ModRing RT(p, T);
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) {
    total *= RT.q;
    require_internal(total <= (1ull << 22), "relation enumeration too large");
  }
  // Power tables g_i^e for e < p^T.
  std::vector<std::vector<uint32_t>> pw(k, std::vector<uint32_t>(RT.q));
  for (size_t i = 0; i < k; ++i) {
    pw[i][0] = 0;
    for (uint32_t e = 1; e < RT.q; ++e) pw[i][e] = H->mul(pw[i][e - 1], gens[i]);
  }
  std::vector<std::vector<uint32_t>> relations;
  std::vector<uint32_t> tup(k, 0);
  while (true) {
    uint32_t prod = 0;
    for (size_t i = 0; i < k; ++i) prod = H->mul(prod, pw[i][tup[i]]);
    if (prod == 0) relations.push_back(tup);
    size_t i = 0;
    while (i < k && ++tup[i] == RT.q) tup[i++] = 0;
    if (i == k) break;
  }
  Submodule big = Submodule::from_generators(ModMatrix::identity(RT, k));
  Submodule rel = Submodule::from_generators(ModMatrix::from_rows(RT, k, relations));
  FPModule Q = quotient(big, rel);
  // Q's ascending invariant factors give the decomposition.
  std::vector<std::vector<uint32_t>> dvec(H->n, std::vector<uint32_t>(k, 0));
  {
    std::vector<bool> seen(H->n, false);
    seen[0] = true;
    std::vector<uint32_t> order{0};
    for (size_t head = 0; head < order.size(); ++head) {
      uint32_t g = order[head];
      for (size_t i = 0; i < k; ++i) {
        uint32_t h = H->mul(g, gens[i]);
        if (seen[h]) continue;
        seen[h] = true;
        dvec[h] = dvec[g];
        dvec[h][i] = RT.add(dvec[h][i], 1);
        order.push_back(h);
      }
    }
    require_internal(order.size() == H->n, "pruned generators do not generate");
  }
  size_t c = Q.rank();
  for (size_t t = 0; t < c; ++t) {
    std::vector<uint32_t> unit(c, 0);
    unit[t] = 1;
    std::vector<uint32_t> u = Q.from_coordinates(unit);
    uint32_t h = 0;
    for (size_t i = 0; i < k; ++i) h = H->mul(h, H->pow(gens[i], u[i]));
    out.gens.push_back(h);
    out.exponents.push_back(Q.exponents[t]);
  }
  for (size_t t = 0; t < c; ++t) {
    Character chi = Character::zero(H, ModRing(p, out.exponents[t]));
    for (size_t g = 0; g < H->n; ++g)
      chi.value[g] = Q.to_coordinates(dvec[g])[t] % chi.A.q;
    chi.validate();
    out.chars.push_back(std::move(chi));
  }
  // Reconstruction check: g = prod h_t^{chi_t(g)} for every g.
  for (size_t g = 0; g < H->n; ++g) {
    uint32_t prod = 0;
    for (size_t t = 0; t < c; ++t)
      prod = H->mul(prod, H->pow(out.gens[t], out.chars[t].value[g]));
    require_internal(prod == g, "abelian decomposition reconstruction failed");
  }
  return out;
}

}  // namespace bockmas
