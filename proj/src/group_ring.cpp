#include "bockmas/group_ring.hpp"

#include <functional>
#include <utility>

#include "bockmas/errors.hpp"

namespace bockmas {

std::vector<uint32_t> GroupRing::one() const {
  auto v = zero();
  v[0] = 1;
  return v;
}

std::vector<uint32_t> GroupRing::basis(uint32_t h) const {
  require_input(h < H->n, "group element out of range");
  auto v = zero();
  v[h] = 1;
  return v;
}

std::vector<uint32_t> GroupRing::x_of(uint32_t h) const {
  require_input(h < H->n, "group element out of range");
  auto v = zero();
  v[h] = R.add(v[h], 1);
  v[0] = R.sub(v[0], 1);
  return v;
}

std::vector<uint32_t> GroupRing::mul(const std::vector<uint32_t>& a,
                                     const std::vector<uint32_t>& b) const {
  const size_t n = H->n;
  require_input(a.size() == n && b.size() == n, "element size mismatch");
  auto out = zero();
  const uint64_t q = R.q;
  for (size_t i = 0; i < n; ++i) {
    uint64_t ai = a[i] % q;
    if (ai == 0) continue;
    const uint32_t* trow = H->table.data() + i * n;
    for (size_t j = 0; j < n; ++j) {
      uint64_t bj = b[j] % q;
      if (bj == 0) continue;
      uint32_t k = trow[j];
      out[k] = static_cast<uint32_t>((out[k] + ai * bj) % q);
    }
  }
  return out;
}

std::vector<uint32_t> GroupRing::mul_basis(const std::vector<uint32_t>& a, uint32_t h) const {
  const size_t n = H->n;
  require_input(a.size() == n && h < n, "element size mismatch");
  auto out = zero();
  for (size_t i = 0; i < n; ++i)
    if (a[i] != 0) out[H->mul(static_cast<uint32_t>(i), h)] = R.reduce(a[i]);
  return out;
}

std::vector<uint32_t> GroupRing::mul_x(const std::vector<uint32_t>& a, uint32_t h) const {
  return vec_sub(R, mul_basis(a, h), a);
}

std::vector<uint32_t> GroupRing::left_translate(uint32_t h, const std::vector<uint32_t>& a) const {
  const size_t n = H->n;
  require_input(a.size() == n && h < n, "element size mismatch");
  auto out = zero();
  for (size_t i = 0; i < n; ++i)
    if (a[i] != 0) out[H->mul(h, static_cast<uint32_t>(i))] = R.reduce(a[i]);
  return out;
}

uint32_t GroupRing::augmentation(const std::vector<uint32_t>& a) const {
  require_input(a.size() == H->n, "element size mismatch");
  uint64_t acc = 0;
  for (uint32_t c : a) acc += c % R.q;
  return static_cast<uint32_t>(acc % R.q);
}

std::vector<uint32_t> GroupRing::power(const std::vector<uint32_t>& a, uint32_t e) const {
  auto out = one();
  for (uint32_t t = 0; t < e; ++t) out = mul(out, a);
  return out;
}

Submodule right_ideal_closure(const GroupRing& ring, const ModMatrix& gens_rows) {
  const size_t n = ring.rank();
  require_input(gens_rows.cols == n, "generator rows must live in the group ring");
  ModMatrix U = howell(gens_rows);
  Submodule out;
  out.ambient = n;
  if (U.rows == 0 || ring.H->gens.empty()) {
    out.rows = U;
    return out;
  }
  std::vector<std::vector<uint32_t>> fresh;
  fresh.reserve(U.rows);
  for (size_t i = 0; i < U.rows; ++i) fresh.push_back(U.row(i));
  size_t rounds = 0;
  const size_t round_cap = static_cast<size_t>(ring.R.s) * n + 2;
  while (!fresh.empty()) {
    require_internal(++rounds <= round_cap, "ideal closure failed to stabilize");
    std::vector<std::vector<uint32_t>> pending;
    std::vector<std::vector<uint32_t>> next_fresh;
    auto flush = [&]() {
      if (pending.empty()) return;
      U = howell(U.vstack(ModMatrix::from_rows(ring.R, n, pending)));
      pending.clear();
    };
    for (const auto& r : fresh) {
      for (uint32_t s : ring.H->gens) {
        auto res = residual_against(U, ring.mul_x(r, s));
        if (vec_is_zero(res)) continue;
        pending.push_back(res);
        next_fresh.push_back(std::move(res));
        if (pending.size() >= 256) flush();
      }
    }
    flush();
    fresh = std::move(next_fresh);
  }
  out.rows = std::move(U);
  return out;
}

Filtration augmentation_powers(const GroupRing& ring, size_t N) {
  require_input(N >= 1, "filtration depth must be at least 1");
  const size_t n = ring.rank();
  Filtration F{ring, N, {}, {}, {}, {}};
  F.powers.reserve(N + 1);
  F.powers.push_back(Submodule::from_generators(ModMatrix::identity(ring.R, n)));
  {
    ModMatrix g1(ring.R, 0, n);
    for (uint32_t h = 1; h < n; ++h) g1.append_row(ring.x_of(h));
    F.powers.push_back(Submodule::from_generators(g1));
  }
  for (size_t k = 1; k < N; ++k) {
    const Submodule& Ik = F.powers[k];
    ModMatrix cand(ring.R, 0, n);
    for (size_t i = 0; i < Ik.rows.rows; ++i)
      for (uint32_t s : ring.H->gens) cand.append_row(ring.mul_x(Ik.rows.row(i), s));
    if (cand.rows == 0) {
      F.powers.push_back(Submodule::zero(ring.R, n));
      continue;
    }
    F.powers.push_back(right_ideal_closure(ring, cand));
    require_internal(F.powers[k].contains(F.powers[k + 1]), "filtration is not decreasing");
  }
  auto all_full = [&](const FPModule& m) {
    for (uint32_t e : m.exponents)
      if (e != ring.R.s) return false;
    return true;
  };
  for (size_t k = 0; k <= N; ++k)
    F.flat_quotient.push_back(all_full(quotient(F.powers[0], F.powers[k])));
  for (size_t k = 0; k < N; ++k) {
    FPModule g = quotient(F.powers[k], F.powers[k + 1]);
    F.flat_graded.push_back(all_full(g));
    F.graded_rank.push_back(g.rank());
  }
  return F;
}

FPModule quotient_mod_power(const Filtration& F, size_t k) {
  require_input(k <= F.N, "power index beyond the computed filtration");
  return quotient(F.powers[0], F.powers[k]);
}

FPModule graded_piece(const Filtration& F, size_t k) {
  require_input(k + 1 <= F.N, "graded index beyond the computed filtration");
  return quotient(F.powers[k], F.powers[k + 1]);
}

namespace {

std::string pow_label(const std::string& v, size_t e) {
  if (e == 0) return "";
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

std::vector<std::string> var_names(size_t r) {
  static const char* few[4] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  out.reserve(r);
  for (size_t i = 0; i < r; ++i)
    out.push_back(r <= 4 ? std::string(few[i]) : "x" + std::to_string(i + 1));
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::vector<uint32_t>>> monomials_of_degree(
    const GroupRing& ring, size_t n, const std::string& style) {
  std::vector<std::pair<std::string, std::vector<uint32_t>>> out;
  if (n == 0) {
    out.emplace_back("1", ring.one());
    return out;
  }
  const auto& gens = ring.H->gens;
  if (style == "cyclic") {
    require_input(!gens.empty(), "cyclic style needs a generator");
    out.emplace_back(pow_label("x", n), ring.power(ring.x_of(gens[0]), static_cast<uint32_t>(n)));
  } else if (style == "bicyclic") {
    require_input(gens.size() == 2, "bicyclic style needs exactly two generators");
    auto x = ring.x_of(gens[0]);
    auto y = ring.x_of(gens[1]);
    for (size_t a = n + 1; a-- > 0;) {
      size_t b = n - a;
      out.emplace_back(pow_label("x", a) + pow_label("y", b),
                       ring.mul(ring.power(x, static_cast<uint32_t>(a)),
                                ring.power(y, static_cast<uint32_t>(b))));
    }
  } else if (style == "heisenberg") {
    require_input(gens.size() == 2, "heisenberg style needs exactly two generators");
    const FiniteGroup& H = *ring.H;
    uint32_t gz = H.mul(H.mul(gens[0], gens[1]), H.inverse(H.mul(gens[1], gens[0])));
    require_hypothesis(gz != 0, "heisenberg style needs a nontrivial commutator");
    auto x = ring.x_of(gens[0]);
    auto y = ring.x_of(gens[1]);
    auto z = ring.x_of(gz);
    if (n == 1) {
      out.emplace_back("x", x);
      out.emplace_back("y", y);
    } else if (n == 2) {
      out.emplace_back("x^2", ring.mul(x, x));
      out.emplace_back("y^2", ring.mul(y, y));
      out.emplace_back("yx", ring.mul(y, x));
      out.emplace_back("z", z);
    } else if (n == 3) {
      out.emplace_back("x^3", ring.power(x, 3));
      out.emplace_back("xz", ring.mul(x, z));
      out.emplace_back("yx^2", ring.mul(y, ring.mul(x, x)));
      out.emplace_back("y^2x", ring.mul(ring.mul(y, y), x));
      out.emplace_back("y^3", ring.power(y, 3));
      out.emplace_back("yz", ring.mul(y, z));
    } else {
      throw hypothesis_error("no fixed monomial family at degree " + std::to_string(n));
    }
  } else if (style == "abelian") {
    auto dec = decompose_abelian(ring.H);
    const size_t r = dec.gens.size();
    require_hypothesis(r > 0, "abelian style needs a nontrivial group");
    auto names = var_names(r);
    std::vector<std::vector<uint32_t>> xs;
    xs.reserve(r);
    for (uint32_t g : dec.gens) xs.push_back(ring.x_of(g));
    std::vector<size_t> k(r, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t rem) {
      if (i + 1 == r) {
        k[i] = rem;
        std::string lbl;
        auto e = ring.one();
        for (size_t t = 0; t < r; ++t) {
          lbl += pow_label(names[t], k[t]);
          for (size_t u = 0; u < k[t]; ++u) e = ring.mul(e, xs[t]);
        }
        out.emplace_back(lbl, std::move(e));
        return;
      }
      for (size_t v = rem + 1; v-- > 0;) {
        k[i] = v;
        rec(i + 1, rem - v);
      }
    };
    rec(0, n);
  } else if (style == "generic") {
    require_input(!gens.empty(), "generic style needs generators");
    const size_t kc = gens.size();
    double count = 1;
    for (size_t t = 0; t < n; ++t) count *= static_cast<double>(kc);
    require_input(count <= 4096.0, "generic word family too large");
    std::vector<size_t> word(n, 0);
    while (true) {
      auto e = ring.one();
      std::string lbl;
      for (size_t t = 0; t < n; ++t) {
        e = ring.mul(e, ring.x_of(gens[word[t]]));
        lbl += static_cast<char>('a' + (word[t] % 26));
      }
      out.emplace_back(std::move(lbl), std::move(e));
      size_t t = n;
      while (t > 0 && word[t - 1] + 1 == kc) word[--t] = 0;
      if (t == 0) break;
      ++word[t - 1];
    }
  } else {
    throw input_error("unknown monomial style: " + style);
  }
  return out;
}

std::vector<uint32_t> GradedBasis::coefficients(const std::vector<uint32_t>& v) const {
  return vec_mat(quot.to_coordinates(v), coord_inv);
}

GradedBasis graded_basis(const Filtration& F, size_t n, const std::string& style) {
  require_input(n >= 1 && n + 1 <= F.N, "graded basis needs 1 <= n < filtration depth");
  require_hypothesis(F.flat_graded[n], "graded piece is not free");
  FPModule quot = graded_piece(F, n);
  auto cand = monomials_of_degree(F.ring, n, style);
  const Submodule& In = F.powers[n];
  const Submodule& In1 = F.powers[n + 1];
  std::vector<std::string> labels;
  std::vector<std::vector<uint32_t>> elems;
  if (style == "generic") {
    Submodule cur = In1;
    for (auto& [lbl, e] : cand) {
      if (elems.size() == quot.rank()) break;
      if (cur.contains(e)) continue;
      labels.push_back(lbl);
      elems.push_back(e);
      cur = cur.plus(Submodule::from_generators(ModMatrix::from_rows(F.ring.R, In.ambient, {e})));
    }
  } else {
    for (auto& [lbl, e] : cand) {
      labels.push_back(lbl);
      elems.push_back(e);
    }
  }
  require_hypothesis(elems.size() == quot.rank(),
                     "monomial family size does not match the graded rank");
  ModMatrix coord(F.ring.R, 0, quot.rank());
  for (const auto& e : elems) {
    require_hypothesis(In.contains(e), "monomial does not lie in the filtration step");
    coord.append_row(quot.to_coordinates(e));
  }
  ModMatrix coord_inv;
  try {
    coord_inv = invert(coord);
  } catch (const internal_error&) {
    throw hypothesis_error("chosen monomials are not a basis of the graded piece");
  }
  return GradedBasis{n,     style, std::move(labels), std::move(elems), std::move(quot),
                     std::move(coord), std::move(coord_inv)};
}

ModMatrix induced_ring_map(const GroupRing& dom, const GroupRing& cod, const GroupHom& hom) {
  require_input(hom.dom == dom.H && hom.cod == cod.H, "homomorphism does not match the rings");
  require_input(dom.R.p == cod.R.p && dom.R.s == cod.R.s, "coefficient rings differ");
  ModMatrix M(cod.R, 0, cod.rank());
  for (uint32_t h = 0; h < dom.rank(); ++h) M.append_row(cod.basis(hom(h)));
  return M;
}

std::vector<uint32_t> QuotientCoords::coords(const std::vector<uint32_t>& v) const {
  const size_t n = ring.rank();
  require_input(v.size() == n, "element size mismatch");
  const size_t d = dim();
  const uint64_t q = ring.R.q;
  std::vector<uint32_t> out(d, 0);
  for (size_t j = 0; j < d; ++j) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; ++i) acc = (acc + (v[i] % q) * stacked_inv.at(i, j)) % q;
    out[j] = static_cast<uint32_t>(acc);
  }
  return out;
}

std::vector<uint32_t> QuotientCoords::expand(const std::vector<uint32_t>& c) const {
  require_input(c.size() == dim(), "coordinate size mismatch");
  auto out = ring.zero();
  for (size_t i = 0; i < c.size(); ++i) vec_addmul_inplace(ring.R, out, reps[i], c[i]);
  return out;
}

ModMatrix QuotientCoords::act_matrix(uint32_t h) const {
  ModMatrix A(ring.R, 0, dim());
  for (const auto& r : reps) A.append_row(coords(ring.mul_basis(r, h)));
  return A;
}

ModMatrix QuotientCoords::act_left_matrix(uint32_t h) const {
  ModMatrix A(ring.R, 0, dim());
  for (const auto& r : reps) A.append_row(coords(ring.left_translate(h, r)));
  return A;
}

QuotientCoords quotient_coords(const GroupRing& ring, const Submodule& small,
                               const std::vector<std::vector<uint32_t>>& reps) {
  const size_t n = ring.rank();
  require_input(small.ambient == n, "submodule lives in a different ring");
  require_hypothesis(reps.size() + small.rank() == n,
                     "representative count plus submodule rank must fill the ring");
  ModMatrix stacked = ModMatrix::from_rows(ring.R, n, reps).vstack(small.rows);
  ModMatrix inv;
  try {
    inv = invert(stacked);
  } catch (const internal_error&) {
    throw hypothesis_error("representatives do not complement the submodule");
  }
  for (size_t i = 0; i < small.rows.rows; ++i)
    for (uint32_t s : ring.H->gens)
      require_hypothesis(small.contains(ring.mul_x(small.rows.row(i), s)),
                         "submodule is not a right ideal");
  return QuotientCoords{ring, small, reps, std::move(inv)};
}

std::vector<std::vector<uint32_t>> truncation_reps(const Filtration& F, size_t n,
                                                   const std::string& style) {
  require_input(n >= 1 && n <= F.N, "truncation depth out of range");
  std::vector<std::vector<uint32_t>> reps{F.ring.one()};
  for (size_t d = 1; d < n; ++d)
    for (auto& e : graded_basis(F, d, style).elems) reps.push_back(e);
  return reps;
}

std::vector<std::string> truncation_labels(const Filtration& F, size_t n,
                                           const std::string& style) {
  require_input(n >= 1 && n <= F.N, "truncation depth out of range");
  std::vector<std::string> labels{"1"};
  for (size_t d = 1; d < n; ++d)
    for (auto& l : graded_basis(F, d, style).labels) labels.push_back(l);
  return labels;
}

IdealJ build_J(const Filtration& F) {
  const GroupRing& ring = F.ring;
  GroupPtr H = ring.H;
  require_input(F.N >= 3, "J needs the filtration to depth 3");
  require_hypothesis(H->is_abelian(), "J construction needs an abelian group");
  auto dec = decompose_abelian(H);
  require_hypothesis(dec.exponents == std::vector<uint32_t>({1, 1}),
                     "J construction needs an elementary abelian group of rank 2");
  require_hypothesis(H->gens.size() == 2, "J construction needs exactly two generators");
  ModRing A(ring.R.p, 1);
  Character cx = Character::from_generator_values(H, A, {1, 0});
  Character cy = Character::from_generator_values(H, A, {0, 1});
  IdealJ out;
  out.alpha_chars = {cx, cy, cx.plus(cy)};
  out.xy = ring.mul(ring.x_of(H->gens[0]), ring.x_of(H->gens[1]));
  ModMatrix jg = F.powers[3].rows;
  for (uint32_t h = 0; h < H->n; ++h) jg.append_row(ring.mul_basis(out.xy, h));
  out.J = Submodule::from_generators(jg);
  require_internal(F.powers[2].contains(out.J) && out.J.contains(F.powers[3]),
                   "J must sit between I^3 and I^2");
  FPModule qj = quotient(out.J, F.powers[3]);
  require_hypothesis(
      qj.rank() == 1 && qj.exponents == std::vector<uint32_t>({ring.R.s}),
      "J/I^3 is not free of rank 1");
  require_hypothesis(ring.R.val(qj.to_coordinates(out.xy)[0]) == 0, "xy does not generate J/I^3");
  std::vector<GroupRing> rings;
  for (int i = 0; i < 3; ++i) {
    out.coimages.push_back(coimage(H, {out.alpha_chars[i]}));
    rings.push_back(GroupRing{ring.R, out.coimages.back().H});
    out.alpha_maps.push_back(induced_ring_map(ring, rings.back(), out.coimages.back().projection));
    ModMatrix img(ring.R, 0, rings.back().rank());
    for (size_t r = 0; r < out.J.rows.rows; ++r)
      img.append_row(vec_mat(out.J.rows.row(r), out.alpha_maps.back()));
    out.J_images.push_back(Submodule::from_generators(img));
  }
  for (int i = 0; i < 3; ++i) {
    Filtration Fi = augmentation_powers(rings[i], 3);
    const Submodule& expect = (i == 2) ? Fi.powers[2] : Fi.powers[3];
    require_hypothesis(out.J_images[i] == expect, "image of J is not the expected power");
  }
  return out;
}

}  // namespace bockmas
