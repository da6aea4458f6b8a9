#include "bockmas/bockstein_verify.hpp"


#include "bockmas/binomial.hpp"
#include "bockmas/errors.hpp"

namespace bockmas {

namespace {

uint32_t element_order(const FiniteGroup& H, uint32_t h) {
  uint32_t ord = 1;
  uint32_t cur = h;
  while (cur != 0) {
    cur = H.mul(cur, h);
    ++ord;
  }
  return ord;
}

Character dual_character(const GroupPtr& H, size_t gen_index) {
  const uint32_t ord = element_order(*H, H->gens[gen_index]);
  require_input(ord > 1, "generator of a dual character must be nontrivial");
  uint32_t p = 2;
  while (ord % p != 0) ++p;
  uint32_t t = 0;
  for (uint32_t m = ord; m > 1; m /= p) ++t;
  std::vector<uint32_t> vals(H->gens.size(), 0);
  vals[gen_index] = 1;
  return Character::from_generator_values(H, ModRing(p, t), vals);
}

// Characters aligned with the style's degree-one monomials.
std::vector<Character> style_characters(const GroupRing& ring, const std::string& style) {
  std::vector<Character> out;
  if (style == "cyclic") {
    out.push_back(dual_character(ring.H, 0));
  } else if (style == "bicyclic" || style == "heisenberg") {
    out.push_back(dual_character(ring.H, 0));
    out.push_back(dual_character(ring.H, 1));
  } else if (style == "abelian") {
    out = decompose_abelian(ring.H).chars;
  } else {
    throw input_error("no character family for style: " + style);
  }
  return out;
}

// Multi-exponents of total degree d over r variables, in the monomial
// enumeration order (first coordinate descending).
void exps_rec(size_t i, size_t rem, std::vector<size_t>& k,
              std::vector<std::vector<size_t>>& out) {
  if (i + 1 == k.size()) {
    k[i] = rem;
    out.push_back(k);
    return;
  }
  for (size_t v = rem + 1; v-- > 0;) {
    k[i] = v;
    exps_rec(i + 1, rem - v, k, out);
  }
}

std::vector<std::vector<size_t>> exps_of_degree(size_t r, size_t d) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> k(r, 0);
  exps_rec(0, d, k, out);
  return out;
}

ModMatrix column_of(const ModMatrix& M, size_t j) {
  ModMatrix out(M.R, M.rows, 1);
  for (size_t i = 0; i < M.rows; ++i) out.at(i, 0) = M.at(i, j);
  return out;
}

}  // namespace

Tower make_tower(const GroupPtr& G, const GroupHom& pi, const ModRing& R, size_t n,
                 const std::string& style) {
  return make_tower(G, pi, R, n, style, trivial_module(R, G, 1));
}

Tower make_tower(const GroupPtr& G, const GroupHom& pi, const ModRing& R, size_t n,
                 const std::string& style, const GMod& coeffs) {
  require_input(pi.dom.get() == G.get(), "tower projection must start at G");
  require_input(coeffs.G.get() == G.get() && coeffs.R == R, "coefficients live over G");
  Tower W;
  W.G = G;
  W.pi = pi;
  W.ring = GroupRing{R, pi.cod};
  W.filt = augmentation_powers(W.ring, n + 1);
  W.style = style;
  W.T = coeffs;
  W.B = bockstein_ses(W.T, W.pi, W.filt, n, style);
  W.Z1 = z1_space(W.B.ses.quo);
  W.n = n;
  return W;
}

std::vector<ModMatrix> cocycle_basis(const Tower& W) {
  std::vector<ModMatrix> out;
  for (size_t i = 0; i < W.Z1.Z.rows.rows; ++i)
    out.push_back(W.Z1.evaluate(W.Z1.Z.rows.row(i)));
  return out;
}

std::vector<ModMatrix> random_cocycles(const Tower& W, size_t count, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<ModMatrix> out;
  for (size_t i = 0; i < count; ++i)
    out.push_back(W.Z1.evaluate(W.Z1.random_cocycle(rng)));
  return out;
}

ModMatrix psi_connecting(const Tower& W, const ModMatrix& f) {
  return connecting2(W.B.ses, f);
}

ModMatrix psi_direct(const Tower& W, const ModMatrix& f) {
  const GModSES& S = W.B.ses;
  const size_t ng = W.G->n;
  require_input(f.rows == ng && f.cols == S.quo.dim, "cocycle table has the wrong shape");
  ModMatrix lift = f.mul(S.sect);
  ModMatrix inclT = S.incl.transpose();
  ModMatrix out(W.T.R, ng * ng, S.sub.dim);
  for (uint32_t g = 0; g < ng; ++g)
    for (uint32_t h = 0; h < ng; ++h)
      out.set_row(g * ng + h, vec_mat(S.mid.apply(g, lift.row(h)), inclT));
  return out;
}

ModMatrix psi_abelian(const Tower& W, const ModMatrix& f) {
  require_input(W.ring.H->is_abelian(), "closed form needs an abelian kernel group");
  require_input(W.style == "cyclic" || W.style == "bicyclic" || W.style == "abelian",
                "closed form needs a commutative monomial style");
  const ModRing& R = W.T.R;
  auto chars = style_characters(W.ring, W.style);
  for (const auto& c : chars)
    require_hypothesis(static_cast<uint64_t>(W.n) * R.q <
                           static_cast<uint64_t>(c.A.q) * c.A.p,
                       "character binomials of this degree are not well defined");
  const size_t r = chars.size();
  const size_t rt = W.T.dim;
  const size_t N = W.monomials();
  const size_t ng = W.G->n;
  require_input(f.rows == ng && f.cols == W.B.ses.quo.dim, "cocycle table has the wrong shape");

  // representative exponents, degree by degree, in enumeration order
  std::vector<std::vector<size_t>> repexp;
  for (size_t d = 0; d < W.n; ++d)
    for (auto& e : exps_of_degree(r, d)) repexp.push_back(e);
  require_internal(repexp.size() == W.B.smallq.dim(),
                   "representative enumeration does not match the truncation");
  auto monexp = exps_of_degree(r, W.n);
  require_internal(monexp.size() == N, "monomial enumeration does not match the grading");

  ModMatrix out(R, ng * ng, rt * N);
  std::vector<uint32_t> lam(rt, 0);
  for (uint32_t g = 0; g < ng; ++g) {
    const uint32_t gh_img = W.pi(g);
    // binomial factors of g against each character
    for (uint32_t h = 0; h < ng; ++h) {
      const size_t orow = static_cast<size_t>(g) * ng + h;
      for (size_t m = 0; m < N; ++m) {
        const auto& k = monexp[m];
        for (size_t j = 0; j < repexp.size(); ++j) {
          const auto& e = repexp[j];
          bool le = true;
          uint32_t B = 1;
          for (size_t i = 0; i < r && le; ++i) {
            if (e[i] > k[i]) {
              le = false;
              break;
            }
            B = R.mul(B, binom_mod(R, chars[i].value[gh_img], static_cast<uint32_t>(k[i] - e[i])));
          }
          if (!le || B == 0) continue;
          for (size_t t = 0; t < rt; ++t) lam[t] = f.at(h, t * repexp.size() + j);
          auto moved = W.T.apply(g, lam);
          for (size_t t = 0; t < rt; ++t) {
            uint32_t& slot = out.at(orow, t * N + m);
            slot = R.add(slot, R.mul(B, moved[t]));
          }
        }
      }
    }
  }
  return out;
}

UnipotentHom trivial_hom(const GroupPtr& H, const ModRing& R) {
  UnipotentHom u;
  u.G = H;
  u.R = R;
  u.size = 1;
  u.mat.assign(H->n, ModMatrix::identity(R, 1));
  return u;
}

Slot make_slot(const Tower& W, const std::string& label, const UnipotentHom& phiH,
               const UnipotentHom& thetaH) {
  require_input(W.T.dim == 1, "slots require rank-one coefficients");
  Slot s;
  s.label = label;
  for (size_t j = 0; j < W.labels().size(); ++j)
    if (W.labels()[j] == label) s.monomial = j;
  s.phiH = phiH;
  s.thetaH = thetaH;
  s.phi = UnipotentHom::pullback(phiH, W.pi);
  s.theta = UnipotentHom::pullback(thetaH, W.pi);
  s.star = star_ses(s.phi, s.theta, W.T);
  s.pm = p_map(phiH, thetaH, W.T, W.B, s.star);
  const size_t N = W.monomials();
  const size_t d = W.B.smallq.dim();
  s.eval_row.assign(N, 0);
  for (size_t j = 0; j < N; ++j) s.eval_row[j] = s.pm.Psub.at(j, 0);
  s.monomial_values = ModMatrix(W.T.R, N, s.star.mid.dim);
  for (size_t j = 0; j < N; ++j)
    for (size_t c = 0; c < s.star.mid.dim; ++c)
      s.monomial_values.at(j, c) = s.pm.P.at(d + j, c);
  return s;
}

ModMatrix attached_cocycle(const Tower& W, const Slot& s, const ModMatrix& f) {
  (void)W;
  return f.mul(s.pm.Pbar);
}

ModMatrix attached_massey(const Tower& W, const Slot& s, const ModMatrix& f) {
  DefiningSystem D = system_from_cocycle(s.phi, s.theta, W.T, attached_cocycle(W, s, f));
  return D.massey_cocycle();
}

TheoremCheck check_theorem(const Tower& W, const std::vector<Slot>& slots,
                           const ModMatrix& f, bool class_level) {
  const ModRing& R = W.T.R;
  const size_t N = W.monomials();
  require_input(W.T.dim == 1, "decomposition checks require rank-one coefficients");
  require_input(slots.size() == N, "need exactly one slot per degree-n monomial");
  std::vector<char> used(N, 0);
  for (const auto& s : slots) {
    require_input(s.monomial != SIZE_MAX, "slot label is not a graded monomial: " + s.label);
    require_input(!used[s.monomial], "duplicate slot for monomial: " + s.label);
    used[s.monomial] = 1;
  }

  ModMatrix psi = psi_connecting(W, f);
  const size_t n2 = psi.rows;
  TheoremCheck out;
  ModMatrix assembled(R, n2, N);
  for (const auto& s : slots) {
    SlotCheck sc;
    sc.label = s.label;
    ModMatrix kp = attached_cocycle(W, s, f);
    ModMatrix F = attached_massey(W, s, f);
    for (size_t i = 0; i < n2; ++i) assembled.at(i, s.monomial) = F.at(i, 0);

    ModMatrix cs = column_of(psi, s.monomial);
    sc.cochain_literal = (cs == F);

    ModMatrix lhs(R, n2, 1);
    for (size_t i = 0; i < n2; ++i) {
      uint64_t acc = 0;
      for (size_t j = 0; j < N; ++j)
        acc += static_cast<uint64_t>(s.eval_row[j]) * psi.at(i, j);
      lhs.at(i, 0) = R.reduce_u64(acc);
    }
    ModMatrix conn = connecting2(s.star, kp);
    ModMatrix w = f.mul(W.B.ses.sect).mul(s.pm.P).mul(s.star.incl.transpose());
    sc.correction_vanishes = w.is_zero();
    sc.projected_cochain = (lhs == conn.add(d1(s.star.sub, w)));
    if (class_level) {
      sc.class_literal = cohomologous2(s.star.sub, cs, F);
      sc.projected_class = cohomologous2(s.star.sub, lhs, F);
    }
    out.slots.push_back(sc);
  }
  out.decomposition_cochain = (psi == assembled);
  if (class_level) out.decomposition_class = cohomologous2(W.B.ses.sub, psi, assembled);
  return out;
}

bool DecompositionResult::all_cochain() const {
  if (decomposition_cochain != cocycles) return false;
  for (const auto& s : slots)
    if (s.cochain_literal != cocycles) return false;
  return true;
}

bool DecompositionResult::all_class() const {
  if (!class_level || decomposition_class != cocycles) return false;
  for (const auto& s : slots)
    if (s.class_literal != cocycles) return false;
  return true;
}

bool DecompositionResult::all_projected() const {
  for (const auto& s : slots) {
    if (s.projected_cochain != cocycles) return false;
    if (class_level && s.projected_class != cocycles) return false;
  }
  return true;
}

DecompositionResult run_decomposition(const Tower& W, const std::vector<Slot>& slots,
                                      const std::vector<ModMatrix>& cocycles,
                                      bool class_level) {
  DecompositionResult d;
  d.graded_rank = W.monomials();
  d.graded_labels = W.labels();
  d.cocycles = cocycles.size();
  d.class_level = class_level;
  d.evaluation = ModMatrix(W.T.R, slots.size(), W.monomials());
  d.evaluation_identity = true;
  for (size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    SlotTally t;
    t.label = s.label;
    t.eval_row = s.eval_row;
    d.slots.push_back(t);
    for (size_t j = 0; j < s.eval_row.size(); ++j) {
      d.evaluation.at(i, j) = s.eval_row[j];
      const uint32_t want = (s.monomial == j) ? 1u : 0u;
      if (s.eval_row[j] != want) d.evaluation_identity = false;
    }
  }
  for (const auto& f : cocycles) {
    TheoremCheck tc = check_theorem(W, slots, f, class_level);
    for (size_t i = 0; i < slots.size(); ++i) {
      const SlotCheck& sc = tc.slots[i];
      SlotTally& t = d.slots[i];
      t.cochain_literal += sc.cochain_literal;
      t.class_literal += sc.class_literal;
      t.projected_cochain += sc.projected_cochain;
      t.projected_class += sc.projected_class;
      t.correction_vanished += sc.correction_vanishes;
    }
    d.decomposition_cochain += tc.decomposition_cochain;
    d.decomposition_class += tc.decomposition_class;
  }
  return d;
}

GeneralCaseResult verify_general_case(const GroupPtr& G, const ModRing& R) {
  const bool ab = G->is_abelian();
  const std::string style = ab ? "abelian" : "heisenberg";
  Tower W = make_tower(G, GroupHom::identity(G), R, 1, style);
  auto chars = style_characters(W.ring, style);
  require_internal(chars.size() == W.monomials(),
                   "character family does not match the degree-one basis");

  GeneralCaseResult res;
  res.abelian_reduced = !ab;
  Tower W2;
  ModMatrix D;
  if (!ab) {
    Coimage ci = coimage(G, chars);
    W2 = make_tower(G, ci.projection, R, 1, "abelian");
    ModMatrix M = induced_ring_map(W.ring, W2.ring, ci.projection);
    D = ModMatrix(R, W.monomials(), W2.monomials());
    for (size_t m = 0; m < W.monomials(); ++m)
      D.set_row(m, W2.B.graded.coefficients(vec_mat(W.B.graded.elems[m], M)));
  }

  auto basis = cocycle_basis(W);
  res.basis_size = basis.size();
  const size_t ng = G->n;
  for (const auto& f : basis) {
    ModMatrix psi = psi_connecting(W, f);
    if (psi == psi_direct(W, f)) ++res.direct_agree;
    if (ab) {
      if (psi == psi_abelian(W, f)) ++res.abelian_agree;
    } else {
      if (psi.mul(D) == psi_abelian(W2, f)) ++res.abelian_agree;
    }
    ModMatrix target(R, ng * ng, W.monomials());
    for (size_t i = 0; i < chars.size(); ++i) {
      ModMatrix cup = cup_char_cochain(W.T, character_values(chars[i], R), f);
      for (size_t row = 0; row < cup.rows; ++row) target.at(row, i) = cup.at(row, 0);
    }
    if (cohomologous2(W.B.ses.sub, psi, target)) ++res.class_pass;
  }
  return res;
}

DecompositionResult cyclic_case_check() {
  const ModRing R(3, 1);
  auto G = make_group(FiniteGroup::cyclic(9));
  auto H = make_group(FiniteGroup::cyclic(3));
  GroupHom pi = GroupHom::from_generator_images(G, H, {H->gens[0]});
  Tower W = make_tower(G, pi, R, 2, "cyclic");
  Character chi = style_characters(W.ring, "cyclic")[0];
  std::vector<Slot> slots;
  slots.push_back(make_slot(W, "x^2", UnipotentHom::binomial(chi, R, 3), trivial_hom(H, R)));
  return run_decomposition(W, slots, cocycle_basis(W), true);
}

ModMatrix intro_xy_formula(const Tower& W, const std::vector<uint32_t>& chiR,
                           const std::vector<uint32_t>& psiR, const ModMatrix& f) {
  require_input(W.n == 2 && W.monomials() == 3 && W.B.smallq.dim() == 3,
                "the displayed formula needs a bicyclic degree-two tower");
  ModMatrix lamx = column_of(f, 1);
  ModMatrix lamy = column_of(f, 2);
  return cup_char_cochain(W.T, chiR, lamx).add(cup_cochain_char(W.T, lamy, psiR));
}

BicyclicCaseResult bicyclic_case_check() {
  const ModRing R(3, 1);
  auto G = make_group(FiniteGroup::abelian({3, 3}));
  Tower W = make_tower(G, GroupHom::identity(G), R, 2, "bicyclic");
  auto chars = style_characters(W.ring, "bicyclic");
  const Character& chi = chars[0];
  const Character& psi = chars[1];
  std::vector<Slot> slots;
  slots.push_back(make_slot(W, "x^2", UnipotentHom::binomial(chi, R, 3), trivial_hom(G, R)));
  slots.push_back(make_slot(W, "xy", UnipotentHom::binomial(chi, R, 2),
                            UnipotentHom::binomial(psi, R, 2)));
  slots.push_back(make_slot(W, "y^2", trivial_hom(G, R), UnipotentHom::binomial(psi, R, 3)));
  auto basis = cocycle_basis(W);

  BicyclicCaseResult res;
  res.dec = run_decomposition(W, slots, basis, true);
  auto chiR = character_values(chi, R);
  auto psiR = character_values(psi, R);
  for (const auto& f : basis) {
    ModMatrix cxy = column_of(psi_connecting(W, f), 1);
    if (cxy == intro_xy_formula(W, chiR, psiR, f)) ++res.intro_formula_pointwise;
  }
  return res;
}

HeisenbergResult heisenberg_check(uint32_t m, size_t n, size_t cocycle_count,
                                  uint64_t seed, bool class_level) {
  const ModRing R(3, 1);
  auto G = make_group(FiniteGroup::heisenberg(m));
  Tower W = make_tower(G, GroupHom::identity(G), R, n, "heisenberg");
  auto chars = style_characters(W.ring, "heisenberg");
  const Character& chi = chars[0];
  const Character& psi = chars[1];

  std::vector<Slot> slots;
  if (n == 2) {
    slots.push_back(make_slot(W, "x^2", UnipotentHom::binomial(chi, R, 3), trivial_hom(G, R)));
    slots.push_back(make_slot(W, "y^2", UnipotentHom::binomial(psi, R, 3), trivial_hom(G, R)));
    slots.push_back(make_slot(W, "yx", UnipotentHom::binomial(chi, R, 2),
                              UnipotentHom::binomial(psi, R, 2)));
    slots.push_back(
        make_slot(W, "z", UnipotentHom::heisenberg_quotient(G, R), trivial_hom(G, R)));
  } else if (n == 3) {
    UnipotentHom hq = UnipotentHom::heisenberg_quotient(G, R);
    slots.push_back(make_slot(W, "x^3", UnipotentHom::binomial(chi, R, 4), trivial_hom(G, R)));
    slots.push_back(make_slot(W, "xz", hq, UnipotentHom::binomial(chi, R, 2)));
    slots.push_back(make_slot(W, "yx^2", UnipotentHom::binomial(psi, R, 2),
                              UnipotentHom::binomial(chi, R, 3)));
    slots.push_back(make_slot(W, "y^2x", UnipotentHom::binomial(psi, R, 3),
                              UnipotentHom::binomial(chi, R, 2)));
    slots.push_back(make_slot(W, "y^3", UnipotentHom::binomial(psi, R, 4), trivial_hom(G, R)));
    slots.push_back(make_slot(W, "yz", UnipotentHom::binomial(psi, R, 2), hq));
  } else {
    throw input_error("no fixed slot family at this layer");
  }

  HeisenbergResult res;
  res.seed = seed;
  for (size_t k = 0; k <= n; ++k) res.graded_ranks.push_back(W.filt.graded_rank[k]);
  res.dec = run_decomposition(W, slots, random_cocycles(W, cocycle_count, seed), class_level);
  if (n == 2) {
    const Slot& z = slots.back();
    ModMatrix want(R, 4, 3);
    want.at(3, 0) = 1;  // central monomial evaluates to the corner unit
    res.pz_worked_values = (z.monomial_values == want);
  }
  return res;
}

ElemAbelianResult elem_abelian_check(uint32_t p, size_t r, size_t n) {
  const ModRing R(p, 1);
  std::vector<uint32_t> orders(r, p);
  auto G = make_group(FiniteGroup::abelian(orders));
  Tower W = make_tower(G, GroupHom::identity(G), R, n, "abelian");
  const size_t N = W.monomials();

  ElemAbelianResult res;
  res.N = N;

  // candidate characters: projective representatives over the generators
  std::vector<Slot> slots;
  ModMatrix rows(R, 0, N);
  Submodule span = Submodule::zero(R, N);
  std::vector<uint32_t> tuple(r, 0);
  while (slots.size() < N) {
    // advance to the next tuple
    size_t i = r;
    while (i > 0 && tuple[i - 1] + 1 == p) tuple[--i] = 0;
    if (i == 0) break;
    ++tuple[i - 1];
    size_t first = 0;
    while (first < r && tuple[first] == 0) ++first;
    if (first == r || tuple[first] != 1) continue;  // projective representative
    Character chi = Character::from_generator_values(G, R, tuple);
    std::string label = "p(";
    for (size_t t = 0; t < r; ++t) label += (t ? "," : "") + std::to_string(tuple[t]);
    label += ")";
    Slot s = make_slot(W, label, UnipotentHom::binomial(chi, R, n + 1), trivial_hom(G, R));
    if (!span.contains(s.eval_row)) {
      rows.append_row(s.eval_row);
      span = Submodule::from_generators(rows);
      slots.push_back(s);
    }
  }

  res.evaluation = rows;
  if (slots.size() == N) {
    try {
      res.dual_basis = invert(rows.transpose()).transpose();
      res.dual_basis_ok = true;
    } catch (const internal_error&) {
      res.dual_basis_ok = false;
    }
  }
  if (!res.dual_basis_ok) return res;

  auto basis = cocycle_basis(W);
  res.basis_size = basis.size();
  ModMatrix Et = rows.transpose();
  for (const auto& f : basis) {
    ModMatrix psi_y = psi_connecting(W, f).mul(Et);
    bool all = true;
    for (size_t j = 0; j < N && all; ++j) {
      ModMatrix Fj = attached_massey(W, slots[j], f);
      all = cohomologous2(W.T, column_of(psi_y, j), Fj);
    }
    if (all) ++res.class_pass;
  }
  return res;
}

bool ConnectingResult::ok() const {
  if (items.empty()) return false;
  for (const auto& it : items)
    if (it.pass != it.trials) return false;
  return true;
}

ConnectingResult connecting_check(size_t trials, uint64_t seed) {
  const ModRing R(3, 1);
  ConnectingResult res;
  res.seed = seed;

  struct Combo {
    std::string name;
    GroupPtr G;
    UnipotentHom phi, theta;
  };
  std::vector<Combo> combos;

  auto add_combo = [&](const std::string& name, const GroupPtr& G, const UnipotentHom& phi,
                       const UnipotentHom& theta) {
    combos.push_back(Combo{name, G, phi, theta});
  };

  auto Gc = make_group(FiniteGroup::cyclic(9));
  auto Gb = make_group(FiniteGroup::abelian({3, 3}));
  Character chi9 = Character::from_generator_values(Gc, ModRing(3, 2), {1});
  Character chi9b = Character::from_generator_values(Gc, ModRing(3, 2), {2});
  Character chib1 = Character::from_generator_values(Gb, ModRing(3, 1), {1, 0});
  Character chib2 = Character::from_generator_values(Gb, ModRing(3, 1), {0, 1});

  add_combo("cyclic a=2 over Z/9", Gc, UnipotentHom::binomial(chi9, R, 3), trivial_hom(Gc, R));
  add_combo("cyclic a=2 over (Z/3)^2", Gb, UnipotentHom::binomial(chib1, R, 3),
            trivial_hom(Gb, R));
  add_combo("bicyclic a=b=1 over Z/9", Gc, UnipotentHom::binomial(chi9, R, 2),
            UnipotentHom::binomial(chi9b, R, 2));
  add_combo("bicyclic a=b=1 over (Z/3)^2", Gb, UnipotentHom::binomial(chib1, R, 2),
            UnipotentHom::binomial(chib2, R, 2));

  for (size_t ci = 0; ci < combos.size(); ++ci) {
    const Combo& c = combos[ci];
    GMod T = trivial_module(R, c.G, 1);
    GModSES star = star_ses(c.phi, c.theta, T);
    Z1Space Z = z1_space(star.quo);
    SplitMix64 rng(seed + ci);
    ConnectingResult::Item item;
    item.name = c.name;
    item.trials = trials;
    for (size_t t = 0; t < trials; ++t) {
      ModMatrix kp = Z.evaluate(Z.random_cocycle(rng));
      ModMatrix conn = connecting2(star, kp);
      ModMatrix F = system_from_cocycle(c.phi, c.theta, T, kp).massey_cocycle();
      if (cohomologous2(star.sub, conn, F)) ++item.pass;
    }
    res.items.push_back(item);
  }
  return res;
}

bool BocklemmaResult::ok() const {
  if (items.empty()) return false;
  for (const auto& it : items)
    if (!it.match) return false;
  return true;
}

BocklemmaResult bocklemma_check() {
  const ModRing R(3, 1);
  BocklemmaResult res;
  std::vector<std::pair<std::string, GroupPtr>> groups;
  groups.emplace_back("Z/3", make_group(FiniteGroup::cyclic(3)));
  groups.emplace_back("(Z/3)^2", make_group(FiniteGroup::abelian({3, 3})));

  for (const auto& [hname, H] : groups) {
    GroupRing ring{R, H};
    Filtration F = augmentation_powers(ring, 3);
    GroupHom id = GroupHom::identity(H);
    QuotientCoords Q2 = quotient_coords(ring, F.powers[2], truncation_reps(F, 2, "abelian"));
    for (int amode = 0; amode < 2; ++amode) {
      GMod A = amode == 0 ? regular_module(ring) : quotient_module(id, Q2);
      const std::string aname = amode == 0 ? "Omega" : "Omega/I^2";
      for (size_t n = 1; n <= 2; ++n) {
        BocklemmaResult::Item item;
        item.name = "H=" + hname + " A=" + aname + " n=" + std::to_string(n);

        BocksteinSequence B = bockstein_ses(A, id, F, n, "abelian");
        Submodule cycles = bar_cycles1(B.ses.quo);
        ModMatrix span(R, 0, B.ses.sub.dim);
        for (size_t i = 0; i < cycles.rows.rows; ++i)
          span.append_row(homology_connecting(B.ses, cycles.rows.row(i)));
        ModMatrix rel = coinvariant_relations(B.ses.sub);
        for (size_t i = 0; i < rel.rows; ++i) span.append_row(rel.row(i));
        Submodule full = Submodule::from_generators(ModMatrix::identity(R, B.ses.sub.dim));
        FPModule coker = quotient(full, Submodule::from_generators(span));
        item.coker_factors = coker.exponents;

        if (amode == 0) {
          item.graded_factors = graded_piece(F, n).exponents;
        } else {
          ModMatrix gn(R, 0, Q2.dim());
          for (size_t i = 0; i < F.powers[n].rows.rows; ++i)
            gn.append_row(Q2.coords(F.powers[n].rows.row(i)));
          ModMatrix gn1(R, 0, Q2.dim());
          for (size_t i = 0; i < F.powers[n + 1].rows.rows; ++i)
            gn1.append_row(Q2.coords(F.powers[n + 1].rows.row(i)));
          FPModule gq = quotient(Submodule::from_generators(gn),
                                 Submodule::from_generators(gn1));
          item.graded_factors = gq.exponents;
        }
        item.match = (item.coker_factors == item.graded_factors);
        res.items.push_back(item);
      }
    }
  }
  return res;
}

}  // namespace bockmas
