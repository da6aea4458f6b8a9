#include "bockmas/cohomology.hpp"

#include "bockmas/errors.hpp"

namespace bockmas {

namespace {

// rows of f multiplied through act(g)^T, i.e. g . f(h) for all h at once
std::vector<uint32_t> acted_row(const GMod& M, const ModMatrix& AT, const ModMatrix& f,
                                uint32_t h) {
  (void)M;
  return vec_mat(f.row(h), AT);
}

}  // namespace

ModMatrix d1(const GMod& M, const ModMatrix& f) {
  const size_t n = M.G->n, m = M.dim;
  require_input(f.rows == n && f.cols == m, "cochain table shape");
  ModMatrix out(M.R, n * n, m);
  for (uint32_t g = 0; g < n; ++g) {
    ModMatrix AT = M.act[g].transpose();
    const std::vector<uint32_t> fg = f.row(g);
    for (uint32_t h = 0; h < n; ++h) {
      std::vector<uint32_t> v = acted_row(M, AT, f, h);
      v = vec_add(M.R, v, fg);
      v = vec_sub(M.R, v, f.row(M.G->mul(g, h)));
      out.set_row(size_t(g) * n + h, v);
    }
  }
  return out;
}

ModMatrix d2(const GMod& M, const ModMatrix& c) {
  const size_t n = M.G->n, m = M.dim;
  require_input(c.rows == n * n && c.cols == m, "2-cochain table shape");
  ModMatrix out(M.R, n * n * n, m);
  for (uint32_t g = 0; g < n; ++g) {
    ModMatrix AT = M.act[g].transpose();
    for (uint32_t h = 0; h < n; ++h) {
      uint32_t gh = M.G->mul(g, h);
      for (uint32_t k = 0; k < n; ++k) {
        // g.c(h,k) - c(gh,k) + c(g,hk) - c(g,h)
        std::vector<uint32_t> v = vec_mat(c.row(size_t(h) * n + k), AT);
        v = vec_sub(M.R, v, c.row(size_t(gh) * n + k));
        v = vec_add(M.R, v, c.row(size_t(g) * n + M.G->mul(h, k)));
        v = vec_sub(M.R, v, c.row(size_t(g) * n + h));
        out.set_row((size_t(g) * n + h) * n + k, v);
      }
    }
  }
  return out;
}

bool is_cocycle1(const GMod& M, const ModMatrix& f) {
  const size_t n = M.G->n;
  if (f.rows != n || f.cols != M.dim) return false;
  if (!vec_is_zero(f.row(0))) return false;
  for (uint32_t g = 0; g < n; ++g) {
    ModMatrix AT = M.act[g].transpose();
    const std::vector<uint32_t> fg = f.row(g);
    for (uint32_t h = 0; h < n; ++h) {
      std::vector<uint32_t> v = vec_add(M.R, vec_mat(f.row(h), AT), fg);
      if (v != f.row(M.G->mul(g, h))) return false;
    }
  }
  return true;
}

bool is_cocycle2(const GMod& M, const ModMatrix& c) {
  return d2(M, c).is_zero();
}

bool is_cocycle2_sampled(const GMod& M, const ModMatrix& c, SplitMix64& rng, size_t trials) {
  const size_t n = M.G->n;
  require_input(c.rows == n * n && c.cols == M.dim, "2-cochain table shape");
  for (size_t t = 0; t < trials; ++t) {
    uint32_t g = static_cast<uint32_t>(rng.below(n));
    uint32_t h = static_cast<uint32_t>(rng.below(n));
    uint32_t k = static_cast<uint32_t>(rng.below(n));
    ModMatrix AT = M.act[g].transpose();
    std::vector<uint32_t> v = vec_mat(c.row(size_t(h) * n + k), AT);
    v = vec_sub(M.R, v, c.row(size_t(M.G->mul(g, h)) * n + k));
    v = vec_add(M.R, v, c.row(size_t(g) * n + M.G->mul(h, k)));
    v = vec_sub(M.R, v, c.row(size_t(g) * n + h));
    if (!vec_is_zero(v)) return false;
  }
  return true;
}

ModMatrix coboundary1_table(const GMod& M, const std::vector<uint32_t>& v) {
  require_input(v.size() == M.dim, "vector length");
  ModMatrix out(M.R, M.G->n, M.dim);
  for (uint32_t g = 0; g < M.G->n; ++g)
    out.set_row(g, vec_sub(M.R, M.apply(g, v), v));
  return out;
}

Z1Space z1_space(const GMod& M) {
  const auto& G = M.G;
  const size_t n = G->n, m = M.dim, k = G->gens.size();
  require_input(k > 0 || n == 1, "group without generators");
  Z1Space S{M, {}, Submodule::zero(M.R, k * m), Submodule::zero(M.R, k * m),
            FPModule{}};
  S.E.assign(n, ModMatrix(M.R, k * m, m));

  // selector block j filled with act(g')^T added onto the parent's matrix
  for (size_t idx = 1; idx < n; ++idx) {
    uint32_t g = G->bfs_order[idx];
    auto [par, j] = G->bfs_parent[g];
    ModMatrix Eg = S.E[par];
    ModMatrix AT = M.act[par].transpose();
    for (size_t r = 0; r < m; ++r) {
      const uint32_t* src = AT.row_ptr(r);
      uint32_t* dst = Eg.row_ptr(j * m + r);
      for (size_t c = 0; c < m; ++c) dst[c] = M.R.add(dst[c], src[c]);
    }
    S.E[g] = std::move(Eg);
  }

  KernelRefiner ref(M.R, k * m);
  for (uint32_t g = 0; g < n; ++g) {
    for (size_t j = 0; j < k; ++j) {
      uint32_t gs = G->mul(g, G->gens[j]);
      if (G->bfs_parent[gs] == std::make_pair(g, static_cast<uint32_t>(j))) continue;
      // constraint columns of E[g] + Sel_j act(g)^T - E[gs]
      ModMatrix C = S.E[g];
      ModMatrix AT = M.act[g].transpose();
      for (size_t r = 0; r < m; ++r) {
        const uint32_t* src = AT.row_ptr(r);
        uint32_t* dst = C.row_ptr(j * m + r);
        for (size_t c = 0; c < m; ++c) dst[c] = M.R.add(dst[c], src[c]);
      }
      C = C.sub(S.E[gs]);
      for (size_t c = 0; c < m; ++c) {
        std::vector<uint32_t> col(k * m);
        for (size_t r = 0; r < k * m; ++r) col[r] = C.at(r, c);
        ref.add_constraint_dense(col);
      }
    }
  }
  S.Z = Submodule{k * m, howell(ref.K)};

  ModMatrix D(M.R, m, 0);
  {
    std::vector<ModMatrix> blocks;
    for (size_t j = 0; j < k; ++j) {
      ModMatrix Bj = M.act[G->gens[j]].transpose();
      for (size_t r = 0; r < m; ++r) Bj.at(r, r) = M.R.sub(Bj.at(r, r), 1);
      blocks.push_back(std::move(Bj));
    }
    D = blocks.empty() ? ModMatrix(M.R, m, 0) : blocks[0];
    for (size_t j = 1; j < k; ++j) D = D.hstack(blocks[j]);
  }
  S.B = Submodule::from_generators(D);
  require_internal(S.Z.contains(S.B), "coboundaries must be cocycles");
  S.H = quotient(S.Z, S.B);
  return S;
}

ModMatrix Z1Space::evaluate(const std::vector<uint32_t>& u) const {
  require_input(u.size() == unknown_dim(), "unknown-vector length");
  ModMatrix f(M.R, M.G->n, M.dim);
  for (uint32_t g = 0; g < M.G->n; ++g) f.set_row(g, vec_mat(u, E[g]));
  return f;
}

std::vector<uint32_t> Z1Space::value_at(const std::vector<uint32_t>& u, uint32_t g) const {
  return vec_mat(u, E[g]);
}

std::vector<uint32_t> Z1Space::unknowns_of_table(const ModMatrix& f) const {
  require_input(f.rows == M.G->n && f.cols == M.dim, "cochain table shape");
  std::vector<uint32_t> u;
  u.reserve(unknown_dim());
  for (uint32_t s : M.G->gens) {
    auto row = f.row(s);
    u.insert(u.end(), row.begin(), row.end());
  }
  return u;
}

std::vector<uint32_t> Z1Space::random_cocycle(SplitMix64& rng) const {
  std::vector<uint32_t> u(unknown_dim(), 0);
  for (size_t i = 0; i < Z.rows.rows; ++i) {
    uint32_t c = static_cast<uint32_t>(rng.below(M.R.q));
    if (c) vec_addmul_inplace(M.R, u, Z.rows.row(i), c);
  }
  return u;
}

std::optional<ModMatrix> coboundary_preimage(const GMod& M, const ModMatrix& c) {
  const size_t n = M.G->n, m = M.dim;
  require_input(c.rows == n * n && c.cols == m, "2-cochain table shape");
  for (uint32_t h = 0; h < n; ++h) {
    require_input(vec_is_zero(c.row(h)) && vec_is_zero(c.row(size_t(h) * n)),
                  "2-cochain must be normalized");
  }
  AffineSolver solver(M.R, (n - 1) * m);
  auto block = [m](uint32_t g) { return (size_t(g) - 1) * m; };
  std::vector<std::pair<size_t, uint32_t>> sp;
  for (uint32_t g = 1; g < n && solver.feasible; ++g) {
    const ModMatrix& A = M.act[g];
    for (uint32_t h = 1; h < n && solver.feasible; ++h) {
      uint32_t gh = M.G->mul(g, h);
      for (size_t t = 0; t < m; ++t) {
        sp.clear();
        for (size_t u2 = 0; u2 < m; ++u2) {
          uint32_t a = A.at(t, u2);
          if (a) sp.emplace_back(block(h) + u2, a);
        }
        sp.emplace_back(block(g) + t, 1);
        if (gh != 0) sp.emplace_back(block(gh) + t, M.R.q - 1);
        solver.add_constraint(sp, c.at(size_t(g) * n + h, t));
      }
    }
  }
  if (!solver.feasible) return std::nullopt;
  ModMatrix w(M.R, n, m);
  for (uint32_t g = 1; g < n; ++g)
    for (size_t t = 0; t < m; ++t) w.at(g, t) = solver.x[block(g) + t];
  return w;
}

bool cohomologous2(const GMod& M, const ModMatrix& a, const ModMatrix& b) {
  return coboundary_preimage(M, a.sub(b)).has_value();
}

std::vector<uint32_t> character_values(const Character& chi, const ModRing& R) {
  require_input(chi.A.p == R.p && chi.A.s >= R.s,
                "character modulus incompatible with the coefficient ring");
  std::vector<uint32_t> v(chi.value.size());
  for (size_t g = 0; g < v.size(); ++g) v[g] = chi.value[g] % R.q;
  return v;
}

ModMatrix cup_char_cochain(const GMod& M, const std::vector<uint32_t>& chi, const ModMatrix& f) {
  const size_t n = M.G->n, m = M.dim;
  require_input(chi.size() == n && f.rows == n && f.cols == m, "cup factor shapes");
  ModMatrix out(M.R, n * n, m);
  for (uint32_t g = 0; g < n; ++g) {
    if (chi[g] % M.R.q == 0) continue;
    ModMatrix AT = M.act[g].transpose();
    for (uint32_t h = 0; h < n; ++h)
      out.set_row(size_t(g) * n + h, vec_scaled(M.R, vec_mat(f.row(h), AT), chi[g]));
  }
  return out;
}

ModMatrix cup_cochain_char(const GMod& M, const ModMatrix& f, const std::vector<uint32_t>& chi) {
  const size_t n = M.G->n, m = M.dim;
  require_input(chi.size() == n && f.rows == n && f.cols == m, "cup factor shapes");
  ModMatrix out(M.R, n * n, m);
  for (uint32_t g = 0; g < n; ++g) {
    const std::vector<uint32_t> fg = f.row(g);
    for (uint32_t h = 0; h < n; ++h)
      if (chi[h] % M.R.q) out.set_row(size_t(g) * n + h, vec_scaled(M.R, fg, chi[h]));
  }
  return out;
}

ModMatrix connecting2(const GModSES& S, const ModMatrix& f) {
  const size_t n = S.mid.G->n;
  require_input(f.rows == n && f.cols == S.quo.dim, "cocycle table shape");
  ModMatrix lift = f.mul(S.sect);
  ModMatrix c = d1(S.mid, lift);
  HowellData hd = howell_full(S.incl);
  ModMatrix out(S.sub.R, n * n, S.sub.dim);
  for (size_t r = 0; r < c.rows; ++r) {
    SolveResult sr = solve(hd, c.row(r));
    require_internal(sr.particular.has_value(),
                     "boundary of the lifted cocycle must come from the subobject");
    out.set_row(r, *sr.particular);
  }
  return out;
}

ModMatrix bar_d1(const GMod& A) {
  const size_t n = A.G->n, m = A.dim;
  ModMatrix D(A.R, n * m, m);
  for (uint32_t h = 0; h < n; ++h) {
    ModMatrix AT = A.act[h].transpose();
    for (size_t r = 0; r < m; ++r) {
      const uint32_t* src = AT.row_ptr(r);
      uint32_t* dst = D.row_ptr(size_t(h) * m + r);
      for (size_t c = 0; c < m; ++c) dst[c] = src[c];
      dst[r] = A.R.sub(dst[r], 1);
    }
  }
  return D;
}

Submodule bar_cycles1(const GMod& A) {
  return Submodule{A.G->n * A.dim, howell_full(bar_d1(A)).K};
}

std::vector<uint32_t> bar_d2_row(const GMod& A, uint32_t g, uint32_t h,
                                 const std::vector<uint32_t>& v) {
  const size_t n = A.G->n, m = A.dim;
  require_input(v.size() == m, "chain coefficient length");
  std::vector<uint32_t> out(n * m, 0);
  auto add_block = [&](uint32_t elt, const std::vector<uint32_t>& w, bool negate) {
    for (size_t i = 0; i < m; ++i) {
      uint32_t cur = out[size_t(elt) * m + i];
      out[size_t(elt) * m + i] = negate ? A.R.sub(cur, w[i]) : A.R.add(cur, w[i]);
    }
  };
  add_block(h, v, false);                    // [h] (x) v
  add_block(A.G->mul(g, h), v, true);        // -[gh] (x) v
  add_block(g, A.apply(h, v), false);        // [g] (x) h.v
  return out;
}

ModMatrix coinvariant_relations(const GMod& M) {
  ModMatrix out(M.R, 0, M.dim);
  std::vector<uint32_t> e(M.dim, 0);
  for (uint32_t h = 1; h < M.G->n; ++h)
    for (size_t i = 0; i < M.dim; ++i) {
      e.assign(M.dim, 0);
      e[i] = 1;
      out.append_row(vec_sub(M.R, M.apply(h, e), e));
    }
  return out;
}

std::vector<uint32_t> homology_connecting(const GModSES& S, const std::vector<uint32_t>& xi) {
  const size_t n = S.mid.G->n, mq = S.quo.dim, mm = S.mid.dim;
  require_input(xi.size() == n * mq, "1-chain length");
  std::vector<uint32_t> w(mm, 0);
  for (uint32_t h = 0; h < n; ++h) {
    std::vector<uint32_t> blockq(xi.begin() + size_t(h) * mq, xi.begin() + (size_t(h) + 1) * mq);
    if (vec_is_zero(blockq)) continue;
    std::vector<uint32_t> lift = vec_mat(blockq, S.sect);
    w = vec_add(S.mid.R, w, vec_sub(S.mid.R, S.mid.apply(h, lift), lift));
  }
  HowellData hd = howell_full(S.incl);
  SolveResult sr = solve(hd, w);
  require_internal(sr.particular.has_value(),
                   "boundary of the lifted cycle must come from the subobject");
  return *sr.particular;
}

}  // namespace bockmas
