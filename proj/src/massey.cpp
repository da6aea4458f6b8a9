#include "bockmas/massey.hpp"

#include "bockmas/binomial.hpp"
#include "bockmas/errors.hpp"
#include "bockmas/fpmodule.hpp"

namespace bockmas {

namespace {

// dst += a * b where exactly one factor may be a T-vector
void addmul_typed(const ModRing& R, std::vector<uint32_t>& dst, const std::vector<uint32_t>& a,
                  const std::vector<uint32_t>& b) {
  if (a.size() == 1 && b.size() == 1) {
    dst[0] = R.add(dst[0], R.mul(a[0], b[0]));
    return;
  }
  if (a.size() == 1) {
    require_internal(dst.size() == b.size(), "typed product shape");
    for (size_t u = 0; u < b.size(); ++u) dst[u] = R.add(dst[u], R.mul(a[0], b[u]));
    return;
  }
  require_internal(b.size() == 1 && dst.size() == a.size(), "typed product shape");
  for (size_t u = 0; u < a.size(); ++u) dst[u] = R.add(dst[u], R.mul(a[u], b[0]));
}

}  // namespace

UgmaElem ugma_identity(const UgmaShape& S) {
  UgmaElem x;
  x.e.assign(S.size, std::vector<std::vector<uint32_t>>(S.size));
  for (size_t i = 0; i < S.size; ++i)
    for (size_t j = i + 1; j < S.size; ++j) x.e[i][j].assign(S.len(i, j), 0);
  return x;
}

UgmaElem ugma_mul(const UgmaShape& S, const UgmaElem& x, const UgmaElem& y) {
  UgmaElem z = ugma_identity(S);
  for (size_t i = 0; i < S.size; ++i)
    for (size_t j = i + 1; j < S.size; ++j) {
      std::vector<uint32_t>& out = z.e[i][j];
      for (size_t u = 0; u < out.size(); ++u)
        out[u] = S.R.add(x.e[i][j][u], y.e[i][j][u]);
      for (size_t l = i + 1; l < j; ++l) addmul_typed(S.R, out, x.e[i][l], y.e[l][j]);
    }
  return z;
}

UgmaElem ugma_inverse(const UgmaShape& S, const UgmaElem& x) {
  UgmaElem y = ugma_identity(S);
  for (size_t band = 1; band < S.size; ++band)
    for (size_t i = 0; i + band < S.size; ++i) {
      size_t j = i + band;
      std::vector<uint32_t> acc = x.e[i][j];
      for (size_t l = i + 1; l < j; ++l) addmul_typed(S.R, acc, x.e[i][l], y.e[l][j]);
      for (size_t u = 0; u < acc.size(); ++u) y.e[i][j][u] = S.R.neg(acc[u]);
    }
  return y;
}

UgmaElem ugma_act(const UgmaShape& S, const GMod& T, uint32_t g, const UgmaElem& x) {
  UgmaElem y = x;
  for (size_t i = 0; i < S.size; ++i)
    for (size_t j = i + 1; j < S.size; ++j)
      if (S.tval(i, j)) y.e[i][j] = T.apply(g, x.e[i][j]);
  return y;
}

bool ugma_equal(const UgmaShape& S, const UgmaElem& x, const UgmaElem& y, bool ignore_corner) {
  for (size_t i = 0; i < S.size; ++i)
    for (size_t j = i + 1; j < S.size; ++j) {
      if (ignore_corner && i == 0 && j == S.size - 1) continue;
      if (x.e[i][j] != y.e[i][j]) return false;
    }
  return true;
}

void UnipotentHom::validate() const {
  require_internal(mat.size() == G->n, "one matrix per group element");
  for (const auto& M : mat) {
    require_internal(M.rows == size && M.cols == size, "matrix shape");
    for (size_t i = 0; i < size; ++i) {
      require_internal(M.at(i, i) == 1, "diagonal must be one");
      for (size_t j = 0; j < i; ++j)
        require_internal(M.at(i, j) == 0, "matrix must be upper triangular");
    }
  }
  for (uint32_t g = 0; g < G->n; ++g)
    for (uint32_t h = 0; h < G->n; ++h)
      require_internal(mat[g].mul(mat[h]) == mat[G->mul(g, h)],
                       "matrices are not multiplicative");
}

UnipotentHom UnipotentHom::binomial(const Character& chi, const ModRing& R, size_t size) {
  require_input(size >= 1, "matrix size");
  require_input(chi.A.p == R.p, "character and coefficients at different primes");
  // (size-1) < p^(t-s+1), in integer form (size-1)*p^s < p^(t+1)
  require_hypothesis(static_cast<uint64_t>(size - 1) * R.q <
                         static_cast<uint64_t>(chi.A.q) * chi.A.p,
                     "character modulus too coarse for binomial entries of this size");
  UnipotentHom U{chi.G, R, size, {}};
  U.mat.reserve(chi.G->n);
  for (uint32_t g = 0; g < chi.G->n; ++g) {
    ModMatrix M = ModMatrix::identity(R, size);
    for (size_t i = 0; i < size; ++i)
      for (size_t j = i + 1; j < size; ++j)
        M.at(i, j) = binom_mod(R, chi(g), static_cast<uint32_t>(j - i));
    U.mat.push_back(std::move(M));
  }
  return U;
}

UnipotentHom UnipotentHom::heisenberg_quotient(const GroupPtr& H, const ModRing& R) {
  require_input(H->gens.size() == 2, "expected a two-generator group");
  const uint32_t X = H->gens[0], Y = H->gens[1];
  const uint32_t m = static_cast<uint32_t>(H->order_of(X));
  require_hypothesis(m % R.q == 0, "coefficient ring is not a quotient of the coordinate ring");
  uint32_t Z = H->mul(H->mul(X, Y), H->inverse(H->mul(Y, X)));
  require_hypothesis(Z != 0 && H->order_of(Z) == m, "commutator does not generate the center");

  uint32_t t = 0;
  {
    uint32_t mm = m;
    while (mm % R.p == 0) mm /= R.p, ++t;
    require_input(mm == 1, "generator order is not a power of p");
  }
  ModRing A(R.p, t);
  Character chi = Character::from_generator_values(H, A, {1, 0});
  Character psi = Character::from_generator_values(H, A, {0, 1});

  UnipotentHom U{H, R, 3, {}};
  U.mat.reserve(H->n);
  for (uint32_t h = 0; h < H->n; ++h) {
    uint32_t a = chi(h), b = psi(h);
    // normal form h = Y^b X^a Z^c isolates the central coordinate exactly
    uint32_t xa = H->pow(X, a), yb = H->pow(Y, b);
    uint32_t rem = H->mul(H->inverse(H->mul(yb, xa)), h);
    uint32_t c = 0, zc = 0;
    while (zc != rem) {
      zc = H->mul(zc, Z);
      ++c;
      require_internal(c <= m, "element is not in normal form");
    }
    ModMatrix M = ModMatrix::identity(R, 3);
    M.at(0, 1) = a % R.q;
    M.at(1, 2) = b % R.q;
    M.at(0, 2) = c % R.q;
    U.mat.push_back(std::move(M));
  }
  U.validate();
  return U;
}

UnipotentHom UnipotentHom::pullback(const UnipotentHom& on_quotient, const GroupHom& pi) {
  require_input(pi.cod.get() == on_quotient.G.get(), "pullback along a mismatched map");
  UnipotentHom U{pi.dom, on_quotient.R, on_quotient.size, {}};
  U.mat.reserve(pi.dom->n);
  for (uint32_t g = 0; g < pi.dom->n; ++g) U.mat.push_back(on_quotient.mat[pi(g)]);
  return U;
}

void DefiningSystem::validate() const {
  const size_t n = T.G->n;
  require_internal(rho.size() == n, "one element per group member");
  require_internal(ugma_equal(shape, rho[0], ugma_identity(shape), false),
                   "identity must map to the identity");
  for (const auto& x : rho) {
    require_internal(x.e.size() == shape.size, "element shape");
    const auto& corner = x.e[0][shape.size - 1];
    require_internal(vec_is_zero(corner), "stored corner entries must be zero");
  }
  for (uint32_t g = 0; g < n; ++g)
    for (uint32_t h = 0; h < n; ++h) {
      UgmaElem prod = ugma_mul(shape, rho[g], ugma_act(shape, T, g, rho[h]));
      require_internal(ugma_equal(shape, prod, rho[T.G->mul(g, h)], true),
                       "defining system fails the cocycle law");
    }
}

bool DefiningSystem::validate_sampled(SplitMix64& rng, size_t trials) const {
  const size_t n = T.G->n;
  for (size_t t = 0; t < trials; ++t) {
    uint32_t g = static_cast<uint32_t>(rng.below(n));
    uint32_t h = static_cast<uint32_t>(rng.below(n));
    UgmaElem prod = ugma_mul(shape, rho[g], ugma_act(shape, T, g, rho[h]));
    if (!ugma_equal(shape, prod, rho[T.G->mul(g, h)], true)) return false;
  }
  return true;
}

ModMatrix DefiningSystem::massey_cocycle() const {
  const size_t n = T.G->n, N = shape.size, r = shape.r;
  ModMatrix out(shape.R, n * n, r);
  for (uint32_t g = 0; g < n; ++g)
    for (uint32_t h = 0; h < n; ++h) {
      std::vector<uint32_t> acc(r, 0);
      for (size_t l = 1; l + 1 < N; ++l) {
        const auto& left = rho[g].e[0][l];
        const auto& right = rho[h].e[l][N - 1];
        if (l < shape.tcut) {
          // scalar * (g . T-value)
          if (left[0])
            addmul_typed(shape.R, acc, left, T.apply(g, right));
        } else {
          addmul_typed(shape.R, acc, left, right);
        }
      }
      out.set_row(size_t(g) * n + h, acc);
    }
  return out;
}

DefiningSystem block_system(const UnipotentHom& phi, const UnipotentHom& theta, const GMod& T,
                            const ModMatrix& kappa_table) {
  require_input(phi.G.get() == T.G.get() && theta.G.get() == T.G.get(),
                "system components over different groups");
  const size_t a1 = phi.size, b1 = theta.size, r = T.dim, n = T.G->n;
  require_input(kappa_table.rows == n && kappa_table.cols == a1 * b1 * r,
                "kappa table shape");
  DefiningSystem D{UgmaShape{T.R, a1 + b1, a1, r}, T, {}};
  D.rho.reserve(n);
  for (uint32_t g = 0; g < n; ++g) {
    UgmaElem x = ugma_identity(D.shape);
    for (size_t i = 0; i < a1; ++i)
      for (size_t j = i + 1; j < a1; ++j) x.e[i][j][0] = phi.mat[g].at(i, j);
    for (size_t i = 0; i < b1; ++i)
      for (size_t j = i + 1; j < b1; ++j) x.e[a1 + i][a1 + j][0] = theta.mat[g].at(i, j);
    for (size_t i = 0; i < a1; ++i)
      for (size_t j = 0; j < b1; ++j) {
        if (i == 0 && j == b1 - 1) continue;  // proper system: corner stays zero
        for (size_t u = 0; u < r; ++u)
          x.e[i][a1 + j][u] = kappa_table.at(g, (i * b1 + j) * r + u);
      }
    D.rho.push_back(std::move(x));
  }
  return D;
}

GMod star_module(const UnipotentHom& phi, const UnipotentHom& theta, const GMod& T) {
  require_input(phi.G.get() == T.G.get() && theta.G.get() == T.G.get(),
                "star factors over different groups");
  GMod M{T.R, T.G, phi.size * theta.size * T.dim, {}};
  M.act.reserve(T.G->n);
  for (uint32_t g = 0; g < T.G->n; ++g) {
    ModMatrix thinv = invert(theta.mat[g]).transpose();
    M.act.push_back(phi.mat[g].kronecker(thinv).kronecker(T.act[g]));
  }
  return M;
}

GModSES star_ses(const UnipotentHom& phi, const UnipotentHom& theta, const GMod& T) {
  const size_t b1 = theta.size, r = T.dim;
  GModSES S;
  S.mid = star_module(phi, theta, T);
  S.sub = T;
  const size_t mid = S.mid.dim, corner0 = (b1 - 1) * r;
  S.incl = ModMatrix(T.R, r, mid);
  for (size_t u = 0; u < r; ++u) S.incl.at(u, corner0 + u) = 1;
  S.proj = ModMatrix(T.R, mid, mid - r);
  S.sect = ModMatrix(T.R, mid - r, mid);
  size_t col = 0;
  for (size_t c = 0; c < mid; ++c) {
    if (c >= corner0 && c < corner0 + r) continue;
    S.proj.at(c, col) = 1;
    S.sect.at(col, c) = 1;
    ++col;
  }
  S.quo = GMod{T.R, T.G, mid - r, {}};
  S.quo.act.reserve(T.G->n);
  for (uint32_t g = 0; g < T.G->n; ++g)
    S.quo.act.push_back(S.proj.transpose().mul(S.mid.act[g]).mul(S.sect.transpose()));
  return S;
}

DefiningSystem system_from_cocycle(const UnipotentHom& phi, const UnipotentHom& theta,
                                   const GMod& T, const ModMatrix& kprime) {
  const size_t a1 = phi.size, b1 = theta.size, r = T.dim, n = T.G->n;
  require_input(kprime.rows == n && kprime.cols == a1 * b1 * r - r, "cocycle table shape");
  // embed with zero corner, then right-multiply by theta blockwise
  ModMatrix kappa(T.R, n, a1 * b1 * r);
  for (uint32_t g = 0; g < n; ++g) {
    size_t col = 0;
    std::vector<uint32_t> kp(a1 * b1 * r, 0);
    for (size_t c = 0; c < a1 * b1 * r; ++c) {
      if (c >= (b1 - 1) * r && c < b1 * r) continue;  // corner block of row 0
      kp[c] = kprime.at(g, col++);
    }
    for (size_t i = 0; i < a1; ++i)
      for (size_t j = 0; j < b1; ++j)
        for (size_t u = 0; u < r; ++u) {
          uint64_t acc = 0;
          for (size_t l = 0; l <= j; ++l)
            acc += static_cast<uint64_t>(kp[(i * b1 + l) * r + u]) *
                   theta.mat[g].at(l, j);
          kappa.at(g, (i * b1 + j) * r + u) = static_cast<uint32_t>(acc % T.R.q);
        }
  }
  return block_system(phi, theta, T, kappa);
}

ModMatrix cocycle_from_system(const UnipotentHom& phi, const UnipotentHom& theta,
                              const DefiningSystem& D) {
  const size_t a1 = phi.size, b1 = theta.size, r = D.shape.r, n = D.T.G->n;
  require_input(D.shape.size == a1 + b1 && D.shape.tcut == a1, "system shape mismatch");
  ModMatrix out(D.T.R, n, a1 * b1 * r - r);
  for (uint32_t g = 0; g < n; ++g) {
    ModMatrix thinv = invert(theta.mat[g]);
    size_t col = 0;
    for (size_t i = 0; i < a1; ++i)
      for (size_t j = 0; j < b1; ++j) {
        if (i == 0 && j == b1 - 1) continue;
        for (size_t u = 0; u < r; ++u) {
          uint64_t acc = 0;
          for (size_t l = 0; l <= j; ++l)
            acc += static_cast<uint64_t>(D.rho[g].e[i][a1 + l][u]) * thinv.at(l, j);
          out.at(g, col + u) = static_cast<uint32_t>(acc % D.T.R.q);
        }
        col += r;
      }
  }
  return out;
}

PMap p_map(const UnipotentHom& phiH, const UnipotentHom& thetaH, const GMod& T,
           const BocksteinSequence& B, const GModSES& star) {
  const GroupRing& ring = B.big.ring;
  require_input(phiH.G.get() == ring.H.get() && thetaH.G.get() == ring.H.get(),
                "evaluation homomorphisms must live over the ring's group");
  const size_t a1 = phiH.size, b1 = thetaH.size, r = T.dim;
  const size_t D = B.big.dim(), d = B.smallq.dim(), blocks = a1 * b1;
  require_input(star.mid.dim == blocks * r, "star module does not match the homomorphisms");

  // sv(h) = phi(h) . e . theta(h)^{-1} with e the elementary T-slot at (a1-1, 0)
  ModMatrix SV(ring.R, ring.H->n, blocks);
  for (uint32_t h = 0; h < ring.H->n; ++h) {
    ModMatrix thinv = invert(thetaH.mat[h]);
    for (size_t i = 0; i < a1; ++i)
      for (size_t j = 0; j < b1; ++j)
        SV.at(h, i * b1 + j) = ring.R.mul(phiH.mat[h].at(i, a1 - 1), thinv.at(0, j));
  }
  ModMatrix RepM(ring.R, 0, ring.rank());
  for (const auto& rep : B.big.reps) RepM.append_row(rep);
  ModMatrix Mfull = RepM.mul(SV);  // D x blocks

  PMap pm;
  pm.P = ModMatrix(ring.R, r * D, blocks * r);
  for (size_t u = 0; u < r; ++u)
    for (size_t i = 0; i < D; ++i)
      for (size_t ij = 0; ij < blocks; ++ij)
        pm.P.at(u * D + i, ij * r + u) = Mfull.at(i, ij);

  // degree-n layer must land in the corner slot (0, b1-1)
  for (size_t i = d; i < D; ++i)
    for (size_t ij = 0; ij < blocks; ++ij)
      if (ij != b1 - 1)
        require_hypothesis(Mfull.at(i, ij) == 0,
                           "evaluation map does not send the top layer to the corner");

  // equivariance against the diagonal action on both sides
  for (uint32_t g = 0; g < B.ses.mid.G->n; ++g)
    require_hypothesis(B.ses.mid.act[g].transpose().mul(pm.P) ==
                           pm.P.mul(star.mid.act[g].transpose()),
                       "evaluation map is not equivariant");

  pm.Pbar = B.ses.sect.mul(pm.P).mul(star.proj);
  pm.Psub = B.ses.incl.mul(pm.P).mul(star.incl.transpose());
  return pm;
}

}  // namespace bockmas
