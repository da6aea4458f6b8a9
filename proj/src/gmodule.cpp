#include "bockmas/gmodule.hpp"

#include "bockmas/errors.hpp"
#include "bockmas/howell.hpp"

namespace bockmas {

std::vector<uint32_t> GMod::apply(uint32_t g, const std::vector<uint32_t>& v) const {
  require_internal(g < G->n && v.size() == dim, "module action arguments out of range");
  const ModMatrix& A = act[g];
  std::vector<uint32_t> out(dim, 0);
  const uint64_t q = R.q;
  for (size_t i = 0; i < dim; ++i) {
    const uint32_t* row = A.row_ptr(i);
    uint64_t acc = 0;
    for (size_t j = 0; j < dim; ++j) acc = (acc + static_cast<uint64_t>(row[j]) * v[j]) % q;
    out[i] = static_cast<uint32_t>(acc);
  }
  return out;
}

void GMod::validate() const {
  require_internal(act.size() == G->n, "one action matrix per group element");
  for (const auto& A : act)
    require_internal(A.rows == dim && A.cols == dim, "action matrix shape");
  require_internal(act[0] == ModMatrix::identity(R, dim), "identity must act trivially");
  for (uint32_t g = 0; g < G->n; ++g)
    for (uint32_t h = 0; h < G->n; ++h)
      require_internal(act[g].mul(act[h]) == act[G->mul(g, h)],
                       "action matrices are not multiplicative");
}

GMod trivial_module(const ModRing& R, const GroupPtr& G, size_t dim) {
  GMod M{R, G, dim, {}};
  M.act.assign(G->n, ModMatrix::identity(R, dim));
  return M;
}

GMod regular_module(const GroupRing& ring) {
  const auto& H = ring.H;
  GMod M{ring.R, H, ring.rank(), {}};
  M.act.reserve(H->n);
  for (uint32_t h = 0; h < H->n; ++h) {
    ModMatrix A(ring.R, M.dim, M.dim);
    for (uint32_t g = 0; g < H->n; ++g) A.at(H->mul(h, g), g) = 1;  // L(h)^T
    M.act.push_back(std::move(A));
  }
  return M;
}

GMod quotient_module(const GroupHom& pi, const QuotientCoords& Q) {
  require_input(pi.cod.get() == Q.ring.H.get(), "projection must land in the ring's group");
  GMod M{Q.ring.R, pi.dom, Q.dim(), {}};
  M.act.reserve(pi.dom->n);
  for (uint32_t g = 0; g < pi.dom->n; ++g)
    M.act.push_back(Q.act_left_matrix(pi(g)).transpose());
  return M;
}

GMod tensor_with_quotient(const GMod& T, const GroupHom& pi, const QuotientCoords& Q) {
  require_input(T.G.get() == pi.dom.get(), "tensor factors over different groups");
  require_input(pi.cod.get() == Q.ring.H.get(), "projection must land in the ring's group");
  require_input(T.R.q == Q.ring.R.q, "tensor factors over different coefficient rings");
  GMod M{T.R, T.G, T.dim * Q.dim(), {}};
  M.act.reserve(T.G->n);
  for (uint32_t g = 0; g < T.G->n; ++g)
    M.act.push_back(T.act[g].kronecker(Q.act_left_matrix(pi(g)).transpose()));
  return M;
}

void GModSES::validate() const {
  require_internal(incl.rows == sub.dim && incl.cols == mid.dim, "inclusion shape");
  require_internal(proj.rows == mid.dim && proj.cols == quo.dim, "projection shape");
  require_internal(sect.rows == quo.dim && sect.cols == mid.dim, "section shape");
  require_internal(sub.R.q == mid.R.q && mid.R.q == quo.R.q, "mixed coefficient rings");
  require_internal(sub.G.get() == mid.G.get() && mid.G.get() == quo.G.get(), "mixed groups");

  require_internal(sect.mul(proj) == ModMatrix::identity(quo.R, quo.dim),
                   "section does not split the projection");
  require_internal(incl.mul(proj).is_zero(), "composite of inclusion and projection");
  for (uint32_t g = 0; g < mid.G->n; ++g) {
    require_internal(sub.act[g].transpose().mul(incl) == incl.mul(mid.act[g].transpose()),
                     "inclusion is not equivariant");
    require_internal(mid.act[g].transpose().mul(proj) == proj.mul(quo.act[g].transpose()),
                     "projection is not equivariant");
  }
  HowellData hd = howell_full(incl);
  require_internal(hd.K.rows == 0, "inclusion has a kernel");
  Submodule image{mid.dim, howell(incl)};
  Submodule kerproj{mid.dim, howell_full(proj).K};
  require_internal(image == kerproj, "image of inclusion differs from kernel of projection");
}

BocksteinSequence bockstein_ses(const GMod& T, const GroupHom& pi, const Filtration& F,
                                size_t n, const std::string& style) {
  require_input(n >= 1 && n + 1 <= F.N, "filtration too shallow for the requested degree");
  const GroupRing& ring = F.ring;
  BocksteinSequence B;
  B.t_rank = T.dim;
  B.graded = graded_basis(F, n, style);
  B.smallq = quotient_coords(ring, F.powers[n], truncation_reps(F, n, style));
  B.big = quotient_coords(ring, F.powers[n + 1], truncation_reps(F, n + 1, style));

  const size_t d = B.smallq.dim(), N = B.graded.size(), D = B.big.dim(), r = T.dim;
  require_internal(D == d + N, "graded piece does not complement the truncation");
  for (size_t j = 0; j < d; ++j)
    require_internal(B.big.reps[j] == B.smallq.reps[j], "truncations are not nested");
  for (size_t i = 0; i < N; ++i)
    require_internal(B.big.reps[d + i] == B.graded.elems[i],
                     "graded monomials must extend the truncation basis");

  GModSES S;
  S.mid = tensor_with_quotient(T, pi, B.big);
  S.quo = tensor_with_quotient(T, pi, B.smallq);
  // left translation is trivial on I^n/I^{n+1}, so the sub acts through T alone
  S.sub = GMod{T.R, T.G, r * N, {}};
  S.sub.act.reserve(T.G->n);
  ModMatrix IN = ModMatrix::identity(T.R, N);
  for (uint32_t g = 0; g < T.G->n; ++g) S.sub.act.push_back(T.act[g].kronecker(IN));

  S.incl = ModMatrix(T.R, r * N, r * D);
  S.proj = ModMatrix(T.R, r * D, r * d);
  S.sect = ModMatrix(T.R, r * d, r * D);
  for (size_t t = 0; t < r; ++t) {
    for (size_t i = 0; i < N; ++i) S.incl.at(t * N + i, t * D + d + i) = 1;
    for (size_t j = 0; j < d; ++j) {
      S.proj.at(t * D + j, t * d + j) = 1;
      S.sect.at(t * d + j, t * D + j) = 1;
    }
  }
  B.ses = std::move(S);
  return B;
}

}  // namespace bockmas
