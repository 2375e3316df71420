#include "hallbridge/modcat.hpp"

#include <algorithm>
#include <numeric>

namespace hb {

namespace {
constexpr unsigned long kIsoCap = 1ul << 20;
constexpr unsigned long kEnumCap = 1ul << 20;
}  // namespace

Rep zero_rep(const Algebra& A) {
  Rep M;
  M.dim.assign(A.vertices(), 0);
  for (auto& ar : A.arrows()) M.mat.push_back(FqMatrix(A.q(), 0, 0));
  return M;
}

SumLayout direct_sum_layout(const Algebra& A, const std::vector<const Rep*>& parts) {
  SumLayout L;
  L.rep.dim.assign(A.vertices(), 0);
  for (auto* p : parts) {
    L.offset.push_back(L.rep.dim);
    for (int v = 0; v < A.vertices(); ++v) L.rep.dim[v] += p->dim[v];
  }
  for (size_t a = 0; a < A.arrows().size(); ++a) {
    const Arrow& ar = A.arrows()[a];
    FqMatrix m(A.q(), L.rep.dim[ar.tgt], L.rep.dim[ar.src]);
    for (size_t k = 0; k < parts.size(); ++k)
      m.set_block(L.offset[k][ar.tgt], L.offset[k][ar.src], parts[k]->mat[a]);
    L.rep.mat.push_back(std::move(m));
  }
  return L;
}

Rep direct_sum(const Algebra& A, const std::vector<const Rep*>& parts) {
  return direct_sum_layout(A, parts).rep;
}

FqMatrix path_matrix(const Algebra& A, const Rep& M, int src, const std::vector<int>& arrows) {
  FqMatrix m = FqMatrix::identity(A.q(), M.dim[src]);
  for (int a : arrows) m = M.mat[a] * m;
  return m;
}

bool satisfies_relations(const Algebra& A, const Rep& M) {
  for (auto& rel : A.relations()) {
    int src = A.arrows()[rel.front()].src;
    if (!path_matrix(A, M, src, rel).is_zero()) return false;
  }
  return true;
}

std::vector<unsigned> encode_rep(const Rep& M) {
  std::vector<unsigned> enc;
  for (int d : M.dim) enc.push_back(unsigned(d));
  for (auto& m : M.mat) enc.insert(enc.end(), m.entries().begin(), m.entries().end());
  return enc;
}

RepMap zero_map(const Algebra& A, const Rep& M, const Rep& N) {
  RepMap f;
  for (int v = 0; v < A.vertices(); ++v) f.f.push_back(FqMatrix(A.q(), N.dim[v], M.dim[v]));
  return f;
}

RepMap identity_map(const Algebra& A, const Rep& M) {
  RepMap f;
  for (int v = 0; v < A.vertices(); ++v) f.f.push_back(FqMatrix::identity(A.q(), M.dim[v]));
  return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  RepMap h;
  for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(g.f[v] * f.f[v]);
  return h;
}

RepMap map_sum(const RepMap& a, const RepMap& b) {
  RepMap h;
  for (size_t v = 0; v < a.f.size(); ++v) h.f.push_back(a.f[v] + b.f[v]);
  return h;
}

RepMap map_scaled(const RepMap& a, unsigned c) {
  RepMap h;
  for (auto& m : a.f) h.f.push_back(m.scaled(c));
  return h;
}

bool is_zero_map(const RepMap& m) {
  return std::all_of(m.f.begin(), m.f.end(), [](const FqMatrix& x) { return x.is_zero(); });
}

namespace {

std::vector<std::pair<int, int>> vertex_shapes(const Rep& M, const Rep& N) {
  std::vector<std::pair<int, int>> s;
  for (size_t v = 0; v < M.dim.size(); ++v) s.push_back({N.dim[v], M.dim[v]});
  return s;
}

/// Constraint matrix whose kernel is Hom_A(M, N) in vertexwise matrix
/// coordinates.
FqMatrix hom_constraints(const Algebra& A, const Rep& M, const Rep& N) {
  std::vector<std::pair<int, int>> out;
  for (auto& ar : A.arrows()) out.push_back({N.dim[ar.tgt], M.dim[ar.src]});
  BlockLinMap B(A.q(), vertex_shapes(M, N), out);
  for (size_t a = 0; a < A.arrows().size(); ++a) {
    const Arrow& ar = A.arrows()[a];
    B.add(int(a), ar.tgt, FqMatrix::identity(A.q(), N.dim[ar.tgt]), M.mat[a], 1);
    B.add(int(a), ar.src, N.mat[a], FqMatrix::identity(A.q(), M.dim[ar.src]), -1);
  }
  return B.matrix();
}

RepMap unpack_hom(const Algebra& A, const Rep& M, const Rep& N, const FqVec& v) {
  BlockLinMap B(A.q(), vertex_shapes(M, N), {});
  RepMap f;
  f.f = B.unpack_in(v);
  return f;
}

FqVec pack_hom(const Algebra& A, const Rep& M, const Rep& N, const RepMap& f) {
  BlockLinMap B(A.q(), vertex_shapes(M, N), {});
  return B.pack_in(f.f);
}

}  // namespace

std::vector<RepMap> hom_basis(const Algebra& A, const Rep& M, const Rep& N) {
  FqMatrix C = hom_constraints(A, M, N);
  std::vector<RepMap> basis;
  for (auto& v : C.kernel_basis()) basis.push_back(unpack_hom(A, M, N, v));
  return basis;
}

int hom_dim(const Algebra& A, const Rep& M, const Rep& N) {
  FqMatrix C = hom_constraints(A, M, N);
  return C.cols() - C.rank();
}

RepMap combo_map(const Algebra& A, const Rep& M, const Rep& N,
                 const std::vector<RepMap>& basis, const FqVec& coeffs) {
  RepMap f = zero_map(A, M, N);
  for (size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k]) f = map_sum(f, map_scaled(basis[k], coeffs[k]));
  return f;
}

namespace {

/// Cheap iso invariants: ranks of every path action matrix.
std::vector<int> rank_profile(const Algebra& A, const Rep& M) {
  std::vector<int> r;
  for (auto& p : A.paths())
    if (p.length() > 0) r.push_back(path_matrix(A, M, p.src, p.arrows).rank());
  return r;
}

bool all_invertible(const RepMap& f) {
  return std::all_of(f.f.begin(), f.f.end(),
                     [](const FqMatrix& m) { return m.is_invertible(); });
}

}  // namespace

bool is_isomorphic(const Algebra& A, const Rep& M, const Rep& N) {
  if (M.dim != N.dim) return false;
  if (rank_profile(A, M) != rank_profile(A, N)) return false;
  auto basis = hom_basis(A, M, N);
  bool found = false;
  for_each_combo(A.q(), int(basis.size()), kIsoCap, [&](const FqVec& c) {
    if (all_invertible(combo_map(A, M, N, basis, c))) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

long aut_order(const Algebra& A, const Rep& M) {
  auto basis = hom_basis(A, M, M);
  long count = 0;
  for_each_combo(A.q(), int(basis.size()), kIsoCap, [&](const FqVec& c) {
    if (all_invertible(combo_map(A, M, M, basis, c))) ++count;
    return true;
  });
  return count;
}

namespace {

/// Induced arrow maps on a subspace family stable under the ambient action.
Rep induced_on_basis(const Algebra& A, const Rep& M, const std::vector<FqMatrix>& basis) {
  Rep S;
  for (auto& b : basis) S.dim.push_back(b.cols());
  for (size_t a = 0; a < A.arrows().size(); ++a) {
    const Arrow& ar = A.arrows()[a];
    auto X = basis[ar.tgt].solve_matrix(M.mat[a] * basis[ar.src]);
    if (!X) throw std::logic_error("induced_on_basis: subspace not stable");
    S.mat.push_back(std::move(*X));
  }
  return S;
}

/// Canonical basis (columns) of the column space of F.
FqMatrix column_space_basis(const FqMatrix& F) {
  FqMatrix t = F.transpose();
  auto pivots = t.rref();
  FqMatrix basis(F.q(), F.rows(), int(pivots.size()));
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int i = 0; i < F.rows(); ++i) basis.set(i, int(r), t.at(int(r), i));
  return basis;
}

}  // namespace

SubRep kernel_sub(const Algebra& A, const Rep& M, const Rep& N, const RepMap& f) {
  SubRep S;
  std::vector<FqMatrix> basis;
  for (int v = 0; v < A.vertices(); ++v)
    basis.push_back(FqMatrix::from_columns(A.q(), M.dim[v], f.f[v].kernel_basis()));
  S.rep = induced_on_basis(A, M, basis);
  S.incl.f = std::move(basis);
  return S;
}

SubRep image_sub(const Algebra& A, const Rep& M, const Rep& N, const RepMap& f) {
  SubRep S;
  std::vector<FqMatrix> basis;
  for (int v = 0; v < A.vertices(); ++v) basis.push_back(column_space_basis(f.f[v]));
  S.rep = induced_on_basis(A, N, basis);
  S.incl.f = std::move(basis);
  return S;
}

QuotRep quotient_by_span(const Algebra& A, const Rep& M, const std::vector<FqMatrix>& span) {
  QuotRep Q;
  std::vector<FqMatrix> proj, section;
  for (int v = 0; v < A.vertices(); ++v) {
    FqMatrix R = span[v].transpose();  // rows span the subspace
    auto pivots = R.rref();
    std::vector<bool> is_pivot(M.dim[v], false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < M.dim[v]; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    int k = int(free_cols.size());
    FqMatrix P(A.q(), k, M.dim[v]), S(A.q(), M.dim[v], k);
    for (int j = 0; j < k; ++j) {
      P.set(j, free_cols[j], 1);
      S.set(free_cols[j], j, 1);
    }
    // e_pivot = -sum over free columns of the RREF row entries, mod the span
    for (size_t r = 0; r < pivots.size(); ++r)
      for (int j = 0; j < k; ++j) P.set(j, pivots[r], -long(R.at(int(r), free_cols[j])));
    Q.rep.dim.push_back(k);
    proj.push_back(std::move(P));
    section.push_back(std::move(S));
  }
  for (size_t a = 0; a < A.arrows().size(); ++a) {
    const Arrow& ar = A.arrows()[a];
    Q.rep.mat.push_back(proj[ar.tgt] * M.mat[a] * section[ar.src]);
  }
  Q.proj.f = std::move(proj);
  return Q;
}

SubRep radical_sub(const Algebra& A, const Rep& M) {
  std::vector<FqMatrix> span;
  for (int v = 0; v < A.vertices(); ++v) {
    FqMatrix s(A.q(), M.dim[v], 0);
    for (size_t a = 0; a < A.arrows().size(); ++a)
      if (A.arrows()[a].tgt == v) s = hstack(s, M.mat[a]);
    span.push_back(std::move(s));
  }
  SubRep S;
  std::vector<FqMatrix> basis;
  for (int v = 0; v < A.vertices(); ++v) basis.push_back(column_space_basis(span[v]));
  S.rep = induced_on_basis(A, M, basis);
  S.incl.f = std::move(basis);
  return S;
}

bool map_into_radical(const Algebra& A, const Rep& N, const RepMap& f) {
  SubRep rad = radical_sub(A, N);
  for (int v = 0; v < A.vertices(); ++v)
    if (!rad.incl.f[v].solve_matrix(f.f[v])) return false;
  return true;
}

ProjSum make_proj_sum(const Algebra& A, const std::vector<int>& summands) {
  ProjSum P;
  P.summands = summands;
  std::vector<const Rep*> parts;
  for (int s : summands) parts.push_back(&A.projective(s));
  P.rep = direct_sum(A, parts);
  return P;
}

ProjSum proj_sum_of_mult(const Algebra& A, const DimVec& mult) {
  std::vector<int> summands;
  for (int i = 0; i < A.vertices(); ++i)
    for (int k = 0; k < mult[i]; ++k) summands.push_back(i);
  return make_proj_sum(A, summands);
}

Cover projective_cover(const Algebra& A, const Rep& M) {
  SubRep rad = radical_sub(A, M);
  // Lift a basis of top(M): greedily pick standard vectors extending rad M.
  std::vector<int> summands;
  std::vector<std::pair<int, FqVec>> lifts;  // (vertex, vector in M_v)
  for (int v = 0; v < A.vertices(); ++v) {
    FqMatrix ext = rad.incl.f[v];
    for (int j = 0; j < M.dim[v]; ++j) {
      FqVec e(M.dim[v], 0);
      e[j] = 1;
      FqMatrix cand = hstack(ext, FqMatrix::from_columns(A.q(), M.dim[v], {e}));
      if (cand.rank() > ext.rank()) {
        ext = cand;
        summands.push_back(v);
        lifts.push_back({v, e});
      }
    }
  }
  Cover C;
  C.P = make_proj_sum(A, summands);
  SumLayout layout = direct_sum_layout(
      A, [&] {
        std::vector<const Rep*> parts;
        for (int s : summands) parts.push_back(&A.projective(s));
        return parts;
      }());
  C.epi = zero_map(A, C.P.rep, M);
  for (size_t k = 0; k < summands.size(); ++k) {
    int i = summands[k];
    const FqVec& x = lifts[k].second;
    // basis path p : i -> j of P_i maps to (action of p on M) x
    for (int j = 0; j < A.vertices(); ++j) {
      const auto& plist = A.paths_from_to(i, j);
      for (int b = 0; b < int(plist.size()); ++b) {
        FqVec img = path_matrix(A, M, i, A.paths()[plist[b]].arrows).apply(x);
        int col = layout.offset[k][j] + b;
        for (int r = 0; r < M.dim[j]; ++r) C.epi.f[j].set(r, col, img[r]);
      }
    }
  }
  return C;
}

Resolution minimal_resolution(const Algebra& A, const Rep& M) {
  Resolution R;
  R.module = M;
  R.minimal = true;
  Cover c0 = projective_cover(A, M);
  R.terms.push_back(c0.P);
  R.augmentation = c0.epi;
  SubRep syz = kernel_sub(A, c0.P.rep, M, c0.epi);
  while (syz.rep.total_dim() > 0) {
    if (R.length() > A.dim())
      throw std::runtime_error("infinite global dimension: resolution does not terminate");
    Cover c = projective_cover(A, syz.rep);
    R.maps.push_back(compose(syz.incl, c.epi));
    R.terms.push_back(c.P);
    SubRep next = kernel_sub(A, c.P.rep, syz.rep, c.epi);
    syz = std::move(next);
  }
  return R;
}

Resolution padded_resolution(const Algebra& A, const Resolution& min_res,
                             const std::vector<DimVec>& pads) {
  int L = int(pads.size());
  if (L < min_res.length())
    throw std::invalid_argument("padded_resolution: length below minimal");
  auto term = [&](int i) -> ProjSum {
    return i <= min_res.length() ? min_res.terms[i] : make_proj_sum(A, {});
  };
  auto pad = [&](int i) -> ProjSum {
    if (i < 0 || i >= L) return make_proj_sum(A, {});
    return proj_sum_of_mult(A, pads[i]);
  };
  Resolution R;
  R.module = min_res.module;
  R.minimal = false;

  std::vector<std::vector<ProjSum>> parts;  // blocks of T_i
  for (int i = 0; i <= L; ++i) {
    std::vector<ProjSum> blocks;
    blocks.push_back(term(i));
    if (i >= 1) blocks.push_back(pad(i - 1));
    if (i <= L - 1) blocks.push_back(pad(i));
    parts.push_back(blocks);
  }
  std::vector<SumLayout> layouts;
  for (int i = 0; i <= L; ++i) {
    ProjSum T;
    std::vector<const Rep*> reps;
    for (auto& b : parts[i]) {
      T.summands.insert(T.summands.end(), b.summands.begin(), b.summands.end());
      reps.push_back(&b.rep);
    }
    layouts.push_back(direct_sum_layout(A, reps));
    T.rep = layouts.back().rep;
    R.terms.push_back(std::move(T));
  }
  // p'_i = [[p_i, 0, 0], [0, 1, 0]] : P_i + R_{i-1} + R_i -> P_{i-1} + R_{i-2} + R_{i-1}
  for (int i = 1; i <= L; ++i) {
    RepMap f = zero_map(A, R.terms[i].rep, R.terms[i - 1].rep);
    const auto& src = layouts[i];
    const auto& tgt = layouts[i - 1];
    int tgt_rpos = (i - 1 >= 1) ? 2 : 1;  // index of the R_{i-1} block in T_{i-1}
    for (int v = 0; v < A.vertices(); ++v) {
      if (i <= min_res.length())
        f.f[v].set_block(tgt.offset[0][v], src.offset[0][v], min_res.maps[i - 1].f[v]);
      int rdim = pad(i - 1).rep.dim[v];
      for (int d = 0; d < rdim; ++d)
        f.f[v].set(tgt.offset[tgt_rpos][v] + d, src.offset[1][v] + d, 1);
    }
    R.maps.push_back(std::move(f));
  }
  R.augmentation = zero_map(A, R.terms[0].rep, min_res.module);
  for (int v = 0; v < A.vertices(); ++v)
    R.augmentation.f[v].set_block(0, 0, min_res.augmentation.f[v]);

  // drop trailing zero terms
  while (R.length() > 0 && R.terms.back().rep.total_dim() == 0) {
    R.terms.pop_back();
    R.maps.pop_back();
  }
  return R;
}

namespace {
int map_rank(const RepMap& f) {
  int r = 0;
  for (auto& m : f.f) r += m.rank();
  return r;
}
}  // namespace

bool resolution_is_exact(const Algebra& A, const Resolution& R) {
  if (map_rank(R.augmentation) != R.module.total_dim()) return false;
  int ker = R.terms[0].rep.total_dim() - map_rank(R.augmentation);
  for (int i = 1; i <= R.length(); ++i) {
    const RepMap& p = R.maps[i - 1];
    if (map_rank(p) != ker) return false;
    const RepMap& into = (i == 1) ? R.augmentation : R.maps[i - 2];
    if (!is_zero_map(compose(into, p))) return false;
    ker = R.terms[i].rep.total_dim() - map_rank(p);
  }
  return ker == 0;
}

ResolutionInvariants resolution_invariants(const Algebra& A, const Resolution& R) {
  ResolutionInvariants inv;
  int nv = A.vertices();
  inv.m_odd.assign(nv, 0);
  inv.m_even.assign(nv, 0);
  inv.p_odd.assign(nv, 0);
  inv.p_even.assign(nv, 0);
  for (int i = 1; i <= R.length(); ++i) {
    DimVec cls(nv, 0);
    for (int v = 0; v < nv; ++v) cls[v] = R.maps[i - 1].f[v].rank();
    for (int v = 0; v < nv; ++v) (i % 2 ? inv.m_odd : inv.m_even)[v] += cls[v];
    inv.syzygy_classes.push_back(std::move(cls));
  }
  for (int i = 0; i <= R.length(); ++i)
    for (int v = 0; v < nv; ++v)
      (i % 2 ? inv.p_odd : inv.p_even)[v] += R.terms[i].rep.dim[v];
  inv.tau.assign(nv, 0);
  for (int v = 0; v < nv; ++v) inv.tau[v] = inv.m_odd[v] - inv.m_even[v];
  return inv;
}

std::vector<int> ext_dims(const Algebra& A, const Rep& M, const Rep& N) {
  Resolution R = minimal_resolution(A, M);
  int n = R.length();
  // z_t = dim(Hom(P_t, N) with image killed by - o p_{t+1}); h_t = dim Hom(P_t, N)
  std::vector<int> h(n + 1), z(n + 1);
  for (int t = 0; t <= n; ++t) {
    FqMatrix C = hom_constraints(A, R.terms[t].rep, N);
    h[t] = C.cols() - C.rank();
    if (t < n) {
      std::vector<std::pair<int, int>> out;
      for (int v = 0; v < A.vertices(); ++v)
        out.push_back({N.dim[v], R.terms[t + 1].rep.dim[v]});
      BlockLinMap D(A.q(), vertex_shapes(R.terms[t].rep, N), out);
      for (int v = 0; v < A.vertices(); ++v)
        D.add(v, v, FqMatrix::identity(A.q(), N.dim[v]), R.maps[t].f[v], 1);
      FqMatrix stacked = vstack(C, D.matrix());
      z[t] = stacked.cols() - stacked.rank();
    } else {
      z[t] = h[t];
    }
  }
  std::vector<int> ext(n + 1);
  for (int t = 0; t <= n; ++t) ext[t] = z[t] - (t ? h[t - 1] - z[t - 1] : 0);
  return ext;
}

EulerData::EulerData(const Algebra& A) {
  int n = A.vertices();
  e_.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long s = 0;
      int sign = 1;
      for (int d : ext_dims(A, A.simple(i), A.simple(j))) {
        s += sign * d;
        sign = -sign;
      }
      e_[i][j] = s;
    }
}

long EulerData::form(const DimVec& a, const DimVec& b) const {
  long s = 0;
  for (size_t i = 0; i < e_.size(); ++i)
    for (size_t j = 0; j < e_.size(); ++j) s += long(a[i]) * e_[i][j] * b[j];
  return s;
}

const std::vector<Rep>& ModuleRegistry::classes(const DimVec& d) {
  auto it = classes_.find(d);
  if (it != classes_.end()) return it->second;

  try {
    return build_classes(d);
  } catch (...) {
    classes_.erase(d);  // do not keep a partial catalog
    throw;
  }
}

const std::vector<Rep>& ModuleRegistry::build_classes(const DimVec& d) {
  std::vector<Rep>& list = classes_[d];
  const Algebra& A = *A_;
  int total = 0;
  for (auto& ar : A.arrows()) total += d[ar.tgt] * d[ar.src];
  std::vector<std::vector<int>> profiles;
  for_each_combo(A.q(), total, kEnumCap, [&](const FqVec& digits) {
    Rep M;
    M.dim = d;
    int pos = total;  // consume most-significant first: lex encoding order
    for (auto& ar : A.arrows()) {
      FqMatrix m(A.q(), d[ar.tgt], d[ar.src]);
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.set(r, c, digits[--pos]);
      M.mat.push_back(std::move(m));
    }
    if (!satisfies_relations(A, M)) return true;
    std::vector<int> prof = rank_profile(A, M);
    for (size_t k = 0; k < list.size(); ++k) {
      if (profiles[k] != prof) continue;
      if (is_isomorphic(A, list[k], M)) return true;
    }
    list.push_back(std::move(M));
    profiles.push_back(std::move(prof));
    return true;
  });
  return list;
}

ClassId ModuleRegistry::classify(const Rep& M) {
  const auto& list = classes(M.dim);
  for (size_t k = 0; k < list.size(); ++k)
    if (is_isomorphic(*A_, list[k], M)) return ClassId{M.dim, int(k)};
  throw std::logic_error("classify: representation not found in exhaustive catalog");
}

const Rep& ModuleRegistry::rep_of(const ClassId& id) { return classes(id.dim)[id.idx]; }

long ModuleRegistry::aut_order_of(const ClassId& id) {
  auto it = auts_.find(id);
  if (it != auts_.end()) return it->second;
  long a = aut_order(*A_, rep_of(id));
  auts_[id] = a;
  return a;
}

std::vector<std::pair<ClassId, long>> ext1_middles(const Algebra& A, ModuleRegistry& reg,
                                                   const Rep& M, const Rep& N) {
  Cover c = projective_cover(A, M);
  SubRep omega = kernel_sub(A, c.P.rep, M, c.epi);

  // Cocycles: Hom_A(omega, N); coboundaries: restrictions of Hom_A(P_0, N).
  FqMatrix Z = hom_constraints(A, omega.rep, N);
  std::vector<FqVec> zbasis = Z.kernel_basis();

  std::vector<FqVec> bvecs;
  for (auto& g : hom_basis(A, c.P.rep, N))
    bvecs.push_back(pack_hom(A, omega.rep, N, compose(g, omega.incl)));

  // Complement of the coboundary space inside the cocycle space.
  int ambient = Z.cols();
  FqMatrix span(A.q(), ambient == 0 ? 0 : int(bvecs.size()), std::max(ambient, 0));
  for (size_t r = 0; r < bvecs.size(); ++r)
    for (int cidx = 0; cidx < ambient; ++cidx) span.set(int(r), cidx, bvecs[r][cidx]);
  int base_rank = span.rank();
  FqMatrix acc = span;
  std::vector<FqVec> complement;
  for (auto& zv : zbasis) {
    FqMatrix row(A.q(), 1, ambient);
    for (int cidx = 0; cidx < ambient; ++cidx) row.set(0, cidx, zv[cidx]);
    FqMatrix cand = vstack(acc, row);
    if (cand.rank() > acc.rank()) {
      acc = std::move(cand);
      complement.push_back(zv);
    }
  }
  (void)base_rank;

  SumLayout F = direct_sum_layout(A, {&N, &c.P.rep});
  std::map<ClassId, long> counts;
  for_each_combo(A.q(), int(complement.size()), kEnumCap, [&](const FqVec& coeffs) {
    FqVec sv(ambient, 0);
    for (size_t k = 0; k < complement.size(); ++k)
      if (coeffs[k])
        for (int i = 0; i < ambient; ++i)
          sv[i] = (sv[i] + coeffs[k] * complement[k][i]) % A.q();
    RepMap sigma = unpack_hom(A, omega.rep, N, sv);
    std::vector<FqMatrix> spanw;
    for (int v = 0; v < A.vertices(); ++v)
      spanw.push_back(vstack(sigma.f[v], -omega.incl.f[v]));
    QuotRep L = quotient_by_span(A, F.rep, spanw);
    ++counts[reg.classify(L.rep)];
    return true;
  });
  return std::vector<std::pair<ClassId, long>>(counts.begin(), counts.end());
}

}  // namespace hb
