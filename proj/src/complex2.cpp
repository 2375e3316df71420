#include "hallbridge/complex2.hpp"

#include <algorithm>

namespace hb {

namespace {
constexpr unsigned long kIsoCap = 1ul << 20;
constexpr unsigned long kEnumCap = 1ul << 20;

std::vector<std::pair<int, int>> pair_shapes(const Rep& M, const Rep& N) {
  std::vector<std::pair<int, int>> s;
  for (size_t v = 0; v < M.dim.size(); ++v) s.push_back({N.dim[v], M.dim[v]});
  return s;
}
}  // namespace

Cx zero_cx(const Algebra& A) {
  Cx X;
  X.c1 = make_proj_sum(A, {});
  X.c0 = make_proj_sum(A, {});
  X.d1 = zero_map(A, X.c1.rep, X.c0.rep);
  X.d0 = zero_map(A, X.c0.rep, X.c1.rep);
  return X;
}

bool cx_valid(const Algebra& A, const Cx& X) {
  return is_zero_map(compose(X.d0, X.d1)) && is_zero_map(compose(X.d1, X.d0));
}

Cx k_acyclic(const Algebra& A, const DimVec& mult, bool starred) {
  Cx X;
  X.c1 = proj_sum_of_mult(A, mult);
  X.c0 = X.c1;
  RepMap id = identity_map(A, X.c1.rep);
  RepMap zero = zero_map(A, X.c1.rep, X.c1.rep);
  X.d1 = starred ? zero : id;
  X.d0 = starred ? id : zero;
  return X;
}

Cx pi_of_resolution(const Algebra& A, const Resolution& R) {
  std::vector<const ProjSum*> odd, even;
  for (int i = 0; i <= R.length(); ++i) (i % 2 ? odd : even).push_back(&R.terms[i]);
  auto build = [&](const std::vector<const ProjSum*>& parts) {
    ProjSum s;
    std::vector<const Rep*> reps;
    for (auto* p : parts) {
      s.summands.insert(s.summands.end(), p->summands.begin(), p->summands.end());
      reps.push_back(&p->rep);
    }
    SumLayout L = direct_sum_layout(A, reps);
    s.rep = L.rep;
    return std::pair(s, L);
  };
  auto [c1, l1] = build(odd);
  auto [c0, l0] = build(even);

  Cx X;
  X.c1 = std::move(c1);
  X.c0 = std::move(c0);
  X.d1 = zero_map(A, X.c1.rep, X.c0.rep);
  X.d0 = zero_map(A, X.c0.rep, X.c1.rep);
  for (int i = 1; i <= R.length(); ++i) {
    const RepMap& p = R.maps[i - 1];
    for (int v = 0; v < A.vertices(); ++v) {
      if (i % 2)  // P_i odd -> P_{i-1} even: block of d1
        X.d1.f[v].set_block(l0.offset[(i - 1) / 2][v], l1.offset[(i - 1) / 2][v], p.f[v]);
      else  // P_i even -> P_{i-1} odd: block of d0
        X.d0.f[v].set_block(l1.offset[(i - 1) / 2][v], l0.offset[i / 2][v], p.f[v]);
    }
  }
  return X;
}

Cx shift_star(const Algebra& A, const Cx& X) {
  Cx Y;
  Y.c1 = X.c0;
  Y.c0 = X.c1;
  Y.d1.f.reserve(X.d0.f.size());
  for (auto& m : X.d0.f) Y.d1.f.push_back(-m);
  for (auto& m : X.d1.f) Y.d0.f.push_back(-m);
  return Y;
}

Cx cx_direct_sum(const Algebra& A, const Cx& X, const Cx& Y) {
  Cx Z;
  auto cat = [&](const ProjSum& a, const ProjSum& b) {
    ProjSum s;
    s.summands = a.summands;
    s.summands.insert(s.summands.end(), b.summands.begin(), b.summands.end());
    s.rep = direct_sum(A, {&a.rep, &b.rep});
    return s;
  };
  Z.c1 = cat(X.c1, Y.c1);
  Z.c0 = cat(X.c0, Y.c0);
  auto blockdiag = [&](const RepMap& a, const RepMap& b, const Rep& src, const Rep& tgt,
                       const Rep& asrc, const Rep& atgt) {
    RepMap f = zero_map(A, src, tgt);
    for (int v = 0; v < A.vertices(); ++v) {
      f.f[v].set_block(0, 0, a.f[v]);
      f.f[v].set_block(atgt.dim[v], asrc.dim[v], b.f[v]);
    }
    return f;
  };
  Z.d1 = blockdiag(X.d1, Y.d1, Z.c1.rep, Z.c0.rep, X.c1.rep, X.c0.rep);
  Z.d0 = blockdiag(X.d0, Y.d0, Z.c0.rep, Z.c1.rep, X.c0.rep, X.c1.rep);
  return Z;
}

DimVec cx_class(const Cx& X) {
  DimVec d(X.c0.rep.dim.size());
  for (size_t v = 0; v < d.size(); ++v) d[v] = X.c0.rep.dim[v] - X.c1.rep.dim[v];
  return d;
}

std::vector<unsigned> encode_cx(const Cx& X) {
  std::vector<unsigned> e = encode_rep(X.c1.rep);
  auto e0 = encode_rep(X.c0.rep);
  e.insert(e.end(), e0.begin(), e0.end());
  for (auto& m : X.d1.f) e.insert(e.end(), m.entries().begin(), m.entries().end());
  for (auto& m : X.d0.f) e.insert(e.end(), m.entries().begin(), m.entries().end());
  return e;
}

namespace {

/// Chain-map constraint system. Variable blocks: s1 per vertex, then s0
/// per vertex. The kernel is Hom_{C_2}(X, Y).
BlockLinMap chain_map_system(const Algebra& A, const Cx& X, const Cx& Y) {
  int nv = A.vertices();
  unsigned q = A.q();
  std::vector<std::pair<int, int>> in = pair_shapes(X.c1.rep, Y.c1.rep);
  auto in0 = pair_shapes(X.c0.rep, Y.c0.rep);
  in.insert(in.end(), in0.begin(), in0.end());

  std::vector<std::pair<int, int>> out;
  int na = int(A.arrows().size());
  for (auto& ar : A.arrows()) out.push_back({Y.c1.rep.dim[ar.tgt], X.c1.rep.dim[ar.src]});
  for (auto& ar : A.arrows()) out.push_back({Y.c0.rep.dim[ar.tgt], X.c0.rep.dim[ar.src]});
  for (int v = 0; v < nv; ++v) out.push_back({Y.c0.rep.dim[v], X.c1.rep.dim[v]});  // chain i=1
  for (int v = 0; v < nv; ++v) out.push_back({Y.c1.rep.dim[v], X.c0.rep.dim[v]});  // chain i=0

  BlockLinMap B(q, in, out);
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = A.arrows()[a];
    B.add(a, ar.tgt, FqMatrix::identity(q, Y.c1.rep.dim[ar.tgt]), X.c1.rep.mat[a], 1);
    B.add(a, ar.src, Y.c1.rep.mat[a], FqMatrix::identity(q, X.c1.rep.dim[ar.src]), -1);
    B.add(na + a, nv + ar.tgt, FqMatrix::identity(q, Y.c0.rep.dim[ar.tgt]), X.c0.rep.mat[a], 1);
    B.add(na + a, nv + ar.src, Y.c0.rep.mat[a], FqMatrix::identity(q, X.c0.rep.dim[ar.src]), -1);
  }
  for (int v = 0; v < nv; ++v) {
    // s0 d1^X = d1^Y s1
    B.add(2 * na + v, nv + v, FqMatrix::identity(q, Y.c0.rep.dim[v]), X.d1.f[v], 1);
    B.add(2 * na + v, v, Y.d1.f[v], FqMatrix::identity(q, X.c1.rep.dim[v]), -1);
    // s1 d0^X = d0^Y s0
    B.add(2 * na + nv + v, v, FqMatrix::identity(q, Y.c1.rep.dim[v]), X.d0.f[v], 1);
    B.add(2 * na + nv + v, nv + v, Y.d0.f[v], FqMatrix::identity(q, X.c0.rep.dim[v]), -1);
  }
  return B;
}

std::pair<RepMap, RepMap> unpack_chain_map(const Algebra& A, const Cx& X, const Cx& Y,
                                           const std::vector<FqMatrix>& mats) {
  int nv = A.vertices();
  RepMap s1, s0;
  s1.f.assign(mats.begin(), mats.begin() + nv);
  s0.f.assign(mats.begin() + nv, mats.begin() + 2 * nv);
  return {s1, s0};
}

/// Packs a chain-map pair into the ambient coordinates of chain_map_system.
FqVec pack_chain_map(const Algebra& A, const Cx& X, const Cx& Y, const RepMap& s1,
                     const RepMap& s0) {
  std::vector<std::pair<int, int>> in = pair_shapes(X.c1.rep, Y.c1.rep);
  auto in0 = pair_shapes(X.c0.rep, Y.c0.rep);
  in.insert(in.end(), in0.begin(), in0.end());
  BlockLinMap B(A.q(), in, {});
  std::vector<FqMatrix> mats = s1.f;
  mats.insert(mats.end(), s0.f.begin(), s0.f.end());
  return B.pack_in(mats);
}

}  // namespace

std::vector<std::pair<RepMap, RepMap>> cx_hom_basis(const Algebra& A, const Cx& X, const Cx& Y) {
  BlockLinMap B = chain_map_system(A, X, Y);
  std::vector<std::pair<RepMap, RepMap>> basis;
  for (auto& v : B.matrix().kernel_basis())
    basis.push_back(unpack_chain_map(A, X, Y, B.unpack_in(v)));
  return basis;
}

int cx_hom_dim(const Algebra& A, const Cx& X, const Cx& Y) {
  BlockLinMap B = chain_map_system(A, X, Y);
  return B.matrix().cols() - B.matrix().rank();
}

int k2_hom_dim(const Algebra& A, const Cx& X, const Cx& Y) {
  // null-homotopic chain maps: t1 = d0^Y h1 + h0 d1^X, t0 = d1^Y h0 + h1 d0^X
  // over morphism pairs h1 : X1 -> Y0, h0 : X0 -> Y1
  auto h1s = hom_basis(A, X.c1.rep, Y.c0.rep);
  auto h0s = hom_basis(A, X.c0.rep, Y.c1.rep);
  std::vector<FqVec> image;
  auto push_image = [&](const RepMap& h1, const RepMap& h0) {
    RepMap t1 = map_sum(compose(Y.d0, h1), compose(h0, X.d1));
    RepMap t0 = map_sum(compose(Y.d1, h0), compose(h1, X.d0));
    image.push_back(pack_chain_map(A, X, Y, t1, t0));
  };
  RepMap z10 = zero_map(A, X.c1.rep, Y.c0.rep), z01 = zero_map(A, X.c0.rep, Y.c1.rep);
  for (auto& h : h1s) push_image(h, z01);
  for (auto& h : h0s) push_image(z10, h);

  int cols = image.empty() ? 0 : int(image[0].size());
  FqMatrix m(A.q(), int(image.size()), cols);
  for (size_t r = 0; r < image.size(); ++r)
    for (int c = 0; c < cols; ++c) m.set(int(r), c, image[r][c]);
  return cx_hom_dim(A, X, Y) - m.rank();
}

int cb_hom_dim(const Algebra& A, const Resolution& RM, const Resolution& RN, int shift) {
  int nM = RM.length(), nN = RN.length();
  // variable g_t : P^M_t -> P^N_{t-shift}, for t with both terms present
  std::vector<int> var_t;
  for (int t = 0; t <= nM; ++t)
    if (t - shift >= 0 && t - shift <= nN) var_t.push_back(t);
  if (var_t.empty()) return 0;
  std::map<int, int> var_block;  // t -> first block index (nv blocks per t)
  int nv = A.vertices();
  std::vector<std::pair<int, int>> in;
  for (int t : var_t) {
    var_block[t] = int(in.size());
    auto s = pair_shapes(RM.terms[t].rep, RN.terms[t - shift].rep);
    in.insert(in.end(), s.begin(), s.end());
  }
  std::vector<std::pair<int, int>> out;
  struct Cst {
    int t;  // constraint in Hom(P^M_t, P^N_{t-1-shift})
    int block;
  };
  std::vector<Cst> csts;
  // morphism constraints for every variable
  int na = int(A.arrows().size());
  for (int t : var_t)
    for (auto& ar : A.arrows())
      out.push_back({RN.terms[t - shift].rep.dim[ar.tgt], RM.terms[t].rep.dim[ar.src]});
  // commuting squares; t = 0 has no incoming p, leaving the bare
  // constraint q_{-shift} g_0 = 0 for negative shifts
  for (int t = 0; t <= nM; ++t) {
    if (t - 1 - shift < 0 || t - 1 - shift > nN) continue;
    csts.push_back({t, int(out.size())});
    for (int v = 0; v < nv; ++v)
      out.push_back({RN.terms[t - 1 - shift].rep.dim[v], RM.terms[t].rep.dim[v]});
  }
  BlockLinMap B(A.q(), in, out);
  int ob = 0;
  for (int t : var_t) {
    const Rep& src = RM.terms[t].rep;
    const Rep& tgt = RN.terms[t - shift].rep;
    for (int a = 0; a < na; ++a) {
      const Arrow& ar = A.arrows()[a];
      B.add(ob, var_block[t] + ar.tgt, FqMatrix::identity(A.q(), tgt.dim[ar.tgt]), src.mat[a], 1);
      B.add(ob, var_block[t] + ar.src, tgt.mat[a], FqMatrix::identity(A.q(), src.dim[ar.src]), -1);
      ++ob;
    }
  }
  for (auto& c : csts) {
    int t = c.t;
    for (int v = 0; v < nv; ++v) {
      int row = c.block + v;
      if (var_block.count(t - 1))  // g_{t-1} p_t
        B.add(row, var_block[t - 1] + v,
              FqMatrix::identity(A.q(), RN.terms[t - 1 - shift].rep.dim[v]), RM.maps[t - 1].f[v],
              1);
      if (var_block.count(t) && t - shift >= 1)  // q_{t-shift} g_t
        B.add(row, var_block[t] + v, RN.maps[t - shift - 1].f[v],
              FqMatrix::identity(A.q(), RM.terms[t].rep.dim[v]), -1);
    }
  }
  const FqMatrix& m = B.matrix();
  return m.cols() - m.rank();
}

namespace {

bool try_split(const Algebra& A, Cx& X, int i, bool starred);
void strip_core(const Algebra& A, Cx& X, DimVec& p, DimVec& q);

std::vector<int> cx_profile(const Algebra& A, const Cx& X) {
  std::vector<int> p;
  for (int v = 0; v < A.vertices(); ++v) {
    p.push_back(X.d1.f[v].rank());
    p.push_back(X.d0.f[v].rank());
  }
  HomologyData h = homology2(A, X);
  for (int d : h.h0.dim) p.push_back(d);
  for (int d : h.h1.dim) p.push_back(d);
  return p;
}

/// Per-vertex basis indices of the trivial-path vectors of each summand:
/// these rows/columns of a module map give its action on tops.
std::vector<std::vector<int>> top_positions(const Algebra& A, const ProjSum& s) {
  int nv = A.vertices();
  std::vector<std::vector<int>> pos(nv);
  std::vector<int> off(nv, 0);
  for (int p : s.summands) {
    pos[p].push_back(off[p]);  // trivial path e_p sorts first at vertex p
    for (int v = 0; v < nv; ++v) off[v] += A.projective(p).dim[v];
  }
  return pos;
}

/// Search for an invertible chain map. A map between projectives is
/// invertible iff it is invertible mod radical, so it suffices to cover
/// every value of the hom space's projection to top coordinates; that
/// quotient is small even when the hom space itself is large.
bool cx_iso_enum(const Algebra& A, const Cx& X, const Cx& Y) {
  BlockLinMap B = chain_map_system(A, X, Y);
  auto kern = B.matrix().kernel_basis();
  int nv = A.vertices();
  auto pX1 = top_positions(A, X.c1), pY1 = top_positions(A, Y.c1);
  auto pX0 = top_positions(A, X.c0), pY0 = top_positions(A, Y.c0);
  int tdim = 0;
  for (int v = 0; v < nv; ++v)
    tdim += int(pY1[v].size() * pX1[v].size() + pY0[v].size() * pX0[v].size());
  auto top_vec = [&](const FqVec& kv) {
    auto mats = B.unpack_in(kv);
    FqVec t;
    t.reserve(tdim);
    for (int v = 0; v < nv; ++v)
      for (int r : pY1[v])
        for (int c : pX1[v]) t.push_back(mats[v].at(r, c));
    for (int v = 0; v < nv; ++v)
      for (int r : pY0[v])
        for (int c : pX0[v]) t.push_back(mats[nv + v].at(r, c));
    return t;
  };
  // kernel vectors whose top projections form a basis of the image
  std::vector<FqVec> chosen;
  FqMatrix acc(A.q(), 0, tdim);
  for (auto& kv : kern) {
    FqVec t = top_vec(kv);
    FqMatrix row(A.q(), 1, tdim);
    for (int c = 0; c < tdim; ++c) row.set(0, c, t[c]);
    FqMatrix cand = vstack(acc, row);
    if (cand.rank() > acc.rank()) {
      acc = std::move(cand);
      chosen.push_back(kv);
    }
  }
  bool found = false;
  for_each_combo(A.q(), int(chosen.size()), kIsoCap, [&](const FqVec& c) {
    FqVec v(B.in_dim(), 0);
    for (size_t k = 0; k < chosen.size(); ++k)
      if (c[k])
        for (size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + c[k] * chosen[k][i]) % A.q();
    auto [s1, s0] = unpack_chain_map(A, X, Y, B.unpack_in(v));
    bool inv = true;
    for (auto& m : s1.f) inv = inv && m.is_invertible();
    for (auto& m : s0.f) inv = inv && m.is_invertible();
    if (inv) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

bool cx_is_isomorphic(const Algebra& A, const Cx& X, const Cx& Y) {
  int nv = A.vertices();
  if (X.c1.mult(nv) != Y.c1.mult(nv) || X.c0.mult(nv) != Y.c0.mult(nv)) return false;
  if (X.c1.rep.dim != Y.c1.rep.dim || X.c0.rep.dim != Y.c0.rep.dim) return false;
  if (cx_profile(A, X) != cx_profile(A, Y)) return false;
  // split off acyclic summands (unique by Krull-Schmidt) so the
  // exhaustive search only ever runs on the small reduced parts
  Cx rx = X, ry = Y;
  DimVec px, qx, py, qy;
  strip_core(A, rx, px, qx);
  strip_core(A, ry, py, qy);
  if (px != py || qx != qy) return false;
  if (rx.c1.mult(nv) != ry.c1.mult(nv) || rx.c0.mult(nv) != ry.c0.mult(nv)) return false;
  return cx_iso_enum(A, rx, ry);
}

CxClassId CxRegistry::classify(const Cx& X) {
  int nv = A_->vertices();
  std::pair<DimVec, DimVec> key{X.c1.mult(nv), X.c0.mult(nv)};
  auto& list = classes_[key];
  for (size_t k = 0; k < list.size(); ++k)
    if (cx_is_isomorphic(*A_, list[k], X)) return CxClassId{key.first, key.second, int(k)};
  list.push_back(X);
  return CxClassId{key.first, key.second, int(list.size()) - 1};
}

const Cx& CxRegistry::rep_of(const CxClassId& id) const {
  return classes_.at({id.m1, id.m0})[id.idx];
}

namespace {

/// Cocycle constraint system for Ext^1_{C_2}(X, Y); variables
/// sigma_1 : X_1 -> Y_0 and sigma_0 : X_0 -> Y_1 (vertexwise blocks).
BlockLinMap cocycle_system(const Algebra& A, const Cx& X, const Cx& Y) {
  int nv = A.vertices();
  unsigned q = A.q();
  int na = int(A.arrows().size());
  std::vector<std::pair<int, int>> in = pair_shapes(X.c1.rep, Y.c0.rep);
  auto in0 = pair_shapes(X.c0.rep, Y.c1.rep);
  in.insert(in.end(), in0.begin(), in0.end());

  std::vector<std::pair<int, int>> out;
  for (auto& ar : A.arrows()) out.push_back({Y.c0.rep.dim[ar.tgt], X.c1.rep.dim[ar.src]});
  for (auto& ar : A.arrows()) out.push_back({Y.c1.rep.dim[ar.tgt], X.c0.rep.dim[ar.src]});
  for (int v = 0; v < nv; ++v) out.push_back({Y.c1.rep.dim[v], X.c1.rep.dim[v]});  // i = 1
  for (int v = 0; v < nv; ++v) out.push_back({Y.c0.rep.dim[v], X.c0.rep.dim[v]});  // i = 0

  BlockLinMap B(q, in, out);
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = A.arrows()[a];
    B.add(a, ar.tgt, FqMatrix::identity(q, Y.c0.rep.dim[ar.tgt]), X.c1.rep.mat[a], 1);
    B.add(a, ar.src, Y.c0.rep.mat[a], FqMatrix::identity(q, X.c1.rep.dim[ar.src]), -1);
    B.add(na + a, nv + ar.tgt, FqMatrix::identity(q, Y.c1.rep.dim[ar.tgt]), X.c0.rep.mat[a], 1);
    B.add(na + a, nv + ar.src, Y.c1.rep.mat[a], FqMatrix::identity(q, X.c0.rep.dim[ar.src]), -1);
  }
  for (int v = 0; v < nv; ++v) {
    // d0^Y sigma_1 + sigma_0 d1^X = 0
    B.add(2 * na + v, v, Y.d0.f[v], FqMatrix::identity(q, X.c1.rep.dim[v]), 1);
    B.add(2 * na + v, nv + v, FqMatrix::identity(q, Y.c1.rep.dim[v]), X.d1.f[v], 1);
    // d1^Y sigma_0 + sigma_1 d0^X = 0
    B.add(2 * na + nv + v, nv + v, Y.d1.f[v], FqMatrix::identity(q, X.c0.rep.dim[v]), 1);
    B.add(2 * na + nv + v, v, FqMatrix::identity(q, Y.c0.rep.dim[v]), X.d0.f[v], 1);
  }
  return B;
}

/// Coboundary vectors in the sigma ambient coordinates, from morphism
/// pairs h_1 : X_1 -> Y_1, h_0 : X_0 -> Y_0.
std::vector<FqVec> coboundary_vectors(const Algebra& A, const Cx& X, const Cx& Y) {
  auto pack_sigma = [&](const RepMap& s1, const RepMap& s0) {
    std::vector<std::pair<int, int>> in = pair_shapes(X.c1.rep, Y.c0.rep);
    auto in0 = pair_shapes(X.c0.rep, Y.c1.rep);
    in.insert(in.end(), in0.begin(), in0.end());
    BlockLinMap B(A.q(), in, {});
    std::vector<FqMatrix> mats = s1.f;
    mats.insert(mats.end(), s0.f.begin(), s0.f.end());
    return B.pack_in(mats);
  };
  std::vector<FqVec> out;
  unsigned neg = A.q() - 1;
  for (auto& h1 : hom_basis(A, X.c1.rep, Y.c1.rep)) {
    // sigma_1 = -d1^Y h1, sigma_0 = h1 d0^X
    out.push_back(pack_sigma(map_scaled(compose(Y.d1, h1), neg), compose(h1, X.d0)));
  }
  for (auto& h0 : hom_basis(A, X.c0.rep, Y.c0.rep)) {
    // sigma_1 = h0 d1^X, sigma_0 = -d0^Y h0
    out.push_back(pack_sigma(compose(h0, X.d1), map_scaled(compose(Y.d0, h0), neg)));
  }
  return out;
}

Cx middle_of_cocycle(const Algebra& A, const Cx& X, const Cx& Y, const RepMap& s1,
                     const RepMap& s0) {
  Cx L = cx_direct_sum(A, Y, X);
  for (int v = 0; v < A.vertices(); ++v) {
    L.d1.f[v].set_block(0, Y.c1.rep.dim[v], s1.f[v]);
    L.d0.f[v].set_block(0, Y.c0.rep.dim[v], s0.f[v]);
  }
  return L;
}

struct CosetData {
  BlockLinMap sys;
  std::vector<FqVec> complement;  // coset representatives basis
};

CosetData ext_cosets(const Algebra& A, const Cx& X, const Cx& Y) {
  BlockLinMap B = cocycle_system(A, X, Y);
  auto zbasis = B.matrix().kernel_basis();
  auto bvecs = coboundary_vectors(A, X, Y);
  int ambient = B.in_dim();
  FqMatrix acc(A.q(), int(bvecs.size()), ambient);
  for (size_t r = 0; r < bvecs.size(); ++r)
    for (int c = 0; c < ambient; ++c) acc.set(int(r), c, bvecs[r][c]);
  std::vector<FqVec> complement;
  for (auto& zv : zbasis) {
    FqMatrix row(A.q(), 1, ambient);
    for (int c = 0; c < ambient; ++c) row.set(0, c, zv[c]);
    FqMatrix cand = vstack(acc, row);
    if (cand.rank() > acc.rank()) {
      acc = std::move(cand);
      complement.push_back(zv);
    }
  }
  return {std::move(B), std::move(complement)};
}

}  // namespace

int c2_ext1_dim(const Algebra& A, const Cx& X, const Cx& Y) {
  return int(ext_cosets(A, X, Y).complement.size());
}

std::vector<std::pair<CxClassId, long>> c2_ext1_middles(const Algebra& A, CxRegistry& reg,
                                                        const Cx& X, const Cx& Y) {
  CosetData data = ext_cosets(A, X, Y);
  std::map<CxClassId, long> counts;
  int ambient = data.sys.in_dim();
  for_each_combo(A.q(), int(data.complement.size()), kEnumCap, [&](const FqVec& coeffs) {
    FqVec sv(ambient, 0);
    for (size_t k = 0; k < data.complement.size(); ++k)
      if (coeffs[k])
        for (int i = 0; i < ambient; ++i)
          sv[i] = (sv[i] + coeffs[k] * data.complement[k][i]) % A.q();
    auto mats = data.sys.unpack_in(sv);
    int nv = A.vertices();
    RepMap s1, s0;
    s1.f.assign(mats.begin(), mats.begin() + nv);
    s0.f.assign(mats.begin() + nv, mats.begin() + 2 * nv);
    Cx L = middle_of_cocycle(A, X, Y, s1, s0);
    ++counts[reg.classify(L)];
    return true;
  });
  return std::vector<std::pair<CxClassId, long>>(counts.begin(), counts.end());
}

namespace {

/// Tries to split off K_{P_i} (or K*_{P_i}); on success rewrites X to the
/// complement, restandardized as a complex of standard projectives.
bool try_split(const Algebra& A, Cx& X, int i, bool starred) {
  const Rep& P = A.projective(i);
  const Rep& top1 = starred ? X.c0.rep : X.c1.rep;  // where u lives
  const Rep& bot = starred ? X.c1.rep : X.c0.rep;   // where r lives
  const RepMap& d_down = starred ? X.d0 : X.d1;     // top1 -> bot

  auto ubasis = hom_basis(A, P, top1);
  auto rbasis = hom_basis(A, bot, P);
  RepMap found_u = zero_map(A, P, top1), found_r = zero_map(A, bot, P);
  bool ok = false;
  for_each_combo(A.q(), int(ubasis.size()), kIsoCap, [&](const FqVec& c) {
    RepMap u = combo_map(A, P, top1, ubasis, c);
    RepMap comp = compose(d_down, u);  // P -> bot
    // solve r in Hom(bot, P) with r comp = id over the hom basis
    int k = int(rbasis.size());
    int out_dim = 0;
    for (int v = 0; v < A.vertices(); ++v) out_dim += P.dim[v] * P.dim[v];
    FqMatrix sys(A.q(), out_dim, k);
    FqVec rhs(out_dim, 0);
    for (int b = 0; b < k; ++b) {
      RepMap rc = compose(rbasis[b], comp);  // P -> P
      int pos = 0;
      for (int v = 0; v < A.vertices(); ++v)
        for (int r2 = 0; r2 < P.dim[v]; ++r2)
          for (int c2 = 0; c2 < P.dim[v]; ++c2) sys.set(pos++, b, rc.f[v].at(r2, c2));
    }
    int pos = 0;
    for (int v = 0; v < A.vertices(); ++v)
      for (int r2 = 0; r2 < P.dim[v]; ++r2)
        for (int c2 = 0; c2 < P.dim[v]; ++c2) rhs[pos++] = (r2 == c2) ? 1 : 0;
    auto sol = sys.solve(rhs);
    if (!sol) return true;
    found_u = u;
    found_r = combo_map(A, bot, P, rbasis, *sol);
    ok = true;
    return false;
  });
  if (!ok) return false;

  // retraction on the other component
  RepMap r_top = compose(found_r, d_down);  // top1 -> P
  RepMap r1 = starred ? found_r : r_top;
  RepMap r0 = starred ? r_top : found_r;

  auto kernel_basis_of = [&](const RepMap& r, const Rep& amb) {
    std::vector<FqMatrix> basis;
    for (int v = 0; v < A.vertices(); ++v)
      basis.push_back(FqMatrix::from_columns(A.q(), amb.dim[v], r.f[v].kernel_basis()));
    return basis;
  };
  auto B1 = kernel_basis_of(r1, X.c1.rep);
  auto B0 = kernel_basis_of(r0, X.c0.rep);

  auto restrict_map = [&](const RepMap& d, const std::vector<FqMatrix>& src,
                          const std::vector<FqMatrix>& tgt) {
    RepMap out;
    for (int v = 0; v < A.vertices(); ++v) {
      auto sol = tgt[v].solve_matrix(d.f[v] * src[v]);
      if (!sol) throw std::logic_error("strip_acyclics: complement not differential-stable");
      out.f.push_back(std::move(*sol));
    }
    return out;
  };
  // pseudo-reps for the complement components (projective, so covers are isos)
  auto induce = [&](const Rep& amb, const std::vector<FqMatrix>& basis) {
    SubRep s;
    s.rep.dim.clear();
    std::vector<FqMatrix> b = basis;
    s.rep = Rep{};
    for (auto& m : b) s.rep.dim.push_back(m.cols());
    for (size_t a = 0; a < A.arrows().size(); ++a) {
      const Arrow& ar = A.arrows()[a];
      auto sol = b[ar.tgt].solve_matrix(amb.mat[a] * b[ar.src]);
      if (!sol) throw std::logic_error("strip_acyclics: complement not arrow-stable");
      s.rep.mat.push_back(std::move(*sol));
    }
    s.incl.f = std::move(b);
    return s;
  };
  SubRep C1 = induce(X.c1.rep, B1), C0 = induce(X.c0.rep, B0);
  RepMap d1c = restrict_map(X.d1, B1, B0);
  RepMap d0c = restrict_map(X.d0, B0, B1);

  Cover cov1 = projective_cover(A, C1.rep), cov0 = projective_cover(A, C0.rep);
  auto conj = [&](const RepMap& d, const Cover& src, const Cover& tgt) {
    RepMap out;
    for (int v = 0; v < A.vertices(); ++v) {
      auto sol = tgt.epi.f[v].solve_matrix(d.f[v] * src.epi.f[v]);
      if (!sol) throw std::logic_error("strip_acyclics: cover is not an isomorphism");
      out.f.push_back(std::move(*sol));
    }
    return out;
  };
  Cx next;
  next.c1 = cov1.P;
  next.c0 = cov0.P;
  next.d1 = conj(d1c, cov1, cov0);
  next.d0 = conj(d0c, cov0, cov1);
  X = std::move(next);
  return true;
}

void strip_core(const Algebra& A, Cx& X, DimVec& p, DimVec& q) {
  p.assign(A.vertices(), 0);
  q.assign(A.vertices(), 0);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int star = 0; star < 2 && !progress; ++star)
      for (int i = 0; i < A.vertices() && !progress; ++i)
        if (try_split(A, X, i, star == 1)) {
          (star ? q : p)[i] += 1;
          progress = true;
        }
  }
}

}  // namespace

StripResult strip_acyclics(const Algebra& A, const EulerData& euler, const Cx& X) {
  StripResult res;
  res.reduced = X;
  strip_core(A, res.reduced, res.p, res.qmult);
  // [X] = v^{-<P, R> + <Q, R>} K_P * K*_Q * [R]   (acyclic classes are 0,
  // so the stripping order does not matter)
  DimVec pcl(A.vertices(), 0), qcl(A.vertices(), 0);
  for (int i = 0; i < A.vertices(); ++i) {
    for (int v = 0; v < A.vertices(); ++v) {
      pcl[v] += res.p[i] * A.projective(i).dim[v];
      qcl[v] += res.qmult[i] * A.projective(i).dim[v];
    }
  }
  DimVec rcl = cx_class(res.reduced);
  long e = -euler.form(pcl, rcl) + euler.form(qcl, rcl);
  res.vfactor = QSqrt::vpow(A.q(), e);
  return res;
}

HomologyData homology2(const Algebra& A, const Cx& X) {
  HomologyData H;
  auto homology_at = [&](const Rep& comp, const Rep& other, const RepMap& dout,
                         const RepMap& din) {
    // ker(dout) / im(din), dout : comp -> other, din : other -> comp
    SubRep K = kernel_sub(A, comp, other, dout);
    std::vector<FqMatrix> span;
    for (int v = 0; v < A.vertices(); ++v) {
      auto sol = K.incl.f[v].solve_matrix(din.f[v]);
      if (!sol) throw std::logic_error("homology2: image not inside kernel");
      span.push_back(std::move(*sol));
    }
    return quotient_by_span(A, K.rep, span).rep;
  };
  H.h0 = homology_at(X.c0.rep, X.c1.rep, X.d0, X.d1);
  H.h1 = homology_at(X.c1.rep, X.c0.rep, X.d1, X.d0);
  for (int v = 0; v < A.vertices(); ++v) {
    H.ker_d1_class.push_back(X.c1.rep.dim[v] - X.d1.f[v].rank());
    H.im_d1_class.push_back(X.d1.f[v].rank());
  }
  return H;
}

}  // namespace hb
