#pragma once

#include "hallbridge/algebra.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hb {

struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Morphism of representations: one matrix per vertex, N_v x M_v.
struct RepMap {
  std::vector<FqMatrix> f;
  bool operator==(const RepMap& o) const { return f == o.f; }
};

using DimVec = std::vector<int>;

/// Iso-class handle: dimension vector plus index into the deterministic
/// class list for that dimension vector.
struct ClassId {
  DimVec dim;
  int idx = 0;
  bool operator<(const ClassId& o) const {
    return std::tie(dim, idx) < std::tie(o.dim, o.idx);
  }
  bool operator==(const ClassId& o) const { return dim == o.dim && idx == o.idx; }
};

/// Explicit direct sum of indecomposable projectives; rep bases are the
/// concatenated summand bases (per vertex, in summand order).
struct ProjSum {
  std::vector<int> summands;  // projective indices, with multiplicity
  Rep rep;

  DimVec mult(int nv) const {
    DimVec m(nv, 0);
    for (int s : summands) ++m[s];
    return m;
  }
};

struct Resolution {
  Rep module;
  std::vector<ProjSum> terms;   // P_0 .. P_n
  std::vector<RepMap> maps;     // maps[i]: P_i -> P_{i-1}, i = 1..n
  RepMap augmentation;          // P_0 -> M
  bool minimal = false;
  int length() const { return int(terms.size()) - 1; }
};

/// Syzygy bookkeeping of a resolution (classes live in K(A) = Z^vertices).
struct ResolutionInvariants {
  std::vector<DimVec> syzygy_classes;  // class of Im p_i, i = 1..n
  DimVec m_odd, m_even;                // parity sums of syzygy classes
  DimVec p_odd, p_even;                // classes of term parity sums
  DimVec tau;                          // m_odd - m_even
};

Rep zero_rep(const Algebra& A);
Rep direct_sum(const Algebra& A, const std::vector<const Rep*>& parts);
bool satisfies_relations(const Algebra& A, const Rep& M);
FqMatrix path_matrix(const Algebra& A, const Rep& M, int src, const std::vector<int>& arrows);
inline DimVec rep_class(const Rep& M) { return M.dim; }

/// Direct sum together with per-part basis offsets (offset[part][vertex]).
struct SumLayout {
  Rep rep;
  std::vector<DimVec> offset;
};
SumLayout direct_sum_layout(const Algebra& A, const std::vector<const Rep*>& parts);

/// Canonical encoding: dim vector, then arrow matrices in declaration
/// order, row-major.
std::vector<unsigned> encode_rep(const Rep& M);

RepMap zero_map(const Algebra& A, const Rep& M, const Rep& N);
RepMap identity_map(const Algebra& A, const Rep& M);
RepMap compose(const RepMap& g, const RepMap& f);  // g after f
RepMap map_sum(const RepMap& a, const RepMap& b);
RepMap map_scaled(const RepMap& a, unsigned c);
bool is_zero_map(const RepMap& m);
bool map_into_radical(const Algebra& A, const Rep& N, const RepMap& f);

/// Basis of Hom_A(M, N): solutions of the commuting squares
/// f_j M_a = N_a f_i per arrow a : i -> j.
std::vector<RepMap> hom_basis(const Algebra& A, const Rep& M, const Rep& N);
int hom_dim(const Algebra& A, const Rep& M, const Rep& N);

RepMap combo_map(const Algebra& A, const Rep& M, const Rep& N,
                 const std::vector<RepMap>& basis, const FqVec& coeffs);

bool is_isomorphic(const Algebra& A, const Rep& M, const Rep& N);
long aut_order(const Algebra& A, const Rep& M);

struct SubRep {
  Rep rep;
  RepMap incl;  // rep -> ambient
};
struct QuotRep {
  Rep rep;
  RepMap proj;  // ambient -> rep
};

SubRep kernel_sub(const Algebra& A, const Rep& M, const Rep& N, const RepMap& f);
SubRep image_sub(const Algebra& A, const Rep& M, const Rep& N, const RepMap& f);
/// Quotient of M by the span of the given columns (one matrix per vertex).
QuotRep quotient_by_span(const Algebra& A, const Rep& M, const std::vector<FqMatrix>& span);
SubRep radical_sub(const Algebra& A, const Rep& M);

struct Cover {
  ProjSum P;
  RepMap epi;  // P.rep -> M
};

Cover projective_cover(const Algebra& A, const Rep& M);
ProjSum make_proj_sum(const Algebra& A, const std::vector<int>& summands);
ProjSum proj_sum_of_mult(const Algebra& A, const DimVec& mult);

/// Iterated projective covers; throws when the length exceeds dim_k A,
/// which signals infinite global dimension.
Resolution minimal_resolution(const Algebra& A, const Rep& M);
/// Non-minimal resolution in the block form with padding projectives R_i
/// (mult vectors, pads.size() = desired length), built from the minimal one.
Resolution padded_resolution(const Algebra& A, const Resolution& min_res,
                             const std::vector<DimVec>& pads);
bool resolution_is_exact(const Algebra& A, const Resolution& R);

ResolutionInvariants resolution_invariants(const Algebra& A, const Resolution& R);

/// dim Ext^t(M, N) for t = 0 .. length of the minimal resolution of M.
std::vector<int> ext_dims(const Algebra& A, const Rep& M, const Rep& N);

class EulerData {
public:
  EulerData() = default;
  explicit EulerData(const Algebra& A);
  long form(const DimVec& a, const DimVec& b) const;
  long sym(const DimVec& a, const DimVec& b) const { return form(a, b) + form(b, a); }
  const std::vector<std::vector<long>>& matrix() const { return e_; }

private:
  std::vector<std::vector<long>> e_;
};

/// Deterministic per-dimension-vector catalog of module iso-classes.
/// Class representatives are minimal in encoding order; ids are stable
/// and independent of any enumeration bound.
class ModuleRegistry {
public:
  explicit ModuleRegistry(const Algebra& A) : A_(&A) {}

  const std::vector<Rep>& classes(const DimVec& d);
  ClassId classify(const Rep& M);
  const Rep& rep_of(const ClassId& id);
  long aut_order_of(const ClassId& id);

private:
  const std::vector<Rep>& build_classes(const DimVec& d);

  const Algebra* A_;
  std::map<DimVec, std::vector<Rep>> classes_;
  std::map<ClassId, long> auts_;
};

/// Extension middles: realizes Ext^1(M, N) as presentation cocycles and
/// returns, per middle-term iso-class, the number of extension classes.
/// Counts sum to q^{dim Ext^1(M,N)}.
std::vector<std::pair<ClassId, long>> ext1_middles(const Algebra& A, ModuleRegistry& reg,
                                                   const Rep& M, const Rep& N);

}  // namespace hb
