#pragma once

#include "hallbridge/modcat.hpp"
#include "hallbridge/qsqrt.hpp"

#include <tuple>

namespace hb {

/// 2-periodic complex of projectives: c1 <-> c0 with d1: c1 -> c0 and
/// d0: c0 -> c1, both composites zero. Components are explicit direct
/// sums of indecomposable projectives.
struct Cx {
  ProjSum c1, c0;
  RepMap d1, d0;
};

/// Iso-class handle for complexes: multiplicity vectors of both
/// components plus an index into the class list for that shape.
struct CxClassId {
  DimVec m1, m0;
  int idx = 0;
  bool operator<(const CxClassId& o) const {
    return std::tie(m1, m0, idx) < std::tie(o.m1, o.m0, o.idx);
  }
  bool operator==(const CxClassId& o) const {
    return m1 == o.m1 && m0 == o.m0 && idx == o.idx;
  }
  bool is_zero() const {
    auto all0 = [](const DimVec& d) {
      return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
    };
    return all0(m1) && all0(m0);
  }
};

struct HomologyData {
  Rep h0, h1;
  DimVec ker_d1_class, im_d1_class;
};

Cx zero_cx(const Algebra& A);
bool cx_valid(const Algebra& A, const Cx& X);

/// Acyclic complexes K_P (d1 = 1, d0 = 0) and K_P* (d1 = 0, d0 = 1) on
/// the projective with the given multiplicity vector.
Cx k_acyclic(const Algebra& A, const DimVec& mult, bool starred);

/// pi applied to the (resolution) complex: odd terms to degree 1, even
/// terms to degree 0, differentials assembled blockwise.
Cx pi_of_resolution(const Algebra& A, const Resolution& R);

/// Shift involution: swaps components and negates both differentials.
Cx shift_star(const Algebra& A, const Cx& X);

Cx cx_direct_sum(const Algebra& A, const Cx& X, const Cx& Y);

/// Class in K(A): c0 - c1 dimension vectors.
DimVec cx_class(const Cx& X);

/// Canonical encoding of a complex (component encodings + differentials).
std::vector<unsigned> encode_cx(const Cx& X);

/// Basis of Hom_{C_2}(X, Y): pairs (s1, s0) of module morphisms with
/// s_{i+1} d_i^X = d_i^Y s_i.
std::vector<std::pair<RepMap, RepMap>> cx_hom_basis(const Algebra& A, const Cx& X, const Cx& Y);
int cx_hom_dim(const Algebra& A, const Cx& X, const Cx& Y);

/// dim Hom in the homotopy category K_2: chain maps modulo null-homotopic
/// ones, computed as dim Hom_{C_2} minus the rank of h -> d h + h d.
int k2_hom_dim(const Algebra& A, const Cx& X, const Cx& Y);

/// dim Hom of chain maps P_M[shift] -> P_N in the bounded category C^b
/// (resolution complexes; shift must be even for the 2-periodic use).
int cb_hom_dim(const Algebra& A, const Resolution& RM, const Resolution& RN, int shift);

bool cx_is_isomorphic(const Algebra& A, const Cx& X, const Cx& Y);

class CxRegistry {
public:
  explicit CxRegistry(const Algebra& A) : A_(&A) {}
  CxClassId classify(const Cx& X);
  const Cx& rep_of(const CxClassId& id) const;

private:
  const Algebra* A_;
  std::map<std::pair<DimVec, DimVec>, std::vector<Cx>> classes_;
};

/// Extension middles in C_2(A) for complexes of projectives: extensions
/// 0 -> Y -> L -> X -> 0 split componentwise, so classes are cocycles
/// (sigma_1, sigma_0), sigma_i : X_i -> Y_{i+1}, modulo coboundaries;
/// the middle of sigma has components Y_i + X_i and differential
/// [[d^Y, sigma], [0, d^X]]. Counts sum to q^{dim Ext^1_{C_2}(X, Y)}.
std::vector<std::pair<CxClassId, long>> c2_ext1_middles(const Algebra& A, CxRegistry& reg,
                                                        const Cx& X, const Cx& Y);
int c2_ext1_dim(const Algebra& A, const Cx& X, const Cx& Y);

struct StripResult {
  DimVec p, qmult;  // K_P and K_Q* multiplicities stripped off
  Cx reduced;
  QSqrt vfactor;
};

/// Maximal acyclic direct summand K_P + K_Q*: repeatedly splits off
/// K_{P_i} / K*_{P_i} summands; vfactor is the exact scalar with
/// [X] = vfactor * K_{P} * K*_{Q} * [reduced].
StripResult strip_acyclics(const Algebra& A, const EulerData& euler, const Cx& X);

HomologyData homology2(const Algebra& A, const Cx& X);

}  // namespace hb
