#pragma once

#include "hallbridge/complex2.hpp"

#include <map>

namespace hb {

/// Formal Q(sqrt q)-linear combination of module iso-classes.
class HallElement {
public:
  HallElement() = default;

  void add_term(const ClassId& id, const QSqrt& c);
  HallElement operator+(const HallElement& o) const;
  HallElement operator-(const HallElement& o) const;
  HallElement scaled(const QSqrt& c) const;
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const HallElement& o) const { return terms_ == o.terms_; }

  const std::map<ClassId, QSqrt>& terms() const { return terms_; }

private:
  std::map<ClassId, QSqrt> terms_;
};

/// Shared computation context: algebra, catalog bound, registries, Euler
/// data and product memo tables.
struct Engine {
  explicit Engine(const Algebra& alg, DimVec bnd)
      : A(&alg), bound(std::move(bnd)), mods(alg), cxs(alg), euler(alg) {}

  const Algebra* A;
  DimVec bound;
  ModuleRegistry mods;
  CxRegistry cxs;
  EulerData euler;

  std::map<std::tuple<ClassId, ClassId, bool>, HallElement> hall_memo;

  ClassId zero_class();
  HallElement unit();
  void check_bound(const DimVec& d) const;  // throws BoundError
};

HallElement hall_product(Engine& eng, const HallElement& x, const HallElement& y, bool twisted);

/// x^t / [t]_v! in the chosen product; x^0 = unit.
HallElement divided_power(Engine& eng, const ClassId& x, int t, bool twisted);

/// sum_{t=0}^{N} (-1)^t [S_i]^{(t)} [S_j] [S_i]^{(N-t)} with
/// N = 1 - (S_i, S_j); throws ArithmeticError when N < 0. Equals
/// 1/[N]! times the plain-power sum with [N t]_v coefficients.
HallElement serre_sum_hall(Engine& eng, int i, int j);
int serre_exponent(Engine& eng, int i, int j);

}  // namespace hb
