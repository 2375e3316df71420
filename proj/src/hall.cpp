#include "hallbridge/hall.hpp"

#include <sstream>

namespace hb {

void HallElement::add_term(const ClassId& id, const QSqrt& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(id);
  if (it == terms_.end()) {
    terms_.emplace(id, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HallElement HallElement::operator+(const HallElement& o) const {
  HallElement r = *this;
  for (auto& [id, c] : o.terms_) r.add_term(id, c);
  return r;
}

HallElement HallElement::operator-(const HallElement& o) const {
  HallElement r = *this;
  for (auto& [id, c] : o.terms_) r.add_term(id, -c);
  return r;
}

HallElement HallElement::scaled(const QSqrt& c) const {
  HallElement r;
  if (c.is_zero()) return r;
  for (auto& [id, k] : terms_) r.add_term(id, k * c);
  return r;
}

ClassId Engine::zero_class() { return mods.classify(zero_rep(*A)); }

HallElement Engine::unit() {
  HallElement e;
  e.add_term(zero_class(), QSqrt::one(A->q()));
  return e;
}

void Engine::check_bound(const DimVec& d) const {
  for (size_t v = 0; v < d.size(); ++v)
    if (d[v] > bound[v]) {
      std::ostringstream os;
      os << "dim vector (";
      for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
      os << ") exceeds catalog bound";
      throw BoundError(os.str());
    }
}

namespace {

HallElement basis_product(Engine& eng, const ClassId& xm, const ClassId& yn, bool twisted) {
  auto key = std::tuple(xm, yn, twisted);
  auto it = eng.hall_memo.find(key);
  if (it != eng.hall_memo.end()) return it->second;

  const Algebra& A = *eng.A;
  eng.check_bound(xm.dim);
  eng.check_bound(yn.dim);
  DimVec total(xm.dim);
  for (size_t v = 0; v < total.size(); ++v) total[v] += yn.dim[v];
  eng.check_bound(total);

  const Rep M = eng.mods.rep_of(xm);
  const Rep N = eng.mods.rep_of(yn);
  QSqrt scale = QSqrt::vpow(A.q(), -2L * hom_dim(A, M, N));  // 1 / |Hom(M,N)|
  if (twisted) scale *= QSqrt::vpow(A.q(), eng.euler.form(xm.dim, yn.dim));

  HallElement out;
  for (auto& [lid, count] : ext1_middles(A, eng.mods, M, N))
    out.add_term(lid, scale * QSqrt(A.q(), count));
  eng.hall_memo.emplace(key, out);
  return out;
}

}  // namespace

HallElement hall_product(Engine& eng, const HallElement& x, const HallElement& y, bool twisted) {
  HallElement out;
  for (auto& [xm, cx] : x.terms())
    for (auto& [yn, cy] : y.terms())
      out = out + basis_product(eng, xm, yn, twisted).scaled(cx * cy);
  return out;
}

HallElement divided_power(Engine& eng, const ClassId& x, int t, bool twisted) {
  HallElement p = eng.unit();
  HallElement xe;
  xe.add_term(x, QSqrt::one(eng.A->q()));
  for (int k = 0; k < t; ++k) p = hall_product(eng, p, xe, twisted);
  return p.scaled(quantum_factorial(eng.A->q(), t).inverse());
}

int serre_exponent(Engine& eng, int i, int j) {
  DimVec si(eng.A->vertices(), 0), sj(eng.A->vertices(), 0);
  si[i] = 1;
  sj[j] = 1;
  long N = 1 - eng.euler.sym(si, sj);
  if (N < 0) throw ArithmeticError("negative Serre exponent");
  return int(N);
}

HallElement serre_sum_hall(Engine& eng, int i, int j) {
  unsigned q = eng.A->q();
  int N = serre_exponent(eng, i, j);
  DimVec si(eng.A->vertices(), 0), sj(eng.A->vertices(), 0);
  si[i] = 1;
  sj[j] = 1;
  ClassId ci = eng.mods.classify(eng.A->simple(i));
  ClassId cj = eng.mods.classify(eng.A->simple(j));
  HallElement ej;
  ej.add_term(cj, QSqrt::one(q));
  HallElement sum;
  for (int t = 0; t <= N; ++t) {
    QSqrt c = QSqrt::one(q);
    if (t % 2) c = -c;
    HallElement term = hall_product(eng, divided_power(eng, ci, t, true), ej, true);
    term = hall_product(eng, term, divided_power(eng, ci, N - t, true), true);
    sum = sum + term.scaled(c);
  }
  return sum;
}

}  // namespace hb
