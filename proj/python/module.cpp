#include "hallbridge/io.hpp"
#include "hallbridge/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <string>

namespace py = pybind11;
using namespace hb;

namespace {

/// One loaded algebra with its module catalog and product caches.
/// Results cross the Python boundary as JSON strings so the exact
/// rational coefficients survive untouched.
class Session {
 public:
  Session(const std::string& algebra_text, const std::vector<int>& bound) {
    A_ = std::make_unique<Algebra>(Algebra::parse(algebra_text));
    DimVec b(A_->vertices(), 2);
    if (!bound.empty()) {
      if (int(bound.size()) != A_->vertices())
        throw ParseError("bound must have one entry per vertex");
      b.assign(bound.begin(), bound.end());
    }
    eng_ = std::make_unique<Engine>(*A_, b);
    ses_ = std::make_unique<BridgelandSession>(*eng_);
  }

  int vertices() const { return A_->vertices(); }
  unsigned q() const { return A_->q(); }
  int dimension() const { return A_->dim(); }

  std::string catalog() {
    Json arr = Json::array();
    for (auto& id : all_classes(*eng_)) {
      arr.push_back(Json{{"dim_vector", id.dim},
                         {"class_id", id.idx},
                         {"aut_order", eng_->mods.aut_order_of(id)},
                         {"encoding", encode_rep(eng_->mods.rep_of(id))}});
    }
    return arr.dump();
  }

  int hom(const std::string& m, const std::string& n) {
    return hom_dim(*A_, rep(m), rep(n));
  }

  std::vector<int> ext(const std::string& m, const std::string& n) {
    return ext_dims(*A_, rep(m), rep(n));
  }

  std::string resolve(const std::string& m) {
    Resolution R = minimal_resolution(*A_, rep(m));
    ResolutionInvariants inv = resolution_invariants(*A_, R);
    Json terms = Json::array();
    for (auto& t : R.terms) terms.push_back(t.mult(A_->vertices()));
    return Json{{"length", R.length()},
                {"terms", terms},
                {"m_odd", inv.m_odd},
                {"m_even", inv.m_even},
                {"tau", inv.tau}}
        .dump();
  }

  std::string hall(const std::string& m, const std::string& n, bool twisted) {
    HallElement p = hall_product(*eng_, basis(m), basis(n), twisted);
    return hall_to_json(p).dump();
  }

  std::string e(const std::string& m) {
    return bridgeland_to_json(*ses_, e_element(*ses_, rep(m))).dump();
  }

  std::string dh2(const std::string& m, const std::string& n) {
    BridgelandElement p =
        dh2_product(*ses_, e_element(*ses_, rep(m)), e_element(*ses_, rep(n)));
    return bridgeland_to_json(*ses_, p).dump();
  }

  std::string thm37(const std::string& m, const std::string& n) {
    Thm37Report r = check_thm37(*ses_, rep(m), rep(n));
    return Json{{"equal", r.equal},
                {"ext_high", r.ext_high},
                {"w0", r.w0},
                {"t0", r.t0},
                {"t1", r.t1},
                {"lhs", bridgeland_to_json(*ses_, r.lhs)},
                {"rhs", bridgeland_to_json(*ses_, r.rhs)}}
        .dump();
  }

  std::string counts(const std::string& m, const std::string& n) {
    CountsReport r = check_counts(*ses_, rep(m), rep(n));
    return Json{{"hom_cb_direct", r.hom_cb_direct.str()},
                {"hom_cb_formula", r.hom_cb_formula.str()},
                {"hom_c2_direct", r.hom_c2_direct.str()},
                {"hom_c2_statement", r.hom_c2_statement.str()},
                {"hom_c2_proof", r.hom_c2_proof.str()},
                {"ratio_direct", r.ratio_direct.str()},
                {"ratio_formula", r.ratio_formula.str()},
                {"w0", r.w0},
                {"pass", r.pass()}}
        .dump();
  }

  bool psi_phi_identity(const std::string& m) {
    HallElement hm = basis(m);
    return psi_map(*ses_, phi_map(*ses_, hm)) == hm;
  }

  std::string serre(int i, int j) {
    if (i < 1 || i > A_->vertices() || j < 1 || j > A_->vertices() || i == j)
      throw ParseError("vertices out of range");
    HallElement h = serre_sum_hall(*eng_, i - 1, j - 1);
    BridgelandElement b = serre_sum_dh2(*ses_, i - 1, j - 1);
    return Json{{"hall", hall_to_json(h)},
                {"bridgeland", bridgeland_to_json(*ses_, b)},
                {"hall_zero", h.is_zero()},
                {"bridgeland_zero", b.is_zero()}}
        .dump();
  }

  std::vector<std::tuple<std::string, bool, std::string>> verify_all_checks() {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (auto& r : verify_all(*ses_)) out.emplace_back(r.name, r.pass, r.detail);
    return out;
  }

 private:
  // Class selectors match the CLI: S<i>, P<i>, or "d1,...,dn[:idx]".
  ClassId select(const std::string& sel) {
    if (sel.size() >= 2 && (sel[0] == 'S' || sel[0] == 'P') &&
        sel.find(',') == std::string::npos) {
      int i = std::stoi(sel.substr(1)) - 1;
      if (i < 0 || i >= A_->vertices()) throw ParseError("vertex out of range: " + sel);
      return eng_->mods.classify(sel[0] == 'S' ? A_->simple(i) : A_->projective(i));
    }
    auto colon = sel.find(':');
    std::string dims = colon == std::string::npos ? sel : sel.substr(0, colon);
    int idx = colon == std::string::npos ? 0 : std::stoi(sel.substr(colon + 1));
    DimVec d;
    std::stringstream ds(dims);
    std::string tok;
    while (std::getline(ds, tok, ',')) d.push_back(std::stoi(tok));
    if (int(d.size()) != A_->vertices()) throw ParseError("bad class selector: " + sel);
    if (idx < 0 || idx >= int(eng_->mods.classes(d).size()))
      throw ParseError("class index out of range: " + sel);
    return ClassId{d, idx};
  }

  Rep rep(const std::string& sel) { return eng_->mods.rep_of(select(sel)); }

  HallElement basis(const std::string& sel) {
    HallElement h;
    h.add_term(select(sel), QSqrt::one(A_->q()));
    return h;
  }

  std::unique_ptr<Algebra> A_;
  std::unique_ptr<Engine> eng_;
  std::unique_ptr<BridgelandSession> ses_;
};

}  // namespace

PYBIND11_MODULE(_hallbridge, m) {
  m.doc() = "exact Hall-algebra calculator for monomial quiver algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BoundError>(m, "BoundError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&, const std::vector<int>&>(),
           py::arg("algebra_text"), py::arg("bound") = std::vector<int>{})
      .def_property_readonly("vertices", &Session::vertices)
      .def_property_readonly("q", &Session::q)
      .def_property_readonly("dimension", &Session::dimension)
      .def("catalog", &Session::catalog)
      .def("hom", &Session::hom, py::arg("m"), py::arg("n"))
      .def("ext", &Session::ext, py::arg("m"), py::arg("n"))
      .def("resolve", &Session::resolve, py::arg("m"))
      .def("hall", &Session::hall, py::arg("m"), py::arg("n"), py::arg("twisted") = true)
      .def("e", &Session::e, py::arg("m"))
      .def("dh2", &Session::dh2, py::arg("m"), py::arg("n"))
      .def("thm37", &Session::thm37, py::arg("m"), py::arg("n"))
      .def("counts", &Session::counts, py::arg("m"), py::arg("n"))
      .def("psi_phi_identity", &Session::psi_phi_identity, py::arg("m"))
      .def("serre", &Session::serre, py::arg("i"), py::arg("j"))
      .def("verify_all", &Session::verify_all_checks);
}
