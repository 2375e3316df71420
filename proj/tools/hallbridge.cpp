#include "hallbridge/io.hpp"
#include "hallbridge/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hb;

namespace {

struct Cli {
  std::string algebra_file;
  std::string bound_str;
  bool json = false;

  std::unique_ptr<Algebra> A;
  std::unique_ptr<Engine> eng;
  std::unique_ptr<BridgelandSession> ses;

  void load() {
    std::ifstream in(algebra_file);
    if (!in) throw ParseError("cannot open algebra file: " + algebra_file);
    std::stringstream ss;
    ss << in.rdbuf();
    A = std::make_unique<Algebra>(Algebra::parse(ss.str()));
    DimVec bound(A->vertices(), 2);
    if (!bound_str.empty()) {
      bound.clear();
      std::stringstream bs(bound_str);
      std::string tok;
      while (std::getline(bs, tok, ',')) bound.push_back(std::stoi(tok));
      if (int(bound.size()) != A->vertices())
        throw ParseError("bound must have one entry per vertex");
    }
    eng = std::make_unique<Engine>(*A, bound);
    ses = std::make_unique<BridgelandSession>(*eng);
  }

  ClassId select(const std::string& sel) {
    if (sel.size() >= 2 && (sel[0] == 'S' || sel[0] == 'P') &&
        sel.find(',') == std::string::npos) {
      int i = std::stoi(sel.substr(1)) - 1;
      if (i < 0 || i >= A->vertices()) throw ParseError("vertex out of range: " + sel);
      return eng->mods.classify(sel[0] == 'S' ? A->simple(i) : A->projective(i));
    }
    auto colon = sel.find(':');
    std::string dims = colon == std::string::npos ? sel : sel.substr(0, colon);
    int idx = colon == std::string::npos ? 0 : std::stoi(sel.substr(colon + 1));
    DimVec d;
    std::stringstream ds(dims);
    std::string tok;
    while (std::getline(ds, tok, ',')) d.push_back(std::stoi(tok));
    if (int(d.size()) != A->vertices()) throw ParseError("bad class selector: " + sel);
    if (idx < 0 || idx >= int(eng->mods.classes(d).size()))
      throw ParseError("class index out of range: " + sel);
    return ClassId{d, idx};
  }

  HallElement basis(const ClassId& id) {
    HallElement h;
    h.add_term(id, QSqrt::one(A->q()));
    return h;
  }
};

Json checks_to_json(const std::vector<CheckResult>& rs) {
  Json arr = Json::array();
  for (auto& r : rs)
    arr.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return arr;
}

int print_checks(const Cli& cli, const std::vector<CheckResult>& rs) {
  bool all = true;
  if (cli.json) {
    std::cout << checks_to_json(rs).dump(2) << "\n";
    for (auto& r : rs) all = all && r.pass;
  } else {
    for (auto& r : rs) {
      all = all && r.pass;
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n";
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hall-algebra calculator for monomial quiver algebras"};
  app.require_subcommand(1);

  Cli cli;
  app.add_option("--algebra", cli.algebra_file, "algebra definition file")->required();
  app.add_option("--bound", cli.bound_str, "catalog bound, comma-separated (default 2 per vertex)");
  app.add_flag("--json", cli.json, "machine-readable output");

  std::string sel1, sel2;
  int vi = 0, vj = 0;

  auto* c_catalog = app.add_subcommand("catalog", "list module iso-classes up to the bound");
  auto* c_hom = app.add_subcommand("hom", "dim Hom(M, N)");
  c_hom->add_option("M", sel1)->required();
  c_hom->add_option("N", sel2)->required();
  auto* c_ext = app.add_subcommand("ext", "dim Ext^t(M, N) for all t");
  c_ext->add_option("M", sel1)->required();
  c_ext->add_option("N", sel2)->required();
  auto* c_resolve = app.add_subcommand("resolve", "minimal projective resolution of M");
  c_resolve->add_option("M", sel1)->required();
  auto* c_hall = app.add_subcommand("hall", "twisted hall product [M] * [N]");
  c_hall->add_option("M", sel1)->required();
  c_hall->add_option("N", sel2)->required();
  bool untwisted = false;
  c_hall->add_flag("--untwisted", untwisted, "use the plain product");
  auto* c_e = app.add_subcommand("e", "element E_M in normal form");
  c_e->add_option("M", sel1)->required();
  auto* c_dh2 = app.add_subcommand("dh2", "product E_M * E_N");
  c_dh2->add_option("M", sel1)->required();
  c_dh2->add_option("N", sel2)->required();
  auto* c_phi = app.add_subcommand("phi-check", "compare phi([M]*[N]) with E_M*E_N");
  c_phi->add_option("M", sel1)->required();
  c_phi->add_option("N", sel2)->required();
  auto* c_psi = app.add_subcommand("psi-check", "check psi(phi([M])) = [M]");
  c_psi->add_option("M", sel1)->required();
  auto* c_serre = app.add_subcommand("serre", "evaluate the Serre sum for vertices i, j");
  c_serre->add_option("i", vi)->required();
  c_serre->add_option("j", vj)->required();
  auto* c_counts = app.add_subcommand("counts", "counting-formula comparisons for (M, N)");
  c_counts->add_option("M", sel1)->required();
  c_counts->add_option("N", sel2)->required();
  auto* c_thm = app.add_subcommand("thm37", "multiplicativity report for (M, N)");
  c_thm->add_option("M", sel1)->required();
  c_thm->add_option("N", sel2)->required();
  auto* c_all = app.add_subcommand("verify-all", "run every verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    cli.load();
    Engine& eng = *cli.eng;
    BridgelandSession& ses = *cli.ses;
    const Algebra& A = *cli.A;

    if (*c_catalog) {
      Json arr = Json::array();
      for (auto& id : all_classes(eng)) {
        const Rep M = eng.mods.rep_of(id);
        if (cli.json)
          arr.push_back(Json{{"dim_vector", id.dim},
                             {"class_id", id.idx},
                             {"aut_order", eng.mods.aut_order_of(id)},
                             {"encoding", encode_rep(M)}});
        else
          std::cout << dimvec_str(id.dim) << ":" << id.idx
                    << "  |Aut| = " << eng.mods.aut_order_of(id) << "\n";
      }
      if (cli.json) std::cout << arr.dump(2) << "\n";
      return 0;
    }
    if (*c_hom) {
      const Rep M = eng.mods.rep_of(cli.select(sel1));
      const Rep N = eng.mods.rep_of(cli.select(sel2));
      int d = hom_dim(A, M, N);
      if (cli.json)
        std::cout << Json{{"dim_hom", d}}.dump(2) << "\n";
      else
        std::cout << "dim Hom = " << d << "\n";
      return 0;
    }
    if (*c_ext) {
      const Rep M = eng.mods.rep_of(cli.select(sel1));
      const Rep N = eng.mods.rep_of(cli.select(sel2));
      auto dims = ext_dims(A, M, N);
      if (cli.json)
        std::cout << Json{{"ext_dims", dims}}.dump(2) << "\n";
      else {
        std::cout << "ext dims:";
        for (int d : dims) std::cout << " " << d;
        std::cout << "\n";
      }
      return 0;
    }
    if (*c_resolve) {
      const Rep M = eng.mods.rep_of(cli.select(sel1));
      Resolution R = minimal_resolution(A, M);
      ResolutionInvariants inv = resolution_invariants(A, R);
      Json terms = Json::array();
      for (auto& t : R.terms) terms.push_back(t.mult(A.vertices()));
      Json j{{"length", R.length()},
             {"terms", terms},
             {"m_odd", inv.m_odd},
             {"m_even", inv.m_even},
             {"tau", inv.tau}};
      if (cli.json)
        std::cout << j.dump(2) << "\n";
      else {
        std::cout << "length " << R.length() << "; terms:";
        for (auto& t : R.terms) std::cout << " " << dimvec_str(t.mult(A.vertices()));
        std::cout << "; tau = " << dimvec_str(inv.tau) << "\n";
      }
      return 0;
    }
    if (*c_hall) {
      HallElement p = hall_product(eng, cli.basis(cli.select(sel1)),
                                   cli.basis(cli.select(sel2)), !untwisted);
      std::cout << (cli.json ? hall_to_json(p).dump(2) : hall_str(p)) << "\n";
      return 0;
    }
    if (*c_e) {
      BridgelandElement e = e_element(ses, eng.mods.rep_of(cli.select(sel1)));
      std::cout << (cli.json ? bridgeland_to_json(ses, e).dump(2) : bridgeland_str(e)) << "\n";
      return 0;
    }
    if (*c_dh2) {
      BridgelandElement p =
          dh2_product(ses, e_element(ses, eng.mods.rep_of(cli.select(sel1))),
                      e_element(ses, eng.mods.rep_of(cli.select(sel2))));
      std::cout << (cli.json ? bridgeland_to_json(ses, p).dump(2) : bridgeland_str(p)) << "\n";
      return 0;
    }
    if (*c_phi) {
      Thm37Report r = check_thm37(ses, eng.mods.rep_of(cli.select(sel1)),
                                  eng.mods.rep_of(cli.select(sel2)));
      if (cli.json)
        std::cout << Json{{"equal", r.equal},
                          {"lhs", bridgeland_to_json(ses, r.lhs)},
                          {"rhs", bridgeland_to_json(ses, r.rhs)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << (r.equal ? "equal" : "different") << "\nlhs: " << bridgeland_str(r.lhs)
                  << "\nrhs: " << bridgeland_str(r.rhs) << "\n";
      return r.equal ? 0 : 1;
    }
    if (*c_psi) {
      ClassId id = cli.select(sel1);
      HallElement hm = cli.basis(id);
      HallElement back = psi_map(ses, phi_map(ses, hm));
      bool ok = (back == hm);
      if (cli.json)
        std::cout << Json{{"pass", ok}, {"psi_phi", hall_to_json(back)}}.dump(2) << "\n";
      else
        std::cout << (ok ? "PASS" : "FAIL") << "  psi(phi([M])) = " << hall_str(back) << "\n";
      return ok ? 0 : 1;
    }
    if (*c_serre) {
      if (vi < 1 || vi > A.vertices() || vj < 1 || vj > A.vertices() || vi == vj)
        throw ParseError("vertices out of range");
      HallElement h = serre_sum_hall(eng, vi - 1, vj - 1);
      BridgelandElement b = serre_sum_dh2(ses, vi - 1, vj - 1);
      if (cli.json)
        std::cout << Json{{"hall", hall_to_json(h)},
                          {"bridgeland", bridgeland_to_json(ses, b)},
                          {"hall_zero", h.is_zero()},
                          {"bridgeland_zero", b.is_zero()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "hall: " << hall_str(h) << "\nbridgeland: " << bridgeland_str(b) << "\n";
      return 0;
    }
    if (*c_counts) {
      CountsReport r = check_counts(ses, eng.mods.rep_of(cli.select(sel1)),
                                    eng.mods.rep_of(cli.select(sel2)));
      Json j{{"hom_cb_direct", r.hom_cb_direct.str()},
             {"hom_cb_formula", r.hom_cb_formula.str()},
             {"hom_c2_direct", r.hom_c2_direct.str()},
             {"hom_c2_statement", r.hom_c2_statement.str()},
             {"hom_c2_proof", r.hom_c2_proof.str()},
             {"statement_matches", r.statement_matches},
             {"proof_matches", r.proof_matches},
             {"ratio_direct", r.ratio_direct.str()},
             {"ratio_formula", r.ratio_formula.str()},
             {"w0", r.w0},
             {"vform_matches", r.vform_matches},
             {"pass", r.pass()}};
      if (cli.json)
        std::cout << j.dump(2) << "\n";
      else
        std::cout << (r.pass() ? "PASS" : "FAIL") << "  cb " << r.hom_cb_direct << "/"
                  << r.hom_cb_formula << "  c2 " << r.hom_c2_direct << " stmt "
                  << r.hom_c2_statement << " proof " << r.hom_c2_proof << "  ratio "
                  << r.ratio_direct << "/" << r.ratio_formula << "  w0 " << r.w0 << "\n";
      return r.pass() ? 0 : 1;
    }
    if (*c_thm) {
      Thm37Report r = check_thm37(ses, eng.mods.rep_of(cli.select(sel1)),
                                  eng.mods.rep_of(cli.select(sel2)));
      Json j{{"equal", r.equal},
             {"ext_high", r.ext_high},
             {"w0", r.w0},
             {"t0", r.t0},
             {"t1", r.t1},
             {"lhs", bridgeland_to_json(ses, r.lhs)},
             {"rhs", bridgeland_to_json(ses, r.rhs)}};
      if (cli.json)
        std::cout << j.dump(2) << "\n";
      else {
        std::cout << (r.equal ? "equal" : "different") << "; ext_high:";
        for (int d : r.ext_high) std::cout << " " << d;
        std::cout << "; w0 = " << r.w0 << ", t0 = " << r.t0 << ", t1 = " << r.t1 << "\n";
      }
      return 0;
    }
    if (*c_all) return print_checks(cli, verify_all(ses));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
