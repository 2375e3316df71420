#include "hallbridge/io.hpp"

#include <sstream>

namespace hb {

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Rational rational_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace

Json coeff_to_json(const QSqrt& c) {
  return Json{{"a", rational_str(c.a())}, {"b", rational_str(c.b())}};
}

QSqrt coeff_from_json(const Json& j, unsigned q) {
  return QSqrt(q, rational_parse(j.at("a").get<std::string>()),
               rational_parse(j.at("b").get<std::string>()));
}

Json hall_to_json(const HallElement& x) {
  Json arr = Json::array();
  for (auto& [id, c] : x.terms())
    arr.push_back(Json{{"coeff", coeff_to_json(c)},
                       {"class_id", id.idx},
                       {"dim_vector", id.dim}});
  return arr;
}

HallElement hall_from_json(const Json& j, unsigned q) {
  HallElement x;
  for (auto& t : j) {
    ClassId id{t.at("dim_vector").get<DimVec>(), t.at("class_id").get<int>()};
    x.add_term(id, coeff_from_json(t.at("coeff"), q));
  }
  return x;
}

Json bkey_to_json(BridgelandSession& s, const BKey& k) {
  return Json{{"alpha", k.alpha},
              {"beta", k.beta},
              {"complex",
               Json{{"m1", k.red.m1},
                    {"m0", k.red.m0},
                    {"index", k.red.idx},
                    {"encoding", encode_cx(s.eng->cxs.rep_of(k.red))}}}};
}

Json bridgeland_to_json(BridgelandSession& s, const BridgelandElement& x) {
  Json arr = Json::array();
  for (auto& [k, c] : x.terms())
    arr.push_back(Json{{"coeff", coeff_to_json(c)}, {"key", bkey_to_json(s, k)}});
  return arr;
}

BridgelandElement bridgeland_from_json(const Json& j, unsigned q) {
  BridgelandElement x;
  for (auto& t : j) {
    const Json& k = t.at("key");
    const Json& cx = k.at("complex");
    BKey key{k.at("alpha").get<DimVec>(), k.at("beta").get<DimVec>(),
             CxClassId{cx.at("m1").get<DimVec>(), cx.at("m0").get<DimVec>(),
                       cx.at("index").get<int>()}};
    x.add_term(key, coeff_from_json(t.at("coeff"), q));
  }
  return x;
}

std::string dimvec_str(const DimVec& d) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

std::string hall_str(const HallElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [id, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[" << dimvec_str(id.dim) << ":" << id.idx << "]";
  }
  return os.str();
}

std::string bridgeland_str(const BridgelandElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*K" << dimvec_str(k.alpha) << "*K*" << dimvec_str(k.beta)
       << "*[cx " << dimvec_str(k.red.m1) << "|" << dimvec_str(k.red.m0) << ":" << k.red.idx
       << "]";
  }
  return os.str();
}

}  // namespace hb
