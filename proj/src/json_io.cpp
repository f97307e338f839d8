#include "svp/json_io.hpp"

#include <cmath>

namespace svp {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Err::invalid_input, what); }

}  // namespace

cplx parse_complex_json(const ordered_json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  if (j.is_string()) return parse_complex_literal(j.get<std::string>());
  bad("expected a complex number as [re, im]");
}

ProjPoint parse_point_json(const ordered_json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ProjPoint::infinity();
  return ProjPoint::finite(parse_complex_json(j));
}

Rat parse_rat_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  bad("expected a rational as an integer or \"p/q\"");
}

LogForm1 parse_logform1_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("terms")) bad("log form needs a terms array");
  LogForm1 f;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("residue") || !t.contains("pole")) bad("log form term needs residue and pole");
    ProjPoint p = parse_point_json(t.at("pole"));
    if (p.infinite) bad("poles at infinity are implicit; list finite poles only");
    f.terms.push_back({parse_complex_json(t.at("residue")), p.z});
  }
  if (j.contains("constant")) f.constant = parse_complex_json(j.at("constant"));
  return f;
}

Piece parse_piece_json(const ordered_json& j) {
  if (j.contains("segment")) {
    const auto& s = j.at("segment");
    return Piece::segment(parse_point_json(s.at("from")), parse_point_json(s.at("to")));
  }
  if (j.contains("arc")) {
    const auto& a = j.at("arc");
    return Piece::arc(parse_complex_json(a.at("center")), a.at("radius").get<double>(),
                      a.at("theta0").get<double>(), a.at("theta1").get<double>());
  }
  if (j.contains("circle")) {
    const auto& c = j.at("circle");
    return Piece::circle(parse_complex_json(c.at("center")), c.at("radius").get<double>());
  }
  bad("piece must be a segment, arc or circle");
}

Chain parse_chain_json(const ordered_json& j) {
  Chain c;
  if (!j.is_object() || !j.contains("terms")) bad("chain needs a terms array");
  for (const auto& t : j.at("terms")) {
    Rat coeff = t.contains("coeff") ? parse_rat_json(t.at("coeff")) : Rat(1);
    Path p;
    for (const auto& pj : t.at("path")) p.pieces.push_back(parse_piece_json(pj));
    c.terms.emplace_back(coeff, std::move(p));
  }
  validate_chain(c);
  return c;
}

DivisorDeg0 parse_divisor_json(const ordered_json& j) {
  if (!j.is_array()) bad("divisor must be a list of [coefficient, point] pairs");
  std::vector<std::pair<Rat, ProjPoint>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("divisor entry must be [coefficient, point]");
    terms.emplace_back(parse_rat_json(t[0]), parse_point_json(t[1]));
  }
  return validate_divisor(std::move(terms));
}

Configuration parse_configuration_json(const ordered_json& j) {
  std::vector<ProjPoint> A, B;
  for (const auto& p : j.at("A")) A.push_back(parse_point_json(p));
  for (const auto& p : j.at("B")) B.push_back(parse_point_json(p));
  return validate_configuration(A, B);
}

ordered_json logform1_to_json(const LogForm1& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : f.terms) {
    ordered_json tj;
    tj["residue"] = json_complex(t.residue);
    tj["pole"] = json_complex(t.pole);
    terms.push_back(tj);
  }
  ordered_json j;
  j["terms"] = terms;
  if (f.constant != cplx(0, 0)) j["constant"] = json_complex(f.constant);
  return j;
}

ordered_json chain_to_json(const Chain& c) {
  ordered_json terms = ordered_json::array();
  for (const auto& [coeff, path] : c.terms) {
    ordered_json pj = ordered_json::array();
    for (const auto& pc : path.pieces) {
      ordered_json one;
      if (pc.kind == Piece::Kind::segment) {
        one["segment"] = {{"from", json_point(pc.a)}, {"to", json_point(pc.b)}};
      } else {
        one["arc"] = {{"center", json_complex(pc.center)},
                      {"radius", pc.radius},
                      {"theta0", pc.theta0},
                      {"theta1", pc.theta1}};
      }
      pj.push_back(one);
    }
    ordered_json tj;
    tj["coeff"] = json_rat(coeff);
    tj["path"] = pj;
    terms.push_back(tj);
  }
  ordered_json j;
  j["terms"] = terms;
  return j;
}

ordered_json divisor_to_json(const DivisorDeg0& d) {
  ordered_json j = ordered_json::array();
  for (const auto& [c, p] : d.terms) j.push_back(ordered_json::array({json_rat(c), json_point(p)}));
  return j;
}

cplx parse_complex_literal(const std::string& s) {
  if (s.empty()) bad("empty complex literal");
  if (s == "i") return cplx(0, 1);
  if (s == "-i") return cplx(0, -1);
  // split re +/- im i at the last sign that is not an exponent sign
  if (s.back() == 'i') {
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
      char c = body[k];
      if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    try {
      if (split == std::string::npos) return cplx(0, std::stod(body));
      double re = std::stod(body.substr(0, split));
      std::string im = body.substr(split);
      if (im == "+") return cplx(re, 1);
      if (im == "-") return cplx(re, -1);
      return cplx(re, std::stod(im));
    } catch (const std::exception&) {
      bad("cannot parse complex literal '" + s + "'");
    }
  }
  try {
    return cplx(std::stod(s), 0);
  } catch (const std::exception&) {
    bad("cannot parse complex literal '" + s + "'");
  }
}

}  // namespace svp
