#pragma once

// Text and JSON formats: exact rationals, 4x4 matrix files, lattice records.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "amlat/classification.hpp"

namespace amlat {

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
inline Rat parse_rat(const std::string& s) {
  auto bad = [&] { return error(errc::parse_error, "not a rational: '" + s + "'"); };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t k = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  BigInt n(num[0] == '+' ? num.substr(1) : num);
  BigInt d(den);
  if (d == 0) throw bad();
  return make_rat(n, d);
}

inline std::int64_t parse_int(const std::string& s) {
  Rat r = parse_rat(s);
  if (!is_integer(r) || !r.get_num().fits_slong_p()) throw error(errc::parse_error, "not a 64-bit integer: '" + s + "'");
  return r.get_num().get_si();
}

/// Comma-separated list of rationals, e.g. "0,1,-1,0".
inline std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

inline QElem parse_qelem(const std::string& s) {
  auto v = parse_rat_list(s);
  if (v.size() != 4) throw error(errc::parse_error, "expected four coordinates, got '" + s + "'");
  return QElem(v);
}

/// Four lines of four whitespace-separated rationals; blank lines and '#' comments are skipped.
inline RatMat parse_matrix4(std::istream& in) {
  RatMat m(4, 4);
  std::size_t row = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (row == 4) throw error(errc::parse_error, "more than four rows");
    if (tokens.size() != 4)
      throw error(errc::parse_error, "row " + std::to_string(row + 1) + " has " + std::to_string(tokens.size()) + " entries");
    for (std::size_t c = 0; c < 4; ++c) m(row, c) = parse_rat(tokens[c]);
    ++row;
  }
  if (row != 4) throw error(errc::parse_error, "expected four rows, got " + std::to_string(row));
  return m;
}

inline RatMat read_matrix4(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  return parse_matrix4(in);
}

inline std::string format_matrix(const RatMat& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

using json = nlohmann::json;

inline json to_json(const RatMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline RatMat matrix_from_json(const json& j) {
  RatMat m(j.size(), j.empty() ? 0 : j.at(0).size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rat(j.at(r).at(c).get<std::string>());
  return m;
}

inline json to_json(const QElem& x) {
  json a = json::array();
  for (std::size_t k = 0; k < 4; ++k) a.push_back(to_string(x[k]));
  return a;
}

inline QElem qelem_from_json(const json& j) {
  QElem x;
  for (std::size_t k = 0; k < 4; ++k) x[k] = parse_rat(j.at(k).get<std::string>());
  return x;
}

/// Serializable mirror of ModularityCertificate.
struct CertificateRecord {
  std::string ell;
  QElem beta;
  QElem beta_prime;
  QElem t;
  Rat alpha;
  std::map<std::string, bool> checks;
  bool valid = false;

  static CertificateRecord from(const ModularityCertificate& c) {
    CertificateRecord r{c.ell.get_str(), c.beta, c.beta_prime, c.t, c.alpha, {}, c.valid()};
    for (const auto& [name, ok] : c.checks()) r.checks[name] = ok;
    return r;
  }

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

inline json to_json(const CertificateRecord& c) {
  json j;
  j["ell"] = c.ell;
  j["beta"] = to_json(c.beta);
  j["beta_prime"] = to_json(c.beta_prime);
  j["t"] = to_json(c.t);
  j["alpha"] = to_string(c.alpha);
  j["checks"] = c.checks;
  j["valid"] = c.valid;
  return j;
}

inline CertificateRecord certificate_from_json(const json& j) {
  CertificateRecord c;
  c.ell = j.at("ell").get<std::string>();
  c.beta = qelem_from_json(j.at("beta"));
  c.beta_prime = qelem_from_json(j.at("beta_prime"));
  c.t = qelem_from_json(j.at("t"));
  c.alpha = parse_rat(j.at("alpha").get<std::string>());
  c.checks = j.at("checks").get<std::map<std::string, bool>>();
  c.valid = j.at("valid").get<bool>();
  return c;
}

struct LatticeRecord {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t ell = 0;
  Rat alpha;
  RatMat order_basis;
  RatMat ideal_basis;
  RatMat gram;
  Rat det;
  Rat min;
  std::int64_t kissing = 0;
  bool even = false;
  CertificateRecord certificate;

  friend bool operator==(const LatticeRecord&, const LatticeRecord&) = default;
};

inline LatticeRecord make_record(const Construction& c) {
  LatticeRecord r;
  r.a = c.lattice.algebra().a();
  r.b = c.lattice.algebra().b();
  r.ell = c.plan.level.ell;
  r.alpha = c.lattice.alpha();
  r.order_basis = c.lattice.order().lattice().basis();
  r.ideal_basis = c.lattice.ideal().lattice().basis();
  r.gram = c.lattice.gram();
  r.det = lattice_discriminant(c.lattice);
  MinimumInfo mk = minimum_and_kissing(c.lattice.gram());
  r.min = mk.min;
  r.kissing = mk.kissing.get_si();
  r.even = is_even(c.lattice);
  r.certificate = CertificateRecord::from(c.certificate);
  return r;
}

inline json to_json(const LatticeRecord& r) {
  json j;
  j["a"] = r.a;
  j["b"] = r.b;
  j["ell"] = r.ell;
  j["alpha"] = to_string(r.alpha);
  j["order_basis"] = to_json(r.order_basis);
  j["ideal_basis"] = to_json(r.ideal_basis);
  j["gram"] = to_json(r.gram);
  j["det"] = to_string(r.det);
  j["min"] = to_string(r.min);
  j["kissing"] = r.kissing;
  j["even"] = r.even;
  j["certificate"] = to_json(r.certificate);
  return j;
}

inline LatticeRecord record_from_json(const json& j) {
  LatticeRecord r;
  r.a = j.at("a").get<std::int64_t>();
  r.b = j.at("b").get<std::int64_t>();
  r.ell = j.at("ell").get<std::int64_t>();
  r.alpha = parse_rat(j.at("alpha").get<std::string>());
  r.order_basis = matrix_from_json(j.at("order_basis"));
  r.ideal_basis = matrix_from_json(j.at("ideal_basis"));
  r.gram = matrix_from_json(j.at("gram"));
  r.det = parse_rat(j.at("det").get<std::string>());
  r.min = parse_rat(j.at("min").get<std::string>());
  r.kissing = j.at("kissing").get<std::int64_t>();
  r.even = j.at("even").get<bool>();
  r.certificate = certificate_from_json(j.at("certificate"));
  return r;
}

inline json to_json(const ConstructionPlan& p) {
  json j;
  j["ell"] = p.level.ell;
  j["ell1"] = p.level.ell1;
  j["ell2"] = p.level.ell2;
  j["case"] = p.algebra.case_number == 0 ? json("composite") : json(p.algebra.case_number);
  j["a"] = p.algebra.a;
  j["b"] = p.algebra.b;
  j["q"] = p.algebra.q ? json(*p.algebra.q) : json(nullptr);
  j["ramified"] = QuaternionAlgebra(p.algebra.a, p.algebra.b).ramified_primes();
  j["order_preset"] = p.order_preset;
  j["order_basis"] = to_json(p.order.lattice().basis());
  j["beta"] = to_json(p.beta);
  j["alpha"] = to_string(p.alpha);
  j["t"] = to_json(p.t);
  json exps = json::object();
  for (auto [prime, e] : p.ideal_exponents) exps[std::to_string(prime)] = e;
  j["ideal_exponents"] = exps;
  return j;
}

}  // namespace amlat
