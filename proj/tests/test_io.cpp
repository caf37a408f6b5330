#include <sstream>

#include "amlat/io.hpp"
#include "support.hpp"

using namespace amlat;

namespace {

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& item : j)
      if (has_float(item)) return true;
  return false;
}

}  // namespace

TEST_CASE("parsing rationals", "[io]") {
  CHECK(parse_rat("3") == 3);
  CHECK(parse_rat("-3/6") == Rat(-1, 2));
  CHECK(parse_rat("+4/2") == 2);
  CHECK(parse_rat("0/5") == 0);
  CHECK(parse_rat("123456789012345678901234567890") == Rat(BigInt("123456789012345678901234567890")));
  for (const char* bad : {"", "x", "1/0", "1/", "/2", "1.5", "1/-2", "--1", "1 2", "-"})
    CHECK_THROWS_KIND(parse_rat(bad), errc::parse_error);
  CHECK(parse_int("-17") == -17);
  CHECK_THROWS_KIND(parse_int("1/2"), errc::parse_error);
  CHECK_THROWS_KIND(parse_int("99999999999999999999999"), errc::parse_error);
  CHECK(parse_qelem("0,1,-1,1/2") == QElem(0, 1, -1, Rat(1, 2)));
  CHECK_THROWS_KIND(parse_qelem("0,1,-1"), errc::parse_error);
  CHECK_THROWS_KIND(parse_qelem("0,1,,1"), errc::parse_error);
}

TEST_CASE("matrix files", "[io]") {
  std::istringstream in("# comment\n\n1 0 0 0\n0 1/2 0 0  # trailing\n0 0 1 0\n0 0 0 -3\n\n");
  RatMat m = parse_matrix4(in);
  CHECK(m == RatMat{{1, 0, 0, 0}, {0, Rat(1, 2), 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -3}});
  std::istringstream again(format_matrix(m));
  CHECK(parse_matrix4(again) == m);

  std::istringstream short_rows("1 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  CHECK_THROWS_KIND(parse_matrix4(short_rows), errc::parse_error);
  std::istringstream extra("1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n1 1 1 1\n");
  CHECK_THROWS_KIND(parse_matrix4(extra), errc::parse_error);
  CHECK_THROWS_KIND(read_matrix4("/nonexistent/file"), errc::parse_error);
}

TEST_CASE("lattice records round-trip", "[io]") {
  for (std::int64_t ell : {2, 3, 12, 27}) {
    INFO("ell = " << ell);
    LatticeRecord r = make_record(construct(ell));
    CHECK(r.det == Rat(ell * ell));
    CHECK(r.certificate.valid);
    json j = to_json(r);
    CHECK_FALSE(has_float(j));
    CHECK(j.at("a").is_number_integer());
    CHECK(j.at("kissing").is_number_integer());
    CHECK(j.at("det").is_string());
    std::string text = j.dump(2);
    CHECK(record_from_json(json::parse(text)) == r);
    CHECK(to_json(record_from_json(json::parse(text))).dump(2) == text);
  }
  LatticeRecord r2 = make_record(construct(2));
  CHECK(r2.min == 2);
  CHECK(r2.kissing == 24);
  CHECK(r2.even);
  json j2 = to_json(r2);
  CHECK(j2.at("certificate").at("checks").size() == 5);
  CHECK(j2.at("gram").at(0).at(0) == "2");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j2.items()) keys.push_back(k);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("plan serialization", "[io]") {
  json p17 = to_json(plan_for(17));
  CHECK(p17.at("case") == 4);
  CHECK(p17.at("q") == 3);
  CHECK(p17.at("a") == -3);
  CHECK(p17.at("ramified") == json::array({17}));
  json p7 = to_json(plan_for(7));
  CHECK(p7.at("case") == 2);
  CHECK(p7.at("q").is_null());
  json p27 = to_json(plan_for(27));
  CHECK(p27.at("ideal_exponents").at("3") == 1);
  CHECK(p27.at("beta") == json::array({"0", "0", "3", "0"}));
  CHECK_FALSE(has_float(p27));
}

TEST_CASE("certificate records", "[io]") {
  Order h = order_from_basis(QuaternionAlgebra(-1, -1), hurwitz_basis());
  auto c = verify_arakelov_modular(TwoSidedIdeal::unit(h), 1, QElem(0, 1, -1, 0), BigInt(3));
  CertificateRecord r = CertificateRecord::from(c);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.checks.at("nrd_beta_eq_ell"));
  CHECK(r.checks.at("beta_in_order"));
  CHECK(certificate_from_json(to_json(r)) == r);
  CHECK(to_json(r).at("ell") == "3");
}
