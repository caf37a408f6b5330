// amlat: construct and certify Arakelov-modular quaternion ideal lattices.
//
// Exit codes: 0 success, 1 input error, 2 no construction, 3 verification failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "amlat/amlat.hpp"

namespace {

using amlat::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNoPlan = 2;
constexpr int kVerifyFailed = 3;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int input_error(const std::string& field, const std::string& message) {
  std::cerr << "error: " << field << ": " << message << '\n';
  return kInputError;
}

int no_plan(const amlat::error& e) {
  emit(json{{"error", std::string(amlat::to_string(e.kind()))}, {"reason", e.detail()}});
  return kNoPlan;
}

int cmd_classify(std::int64_t ell) {
  if (ell < 2) return input_error("--ell", "level must be at least 2");
  try {
    emit(amlat::to_json(amlat::plan_for(ell)));
    return kOk;
  } catch (const amlat::error& e) {
    if (e.kind() == amlat::errc::no_plan_found) return no_plan(e);
    throw;
  }
}

int cmd_construct(std::int64_t ell, const std::string& json_path) {
  if (ell < 2) return input_error("--ell", "level must be at least 2");
  try {
    json j = amlat::to_json(amlat::make_record(amlat::construct(ell)));
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) return input_error("--json", "cannot write '" + json_path + "'");
      out << j.dump(2) << '\n';
    }
    emit(j);
    return kOk;
  } catch (const amlat::error& e) {
    if (e.kind() == amlat::errc::no_plan_found) return no_plan(e);
    throw;
  }
}

struct VerifyArgs {
  std::string algebra;
  std::string order;
  std::string ideal;
  std::string alpha;
  std::string beta;
  std::string t;
  std::string ell;
};

int cmd_verify(const VerifyArgs& args) {
  std::optional<amlat::QuaternionAlgebra> A;
  try {
    auto ab = amlat::parse_rat_list(args.algebra);
    if (ab.size() != 2 || !amlat::is_integer(ab[0]) || !amlat::is_integer(ab[1]))
      return input_error("--algebra", "expected two integers a,b");
    A.emplace(ab[0].get_num().get_si(), ab[1].get_num().get_si());
  } catch (const amlat::error& e) {
    return input_error("--algebra", e.what());
  }

  std::optional<amlat::Order> lam;
  try {
    auto preset = amlat::preset_basis(args.order);
    amlat::RatMat basis = preset ? *preset : amlat::read_matrix4(args.order);
    lam.emplace(amlat::order_from_basis(*A, basis));
    if (!amlat::is_maximal(*lam)) return input_error("--order", "order is not maximal");
  } catch (const amlat::error& e) {
    return input_error("--order", e.what());
  }

  amlat::Rat alpha;
  amlat::QElem beta;
  amlat::QElem t = amlat::QElem::scalar(1);
  amlat::BigInt ell;
  try {
    alpha = amlat::parse_rat(args.alpha);
    if (alpha <= 0) return input_error("--alpha", "alpha must be positive");
  } catch (const amlat::error& e) {
    return input_error("--alpha", e.what());
  }
  try {
    beta = amlat::parse_qelem(args.beta);
  } catch (const amlat::error& e) {
    return input_error("--beta", e.what());
  }
  try {
    if (!args.t.empty()) t = amlat::parse_qelem(args.t);
    if (A->nrd(t) == 0) return input_error("--t", "t must be invertible");
  } catch (const amlat::error& e) {
    return input_error("--t", e.what());
  }
  try {
    ell = amlat::parse_int(args.ell);
    if (ell < 1) return input_error("--ell", "level must be positive");
  } catch (const amlat::error& e) {
    return input_error("--ell", e.what());
  }

  std::optional<amlat::TwoSidedIdeal> ideal;
  try {
    amlat::ZLat4 I = args.ideal.empty() || args.ideal == "order"
                         ? lam->lattice() * t
                         : amlat::ZLat4(*A, amlat::read_matrix4(args.ideal));
    ideal.emplace(amlat::TwoSidedIdeal::from_lattice(*lam, I, t));
  } catch (const amlat::error& e) {
    return input_error("--ideal", e.what());
  }

  amlat::ModularityCertificate cert = amlat::verify_arakelov_modular(*ideal, alpha, beta, ell);
  emit(amlat::to_json(amlat::CertificateRecord::from(cert)));
  return cert.valid() ? kOk : kVerifyFailed;
}

int cmd_hilbert(const std::string& a_text, const std::string& b_text, const std::string& p_text) {
  amlat::BigInt a;
  amlat::BigInt b;
  try {
    a = amlat::parse_int(a_text);
    b = amlat::parse_int(b_text);
  } catch (const amlat::error& e) {
    return input_error("--a/--b", e.what());
  }
  if (a == 0 || b == 0) return input_error("--a/--b", "arguments must be nonzero");
  json out;
  out["a"] = a.get_si();
  out["b"] = b.get_si();
  if (!p_text.empty()) {
    std::int64_t p = 0;
    try {
      p = p_text == "inf" ? amlat::kInfinity : amlat::parse_int(p_text);
      if (p != amlat::kInfinity && !amlat::is_prime(p)) return input_error("--p", "not a prime");
    } catch (const amlat::error& e) {
      return input_error("--p", e.what());
    }
    out["p"] = p_text;
    out["symbol"] = amlat::hilbert_symbol(a, b, p);
    emit(out);
    return kOk;
  }
  json symbols = json::object();
  int product = amlat::hilbert_symbol(a, b, amlat::kInfinity);
  symbols["inf"] = product;
  auto places = amlat::prime_divisors(2 * a.get_si());
  for (auto p : amlat::prime_divisors(b.get_si()))
    if (std::find(places.begin(), places.end(), p) == places.end()) places.push_back(p);
  for (auto p : places) {
    int s = amlat::hilbert_symbol(a, b, p);
    symbols[std::to_string(p)] = s;
    product *= s;
  }
  out["symbols"] = symbols;
  out["product"] = product;
  out["ramified"] = amlat::ramified_primes(a, b);
  emit(out);
  return kOk;
}

int cmd_min(const std::string& path) {
  amlat::RatMat g;
  try {
    g = amlat::read_matrix4(path);
  } catch (const amlat::error& e) {
    return input_error("--gram", e.what());
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (g(i, j) != g(j, i)) return input_error("--gram", "matrix is not symmetric");
  if (!amlat::is_positive_definite(g)) return input_error("--gram", "matrix is not positive definite");
  auto mk = amlat::minimum_and_kissing(g);
  emit(json{{"min", amlat::to_string(mk.min)}, {"kissing", mk.kissing.get_si()}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arakelov-modular ideal lattices over totally definite quaternion algebras"};
  app.require_subcommand(1);

  std::int64_t ell = 0;
  auto* classify = app.add_subcommand("classify", "Pick algebra, order and beta for a level");
  classify->add_option("--ell", ell, "Level")->required();

  std::int64_t construct_ell = 0;
  std::string json_path;
  auto* construct = app.add_subcommand("construct", "Build and certify a lattice of the given level");
  construct->add_option("--ell", construct_ell, "Level")->required();
  construct->add_option("--json", json_path, "Also write the record to this file");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Check the Arakelov-modular certificate of (I, q_alpha)");
  verify->add_option("--algebra", vargs.algebra, "a,b")->required();
  verify->add_option("--order", vargs.order, "Preset (hurwitz, case2, case3, example17) or basis file")->required();
  verify->add_option("--ideal", vargs.ideal, "Ideal basis file (default: the order itself)");
  verify->add_option("--alpha", vargs.alpha, "Positive rational p/q")->required();
  verify->add_option("--beta", vargs.beta, "x0,x1,x2,x3")->required();
  verify->add_option("--t", vargs.t, "x0,x1,x2,x3 (default 1)");
  verify->add_option("--ell", vargs.ell, "Level")->required();

  std::string ha;
  std::string hb;
  std::string hp;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbols (a,b)_p and their product");
  hilbert->add_option("--a", ha)->required();
  hilbert->add_option("--b", hb)->required();
  hilbert->add_option("--p", hp, "Single place: a prime or 'inf'");

  std::string gram_path;
  auto* minimum = app.add_subcommand("min", "Minimum and kissing number of a 4x4 Gram matrix");
  minimum->add_option("--gram", gram_path, "Gram file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*classify) return cmd_classify(ell);
    if (*construct) return cmd_construct(construct_ell, json_path);
    if (*verify) return cmd_verify(vargs);
    if (*hilbert) return cmd_hilbert(ha, hb, hp);
    if (*minimum) return cmd_min(gram_path);
  } catch (const amlat::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
