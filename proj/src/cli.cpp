#include "lieherm/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "lieherm/io.hpp"
#include "lieherm/verify.hpp"

namespace lieherm {

namespace {

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

Json ok_doc() {
  Json doc;
  doc["status"] = "ok";
  return doc;
}

AlmostHermitianAlgebra load_hermitian(const std::string& path) {
  return AlmostHermitianAlgebra(load_algebra_file(path));
}

struct TorsionSource {
  std::string alpha_path;
  std::string t_str;

  void attach(CLI::App* cmd) {
    auto* grp = cmd->add_option_group("torsion source");
    grp->add_option("--alpha", alpha_path, "alpha (1,1)-form JSON file");
    grp->add_option("--t", t_str, "Gauduchon parameter (rational)");
    grp->require_option(1);
  }

  bool uses_alpha() const { return !alpha_path.empty(); }
  Rational t() const { return rat_parse(t_str); }

  VectorTwoForm torsion(const AlmostHermitianAlgebra& A, Json& doc) const {
    if (uses_alpha()) {
      doc["source"] = "alpha";
      return hermitian_torsion(A, load_alpha_file(alpha_path));
    }
    doc["source"] = "gauduchon";
    doc["t"] = rat_str(t());
    return gauduchon_torsion(A, t());
  }
};

void cmd_validate(const std::string& path, std::ostream& out, int& rc) {
  const LieAlgebra L = load_algebra_file(path);
  const auto witness = jacobi_witness(L);
  Json doc;
  doc["status"] = witness ? "validation_error" : "ok";
  doc["name"] = L.name();
  doc["dim"] = L.dim();
  doc["jacobi_holds"] = !witness;
  if (witness) {
    doc["jacobi_witness"] = {(*witness)[0], (*witness)[1], (*witness)[2],
                             (*witness)[3]};
    doc["error"] = "Jacobi identity fails";
    rc = 1;
  }
  emit(out, doc);
}

void cmd_catalog(const std::string& name, const std::string& out_path,
                 std::ostream& out) {
  const LieAlgebra L = catalog(name);
  if (!out_path.empty()) save_algebra_file(L, out_path);
  Json doc = ok_doc();
  doc["algebra"] = algebra_to_json(L);
  emit(out, doc);
}

void cmd_product_abelian(const std::string& path, const std::string& out_path,
                         std::ostream& out) {
  const LieAlgebra G = product_with_abelian(load_algebra_file(path));
  if (!out_path.empty()) save_algebra_file(G, out_path);
  Json doc = ok_doc();
  doc["algebra"] = algebra_to_json(G);
  emit(out, doc);
}

void cmd_nijenhuis(const std::string& path, bool check_skew,
                   std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  const VectorTwoForm N = nijenhuis(A);
  Json doc = ok_doc();
  doc["n"] = A.n();
  doc["integrable"] = N.is_zero();
  if (check_skew) {
    const auto w = totally_skew_witness(N);
    doc["totally_skew"] = !w;
    if (w) doc["witness"] = {(*w)[0], (*w)[1], (*w)[2]};
  }
  doc["components"] = two_form_components(N);
  emit(out, doc);
}

void cmd_domega(const std::string& path, bool plus, std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  Json doc = ok_doc();
  doc["form"] = plus ? "domega_plus" : "domega";
  doc["components"] =
      three_form_components(plus ? d_omega_plus(A) : d_omega(A));
  emit(out, doc);
}

void cmd_torsion(const std::string& path, const TorsionSource& src,
                 std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  Json doc = ok_doc();
  const VectorTwoForm T = src.torsion(A, doc);
  doc["components"] = two_form_components(T);
  emit(out, doc);
}

void cmd_connection(const std::string& path, const TorsionSource& src,
                    std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  Json doc = ok_doc();
  const VectorTwoForm T = src.torsion(A, doc);
  doc["components"] = connection_components(connection_from_torsion(A, T));
  emit(out, doc);
}

void cmd_curvature(const std::string& path, const std::string& t_str,
                   bool poly, std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  const Rational t = rat_parse(t_str);
  Json doc = ok_doc();
  doc["t"] = rat_str(t);
  const VectorTwoForm T = gauduchon_torsion(A, t);
  const Connection G = connection_from_torsion(A, T);
  doc["components"] =
      rank4_components(curvature_from_connection(A.base(), G));
  if (poly) doc["poly"] = tpoly4_components(gauduchon_curvature_poly(A));
  emit(out, doc);
}

void cmd_flat_scan(const std::string& path, std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  const FlatScanReport rep = flat_t_values(A);
  Json doc = ok_doc();
  doc["identically_flat"] = rep.identically_flat;
  Json roots = Json::array();
  for (const auto& r : rep.rational_roots) roots.push_back(rat_str(r));
  doc["rational_roots"] = std::move(roots);
  Json unresolved = Json::array();
  for (const auto& q : rep.unresolved_quadratics)
    unresolved.push_back({rat_str(q[0]), rat_str(q[1]), rat_str(q[2])});
  doc["unresolved_quadratics"] = std::move(unresolved);
  emit(out, doc);
}

void cmd_trivial_alpha(const std::string& path, std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  const AlphaForm alpha = trivial_alpha(A);
  Json doc = ok_doc();
  doc["n"] = A.n();
  doc["components"] = two_form_components(alpha.form());
  emit(out, doc);
}

void cmd_skt(const std::string& path, std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  const SktReport rep = skt_report(A);
  Json doc = ok_doc();
  doc["skt"] = rep.skt;
  doc["torsion_skew"] = rep.torsion_skew;
  if (rep.skew_witness)
    doc["witness"] = {(*rep.skew_witness)[0], (*rep.skew_witness)[1],
                      (*rep.skew_witness)[2]};
  if (rep.torsion_skew) {
    const ThreeForm beta = torsion_three_form(A, gauduchon_torsion(A, 2));
    doc["beta"] = three_form_components(beta);
  }
  if (rep.dbeta_witness)
    doc["dbeta_witness"] = {(*rep.dbeta_witness)[0], (*rep.dbeta_witness)[1],
                            (*rep.dbeta_witness)[2], (*rep.dbeta_witness)[3]};
  emit(out, doc);
}

void cmd_verify(const std::string& path, const TorsionSource& src,
                std::ostream& out) {
  const AlmostHermitianAlgebra A = load_hermitian(path);
  Json doc = ok_doc();
  std::vector<CheckResult> checks;
  if (src.uses_alpha()) {
    doc["source"] = "alpha";
    checks = verify_connection_suite(A, load_alpha_file(src.alpha_path));
  } else {
    doc["source"] = "gauduchon";
    doc["t"] = rat_str(src.t());
    checks = verify_gauduchon_suite(A, src.t());
  }
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json o;
    o["name"] = c.name;
    o["pass"] = c.pass;
    if (!c.pass) o["witness"] = c.detail;
    arr.push_back(std::move(o));
  }
  doc["checks"] = std::move(arr);
  doc["all_pass"] = all_pass(checks);
  emit(out, doc);
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Left-invariant Hermitian and Gauduchon connections on Lie "
               "groups, in exact rational arithmetic"};
  app.name("lieherm");
  app.require_subcommand(1);

  int rc = 0;
  std::string algebra_path, name, out_path, t_str;
  bool check_skew = false, plus = false, poly = false;
  TorsionSource torsion_src, connection_src, verify_src;

  auto* validate = app.add_subcommand("validate", "Check an algebra file");
  validate->add_option("algebra", algebra_path, "algebra JSON file")
      ->required();
  validate->callback([&] { cmd_validate(algebra_path, out, rc); });

  auto* cat = app.add_subcommand(
      "catalog", "Emit a named algebra (abelian<d>, abdo4, so3, so3xR3)");
  cat->add_option("name", name, "catalog name")->required();
  cat->add_option("-o", out_path, "write the algebra to this file");
  cat->callback([&] { cmd_catalog(name, out_path, out); });

  auto* prod = app.add_subcommand("product-abelian",
                                  "Append an abelian factor: H -> H x R^n");
  prod->add_option("algebra", algebra_path, "factor algebra JSON file")
      ->required();
  prod->add_option("-o", out_path, "write the product to this file");
  prod->callback([&] { cmd_product_abelian(algebra_path, out_path, out); });

  auto* nij = app.add_subcommand("nijenhuis", "Nijenhuis tensor components");
  nij->add_option("algebra", algebra_path, "algebra JSON file")->required();
  nij->add_flag("--check-skew", check_skew, "report total skewness");
  nij->callback([&] { cmd_nijenhuis(algebra_path, check_skew, out); });

  auto* dom = app.add_subcommand(
      "domega", "Exterior derivative of the fundamental form");
  dom->add_option("algebra", algebra_path, "algebra JSON file")->required();
  dom->add_flag("--plus", plus, "(2,1)+(1,2) part instead");
  dom->callback([&] { cmd_domega(algebra_path, plus, out); });

  auto* tor = app.add_subcommand("torsion", "Hermitian connection torsion");
  tor->add_option("algebra", algebra_path, "algebra JSON file")->required();
  torsion_src.attach(tor);
  tor->callback([&] { cmd_torsion(algebra_path, torsion_src, out); });

  auto* con =
      app.add_subcommand("connection", "Hermitian connection coefficients");
  con->add_option("algebra", algebra_path, "algebra JSON file")->required();
  connection_src.attach(con);
  con->callback([&] { cmd_connection(algebra_path, connection_src, out); });

  auto* cur = app.add_subcommand("curvature", "Gauduchon curvature at t");
  cur->add_option("algebra", algebra_path, "algebra JSON file")->required();
  cur->add_option("--t", t_str, "Gauduchon parameter (rational)")->required();
  cur->add_flag("--poly", poly, "include the curvature polynomial in t");
  cur->callback([&] { cmd_curvature(algebra_path, t_str, poly, out); });

  auto* flat = app.add_subcommand(
      "flat-scan", "Rational t with identically vanishing curvature");
  flat->add_option("algebra", algebra_path, "algebra JSON file")->required();
  flat->callback([&] { cmd_flat_scan(algebra_path, out); });

  auto* triv = app.add_subcommand(
      "trivial-alpha", "alpha selecting the trivial connection (products)");
  triv->add_option("algebra", algebra_path, "algebra JSON file")->required();
  triv->callback([&] { cmd_trivial_alpha(algebra_path, out); });

  auto* skt = app.add_subcommand("skt", "SKT check at t = 2");
  skt->add_option("algebra", algebra_path, "algebra JSON file")->required();
  skt->callback([&] { cmd_skt(algebra_path, out); });

  auto* ver = app.add_subcommand("verify", "Run the invariant battery");
  ver->add_option("algebra", algebra_path, "algebra JSON file")->required();
  verify_src.attach(ver);
  ver->callback([&] { cmd_verify(algebra_path, verify_src, out); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
    return rc;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    Json doc;
    doc["status"] = "validation_error";
    doc["error"] = e.what();
    emit(out, doc);
    err << "error: " << e.what() << "\n";
    err << "run 'lieherm --help' for usage\n";
    return 1;
  } catch (const PreconditionError& e) {
    Json doc;
    doc["status"] = "math_precondition_error";
    doc["error"] = e.what();
    emit(out, doc);
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    Json doc;
    doc["status"] = "validation_error";
    doc["error"] = e.what();
    emit(out, doc);
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace lieherm
