// octo2: command-line front end. Every command emits a report with the
// normalized inputs, a result payload and a verification block; the exit code
// is 0 iff every verification check passed (1 otherwise, 2 on errors).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "octo2/verify.hpp"

using namespace octo2;

namespace {

struct AlgebraArgs {
  std::string field = "gf(2)";
  std::string alpha = "1", beta = "1", gamma = "1";
  std::size_t dim = 8;

  void add(CLI::App* app) {
    app->add_option("--field", field, "gf(2), gf(2^n) or ratfunc(gf(2^n); x1, x2)");
    app->add_option("--alpha", alpha);
    app->add_option("--beta", beta);
    app->add_option("--gamma", gamma);
    app->add_option("--dim", dim)->check(CLI::IsMember({2, 4, 8}));
  }

  [[nodiscard]] Algebra build() const {
    Field k = parse_field(field);
    return Algebra::build(k, dim, parse_element(k, alpha), parse_element(k, beta), parse_element(k, gamma));
  }
};

class Report {
 public:
  explicit Report(std::string command) { j_["command"] = std::move(command); }

  json& inputs() { return j_["inputs"]; }
  json& result() { return j_["result"]; }

  void check(const std::string& name, bool pass) {
    j_["verification"]["checks"].push_back({{"name", name}, {"pass", pass}});
    all_ = all_ && pass;
  }

  int emit(bool as_json) {
    j_["verification"]["all_pass"] = all_;
    if (as_json) {
      std::cout << j_.dump(2) << "\n";
    } else {
      print_text(j_, 0);
    }
    return all_ ? 0 : 1;
  }

 private:
  static bool scalar_list(const json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
  }

  static std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  static void print_text(const json& v, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
      for (const auto& [key, x] : v.items()) {
        if (x.is_primitive()) {
          std::cout << pad << key << ": " << scalar(x) << "\n";
        } else if (scalar_list(x)) {
          std::cout << pad << key << ": [";
          for (std::size_t i = 0; i < x.size(); ++i) std::cout << (i ? ", " : "") << scalar(x[i]);
          std::cout << "]\n";
        } else {
          std::cout << pad << key << ":\n";
          print_text(x, indent + 2);
        }
      }
    } else if (v.is_array()) {
      for (const auto& x : v) {
        if (scalar_list(x)) {
          bool spaced = std::any_of(x.begin(), x.end(), [](const json& y) { return scalar(y).find(' ') != std::string::npos; });
          std::cout << pad;
          for (std::size_t i = 0; i < x.size(); ++i) std::cout << (i ? (spaced ? " | " : "  ") : "") << scalar(x[i]);
          std::cout << "\n";
        } else if (x.is_object() && std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_primitive(); })) {
          std::cout << pad << "-";
          for (const auto& [key, y] : x.items()) std::cout << " " << key << "=" << scalar(y);
          std::cout << "\n";
        } else if (x.is_primitive()) {
          std::cout << pad << scalar(x) << "\n";
        } else {
          std::cout << pad << "-\n";
          print_text(x, indent + 2);
        }
      }
    }
  }

  json j_;
  bool all_ = true;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

std::vector<Vec> parse_rows(const Algebra& a, const std::string& text) {
  std::vector<Vec> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    rows.push_back(parse_algebra_element(a, text.substr(start, end - start)));
    start = end + 1;
  }
  return rows;
}

json structure_table(const Algebra& a) {
  json t = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(a.element_to_string(a.mul(a.basis(i), a.basis(j))));
    t.push_back(row);
  }
  return t;
}

int cmd_algebra_build(const AlgebraArgs& args, bool as_json) {
  Algebra a = args.build();
  Report rep("algebra build");
  rep.inputs() = to_json(a);
  json labels = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(a.element_to_string(a.basis(i)));
  rep.result()["basis"] = labels;
  rep.result()["table"] = structure_table(a);
  rep.result()["gram"] = to_json(a.gram());
  std::size_t r = rank(a.gram());
  rep.result()["gram_rank"] = r;
  rep.result()["norm_form"] = a.form().to_string();
  DivisionResult d = is_division(a);
  rep.result()["division"] = {{"verdict", to_string(d.verdict)}, {"reason", d.reason}};
  if (d.zero_divisor) rep.result()["division"]["zero_divisor"] = a.element_to_string(*d.zero_divisor);
  if (a.dim() == 8) {
    DivisionResult b = is_division(canonical_totally_singular(a));
    rep.result()["totally_singular_subalgebra"] = {{"span", "e, v, w, vw"}, {"division", to_string(b.verdict)}, {"reason", b.reason}};
  }
  rep.check("gram matrix nondegenerate", r == a.dim());
  bool min_eq = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec x = Algebra::add(a.basis(i), a.basis(j));
      min_eq = min_eq && detail::holds_single(a, Property::MinEq, x);
    }
  rep.check("minimum equation on basis sums", min_eq);
  if (d.zero_divisor) rep.check("zero divisor has norm 0", a.norm(*d.zero_divisor).is_zero());
  return rep.emit(as_json);
}

int cmd_form_classify(const std::string& field, const std::string& beta, const std::string& gamma, bool as_json) {
  Field k = parse_field(field);
  Fe b = parse_element(k, beta), g = parse_element(k, gamma);
  Report rep("form classify");
  rep.inputs() = {{"field", k.to_string()}, {"beta", b.to_string()}, {"gamma", g.to_string()}};
  QpClass c = classify_quasi_pfister(b, g);
  rep.result()["class"] = to_string(c);
  if (!k.is_finite()) rep.result()["k2_degree"] = k2_extension_degree(b, g);
  QuadraticForm q = QuadraticForm::quasi_pfister(b, g);
  rep.result()["form"] = q.to_string();
  IsotropyResult iso = is_isotropic(q);
  rep.result()["isotropic"] = to_string(iso.verdict);
  if (iso.witness) {
    rep.result()["witness"] = to_json(*iso.witness);
    rep.check("witness has value 0", q.evaluate(*iso.witness).is_zero());
  }
  rep.check("isotropy agrees with class", (c == QpClass::Division) == (iso.verdict == Decision::No));
  return rep.emit(as_json);
}

void check_involution(Report& rep, const Algebra& a, const Matrix& m) {
  Matrix id = Matrix::identity(a.field(), a.dim());
  rep.check("t^2 = id", m * m == id);
  rep.check("t != id", m != id);
  rep.check("t is an automorphism", is_automorphism(a, m));
}

int cmd_involution_make(const AlgebraArgs& args, const std::string& type, const std::string& param, const std::string& sub,
                        const std::string& out, bool as_json) {
  Algebra a = args.build();
  if (a.dim() != 8) fail(ErrorCode::DimensionMismatch, "involutions are built in octonion algebras");
  Report rep("involution make");
  rep.inputs() = {{"algebra", to_json(a)}, {"type", type}};
  Involution t = [&] {
    if (type == "I") {
      Subalgebra d = sub.empty() ? canonical_quaternion(a) : make_subalgebra(a, parse_rows(a, sub));
      if (!param.empty()) return make_type_I(d, parse_algebra_element(a, param));
      AdmissibleRSearch s = find_admissible_r(d);
      if (!s.found)
        fail(ErrorCode::BadR, s.none_by_certificate ? "D is a division algebra, so no r with r^2 = e, r != e exists"
                                                    : "no admissible r found among " + std::to_string(s.candidates) + " candidates");
      return make_type_I(d, *s.found);
    }
    if (type == "II") {
      Subalgebra b = sub.empty() ? canonical_totally_singular(a) : make_subalgebra(a, parse_rows(a, sub));
      return make_type_II(b, parse_algebra_element(a, param.empty() ? "e" : param));
    }
    fail(ErrorCode::ParseError, "--type must be I or II");
  }();
  rep.inputs()["param"] = a.element_to_string(t.param);
  json j = to_json(t);
  rep.result()["involution"] = j;
  FixedReport f = fixed_subalgebra(a, t.matrix);
  rep.result()["fixed_dim"] = f.sub.dim();
  rep.result()["detected_type"] = f.detected ? to_string(*f.detected) : "none";
  check_involution(rep, a, t.matrix);
  bool keeps = true;
  for (std::size_t i = 0; i < t.fixed.dim(); ++i) keeps = keeps && f.sub.contains(t.fixed.rows().row(i));
  rep.check("construction subalgebra fixed elementwise", keeps);
  rep.check("file round trip", involution_from_json(json::parse(j.dump())).matrix == t.matrix);
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) fail(ErrorCode::ParseError, "cannot write '" + out + "'");
    os << j.dump(2) << "\n";
    rep.result()["written"] = out;
  }
  return rep.emit(as_json);
}

int cmd_involution_conjugate(const std::string& tp, const std::string& sp, std::size_t budget, bool as_json) {
  LoadedInvolution t = involution_from_json(read_json_file(tp));
  LoadedInvolution s = involution_from_json(read_json_file(sp));
  if (!t.algebra.same_as(s.algebra) && to_json(t.algebra) != to_json(s.algebra))
    fail(ErrorCode::AlgebraMismatch, "the two involutions live in different algebras");
  const Algebra& a = t.algebra;
  Matrix sm = s.matrix;
  Report rep("involution conjugate");
  rep.inputs() = {{"t", tp}, {"s", sp}, {"algebra", to_json(a)}, {"budget", budget}};
  ConjugacyResult res = conjugacy_test(a, t.matrix, sm, budget);
  rep.result()["verdict"] = to_string(res.verdict);
  rep.result()["reason"] = res.reason;
  if (res.witness) {
    const Matrix& g = *res.witness;
    bool aut = is_automorphism(a, g);
    bool conj = g * t.matrix * inverse(g) == sm;
    rep.result()["witness"] = to_json(g);
    rep.result()["checked"] = {{"is_automorphism", aut}, {"g t g^-1 = s", conj}};
    rep.check("witness is an automorphism", aut);
    rep.check("g t g^-1 = s", conj);
  }
  return rep.emit(as_json);
}

int cmd_involution_fixgroup(const std::string& tp, bool with_centralizer, bool as_json) {
  LoadedInvolution t = involution_from_json(read_json_file(tp));
  const Algebra& a = t.algebra;
  Report rep("involution fixgroup");
  rep.inputs() = {{"t", tp}, {"algebra", to_json(a)}};
  if (!t.construction) fail(ErrorCode::ParseError, "fixgroup needs an involution file with its construction (type, param, fixed)");
  FixedPointGroup g = fixed_point_group(*t.construction);
  rep.result()["type"] = to_string(t.construction->type);
  rep.result()["description"] = g.description;
  const Involution& c = *t.construction;
  if (c.type == InvolutionType::I)
    rep.check("r is admissible for D", !type_I_defect(c.fixed, c.param).has_value());
  else
    rep.check("b lies in B^", bhat(c.fixed).contains(c.param));
  if (a.field().is_finite()) {
    std::size_t closure = group_closure(g.elements).size();
    rep.result()["family_order"] = g.elements.size();
    if (t.construction->type == InvolutionType::I) rep.result()["family_structure"] = "SL2 x G+";
    rep.result()["closure_order"] = closure;
    if (g.bhat_order) rep.result()["bhat_order"] = *g.bhat_order;
    if (g.aut_b_order) rep.result()["aut_B_order"] = *g.aut_b_order;
    if (g.extendable_count) rep.result()["extendable_automorphisms_of_B"] = *g.extendable_count;
    bool commute = true;
    for (const auto& x : g.elements) commute = commute && x * t.matrix == t.matrix * x && is_automorphism(a, x);
    rep.check("family elements are automorphisms commuting with t", commute);
    rep.check("family is closed under products", closure == g.elements.size());
    if (with_centralizer) {
      std::size_t c = centralizer(a, t.matrix).size();
      rep.result()["centralizer_order"] = c;
      rep.result()["family_is_full_centralizer"] = c == g.elements.size();
    }
  }
  return rep.emit(as_json);
}

int cmd_oracle_sweep(const AlgebraArgs& args, const std::string& property, std::uint64_t samples, bool as_json) {
  Algebra a = args.build();
  Property p = parse_property(property);
  Report rep("oracle sweep");
  rep.inputs() = {{"algebra", to_json(a)}, {"property", to_string(p)}};
  SweepReport r = samples > 0 ? random_check(a, p, samples) : exhaustive_check(a, p);
  rep.inputs()["mode"] = samples > 0 ? "random" : "exhaustive";
  rep.result() = to_json(r);
  rep.check("no violations", r.violations == 0);
  return rep.emit(as_json);
}

int cmd_oracle_enumerate(const AlgebraArgs& args, bool as_json) {
  Algebra a = args.build();
  Report rep("oracle enumerate-involutions");
  rep.inputs() = to_json(a);
  InvolutionCensus c = enumerate_involutions(a);
  rep.result()["involutions"] = c.involutions.size();
  rep.result()["quaternion_subalgebras"] = c.quaternion_subalgebras;
  rep.result()["totally_singular_subalgebras"] = c.ts_subalgebras;
  json classes = json::array();
  std::map<std::string, std::size_t> per_type;
  bool uniform = true;
  for (const auto& members : c.classes) {
    const auto& rep0 = c.involutions[members[0]];
    std::size_t built_II = 0;
    for (auto i : members) {
      uniform = uniform && c.involutions[i].detected == rep0.detected;
      built_II += c.involutions[i].built_as_II;
    }
    ++per_type[to_string(rep0.detected)];
    classes.push_back({{"type", to_string(rep0.detected)}, {"size", members.size()}, {"fixed_dim", rep0.fixed_dim}, {"built_as_II", built_II}});
  }
  rep.result()["classes"] = classes;
  rep.result()["class_counts"] = per_type;
  rep.result()["verified_merges"] = c.verified_merges;
  rep.result()["unknown_edges"] = c.unknown_edges;
  rep.check("each class has a single type", uniform);
  bool dims = true;
  for (const auto& inv : c.involutions) dims = dims && inv.fixed_dim != 2 && inv.fixed_dim != 8;
  rep.check("no fixed space of dimension 2 or 8", dims);
  return rep.emit(as_json);
}

int cmd_verify_all(bool as_json) {
  Report rep("verify all");
  json list = json::array();
  for (const auto& run : all_criteria()) {
    CriterionResult r = run();
    if (!as_json) std::cerr << format_line(r) << "\n";
    list.push_back(to_json(r));
    rep.check("criterion " + std::to_string(r.id) + " " + r.name, r.pass);
  }
  rep.result()["criteria"] = list;
  if (!as_json) {
    bool all = std::all_of(list.begin(), list.end(), [](const json& x) { return x["pass"].get<bool>(); });
    std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
    return all ? 0 : 1;
  }
  return rep.emit(as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octo2: octonion algebras over fields of characteristic 2 and their involutions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "text";
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));

  AlgebraArgs alg_args;
  auto* algebra = app.add_subcommand("algebra", "algebra commands")->require_subcommand(1);
  auto* build = algebra->add_subcommand("build", "build an algebra and print its table and Gram matrix");
  alg_args.add(build);

  std::string form_field = "gf(2)", form_beta, form_gamma;
  auto* form = app.add_subcommand("form", "quadratic form commands")->require_subcommand(1);
  auto* classify = form->add_subcommand("classify", "classify the quasi-Pfister form <<beta, gamma>>");
  classify->add_option("--field", form_field);
  classify->add_option("--beta", form_beta)->required();
  classify->add_option("--gamma", form_gamma)->required();

  auto* inv = app.add_subcommand("involution", "involution commands")->require_subcommand(1);
  AlgebraArgs make_args;
  std::string type = "I", param, sub, out;
  auto* make = inv->add_subcommand("make", "build a type I or type II involution");
  make_args.add(make);
  make->add_option("--type", type)->check(CLI::IsMember({"I", "II"}));
  make->add_option("--r,--b", param, "r for type I, b for type II (element literal)");
  make->add_option("--sub", sub, "basis of D or B, elements separated by ';' (default: canonical)");
  make->add_option("--out", out, "write the involution file here");
  std::string t_path, s_path;
  std::size_t budget = 2000000;
  auto* conj = inv->add_subcommand("conjugate", "decide whether two involutions are conjugate");
  conj->add_option("t", t_path)->required();
  conj->add_option("s", s_path)->required();
  conj->add_option("--budget", budget, "search budget in candidate points");
  bool with_centralizer = false;
  auto* fix = inv->add_subcommand("fixgroup", "fixed-point group of an involution");
  fix->add_option("t", t_path)->required();
  fix->add_flag("--centralizer", with_centralizer, "also enumerate the full centralizer (finite fields)");

  auto* oracle = app.add_subcommand("oracle", "brute-force checks")->require_subcommand(1);
  AlgebraArgs sweep_args;
  std::string property = "composition";
  std::uint64_t samples = 0;
  auto* sweep = oracle->add_subcommand("sweep", "check an axiom on every element or pair");
  sweep_args.add(sweep);
  sweep->add_option("--property", property, "composition, min_eq, min_eq_linearized, gram_rank, conj_involutive");
  sweep->add_option("--samples", samples, "random samples instead of an exhaustive sweep");
  AlgebraArgs enum_args;
  auto* enumerate = oracle->add_subcommand("enumerate-involutions", "enumerate involutions and their conjugacy classes");
  enum_args.add(enumerate);

  auto* verify = app.add_subcommand("verify", "acceptance checks")->require_subcommand(1);
  auto* verify_all = verify->add_subcommand("all", "run every acceptance criterion");

  CLI11_PARSE(app, argc, argv);
  const bool as_json = output == "json";
  try {
    if (*build) return cmd_algebra_build(alg_args, as_json);
    if (*classify) return cmd_form_classify(form_field, form_beta, form_gamma, as_json);
    if (*make) return cmd_involution_make(make_args, type, param, sub, out, as_json);
    if (*conj) return cmd_involution_conjugate(t_path, s_path, budget, as_json);
    if (*fix) return cmd_involution_fixgroup(t_path, with_centralizer, as_json);
    if (*sweep) return cmd_oracle_sweep(sweep_args, property, samples, as_json);
    if (*enumerate) return cmd_oracle_enumerate(enum_args, as_json);
    if (*verify_all) return cmd_verify_all(as_json);
  } catch (const Error& e) {
    if (as_json)
      std::cout << json{{"error", {{"code", to_string(e.code()), }, {"message", e.what()}}}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
