/*
   Copyright 2026 The hopfimg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// hopfimg: command-line front end. Exit codes: 0 ok, 1 usage, 2 input or validation error,
// 3 negative verdict of a predicate subcommand.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <numeric>
#include <sstream>

#include "hopfimg/builders.hpp"
#include "hopfimg/interchange.hpp"

using namespace hopfimg;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kUsage = 1, kInput = 2, kNegative = 3;

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error("InputError", what) {}
};

struct Session {
  bool json = false;
  unsigned conductor = 0;  // 0 = taken from the first file
  std::optional<Context> ctx;

  const Context* expected() {
    if (!ctx && conductor) ctx = make_context(conductor);
    return ctx ? &*ctx : nullptr;
  }
  void adopt(const Context& c) {
    if (!ctx) ctx = c;
  }
};

/// Text and machine-readable forms of a report, printed according to the session mode.
struct Report {
  Json data = Json::object();
  std::ostringstream text;

  void print(const Session& s) const {
    if (s.json)
      std::cout << data.dump(2) << '\n';
    else
      std::cout << text.str();
  }
};

std::string show(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

HopfAlgebraData load_hopf(Session& s, const std::string& path) {
  HopfAlgebraData h = hopf_from_json(read_json_file(path), s.expected());
  s.adopt(h.ctx());
  return h;
}

Representation load_rep(Session& s, const std::string& path, const HopfAlgebraData* host = nullptr) {
  Representation r = representation_from_json(read_json_file(path), fs::path(path).parent_path(), s.expected(), host);
  s.adopt(r.source.ctx());
  return r;
}

Comodule load_single_comodule(const std::string& path, const HopfPtr& host) {
  std::vector<Comodule> cs = comodules_from_json(read_json_file(path), host);
  if (cs.size() != 1) throw InputError(path + " must hold exactly one comodule");
  return cs.front();
}

/// A basis label, or a comma-separated list of dim scalars.
Vec parse_vector_arg(const HopfAlgebraData& h, const std::string& text) {
  const auto& labels = h.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == text) return unit_vec(h.ctx(), h.dim(), i);
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item, h.ctx()));
  if (out.size() != h.dim())
    throw InputError("'" + text + "' is neither a basis label nor a list of " + std::to_string(h.dim()) + " scalars");
  return out;
}

Json report_json(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& a : r.results) {
    Json j{{"axiom", a.axiom}, {"passed", a.passed}};
    if (!a.passed) j["witness"] = a.witness;
    out.push_back(j);
  }
  return out;
}

void report_axioms(Report& rep, const std::string& what, const ValidationReport& r) {
  rep.data[what] = report_json(r);
  for (const auto& a : r.results)
    rep.text << what << ' ' << a.axiom << ": " << (a.passed ? "pass" : "FAIL at " + a.witness) << '\n';
}

// ---------------------------------------------------------------------------------------------
// Conductors

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

/// Session conductor for a builder that needs ζ_req; suggests a conductor when the given one is too small.
Context builder_context(Session& s, unsigned req) {
  if (!s.conductor) s.conductor = req;
  if (s.conductor % req != 0)
    throw InputError("conductor " + std::to_string(s.conductor) + " lacks the roots of unity needed here; suggested conductor: " +
                     std::to_string(lcm_u(s.conductor, req)));
  return *s.expected();
}

unsigned group_exponent(const GroupTable& t) {
  unsigned e = 1;
  for (std::size_t g = 0; g < t.order; ++g) e = lcm_u(e, static_cast<unsigned>(element_order(t, g)));
  return e;
}

/// cyclic:N, dihedral:N (order 2N), klein, sym:N.
GroupTable parse_group(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::size_t n = 0;
  if (colon != std::string::npos) {
    try {
      n = std::stoul(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad group size in '" + text + "'");
    }
  }
  if (kind == "cyclic" && n >= 1) return cyclic_group_table(n);
  if (kind == "dihedral" && n >= 1) return dihedral_group_table(n);
  if (kind == "klein") return direct_product_table(cyclic_group_table(2), cyclic_group_table(2));
  if (kind == "sym" && n >= 1 && n <= 4) return symmetric_group_table(make_context(1), static_cast<int>(n)).table;
  throw InputError("unknown group '" + text + "' (use cyclic:N, dihedral:N, klein or sym:N with N <= 4)");
}

int parse_sign(const std::string& e) {
  if (e == "1" || e == "+1" || e == "+") return 1;
  if (e == "-1" || e == "-") return -1;
  throw InputError("e must be +1 or -1");
}

// ---------------------------------------------------------------------------------------------
// Commands

int cmd_validate(Session& s, const std::string& path) {
  Json doc = read_json_file(path);
  Report rep;
  bool ok = true;
  if (doc.is_object() && doc.contains("matrix")) {
    Representation r = load_rep(s, path);
    ValidationReport hr = validate(r.source), rr = validate_rep(r);
    rep.data["kind"] = "representation";
    report_axioms(rep, "hopf", hr);
    report_axioms(rep, "representation", rr);
    ok = hr.ok() && rr.ok();
  } else if (doc.is_object() && doc.contains("comult")) {
    HopfAlgebraData h = load_hopf(s, path);
    ValidationReport hr = validate(h);
    rep.data["kind"] = "hopf";
    rep.data["dim"] = h.dim();
    rep.text << "dim " << h.dim() << '\n';
    report_axioms(rep, "hopf", hr);
    ok = hr.ok();
  } else {
    AlgebraData a = algebra_from_json(doc, s.expected());
    ValidationReport ar = validate_algebra(a);
    rep.data["kind"] = "algebra";
    rep.data["dim"] = a.dim;
    rep.text << "dim " << a.dim << '\n';
    report_axioms(rep, "algebra", ar);
    ok = ar.ok();
  }
  rep.data["ok"] = ok;
  rep.text << (ok ? "all axioms pass" : "validation failed") << '\n';
  rep.print(s);
  return ok ? kOk : kInput;
}

int cmd_hopf_image(Session& s, const std::string& hopf, const std::string& rep_path) {
  HopfAlgebraData h = load_hopf(s, hopf);
  Representation r = load_rep(s, rep_path, &h);
  HopfImageResult img = hopf_image(r);
  Report rep;
  const auto& c = img.closure;
  rep.data["dim_hopf"] = h.dim();
  rep.data["dim_ideal"] = img.ideal.dim();
  rep.data["dim_image"] = img.image.dim();
  rep.data["generator_trace"] = c.antipode_trace;
  rep.data["closure_trace"] = c.convolution_trace;
  rep.data["ideal_basis"] = matrix_to_rows_json(img.ideal.basis());
  rep.data["projection"] = matrix_to_rows_json(img.projection.matrix);
  rep.data["image"] = hopf_to_json(img.image);
  rep.text << "dim H = " << h.dim() << '\n'
           << "dim I_pi = " << img.ideal.dim() << '\n'
           << "dim H_pi = " << img.image.dim() << '\n';
  rep.text << "generator trace (W under the dual antipode):";
  for (auto d : c.antipode_trace) rep.text << ' ' << d;
  rep.text << "\nclosure trace (C under convolution):";
  for (auto d : c.convolution_trace) rep.text << ' ' << d;
  rep.text << "\nprojection H -> H_pi:\n";
  for (std::size_t i = 0; i < img.projection.matrix.rows(); ++i) rep.text << "  " << show(img.projection.matrix.row(i)) << '\n';
  rep.text << "H_pi structure constants:\n" << hopf_to_json(img.image).dump(2) << '\n';
  rep.print(s);
  return kOk;
}

int cmd_inner_faithful(Session& s, const std::string& hopf, const std::string& rep_path) {
  HopfAlgebraData h = load_hopf(s, hopf);
  Representation r = load_rep(s, rep_path, &h);
  ConvolutionClosure c = compute_closure(r);
  bool yes = c.ideal.dim() == 0;
  Report rep;
  rep.data["inner_faithful"] = yes;
  rep.data["dim_ideal"] = c.ideal.dim();
  rep.data["dim_image"] = h.dim() - c.ideal.dim();
  rep.text << "inner faithful: " << yes_no(yes) << '\n'
           << "dim I_pi = " << c.ideal.dim() << '\n'
           << "dim H_pi = " << h.dim() - c.ideal.dim() << '\n';
  rep.print(s);
  return yes ? kOk : kNegative;
}

std::size_t order_in(const GroupLikeSet& gl, std::size_t a) {
  std::size_t n = 1, x = a;
  while (x != gl.identity) {
    x = gl.table[x][a];
    ++n;
  }
  return n;
}

void report_grouplikes(Report& rep, const GroupLikeSet& gl) {
  Json els = Json::array();
  rep.text << "group-likes: " << gl.size() << (gl.complete ? " (complete)" : " (search incomplete)") << '\n';
  rep.text << "index  order  vector\n";
  for (std::size_t a = 0; a < gl.size(); ++a) {
    els.push_back(Json{{"vector", vector_to_json(gl.elements[a])}, {"order", order_in(gl, a)}});
    rep.text << a << "  " << order_in(gl, a) << "  " << show(gl.elements[a]) << '\n';
  }
  rep.text << "multiplication table:\n";
  for (const auto& row : gl.table) {
    for (std::size_t b = 0; b < row.size(); ++b) rep.text << (b ? " " : "  ") << row[b];
    rep.text << '\n';
  }
  rep.data["complete"] = gl.complete;
  rep.data["grouplikes"] = els;
  rep.data["table"] = gl.table;
}

int cmd_grouplikes(Session& s, const std::string& hopf, const std::string& candidates) {
  HopfAlgebraData h = load_hopf(s, hopf);
  std::vector<Vec> declared;
  if (!candidates.empty()) declared = vectors_from_json(read_json_file(candidates), h);
  Report rep;
  report_grouplikes(rep, find_grouplikes(h, declared));
  rep.print(s);
  return kOk;
}

int cmd_skew_primitives(Session& s, const std::string& hopf, const std::string& g, const std::string& k) {
  HopfAlgebraData h = load_hopf(s, hopf);
  SkewPrimitiveSpace p = skew_primitives(h, parse_vector_arg(h, g), parse_vector_arg(h, k));
  Report rep;
  rep.data["g"] = vector_to_json(p.g);
  rep.data["h"] = vector_to_json(p.h);
  rep.data["dim"] = p.space.dim();
  rep.data["basis"] = matrix_to_rows_json(p.space.basis());
  rep.text << "g = " << show(p.g) << "\nh = " << show(p.h) << "\ndim P_{g,h} = " << p.space.dim() << '\n';
  for (const auto& v : p.space.basis_vectors()) rep.text << "  " << show(v) << '\n';
  rep.print(s);
  return kOk;
}

int cmd_pointed(Session& s, const std::string& hopf, const std::string& rep_path, const std::string& gl_path,
                const std::string& side) {
  HopfAlgebraData h = load_hopf(s, hopf);
  Representation r = load_rep(s, rep_path, &h);
  GroupLikeSet gl = verify_grouplikes(h, vectors_from_json(read_json_file(gl_path), h));
  PointedVerdict v = pointed_criterion(r, gl, side == "right" ? PrimitiveSide::Right : PrimitiveSide::Left);
  Report rep;
  rep.data["injective"] = v.injective;
  rep.data["side"] = side;
  rep.text << "pi injective on every " << (side == "right" ? "P_{1,g}" : "P_{g,1}") << ": " << yes_no(v.injective) << '\n';
  if (!v.injective) {
    rep.data["grouplike"] = *v.grouplike;
    rep.data["kernel_vector"] = vector_to_json(v.kernel_vector);
    rep.text << "fails at group-like " << *v.grouplike << " " << show(gl.elements[*v.grouplike]) << '\n'
             << "kernel vector " << show(v.kernel_vector) << '\n';
  }
  rep.print(s);
  return v.injective ? kOk : kNegative;
}

int cmd_twist(Session& s, const std::string& hopf, const std::string& twist_path) {
  HopfAlgebraData h = load_hopf(s, hopf);
  TwistElement t = twist_from_json(read_json_file(twist_path), h);
  TwistCheck c = check_pseudo_twist(t);
  if (c.kind == TwistKind::Neither) throw NotATwist(c.witness);
  std::cerr << "kind: " << to_string(c.kind) << '\n';
  emit(hopf_to_json(twist_hopf(t)));
  return kOk;
}

int cmd_cotwist(Session& s, const std::string& hopf, const std::string& cocycle_path, const std::string& side) {
  HopfAlgebraData h = load_hopf(s, hopf);
  Cocycle c = cocycle_from_json(read_json_file(cocycle_path), h);
  if (side.empty()) {
    emit(hopf_to_json(cotwist_hopf(c)));
  } else {
    auto [left, right] = one_sided_twisted_algebras(c);
    emit(algebra_to_json(side == "left" ? left : right));
  }
  return kOk;
}

int cmd_pi_hom(Session& s, const std::string& rep_path, const std::string& u_path, const std::string& v_path) {
  Representation r = load_rep(s, rep_path);
  auto host = std::make_shared<const HopfAlgebraData>(r.source);
  Comodule u = load_single_comodule(u_path, host), v = load_single_comodule(v_path, host);
  for (const Comodule* c : {&u, &v}) {
    ValidationReport vr = validate_comodule(*c);
    if (!vr.ok()) throw InputError("comodule fails validation:\n" + vr.str());
  }
  TannakaReport t = tannaka_equality_check(r, {{u, v}});
  const HomComparison& p = t.pairs.front();
  Report rep;
  rep.data["hom_host"] = p.over_host;
  rep.data["hom_image"] = p.over_image;
  rep.data["hom_pi"] = p.pi_morphisms;
  rep.data["image_equals_pi"] = p.image_equals_pi;
  rep.data["strict_gap"] = p.strict_gap;
  rep.text << "space              dim\n"
           << "Hom_H(U,V)         " << p.over_host << '\n'
           << "Hom_H_pi(U,V)      " << p.over_image << '\n'
           << "Hom(U_pi,V_pi)     " << p.pi_morphisms << '\n'
           << "Hom_H_pi = Hom(U_pi,V_pi): " << yes_no(p.image_equals_pi) << '\n';
  rep.print(s);
  return kOk;
}

int cmd_fixed_points(Session& s, const std::string& rep_path, const std::string& u_path, std::size_t max_len) {
  Representation r = load_rep(s, rep_path);
  auto host = std::make_shared<const HopfAlgebraData>(r.source);
  TruncatedVerdict v = truncated_fixedpoint_criterion(r, load_single_comodule(u_path, host), max_len);
  Report rep;
  rep.data["violated"] = v.violated;
  rep.data["checked_up_to"] = v.checked_up_to;
  if (v.violated) {
    rep.data["word"] = v.word;
    rep.text << "fixed points differ on word '" << v.word << "': not inner faithful\n";
  } else {
    rep.text << "no difference on words up to length " << v.checked_up_to << '\n'
             << "note: this is a semi-decision procedure; passing does not certify inner faithfulness\n";
  }
  rep.print(s);
  return v.violated ? kNegative : kOk;
}

int cmd_level_two(Session& s, const std::string& rep_path, const std::string& gl_path, const std::string& comod_path) {
  Representation r = load_rep(s, rep_path);
  auto host = std::make_shared<const HopfAlgebraData>(r.source);
  GroupLikeSet gl = verify_grouplikes(r.source, vectors_from_json(read_json_file(gl_path), r.source));
  std::vector<Comodule> cs = comodules_from_json(read_json_file(comod_path), host);
  LevelTwoReport l = level_two_criterion(r, gl, cs);
  static const char* names[5] = {
      "pi injective on group-likes",
      "pi kills diagonal coefficients",
      "pi(u12) independent of pi(g)",
      "pi(u12^l), pi(u21^m) independent",
      "pi(u12^l), pi(u12^m) independent",
  };
  Report rep;
  Json conds = Json::array();
  for (int i = 0; i < 5; ++i) {
    Json c{{"condition", i + 1}, {"name", names[i]}, {"passed", l.condition[i]}};
    if (!l.condition[i]) c["witness"] = l.witness[i];
    conds.push_back(c);
    rep.text << "(" << i + 1 << ") " << names[i] << ": " << (l.condition[i] ? "pass" : "FAIL " + l.witness[i]) << '\n';
  }
  rep.data["conditions"] = conds;
  rep.data["ok"] = l.ok();
  rep.text << (l.ok() ? "all conditions hold: pi is inner faithful\n" : "criterion not satisfied\n");
  rep.print(s);
  return l.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hopf images and inner faithfulness over cyclotomic fields"};
  app.fallthrough();
  app.require_subcommand(1);
  Session s;
  app.add_flag("--json", s.json, "Machine-readable output");
  app.add_option("--conductor", s.conductor, "Cyclotomic conductor N")->check(CLI::PositiveNumber);

  std::string a1, a2, a3, opt1, opt2, side = "left", one_sided;
  std::size_t max_len = 4;
  int result = kOk;
  std::function<int()> action;

  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of a Hopf algebra, algebra or representation file");
  validate_cmd->add_option("FILE", a1)->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(s, a1); }; });

  auto* image_cmd = app.add_subcommand("hopf-image", "Compute the Hopf image of a representation");
  image_cmd->add_option("HOPF", a1)->required();
  image_cmd->add_option("REP", a2)->required();
  image_cmd->callback([&] { action = [&] { return cmd_hopf_image(s, a1, a2); }; });

  auto* if_cmd = app.add_subcommand("inner-faithful", "Decide inner faithfulness (exit 0 yes, 3 no)");
  if_cmd->add_option("HOPF", a1)->required();
  if_cmd->add_option("REP", a2)->required();
  if_cmd->callback([&] { action = [&] { return cmd_inner_faithful(s, a1, a2); }; });

  auto* gl_cmd = app.add_subcommand("grouplikes", "List group-like elements");
  gl_cmd->add_option("HOPF", a1)->required();
  gl_cmd->add_option("--candidates", opt1, "File with candidate vectors");
  gl_cmd->callback([&] { action = [&] { return cmd_grouplikes(s, a1, opt1); }; });

  auto* sp_cmd = app.add_subcommand("skew-primitives", "Space of (g,h)-skew-primitive elements");
  sp_cmd->set_help_flag("--help", "Print this help message and exit");
  sp_cmd->add_option("HOPF", a1)->required();
  sp_cmd->add_option("--g", opt1, "Basis label or comma-separated coordinates")->required();
  sp_cmd->add_option("--h", opt2, "Basis label or comma-separated coordinates")->required();
  sp_cmd->callback([&] { action = [&] { return cmd_skew_primitives(s, a1, opt1, opt2); }; });

  auto* pc_cmd = app.add_subcommand("pointed-criterion", "Injectivity on skew-primitives for pointed H (exit 0 yes, 3 no)");
  pc_cmd->add_option("HOPF", a1)->required();
  pc_cmd->add_option("REP", a2)->required();
  pc_cmd->add_option("--grouplikes", opt1, "File with the group-like elements")->required();
  pc_cmd->add_option("--side", side, "left: P_{g,1}, right: P_{1,g}")->check(CLI::IsMember({"left", "right"}));
  pc_cmd->callback([&] { action = [&] { return cmd_pointed(s, a1, a2, opt1, side); }; });

  auto* tw_cmd = app.add_subcommand("twist", "Emit the Hopf algebra twisted by a (pseudo-)twist");
  tw_cmd->add_option("HOPF", a1)->required();
  tw_cmd->add_option("TWISTFILE", a2)->required();
  tw_cmd->callback([&] { action = [&] { return cmd_twist(s, a1, a2); }; });

  auto* ct_cmd = app.add_subcommand("cotwist", "Emit the Hopf algebra cotwisted by a 2-cocycle");
  ct_cmd->add_option("HOPF", a1)->required();
  ct_cmd->add_option("COCYCLEFILE", a2)->required();
  ct_cmd->add_option("--one-sided", one_sided, "Emit the left or right one-sided twisted algebra instead")
      ->check(CLI::IsMember({"left", "right"}));
  ct_cmd->callback([&] { action = [&] { return cmd_cotwist(s, a1, a2, one_sided); }; });

  auto* tensor_cmd = app.add_subcommand("tensor", "Emit the tensor product of two Hopf algebras");
  tensor_cmd->add_option("HOPF1", a1)->required();
  tensor_cmd->add_option("HOPF2", a2)->required();
  tensor_cmd->callback([&] {
    action = [&] {
      HopfAlgebraData h1 = load_hopf(s, a1), h2 = load_hopf(s, a2);
      emit(hopf_to_json(tensor_hopf(h1, h2)));
      return kOk;
    };
  });

  auto* trep_cmd = app.add_subcommand("tensor-rep", "Emit the tensor product of two representations");
  trep_cmd->add_option("REP1", a1)->required();
  trep_cmd->add_option("REP2", a2)->required();
  trep_cmd->callback([&] {
    action = [&] {
      Representation r1 = load_rep(s, a1), r2 = load_rep(s, a2);
      emit(representation_to_json(tensor_rep(r1, r2)));
      return kOk;
    };
  });

  auto* ph_cmd = app.add_subcommand("pi-hom", "Hom dimensions over H, over the Hopf image, and after pi");
  ph_cmd->add_option("REP", a1)->required();
  ph_cmd->add_option("COMOD1", a2)->required();
  ph_cmd->add_option("COMOD2", a3)->required();
  ph_cmd->callback([&] { action = [&] { return cmd_pi_hom(s, a1, a2, a3); }; });

  auto* fp_cmd = app.add_subcommand("fixed-points", "Truncated fixed-point test on tensor words (exit 3 on a violation)");
  fp_cmd->add_option("REP", a1)->required();
  fp_cmd->add_option("COMOD", a2)->required();
  fp_cmd->add_option("--max-len", max_len, "Longest word checked")->check(CLI::NonNegativeNumber);
  fp_cmd->callback([&] { action = [&] { return cmd_fixed_points(s, a1, a2, max_len); }; });

  auto* l2_cmd = app.add_subcommand("thm92", "Five-condition inner faithfulness test for simples of dimension <= 2");
  l2_cmd->alias("level-two");
  l2_cmd->add_option("REP", a1)->required();
  l2_cmd->add_option("--grouplikes", opt1, "File with the group-like elements")->required();
  l2_cmd->add_option("--comodules", opt2, "File with the 2-dimensional simple comodules")->required();
  l2_cmd->callback([&] { action = [&] { return cmd_level_two(s, a1, opt1, opt2); }; });

  // Builders
  auto* builder = app.add_subcommand("builder", "Emit built objects in the interchange format");
  builder->require_subcommand(1);
  std::string group = "cyclic:2", qtext, wtext, estr = "+1";
  std::size_t n = 2, k = 1, q_order = 0;
  long power = 1;
  std::vector<std::string> points;
  bool group_alg = false;

  auto* b_ga = builder->add_subcommand("group-algebra", "k[G]");
  b_ga->add_option("--group", group, "cyclic:N, dihedral:N, klein or sym:N")->required();
  b_ga->callback([&] {
    action = [&] {
      GroupTable t = parse_group(group);
      emit(hopf_to_json(group_algebra(builder_context(s, 1), t).hopf));
      return kOk;
    };
  });

  auto* b_fa = builder->add_subcommand("function-algebra", "k^G");
  b_fa->add_option("--group", group, "cyclic:N, dihedral:N, klein or sym:N")->required();
  b_fa->callback([&] {
    action = [&] {
      GroupTable t = parse_group(group);
      emit(hopf_to_json(function_algebra(builder_context(s, s.conductor ? 1 : group_exponent(t)), t).hopf));
      return kOk;
    };
  });

  auto* b_sym = builder->add_subcommand("sym", "k^{S_n} (or k[S_n] with --group-algebra), n <= 4");
  b_sym->add_option("--n", n)->required()->check(CLI::Range(1, 4));
  b_sym->add_flag("--group-algebra", group_alg);
  b_sym->callback([&] {
    action = [&] {
      GroupTable t = parse_group("sym:" + std::to_string(n));
      Context ctx = builder_context(s, s.conductor ? 1 : group_exponent(t));
      emit(hopf_to_json(group_alg ? group_algebra(ctx, t).hopf : function_algebra(ctx, t).hopf));
      return kOk;
    };
  });

  auto* b_taft = builder->add_subcommand("taft", "Taft algebra of dimension n^2");
  b_taft->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  b_taft->add_option("--q", qtext, "Primitive n-th root of unity (default z^(N/n))");
  b_taft->callback([&] {
    action = [&] {
      Context ctx = builder_context(s, static_cast<unsigned>(n));
      Cyclotomic q = qtext.empty() ? Cyclotomic::zeta(ctx, ctx->conductor() / n) : parse_scalar(qtext, ctx);
      emit(hopf_to_json(taft(ctx, n, q).hopf));
      return kOk;
    };
  });

  auto add_ake_options = [&](CLI::App* c) {
    c->add_option("--k", k)->required()->check(CLI::Range(1, 64));
    c->add_option("--e", estr, "+1 or -1")->required();
  };
  auto ake_context = [&](int e) {
    if (e < 0 && s.conductor && s.conductor % 4 != 0)
      std::cerr << "note: no square root of -1 at conductor " << s.conductor
                << "; g and h are omitted (suggested conductor: " << lcm_u(s.conductor, 4) << ")\n";
    return builder_context(s, s.conductor ? 1 : (e < 0 ? 4 : 1));
  };

  auto* b_ake = builder->add_subcommand("ake", "The 4k-dimensional quotient A(k,e)");
  add_ake_options(b_ake);
  b_ake->callback([&] {
    action = [&] {
      int e = parse_sign(estr);
      emit(hopf_to_json(*ake(ake_context(e), k, e).hopf));
      return kOk;
    };
  });

  auto* b_ake_gl = builder->add_subcommand("ake-grouplikes", "Group-likes 1, d, g, h of A(k,e)");
  add_ake_options(b_ake_gl);
  b_ake_gl->callback([&] {
    action = [&] {
      int e = parse_sign(estr);
      AkeData a = ake(ake_context(e), k, e);
      Json list = Json::array();
      for (const auto& g : a.grouplikes.elements) list.push_back(vector_to_json(g));
      emit(Json{{"conductor", s.conductor}, {"grouplikes", list}});
      return kOk;
    };
  });

  auto* b_ake_c = builder->add_subcommand("ake-comodules", "The 2-dimensional simple comodules C(1..k-1) of A(k,e)");
  add_ake_options(b_ake_c);
  b_ake_c->callback([&] {
    action = [&] {
      int e = parse_sign(estr);
      AkeData a = ake(ake_context(e), k, e);
      Json list = Json::array();
      for (const auto& c : a.comodules) list.push_back(comodule_to_json(c));
      emit(Json{{"conductor", s.conductor}, {"comodules", list}});
      return kOk;
    };
  });

  auto* b_piq = builder->add_subcommand("pi-q", "The representation pi_q of A(k,e) on M_2");
  add_ake_options(b_piq);
  b_piq->add_option("--q", qtext, "q with q^k = e");
  b_piq->add_option("--q-order", q_order, "Use q = z^(N/order)");
  b_piq->callback([&] {
    action = [&] {
      int e = parse_sign(estr);
      unsigned ord = q_order ? static_cast<unsigned>(q_order) : static_cast<unsigned>(e > 0 ? k : 2 * k);
      unsigned req = qtext.empty() ? ord : 1;
      if (e < 0) req = lcm_u(req, 4);
      Context ctx = builder_context(s, req);
      Cyclotomic q = qtext.empty() ? Cyclotomic::zeta(ctx, ctx->conductor() / ord) : parse_scalar(qtext, ctx);
      emit(representation_to_json(pi_q(ake(ctx, k, e), q)));
      return kOk;
    };
  });

  auto* b_cyc = builder->add_subcommand("cyclic-rep", "x -> w on k[Z_n]");
  b_cyc->add_option("--n", n)->required()->check(CLI::Range(1, 1000));
  b_cyc->add_option("--w", wtext, "An n-th root of unity");
  b_cyc->add_option("--power", power, "Use w = z^(power*N/n)");
  b_cyc->callback([&] {
    action = [&] {
      Context ctx = builder_context(s, wtext.empty() ? static_cast<unsigned>(n) : 1);
      Cyclotomic w = wtext.empty() ? Cyclotomic::zeta(ctx, power * static_cast<long>(ctx->conductor() / n)) : parse_scalar(wtext, ctx);
      emit(representation_to_json(cyclic_rep(ctx, n, w)));
      return kOk;
    };
  });

  auto* b_eval = builder->add_subcommand("evaluation", "Evaluation of k^{S_n} at permutations");
  b_eval->add_option("--n", n)->required()->check(CLI::Range(1, 4));
  b_eval->add_option("--points", points, "Permutations in cycle notation, e.g. (1,2)")->required();
  b_eval->callback([&] {
    action = [&] {
      GroupTable t = parse_group("sym:" + std::to_string(n));
      Context ctx = builder_context(s, s.conductor ? 1 : group_exponent(t));
      SymmetricGroup sg = symmetric_group_table(ctx, static_cast<int>(n));
      std::vector<std::size_t> idx;
      for (const auto& p : points) idx.push_back(find_permutation(sg, p));
      emit(representation_to_json(evaluation_rep(function_algebra(ctx, sg.table).hopf, idx)));
      return kOk;
    };
  });

  auto* b_id = builder->add_subcommand("identity-rep", "The identity map of a Hopf algebra file");
  b_id->add_option("HOPF", a1)->required();
  b_id->callback([&] {
    action = [&] {
      emit(representation_to_json(identity_rep(load_hopf(s, a1))));
      return kOk;
    };
  });

  auto* b_kt = builder->add_subcommand("klein-twist", "Twist of k[D_4] from its Klein subgroup (use with group-algebra --group dihedral:4)");
  b_kt->callback([&] {
    action = [&] {
      Context ctx = builder_context(s, 1);
      HopfAlgebraData h = group_algebra(ctx, dihedral_group_table(4)).hopf;
      emit(twist_to_json(make_twist(h, dihedral_klein_twist(h))));
      return kOk;
    };
  });

  auto* b_kc = builder->add_subcommand("klein-cocycle", "Bicharacter cocycle on k[Z_2 x Z_2] (use with group-algebra --group klein)");
  b_kc->callback([&] {
    action = [&] {
      Context ctx = builder_context(s, 1);
      HopfAlgebraData h = group_algebra(ctx, parse_group("klein")).hopf;
      emit(cocycle_to_json(make_cocycle(h, klein_bicharacter(ctx))));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    result = action ? action() : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return result;
}
