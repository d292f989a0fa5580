#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "supertrop/bilinear.hpp"
#include "supertrop/determinant.hpp"
#include "supertrop/dual.hpp"
#include "supertrop/error.hpp"
#include "supertrop/io.hpp"
#include "supertrop/oracle.hpp"
#include "supertrop/quadratic.hpp"
#include "supertrop/quasi_inverse.hpp"
#include "supertrop/rank.hpp"

namespace supertrop::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string inline_text;
  std::string format = "text";
  std::string engine = "expand";
  std::string vectors;
  std::string vector;
  std::string v;
  std::string w;
  std::string base;
  std::string other;
  std::string a;
  std::string suite;
  bool diagonal = false;
  bool literal = false;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
};

class Output {
 public:
  Output(std::ostream& os, bool json, std::string command) : os_(os), json_(json) {
    doc_["schema"] = "supertrop/1";
    doc_["command"] = std::move(command);
  }

  bool json() const { return json_; }
  Json& doc() { return doc_; }
  std::ostream& text() { return os_; }

  void flush() {
    if (json_) os_ << doc_.dump() << '\n';
  }

 private:
  std::ostream& os_;
  bool json_;
  Json doc_;
};

Json to_json(const Scalar& s) { return to_string(s); }

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return Json{{"rows", rows}};
}

Json to_json(std::span<const Vector> vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

Json to_json(const PairClass& p) {
  return Json{{"left_orthogonal", p.left_orthogonal},
              {"right_orthogonal", p.right_orthogonal},
              {"compatible", p.compatible},
              {"strictly_compatible", p.strictly_compatible},
              {"weakly_cauchy_schwartz", p.weakly_cauchy_schwartz},
              {"cauchy_schwartz", p.cauchy_schwartz},
              {"corner_singular", p.corner_singular}};
}

std::string nu_text(const std::optional<GroupValue>& v) { return v ? v->to_string() : "-inf"; }

Json to_json(const StripResult& s) {
  Json j;
  switch (s.kind) {
    case StripResult::Kind::Interval:
      j["kind"] = "interval";
      j["lo"] = s.all ? "all" : nu_text(s.lo);
      j["hi"] = s.all ? "all" : nu_text(s.hi);
      break;
    case StripResult::Kind::Point:
      j["kind"] = "point";
      j["at"] = nu_text(s.at);
      break;
    case StripResult::Kind::Empty:
      j["kind"] = "empty";
      break;
  }
  j["swapped"] = s.swapped;
  j["verified"] = s.verified;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Text form of a vector set: a matrix whose columns are the vectors.
std::string vector_set_text(std::span<const Vector> vs) {
  if (vs.empty()) return "# none";
  return format_matrix(Matrix::from_columns(vs));
}

Matrix load_main(const Options& o) {
  if (!o.inline_text.empty()) return parse_matrix(o.inline_text);
  if (o.input.empty()) throw ParseError("missing input: pass a matrix file or --inline \"0 1; 2 0\"");
  return read_matrix_file(o.input);
}

// Secondary arguments name a file when one exists, otherwise hold a literal.
Matrix load_matrix_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw ParseError(std::string("missing ") + flag);
  if (std::filesystem::is_regular_file(text)) return read_matrix_file(text);
  return parse_matrix(text);
}

Vector load_vector_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw ParseError(std::string("missing ") + flag);
  if (std::filesystem::is_regular_file(text)) return parse_vector(read_text_file(text));
  return parse_vector(text);
}

std::vector<Vector> load_vectors_arg(const std::string& text, const char* flag) {
  return load_matrix_arg(text, flag).columns();
}

QuadraticForm as_quadratic(const Matrix& m, bool diagonal) {
  if (!diagonal) return QuadraticForm(BilinearForm(m));
  if (m.rows() != 1 && m.cols() != 1) throw ParseError("--diagonal expects a single row of coefficients");
  const Vector c = m.rows() == 1 ? m.row(0) : m.col(0);
  return QuadraticForm::diagonal(std::vector<Scalar>(c.begin(), c.end()));
}

void print_matrix(Output& out, const Matrix& m) {
  if (out.json()) {
    out.doc()["matrix"] = to_json(m);
  } else {
    out.text() << format_matrix(m) << '\n';
  }
}

void print_scalar(Output& out, const Scalar& s) {
  if (out.json()) {
    out.doc()["value"] = to_json(s);
  } else {
    out.text() << to_string(s) << '\n';
  }
}

void print_bool(Output& out, const char* key, bool b) {
  if (out.json()) {
    out.doc()[key] = b;
  } else {
    out.text() << yes_no(b) << '\n';
  }
}

using Handler = std::function<int(const Options&, Output&)>;

int cmd_det(const Options& o, Output& out) {
  const Matrix a = load_main(o);
  const DetResult r = det(a, o.engine == "assign" ? DetEngine::Assign : DetEngine::Expand);
  print_scalar(out, r.value);
  if (out.json()) {
    out.doc()["engine"] = o.engine;
    out.doc()["witnesses"] = r.witnesses;
  }
  return kOk;
}

int cmd_adj(const Options& o, Output& out) {
  print_matrix(out, adjoint(load_main(o)));
  return kOk;
}

int cmd_pinv(const Options& o, Output& out) {
  print_matrix(out, pseudo_inverse(load_main(o)));
  return kOk;
}

int cmd_quasiid(const Options& o, Output& out) {
  const auto q = quasi_identities(load_main(o));
  if (out.json()) {
    out.doc()["left"] = to_json(q.left);
    out.doc()["right"] = to_json(q.right);
  } else {
    out.text() << "# I_A\n" << format_matrix(q.left) << "\n# I'_A\n" << format_matrix(q.right) << '\n';
  }
  return kOk;
}

int cmd_close(const Options& o, Output& out) {
  print_matrix(out, close(load_main(o)));
  return kOk;
}

int cmd_rank(const Options& o, Output& out) {
  const std::size_t r = rank(load_main(o));
  if (out.json()) {
    out.doc()["rank"] = r;
  } else {
    out.text() << r << '\n';
  }
  return kOk;
}

int cmd_indep(const Options& o, Output& out) {
  const auto vs = load_main(o).columns();
  print_bool(out, "independent", independent(vs));
  return kOk;
}

int cmd_dualbase(const Options& o, Output& out) {
  print_matrix(out, dual_base(load_main(o)).row_matrix());
  return kOk;
}

int cmd_dualgrid(const Options& o, Output& out) {
  const Matrix a = load_main(o);
  print_matrix(out, o.literal ? base_pairing_grid(a) : dual_eval_matrix(dual_base(a)));
  return kOk;
}

int cmd_gram(const Options& o, Output& out) {
  const BilinearForm f(load_main(o));
  print_matrix(out, gram_of(f, load_vectors_arg(o.vectors, "--vectors")));
  return kOk;
}

int cmd_symmetric(const Options& o, Output& out) {
  print_bool(out, "symmetric", is_supertropically_symmetric(BilinearForm(load_main(o))));
  return kOk;
}

int cmd_classify(const Options& o, Output& out) {
  const BilinearForm f(load_main(o));
  const VectorClass c = classify_vector(f, load_vector_arg(o.vector, "--vector"));
  if (out.json()) {
    out.doc()["self_pairing"] = to_json(c.self_pairing);
    out.doc()["isotropic"] = c.isotropic;
    out.doc()["normal"] = c.normal;
  } else {
    out.text() << "self_pairing: " << c.self_pairing << "\nclass: " << (c.isotropic ? "g-isotropic" : "g-nonisotropic")
               << "\nnormal: " << yes_no(c.normal) << '\n';
  }
  return kOk;
}

int cmd_pair(const Options& o, Output& out) {
  const BilinearForm f(load_main(o));
  const PairClass p = pair_class(f, load_vector_arg(o.v, "--v"), load_vector_arg(o.w, "--w"));
  const Json flags = to_json(p);
  if (out.json()) {
    out.doc()["flags"] = flags;
  } else {
    for (const auto& [k, val] : flags.items()) out.text() << k << ": " << yes_no(val.get<bool>()) << '\n';
  }
  return kOk;
}

int cmd_gs(const Options& o, Output& out) {
  const BilinearForm f(load_main(o));
  if (!o.vector.empty()) {
    const auto base = o.base.empty() ? std::vector<Vector>{} : load_vectors_arg(o.base, "--base");
    const GSResult r = gs_step(f, base, load_vector_arg(o.vector, "--vector"));
    if (out.json()) {
      out.doc()["projected"] = to_json(r.projected);
      out.doc()["corrected"] = to_json(r.corrected);
      out.doc()["dominant"] = r.dominant;
    } else {
      out.text() << "projected: " << format_vector(r.projected) << "\ncorrected: " << format_vector(r.corrected)
                 << "\ndominant:";
      for (auto j : r.dominant) out.text() << ' ' << j;
      out.text() << '\n';
    }
    return kOk;
  }
  const auto r = gram_schmidt(f, load_vectors_arg(o.vectors, "--vectors (or --vector)"));
  if (out.json()) {
    out.doc()["orthogonal"] = to_json(r.orthogonal);
    out.doc()["leftover"] = to_json(r.leftover);
  } else {
    out.text() << "# orthogonal\n" << vector_set_text(r.orthogonal) << "\n# leftover\n" << vector_set_text(r.leftover)
               << '\n';
  }
  return kOk;
}

int cmd_strip(const Options& o, Output& out) {
  const BilinearForm f(load_main(o));
  const StripResult s = isotropic_strip(f, load_vector_arg(o.v, "--v"), load_vector_arg(o.w, "--w"));
  const Json j = to_json(s);
  if (out.json()) {
    out.doc()["strip"] = j;
  } else {
    for (const auto& [k, val] : j.items()) {
      out.text() << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
    }
  }
  return kOk;
}

int cmd_decompose(const Options& o, Output& out) {
  const BilinearForm f(load_main(o));
  std::vector<Vector> base;
  if (o.base.empty()) {
    for (std::size_t i = 0; i < f.dim(); ++i) base.push_back(Vector::unit(f.dim(), i));
  } else {
    base = load_vectors_arg(o.base, "--base");
  }
  const Decomposition d = decompose(f, base);
  if (out.json()) {
    out.doc()["anisotropic"] = to_json(d.anisotropic);
    out.doc()["alternate"] = to_json(d.alternate);
    out.doc()["anisotropic_source"] = d.anisotropic_source;
    out.doc()["alternate_source"] = d.alternate_source;
    out.doc()["thick"] = d.thick;
  } else {
    out.text() << "# anisotropic\n" << vector_set_text(d.anisotropic) << "\n# alternate\n"
               << vector_set_text(d.alternate) << '\n';
  }
  return kOk;
}

int cmd_quad_eval(const Options& o, Output& out) {
  const QuadraticForm q = as_quadratic(load_main(o), o.diagonal);
  print_scalar(out, q_eval(q, load_vector_arg(o.vector, "--vector")));
  return kOk;
}

int cmd_quad_check(const Options& o, Output& out) {
  const QuadraticForm q = as_quadratic(load_main(o), o.diagonal);
  const auto r = quasilinearity_check(q, o.trials, o.seed);
  if (out.json()) {
    out.doc()["kind"] = to_string(r.kind);
    out.doc()["trials"] = r.trials;
    out.doc()["analytic"] = r.analytic;
    if (r.counterexample) out.doc()["counterexample"] = *r.counterexample;
  } else {
    out.text() << to_string(r.kind) << '\n';
    if (r.counterexample) out.text() << "# " << *r.counterexample << '\n';
  }
  return kOk;
}

int cmd_quad_fromq(const Options& o, Output& out) {
  print_matrix(out, form_from_q(as_quadratic(load_main(o), o.diagonal), o.trials, o.seed).gram());
  return kOk;
}

int cmd_quad_hyper(const Options& o, Output& out) {
  if (!o.a.empty()) {
    print_matrix(out, hyperbolic_plane(parse_scalar(o.a)).gram());
    return kOk;
  }
  const BilinearForm f(load_main(o));
  print_bool(out, "hyperbolic", is_hyperbolic_plane(f, load_vector_arg(o.v, "--v"), load_vector_arg(o.w, "--w")));
  return kOk;
}

int cmd_quad_osum(const Options& o, Output& out) {
  const QuadraticForm q1 = as_quadratic(load_main(o), o.diagonal);
  const QuadraticForm q2 = as_quadratic(load_matrix_arg(o.other, "--other"), o.diagonal);
  const QuadraticForm s = orthogonal_sum(q1, q2);
  if (s.is_diagonal()) {
    const Vector c(s.coefficients().coefficients);
    if (out.json()) {
      out.doc()["diagonal"] = to_json(c);
    } else {
      out.text() << format_vector(c) << '\n';
    }
  } else {
    print_matrix(out, s.form().gram());
  }
  return kOk;
}

int cmd_check(const Options& o, Output& out) {
  const auto report = oracle::run_suite(o.suite, o.trials, o.seed);
  if (out.json()) {
    const Json parsed = Json::parse(report.to_json());
    for (const auto& [k, val] : parsed.items()) out.doc()[k] = val;
  } else {
    out.text() << "suite: " << report.suite << "\ntrials: " << report.trials << "\nseed: " << report.seed
               << "\nverdict: " << to_string(report.verdict) << '\n';
    for (const auto& f : report.failures) {
      out.text() << "failure " << f.index << ": " << f.input << "\n  expected: " << f.expected << "\n  got: " << f.got
                 << '\n';
    }
  }
  return report.verdict == oracle::Verdict::Counterexample ? kCounterexample : kOk;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("SUPERTROP_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto s = std::stoull(env, &used);
    if (used == std::string_view(env).size()) return s;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("SUPERTROP_SEED is not an unsigned integer: ") + env);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.seed = default_seed();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  CLI::App app{"Supertropical linear algebra over max-plus rationals", "supertrop"};
  app.require_subcommand(1);

  std::map<CLI::App*, Handler> handlers;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "matrix file (text or JSON)");
    sub->add_option("--inline", o.inline_text, "matrix literal, rows separated by ';'");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_input(sub);
    handlers[sub] = std::move(h);
    return sub;
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--trials", o.trials, "number of sampled trials");
    sub->add_option("--seed", o.seed, "seed (default $SUPERTROP_SEED or 0)");
  };

  command(&app, "det", "supertropical determinant", cmd_det)
      ->add_option("--engine", o.engine, "expand or assign")
      ->check(CLI::IsMember({"expand", "assign"}));
  command(&app, "adj", "adjoint matrix", cmd_adj);
  command(&app, "pinv", "pseudo-inverse A^nabla", cmd_pinv);
  command(&app, "quasiid", "quasi-identities I_A and I'_A", cmd_quasiid);
  command(&app, "close", "closed base I_A A", cmd_close);
  command(&app, "rank", "tropical rank", cmd_rank);
  command(&app, "indep", "tropical independence of the columns", cmd_indep);
  command(&app, "dualbase", "dual base functionals (one per row)", cmd_dualbase);
  command(&app, "dualgrid", "grid [eps_i(b_j)]", cmd_dualgrid)
      ->add_flag("--literal", o.literal, "print the base pairing grid b_i^T A^nabla-nabla b_j instead");
  command(&app, "gram", "Gram matrix of --vectors", cmd_gram)->add_option("--vectors", o.vectors, "vectors as columns");
  command(&app, "symmetric", "supertropical symmetry of a form", cmd_symmetric);
  command(&app, "classify", "g-isotropy of --vector", cmd_classify)->add_option("--vector", o.vector);
  {
    auto* sub = command(&app, "pair", "pair classification of --v, --w", cmd_pair);
    sub->add_option("--v", o.v);
    sub->add_option("--w", o.w);
  }
  {
    auto* sub = command(&app, "gs", "Gram-Schmidt over --vectors, or one step for --vector against --base", cmd_gs);
    sub->add_option("--vectors", o.vectors, "vectors as columns");
    sub->add_option("--vector", o.vector);
    sub->add_option("--base", o.base, "g-orthogonal base as columns");
  }
  {
    auto* sub = command(&app, "strip", "g-isotropic strip of v1 + beta v2", cmd_strip);
    sub->add_option("--v", o.v);
    sub->add_option("--w", o.w);
  }
  command(&app, "decompose", "anisotropic/alternate decomposition", cmd_decompose)
      ->add_option("--base", o.base, "base as columns (default: standard base)");

  CLI::App* quad = app.add_subcommand("quad", "quadratic forms");
  quad->require_subcommand(1);
  auto quad_command = [&](const std::string& name, const std::string& help, Handler h) {
    auto* sub = command(quad, name, help, std::move(h));
    sub->add_flag("--diagonal", o.diagonal, "input is a row of diagonal coefficients");
    return sub;
  };
  quad_command("eval", "Q(--vector)", cmd_quad_eval)->add_option("--vector", o.vector);
  sampling(quad_command("check", "quasilinearity verdict", cmd_quad_check));
  sampling(quad_command("fromq", "bilinear form B_Q", cmd_quad_fromq));
  {
    auto* sub = quad_command("hyper", "hyperbolic plane of --a, or test --v, --w on a form", cmd_quad_hyper);
    sub->add_option("--a", o.a, "tangible pairing <e1,e2>");
    sub->add_option("--v", o.v);
    sub->add_option("--w", o.w);
  }
  quad_command("osum", "orthogonal sum with --other", cmd_quad_osum)->add_option("--other", o.other);

  {
    CLI::App* sub = app.add_subcommand("check", "run a property suite");
    sub->add_option("suite", o.suite, "suite name")->required();
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    sampling(sub);
    handlers[sub] = cmd_check;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  for (auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    std::string name = sub->get_name();
    if (sub->get_parent() == quad) name = "quad " + name;
    Output output(out, o.format == "json", name);
    try {
      const int code = handler(o, output);
      output.flush();
      return code;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kParse;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kDomain;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kDomain;
    }
  }
  err << "error: no command given\n";
  return kParse;
}

}  // namespace supertrop::cli
