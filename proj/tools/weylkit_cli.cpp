// weylkit command-line interface: exact Coxeter / Hecke / affine GL_n
// computations plus the invariant verification harness.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylkit/affine.hpp"
#include "weylkit/coxeter.hpp"
#include "weylkit/hecke.hpp"
#include "weylkit/io.hpp"
#include "weylkit/verify.hpp"

namespace {

using namespace weylkit;

struct CommonOpts {
  std::string preset;
  std::string system_file;
  std::string format = "tsv";
  int n = 0;
  long m = 0;
};

void add_system_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--preset", o.preset, "system preset (A<k>, B<k>, affine-A<k>, I2(<m>), free(<k>))");
  cmd->add_option("--system", o.system_file, "system definition JSON file");
}

void add_format_opt(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
}

// Positional grammar for two-element subcommands:
//   x <word tokens...> y <word tokens...>
std::pair<std::vector<int>, std::vector<int>> parse_xy(const std::vector<std::string>& toks) {
  std::vector<int> xw, yw;
  std::vector<int>* cur = nullptr;
  for (const auto& t : toks) {
    if (t == "x") {
      cur = &xw;
    } else if (t == "y") {
      cur = &yw;
    } else {
      if (!cur) throw DomainError("expected 'x' or 'y' before word tokens");
      auto part = parse_word(t);
      cur->insert(cur->end(), part.begin(), part.end());
    }
  }
  return {xw, yw};
}

void print_affine_rows(const CommonOpts& o, const std::vector<AffinePermutation>& rows) {
  if (o.format == "json")
    std::cout << affine_rows_json(rows) << "\n";
  else
    std::cout << affine_rows_tsv(rows);
}

int run(int argc, char** argv) {
  CLI::App app{"exact Coxeter-group, Hecke-algebra and affine-GL_n computations"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<std::string> toks;
  std::string element_spec;
  std::string lambda_spec;
  int k_arg = -1;
  long r_arg = 1;
  int radius = 6;
  int samples = 200;
  std::uint64_t seed = 0;
  bool effective = false;
  bool n4_report = false;

  auto* c_length = app.add_subcommand("length", "length of an element");
  add_system_opts(c_length, o);
  c_length->add_option("--n", o.n, "affine rank (window-notation input)");
  c_length->add_option("word", toks, "word indices, or one 'w:...'/'s:...' spec with --n");

  auto* c_reduce = app.add_subcommand("reduce", "canonical reduced word");
  add_system_opts(c_reduce, o);
  c_reduce->add_option("word", toks, "word indices");

  auto* c_inv = app.add_subcommand("inversions", "inversion set of an element");
  add_system_opts(c_inv, o);
  add_format_opt(c_inv, o);
  c_inv->add_option("word", toks, "word indices");

  auto* c_hecke = app.add_subcommand("hecke-mult", "expansion of T_x T_y");
  add_system_opts(c_hecke, o);
  add_format_opt(c_hecke, o);
  c_hecke->add_option("xy", toks, "x <word> y <word>");

  auto* c_supp = app.add_subcommand("support", "support D(x,y) of T_x T_y");
  add_system_opts(c_supp, o);
  add_format_opt(c_supp, o);
  c_supp->add_option("xy", toks, "x <word> y <word>");

  auto* c_supu = app.add_subcommand("support-upper", "recursive over-approximation D'(x,y)");
  add_system_opts(c_supu, o);
  add_format_opt(c_supu, o);
  c_supu->add_option("xy", toks, "x <word> y <word>");

  auto* c_twist = app.add_subcommand("twist", "superbasic twist beta(v)");
  c_twist->add_option("--n", o.n, "rank")->required();
  c_twist->add_option("--m", o.m, "slope numerator")->required();
  add_format_opt(c_twist, o);
  c_twist->add_option("element", element_spec, "'w:<window>' or 's:<word>'")->required();

  auto* c_tl = app.add_subcommand("translate-length", "length of the translation eps^lambda");
  c_tl->add_option("--n", o.n, "rank")->required();
  c_tl->add_option("lambda", lambda_spec, "'l:<entries>'")->required();

  auto* c_sk = app.add_subcommand("sk", "shifted difference sums S_k");
  c_sk->add_option("--n", o.n, "rank")->required();
  c_sk->add_option("--k", k_arg, "single k (default: all k in [1,n-1])");
  c_sk->add_option("lambda", lambda_spec, "'l:<entries>'")->required();

  auto* c_bound = app.add_subcommand("bound", "linear twist-length bound f");
  c_bound->add_option("--n", o.n, "rank")->required();
  c_bound->add_flag("--effective", effective, "use the corrected finite-part cap");

  auto* c_enum = app.add_subcommand("enumerate", "ball of W_a in length order");
  c_enum->add_option("--n", o.n, "rank")->required();
  c_enum->add_option("--radius", radius, "maximum length")->required();
  add_format_opt(c_enum, o);

  auto* c_small = app.add_subcommand("small-twist", "{v in W_a : ell(beta(v)v^-1) < r}");
  c_small->add_option("--n", o.n, "rank")->required();
  c_small->add_option("--m", o.m, "slope numerator")->required();
  c_small->add_option("--r", r_arg, "strict twist-length bound")->required();
  add_format_opt(c_small, o);

  auto* c_cand = app.add_subcommand("candidates", "candidate cells {v : w_a in D(v^-1, beta(v))}");
  c_cand->add_option("--n", o.n, "rank")->required();
  c_cand->add_option("--m", o.m, "slope numerator")->required();
  add_format_opt(c_cand, o);
  c_cand->add_option("element", element_spec, "w_a as 'w:<window>' or 's:<word>'")->required();

  auto* c_verify = app.add_subcommand("verify", "run every invariant suite");
  add_system_opts(c_verify, o);
  c_verify->add_option("--radius", radius, "ball radius for element sweeps");
  c_verify->add_option("--samples", samples, "random samples per suite");
  c_verify->add_option("--seed", seed, "random seed");
  c_verify->add_flag("--n4-report", n4_report, "append the n=4 bound sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_length->parsed()) {
      if (o.n > 0) {
        if (toks.size() != 1) throw DomainError("expected one element spec with --n");
        std::cout << parse_affine(o.n, toks[0]).length() << "\n";
      } else {
        auto sys = load_system(o.preset, o.system_file);
        std::vector<int> w;
        for (const auto& t : toks) {
          auto part = parse_word(t);
          w.insert(w.end(), part.begin(), part.end());
        }
        std::cout << sys->from_word(w).length() << "\n";
      }
    } else if (c_reduce->parsed()) {
      auto sys = load_system(o.preset, o.system_file);
      std::vector<int> w;
      for (const auto& t : toks) {
        auto part = parse_word(t);
        w.insert(w.end(), part.begin(), part.end());
      }
      std::cout << format_word(sys->reduce_word(w)) << "\n";
    } else if (c_inv->parsed()) {
      auto sys = load_system(o.preset, o.system_file);
      std::vector<int> w;
      for (const auto& t : toks) {
        auto part = parse_word(t);
        w.insert(w.end(), part.begin(), part.end());
      }
      for (const auto& root : sys->inversion_set(sys->from_word(w)).roots)
        std::cout << root.to_string() << "\n";
    } else if (c_hecke->parsed() || c_supp->parsed() || c_supu->parsed()) {
      auto sys = load_system(o.preset, o.system_file);
      auto [xw, yw] = parse_xy(toks);
      HeckeAlgebra algebra = HeckeAlgebra::equal_parameters(sys);
      GroupElement x = sys->from_word(xw), y = sys->from_word(yw);
      if (c_hecke->parsed()) {
        auto h = algebra.t_mult(x, y);
        std::cout << (o.format == "json" ? hecke_to_json(h) + "\n" : hecke_to_tsv(h));
      } else {
        auto s = c_supp->parsed() ? algebra.support(x, y) : algebra.support_upper(x, y);
        std::cout << (o.format == "json" ? support_to_json(s) + "\n" : support_to_tsv(s));
      }
    } else if (c_twist->parsed()) {
      SuperbasicDatum d(o.n, o.m);
      auto v = beta_twist(parse_affine(o.n, element_spec), d);
      print_affine_rows(o, {v});
    } else if (c_tl->parsed()) {
      auto lambda = parse_cocharacter(lambda_spec);
      if (lambda.rank() != o.n) throw DomainError("cocharacter rank does not match --n");
      std::cout << AffinePermutation::translation(lambda).length() << "\n";
    } else if (c_sk->parsed()) {
      auto lambda = parse_cocharacter(lambda_spec);
      if (lambda.rank() != o.n) throw DomainError("cocharacter rank does not match --n");
      if (k_arg >= 0) {
        std::cout << s_k_sum(lambda, k_arg) << "\n";
      } else {
        for (int k = 1; k <= o.n - 1; ++k)
          std::cout << k << "\t" << s_k_sum(lambda, k) << "\n";
      }
    } else if (c_bound->parsed()) {
      std::cout << (effective ? bound_f_effective(o.n) : bound_f(o.n)).to_string() << "\n";
    } else if (c_enum->parsed()) {
      print_affine_rows(o, ball(o.n, radius));
    } else if (c_small->parsed()) {
      print_affine_rows(o, small_twist_set(SuperbasicDatum(o.n, o.m), r_arg));
    } else if (c_cand->parsed()) {
      SuperbasicDatum d(o.n, o.m);
      print_affine_rows(o, candidate_cells(d, parse_affine(o.n, element_spec)));
    } else if (c_verify->parsed()) {
      VerifyScope scope;
      scope.system = load_system(o.preset.empty() && o.system_file.empty() ? "A2" : o.preset,
                                 o.system_file);
      scope.radius = radius;
      scope.pair_radius = std::min(radius, 4);
      scope.samples = samples;
      scope.seed = seed;
      scope.n4_report = n4_report;
      std::cout << "# seed\t" << seed << "\n";
      auto results = run_verification(scope);
      long failures = 0;
      for (const auto& s : results) {
        std::cout << s.name << "\t" << s.cases << "\t" << s.failures << "\t" << s.millis
                  << "\n";
        for (const auto& note : s.notes) std::cout << "# " << note << "\n";
        failures += s.failures;
      }
      if (failures > 0) return 1;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
