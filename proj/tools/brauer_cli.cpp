#include "brauer/brauer.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace brauer;

namespace {

Series parse_series(const std::string& s) {
  if (s == "orthogonal" || s == "orth") return Series::orthogonal;
  if (s == "symplectic" || s == "symp") return Series::symplectic;
  throw usage_error("series must be orthogonal or symplectic");
}

Rational parse_x(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

int emit(const Report& rep, const std::string& format) {
  if (format == "text" && rep.command() == "render") {
    std::cout << rep.results()["picture"].get<std::string>();
  } else {
    std::cout << rep.render(format);
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Brauer algebras B_f^(x)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 1;
  bool force = false;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_flag("--force", force, "ignore the size guards");

  int f = 0;
  std::string x_text = "0", series_text = "orthogonal", suite;
  int n = 1;
  std::optional<int> level;
  bool basis = false;
  std::optional<std::string> diagram, chord;

  auto* dims = app.add_subcommand("dims", "diagram and junction counts");
  dims->add_option("--f", f)->required();

  auto* radical = app.add_subcommand("radical", "radical of B_f^(x) and the R-space");
  radical->add_option("--f", f)->required();
  radical->add_option("--x", x_text)->required();
  radical->add_option("--level", level, "also report dim Rad(B) cap B(level)");
  radical->add_flag("--basis", basis, "dump a radical basis");

  auto* blocks = app.add_subcommand("blocks", "block structure matrices and their ranks");
  blocks->add_option("--f", f)->required();
  blocks->add_option("--x", x_text)->required();

  auto* kernel = app.add_subcommand("kernel", "kernel of the tensor representation");
  kernel->add_option("--series", series_text)->required();
  kernel->add_option("--n", n)->required();
  kernel->add_option("--f", f)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--f", f)->required();
  verify->add_option("--x", x_text);
  verify->add_option("--n", n);
  verify->add_option("--series", series_text);

  auto* render = app.add_subcommand("render", "ASCII picture of a diagram or chord diagram");
  render->add_option("--diagram", diagram, "e.g. f=4;12|34/13|24");
  render->add_option("--chord", chord, "e.g. f=4;13|24");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Guard guard = Guard::from_env(force);
    if (*dims) {
      guard.algebra(f, 1);
      return emit(cmd_dims(f), format);
    }
    if (*radical) {
      guard.algebra(f);
      return emit(cmd_radical(f, parse_x(x_text), level, basis), format);
    }
    if (*blocks) {
      guard.algebra(f);
      return emit(cmd_blocks(f, parse_x(x_text)), format);
    }
    if (*kernel) {
      const auto s = parse_series(series_text);
      guard.algebra(f);
      if (n < 1) throw usage_error("n must be positive");
      guard.tensor(BilinearSpace::make(s, n).dim, f);
      return emit(cmd_kernel(s, n, f), format);
    }
    if (*verify) {
      guard.algebra(f);
      SuiteParams p;
      p.f = f;
      p.x = parse_x(x_text);
      p.n = n;
      p.series = parse_series(series_text);
      p.seed = seed;
      if (suite == "thm4_8" || suite == "thm5_5") guard.tensor(BilinearSpace::make(p.series, n).dim, f);
      return emit(run_suite(suite, p), format);
    }
    if (*render) return emit(cmd_render(diagram, chord), format);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
