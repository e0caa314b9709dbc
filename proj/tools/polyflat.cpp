// polyflat: exact certificates for flatness of Q(cot(pi/n)), sums of square
// roots, and rational-distance points on unit polygons.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyflat/commands.hpp"

namespace {

polyflat::ProgressFn stderr_progress(const std::string& label, bool enabled) {
  if (!enabled) return {};
  return [label, last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
    const std::size_t pct = total == 0 ? 100 : done * 100 / total;
    if (pct / 10 == last / 10 && done != total) return;
    last = pct;
    std::cerr << label << ": " << done << '/' << total << " (" << pct << "%)\n";
  };
}

void emit(const polyflat::Certificate& c, bool json) {
  if (json) {
    std::cout << polyflat::to_json(c).dump() << '\n';
    return;
  }
  std::cout << c.claim << ' ' << c.inputs.dump() << " -> " << polyflat::to_string(c.verdict);
  if (c.verdict == polyflat::Verdict::error) {
    std::cout << " [" << c.reason() << "] " << c.payload.value("message", "");
  }
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyflat: exact algebra certificates for rational-distance problems on unit polygons"};
  app.set_version_flag("--version", std::string(polyflat::kVersion));
  app.require_subcommand(1);

  unsigned workers = 0;
  bool json = false;
  bool quiet = false;
  app.add_option("--workers", workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", json, "Print certificates as JSON lines");
  app.add_flag("--quiet", quiet, "Suppress progress on stderr");

  unsigned max_n = 0;
  auto* classify = app.add_subcommand("classify", "Flatness of Q(cot(pi/n)) for 3 <= n <= max-n");
  classify->add_option("--max-n", max_n, "Largest n")->required();

  std::string claim;
  std::vector<std::string> claim_args;
  auto* verify = app.add_subcommand("verify", "Check one claim: prop1 prop2 prop3 prop4 lemma area-formula "
                                              "area-identity heron remark");
  verify->add_option("claim", claim, "Claim name")->required();
  verify->add_option("args", claim_args, "Claim arguments");
  verify->allow_extras(false);

  unsigned refute_n = 0;
  unsigned terms = 0;
  unsigned refute_bound = 0;
  auto* refute = app.add_subcommand("refute", "Search (n/4)cot(pi/n) = sqrt(r1) +- ... +- sqrt(rk)");
  refute->add_option("--n", refute_n, "Polygon size")->required();
  refute->add_option("--terms", terms, "Number of square roots k")->required();
  refute->add_option("--bound", refute_bound, "Height bound on numerators and denominators")->required();

  unsigned search_n = 0;
  unsigned search_bound = 0;
  std::optional<std::string> out_path;
  auto* search = app.add_subcommand("search", "Rational-distance points of the unit n-gon, n in {3, 4, 6}");
  search->add_option("--n", search_n, "Polygon size")->required();
  search->add_option("--bound", search_bound, "Height bound on parameters")->required();
  search->add_option("--out", out_path, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    polyflat::CommandOptions opts;
    opts.workers = workers;

    if (classify->parsed()) {
      opts.progress = stderr_progress("classify", !quiet);
      const auto certs = polyflat::cmd_classify(max_n, opts);
      for (const auto& c : certs) {
        if (json || c.claim != "prop5.flat_report") emit(c, json);
      }
      return polyflat::exit_code(certs.back());
    }
    if (verify->parsed()) {
      const auto c = polyflat::cmd_verify(claim, claim_args, opts);
      emit(c, json);
      return polyflat::exit_code(c);
    }
    if (refute->parsed()) {
      opts.progress = stderr_progress("refute", !quiet);
      const auto c = polyflat::cmd_refute(refute_n, terms, refute_bound, opts);
      emit(c, json);
      return polyflat::exit_code(c);
    }
    if (search->parsed()) {
      opts.progress = stderr_progress("search", !quiet);
      const auto c = polyflat::cmd_search(search_n, search_bound, out_path, opts);
      emit(c, json);
      return polyflat::exit_code(c);
    }
  } catch (const std::exception& e) {
    std::cerr << "polyflat: internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
