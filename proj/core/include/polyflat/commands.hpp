#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyflat/certificate.hpp"
#include "polyflat/parallel.hpp"

/// Command layer behind the `polyflat` executable. Every command is pure
/// apart from the optional CSV file written by cmd_search, so identical
/// arguments give byte-identical certificates.
namespace polyflat {

struct CommandOptions {
  unsigned workers = 0;  // 0 = all cores
  ProgressFn progress;
};

/// Exit status for a certificate: 0 verified or witness found, 1 refuted or
/// exhausted, 2 usage error, 3 internal failure.
int exit_code(const Certificate& c);

/// One flat-report certificate per n in [3, max_n], then a summary whose
/// payload lists the flat set.
std::vector<Certificate> cmd_classify(unsigned max_n, const CommandOptions& opts = {});

/// Claims: prop1 N D | prop2 R... | prop3 N | prop4 Q | lemma P A B C |
/// area-formula N | area-identity N [X Y] | heron A B C | remark N.
Certificate cmd_verify(const std::string& claim, const std::vector<std::string>& args,
                       const CommandOptions& opts = {});

/// Bounded search for (n/4) cot(pi/n) = sqrt(r_1) +- ... +- sqrt(r_k), with
/// the flatness obstruction reported alongside.
Certificate cmd_refute(unsigned n, unsigned terms, unsigned bound, const CommandOptions& opts = {});

/// Rational-distance point search; writes CSV to `csv_path` when given.
Certificate cmd_search(unsigned n, unsigned bound, const std::optional<std::string>& csv_path,
                       const CommandOptions& opts = {});

/// Expected flat set of Q(cot(pi/n)) within [3, max_n].
std::vector<unsigned> known_flat_set(unsigned max_n);

}  // namespace polyflat
