#ifndef QWICK_TOOLS_CLI_HPP
#define QWICK_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwick/normal_form.hpp"

namespace qwick::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kLimitExceeded = 3,
  kEngineDisagreement = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// [ { "creators": k, "annihilators": l, "coeff": [[e, "c"], ...] }, ... ]
[[nodiscard]] nlohmann::json normal_form_json(const NormalForm& nf);

/// Reports the outcome of a two-engine run. On disagreement nothing is
/// written to `out`, both results go to `err`, and kEngineDisagreement is
/// returned.
int check_agreement(const NormalForm& diagrams, const NormalForm& rewrite, std::ostream& err);

}  // namespace qwick::cli

#endif  // QWICK_TOOLS_CLI_HPP
