/*
 *   Copyright 2026 The tropgeo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef TROPGEO_TOOLS_CLI_HPP
#define TROPGEO_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tropgeo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kPreconditionError = 2,
  kAssertionFailed = 3,
};

/**
 * Runs one subcommand. `args` excludes the program name. Results go to
 * `out`; diagnostics (and the --verbose summary) go to `err`.
 *
 * `default_seed` is the value of TROPGEO_SEED, if set; --seed overrides it.
 */
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::optional<std::string> default_seed = {});

}  // namespace tropgeo::cli

#endif  // TROPGEO_TOOLS_CLI_HPP
