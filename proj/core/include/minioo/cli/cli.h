// Copyright 2026 The MiniOO Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINIOO_CLI_CLI_H_
#define MINIOO_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace minioo {

enum ExitCode {
  kExitOk = 0,
  kExitFailure = 1,   // violations, failed contracts, witness, failed assert
  kExitFrontend = 2,  // unreadable file, parse or resolve error, no main
  kExitUsage = 3,
  kExitRuntime = 4,
};

struct CliContext {
  std::ostream& out;
  std::ostream& err;
  // Relative paths are resolved against this directory; empty means the
  // working directory.
  std::string base_dir;
};

// Runs one invocation. `args` excludes the program name.
//
//   check FILE... [--rules all|r1,..] [--form strict|relaxed]
//                 [--format text|json]
//   run FILE...
//   subst FILE... --suite PATH --factory NAME [--format text|json]
//   diff FILE... --entry-a NAME --entry-b NAME --factory NAME
//                --universe CSV --max-size N
//   iso [--universe CSV] [--max-size N] [--encoding identity|primes]
//   corpus-verify DIR [--update]
int run_cli(const std::vector<std::string>& args, const CliContext& ctx);

}  // namespace minioo

#endif  // MINIOO_CLI_CLI_H_
