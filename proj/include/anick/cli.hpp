/*
 * Copyright 2026 The Anick Authors
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

#ifndef ANICK_CLI_HPP
#define ANICK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "anick/resolution.hpp"

namespace anick::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1,
    kCounterexample = 2,
    kBoundExceeded = 3,
    kInputError = 4,
};

/// Runs one command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 16 hex digits of FNV-1a over the canonical presentation JSON.
std::string presentation_digest(const Presentation& pres);

/// JSON shape of a module element:
/// {"degree": n, "terms": [{"chain": "xxx", "tail": "yx", "coefficient": "1"}, ...]}
/// with terms largest first.
nlohmann::json to_json(const ModuleElement& m, const Presentation& pres);
ModuleElement module_element_from_json(const nlohmann::json& j, const Presentation& pres);

} // namespace anick::cli

#endif // ANICK_CLI_HPP
