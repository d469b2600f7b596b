// diarmap/include/diarmap/cli.h
//
// Copyright (c) 2026 The diarmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIARMAP_CLI_H_
#define DIARMAP_CLI_H_

#include <iosfwd>

namespace diarmap {

// Entry point of the `diarmap` tool. Results go to `out`, diagnostics to
// `err`. Returns the process exit status.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace diarmap

#endif  // DIARMAP_CLI_H_
