// Copyright 2026 The gencube Authors
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

#ifndef _GENCUBE_CLI_H
#define _GENCUBE_CLI_H

#include <iosfwd>

namespace gencube {

/// Exit codes: 0 success, 1 failed verification or invalid input, 2 usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gencube

#endif
