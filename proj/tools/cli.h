// Copyright 2026 The infobargain Authors. All rights reserved.
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

#ifndef INFOBARGAIN_TOOLS_CLI_H_
#define INFOBARGAIN_TOOLS_CLI_H_

namespace infobargain::cli {

// Entry point of the command-line tool; returns the process exit status.
int Main(int argc, char** argv);

}  // namespace infobargain::cli

#endif  // INFOBARGAIN_TOOLS_CLI_H_
