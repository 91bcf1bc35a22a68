// Copyright 2026 The tropd4 Authors.
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

#ifndef TROPD4_ERROR_H_
#define TROPD4_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace tropd4 {

// All library failures are reported as Error. kind() is a stable short tag
// ("ZeroRay", "NotPointed", ...) that tests and the CLI match on.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace tropd4

#endif  // TROPD4_ERROR_H_
