// Copyright 2026 The layerrank Authors
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

#ifndef LAYERRANK_ERRORS_HPP_
#define LAYERRANK_ERRORS_HPP_

#include <stdexcept>

namespace layerrank {

// An operation was applied outside its mathematical domain: invalid node id,
// too few nodes for a normalization, rankings over different element sets.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Invalid parameters or configuration. Messages name the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace layerrank

#endif  // LAYERRANK_ERRORS_HPP_
