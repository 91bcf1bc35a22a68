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

// Data-parallel loops over independent items. Results are written by index,
// so output order never depends on scheduling.

#ifndef TROPD4_PARALLEL_H_
#define TROPD4_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace tropd4 {

// TROPD4_THREADS if set and positive, else the hardware concurrency.
int ThreadCount();

// Calls fn(i) for i in [0, n) on up to ThreadCount() threads. The first
// exception thrown (lowest index) is rethrown after all workers finish.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tropd4

#endif  // TROPD4_PARALLEL_H_
