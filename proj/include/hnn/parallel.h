// Copyright 2026 The HNN Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HNN_PARALLEL_H_
#define HNN_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace hnn {

// Runs fn(0) ... fn(count - 1) on at most `threads` workers. Every index runs
// even if another throws; the exception of the lowest failing index is
// rethrown afterwards.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& fn);

// HNN_THREADS when set to a positive integer, else 1.
std::size_t default_thread_count();

}  // namespace hnn

#endif  // HNN_PARALLEL_H_
