// Copyright 2026 The largesieve Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace largesieve {

// 0 means one worker per hardware thread.
std::size_t resolve_threads(std::size_t requested);

// Calls body(i) for every i < count on up to `threads` workers. Indices are
// handed out dynamically, so body must write only to slot i of
// preallocated storage; callers reduce afterwards in index order. The first
// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace largesieve
