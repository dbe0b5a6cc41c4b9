// Copyright 2026 The NeighborDiv Authors.
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

#ifndef NDIV_PARALLEL_HPP_
#define NDIV_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace ndiv {

// Worker count used when a caller passes 0: the NDIV_THREADS environment
// variable if set to a positive integer, otherwise the hardware concurrency.
std::size_t default_thread_count();

std::size_t resolve_thread_count(std::size_t requested);

// Runs body(begin, end) over contiguous static chunks of [0, count). Chunk
// boundaries depend on the thread count, so bodies must only write per-index
// state for the output to be independent of it.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace ndiv

#endif  // NDIV_PARALLEL_HPP_
