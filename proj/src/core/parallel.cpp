// Copyright 2026 The apxeq Authors
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

#include "core/parallel.hpp"

namespace apxeq {

std::vector<IndexRange> split_range(std::uint64_t total, int workers) {
  if (workers < 1) workers = 1;
  const auto w = static_cast<std::uint64_t>(workers);
  std::vector<IndexRange> ranges;
  if (total == 0) return ranges;
  ranges.reserve(static_cast<std::size_t>(w));
  for (std::uint64_t i = 0; i < w; ++i) {
    // total/w distributed with the remainder spread over the first ranges;
    // ranges stay contiguous and cover [0,total) exactly once.
    const std::uint64_t begin = i * (total / w) + std::min(i, total % w);
    const std::uint64_t end = (i + 1) * (total / w) + std::min(i + 1, total % w);
    if (begin < end) ranges.push_back({begin, end});
  }
  return ranges;
}

}  // namespace apxeq
