//  Copyright 2026 The ulst Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Test-only oracles. These re-derive results from pointwise scalar
// arithmetic, independent of the library's closed-form tail algebra.

#ifndef ULST_TESTS_ORACLE_HPP_
#define ULST_TESTS_ORACLE_HPP_

#include <algorithm>
#include <vector>

#include "ulst/element.hpp"
#include "ulst/rational.hpp"

namespace ulst_test {

// Indices probed by the pointwise oracles: a dense head plus far tail
// samples (entry() evaluates the tail formula directly, no materialization).
inline std::vector<long long> oracle_indices(long long dense_to = 64) {
  std::vector<long long> ks;
  for (long long k = 1; k <= dense_to; ++k) ks.push_back(k);
  ks.push_back(1000);
  ks.push_back(1'000'003);
  ks.push_back(1'000'000'007LL);
  return ks;
}

// sup over all indices of |x_k|, derived purely from pointwise samples at
// the head plus the tail-limit bound; valid once dense_to exceeds the
// prefix length.
inline ulst::Rational oracle_sup_norm_seq(const ulst::Element& x, long long dense_to) {
  ulst::Rational m = 0;
  long long upto = std::max<long long>(dense_to, static_cast<long long>(x.prefix().size()) + 1);
  for (long long k = 1; k <= upto; ++k) m = ulst::max(m, ulst::abs(x.entry(k)));
  return ulst::max(m, ulst::abs(x.tail_d()));
}

}  // namespace ulst_test

#endif  // ULST_TESTS_ORACLE_HPP_
