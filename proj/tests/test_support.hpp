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

#ifndef ULST_TESTS_TEST_SUPPORT_HPP_
#define ULST_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ulst/element.hpp"
#include "ulst/rational.hpp"

namespace ulst_test {

// Raw-engine draws only, so sequences are identical across platforms.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long long in(long long lo, long long hi) {
    return lo + static_cast<long long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return in(0, 99) < percent; }
};

inline ulst::Rational random_rational(Rng& rng, long long mag = 20) {
  return ulst::Rational(rng.in(-mag, mag), rng.in(1, 10));
}

inline ulst::Element random_vec(Rng& rng, int dim) {
  std::vector<ulst::Rational> c;
  c.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) c.push_back(random_rational(rng));
  return ulst::Element::vec(std::move(c));
}

inline ulst::Element random_seq(Rng& rng) {
  std::vector<ulst::Rational> p;
  long long len = rng.in(0, 4);
  for (long long i = 0; i < len; ++i) p.push_back(random_rational(rng));
  ulst::Rational d = rng.chance(50) ? ulst::Rational(0) : random_rational(rng, 6);
  ulst::Rational c = rng.chance(25) ? ulst::Rational(0) : random_rational(rng, 6);
  return ulst::Element::seq(std::move(p), std::move(d), std::move(c));
}

inline ulst::Element random_element(Rng& rng, const ulst::SpaceDescriptor& space) {
  using ulst::SpaceKind;
  switch (space.kind) {
    case SpaceKind::Coord: return random_vec(rng, space.dim);
    case SpaceKind::Seq: return random_seq(rng);
    case SpaceKind::Product: {
      std::vector<ulst::Element> bs;
      for (const auto& b : space.blocks) bs.push_back(random_element(rng, b));
      return ulst::Element::product(std::move(bs));
    }
  }
  throw ulst::Error("unreachable");
}

inline ulst::Element random_positive(Rng& rng, const ulst::SpaceDescriptor& space) {
  return ulst::abs(random_element(rng, space));
}

// Zero-tail sequence or plain vector: valid functional coefficients.
inline ulst::Element random_functional(Rng& rng, const ulst::SpaceDescriptor& space) {
  if (space.kind == ulst::SpaceKind::Seq) {
    std::vector<ulst::Rational> p;
    long long len = rng.in(1, 5);
    for (long long i = 0; i < len; ++i) p.push_back(random_rational(rng, 8));
    return ulst::Element::seq(std::move(p), 0, 0);
  }
  return random_element(rng, space);
}

}  // namespace ulst_test

#endif  // ULST_TESTS_TEST_SUPPORT_HPP_
