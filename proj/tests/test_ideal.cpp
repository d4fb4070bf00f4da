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

#include "ulst/ideal.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using ulst::Element;
using ulst::Rational;
using ulst_test::Rng;

namespace {

Element V(std::vector<long long> xs) {
  std::vector<Rational> c;
  for (auto v : xs) c.emplace_back(v);
  return Element::vec(std::move(c));
}

}  // namespace

TEST_CASE("coordinate ideal membership") {
  auto cert = ulst::ideal_member(V({0, 3, 0}), {V({0, 1, 0}), V({1, 1, 0})});
  REQUIRE(cert.member);
  CHECK(cert.bound == Rational(3, 2));
  CHECK(cert.verify(V({0, 3, 0})));

  auto refused = ulst::ideal_member(V({1, 0}), {V({0, 1})});
  REQUIRE_FALSE(refused.member);
  CHECK(refused.witness_index == 1);
  CHECK(refused.reason == "support");
}

TEST_CASE("sequence tail ratios") {
  Element e = Element::harmonic();
  auto cert = ulst::ideal_member(ulst::scale(2, e), {e});
  REQUIRE(cert.member);
  CHECK(cert.bound == Rational(2));

  // a constant sequence is not dominated by any multiple of e
  auto refused = ulst::ideal_member(Element::constant_seq(1), {e});
  REQUIRE_FALSE(refused.member);
  CHECK(refused.reason == "tail growth");
  // the witness concretely defeats the candidate bound
  Element s = refused.generator_sum;
  CHECK(Element::constant_seq(1).entry(refused.witness_index) >
        refused.candidate_bound * s.entry(refused.witness_index));

  // any element is dominated by a strictly positive constant tail
  auto ok = ulst::ideal_member(e, {Element::constant_seq(Rational(1, 3))});
  REQUIRE(ok.member);
  CHECK(ok.verify(e));

  // finitely supported generators only reach finitely supported elements
  auto fs = ulst::ideal_member(e, {Element::seq({1, 1, 1}, 0, 0)});
  CHECK_FALSE(fs.member);
  CHECK(fs.reason == "support");
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(ulst::ideal_member(V({1}), {}), ulst::PreconditionError);
  CHECK_THROWS_AS(ulst::ideal_member(V({1, 1}), {V({1, -1})}), ulst::PreconditionError);
  CHECK_THROWS_AS(ulst::is_strong_unit(V({1, -1})), ulst::PreconditionError);
}

TEST_CASE("unit predicates") {
  CHECK(ulst::is_strong_unit(V({1, 1, 1})));
  CHECK_FALSE(ulst::is_strong_unit(V({1, 0, 1})));
  Element e = Element::harmonic();
  CHECK_FALSE(ulst::is_strong_unit(e));
  CHECK(ulst::is_quasi_interior(e));
  CHECK_FALSE(ulst::is_quasi_interior(Element::seq({0}, 0, 1)));
  CHECK(ulst::is_strong_unit(Element::constant_seq(2)));
  CHECK(ulst::is_strong_unit(Element::seq({}, 1, Rational(-1, 2))));
}

TEST_CASE("certificate soundness on random inputs") {
  Rng rng(21);
  auto spaces = {ulst::SpaceDescriptor::coord(4), ulst::SpaceDescriptor::seq()};
  for (const auto& space : spaces) {
    for (int i = 0; i < 250; ++i) {
      Element b = ulst_test::random_element(rng, space);
      std::vector<Element> gens;
      long long n = rng.in(1, 3);
      for (long long j = 0; j < n; ++j) gens.push_back(ulst_test::random_positive(rng, space));
      auto cert = ulst::ideal_member(b, gens);
      if (cert.member) {
        CHECK(cert.verify(b));
      } else {
        // the witness index defeats the candidate bound exactly
        Rational lhs = ulst::abs(b).entry(cert.witness_index);
        Rational rhs = cert.candidate_bound * cert.generator_sum.entry(cert.witness_index);
        CHECK(lhs > rhs);
      }
      // members constructed from generators always certify
      Element combo = ulst::scale(Rational(rng.in(0, 5), rng.in(1, 3)), gens[0]);
      auto c2 = ulst::ideal_member(combo, gens);
      CHECK(c2.member);
      CHECK(c2.verify(combo));
    }
  }
}
