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

#ifndef ULST_IDEAL_HPP_
#define ULST_IDEAL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "ulst/element.hpp"
#include "ulst/error.hpp"
#include "ulst/rational.hpp"

namespace ulst {

// Decision for |b| <= K * (a_1 + ... + a_q): either the least such K, or a
// concrete index where domination fails for the best candidate K.
struct IdealCertificate {
  bool member = false;
  Rational bound;                 // K, when member
  Element generator_sum;          // a_1 + ... + a_q
  std::vector<Element> generators;
  long long witness_index = 0;    // when refused
  std::string reason;             // "support" or "tail growth"
  Rational candidate_bound;       // the K the witness defeats, when refused

  // Exact re-check of the certified inequality.
  bool verify(const Element& b) const {
    if (!member) return false;
    return leq(abs(b), scale(bound, generator_sum));
  }
};

namespace detail {

// First index m such that every tail entry at k > m is strictly positive,
// assuming the tail is eventually nonnegative. Tails cross zero at most once.
inline long long tail_positive_from(const SeqData& s) {
  long long m = static_cast<long long>(s.prefix.size());
  if (s.d.is_zero() && s.c.is_zero()) return m;
  if (!s.d.is_zero() && !s.c.is_zero() && s.d.sign() != s.c.sign())
    m = std::max(m, crossover_index(-s.c / s.d));
  return m;
}

}  // namespace detail

inline IdealCertificate ideal_member(const Element& b, const std::vector<Element>& gens) {
  if (gens.empty()) throw PreconditionError("ideal_member needs >= 1 generator");
  for (const auto& g : gens) {
    if (g.space() != b.space())
      throw SpaceMismatchError("generator lives in a different space");
    if (!is_positive(g)) throw PreconditionError("non-positive generator");
  }
  IdealCertificate cert;
  cert.generators = gens;
  Element s = gens[0];
  for (std::size_t i = 1; i < gens.size(); ++i) s = add(s, gens[i]);
  cert.generator_sum = s;
  Element B = abs(b);

  if (b.is_vec()) {
    Rational K = 0;
    for (long long i = 1; i <= static_cast<long long>(B.coords().size()); ++i) {
      Rational si = s.entry(i), bi = B.entry(i);
      if (si.is_zero()) {
        if (!bi.is_zero()) {
          cert.member = false;
          cert.witness_index = i;
          cert.reason = "support";
          cert.candidate_bound = K;
          return cert;
        }
      } else {
        K = max(K, bi / si);
      }
    }
    cert.member = true;
    cert.bound = K;
    return cert;
  }
  if (!b.is_seq())
    throw PreconditionError("ideal_member supports coordinate and sequence spaces");

  const auto& sB = B.seqdata();
  const auto& sS = s.seqdata();
  long long m = std::max(detail::tail_positive_from(sB), detail::tail_positive_from(sS));
  Rational K = 0;
  for (long long k = 1; k <= m; ++k) {
    Rational sk = s.entry(k), bk = B.entry(k);
    if (sk.is_zero()) {
      if (!bk.is_zero()) {
        cert.member = false;
        cert.witness_index = k;
        cert.reason = "support";
        cert.candidate_bound = K;
        return cert;
      }
    } else {
      K = max(K, bk / sk);
    }
  }
  const Rational &dB = sB.d, &cB = sB.c, &dS = sS.d, &cS = sS.c;
  bool b_tail_zero = dB.is_zero() && cB.is_zero();
  bool s_tail_zero = dS.is_zero() && cS.is_zero();
  if (s_tail_zero) {
    if (!b_tail_zero) {
      cert.member = false;
      cert.witness_index = m + 1;  // beyond m the b-tail is strictly positive
      cert.reason = "support";
      cert.candidate_bound = K;
      return cert;
    }
    cert.member = true;
    cert.bound = K;
    return cert;
  }
  if (dS.is_zero()) {
    // s_k = cS/k -> 0; a bounded-away b tail outgrows every multiple
    if (!dB.is_zero()) {
      // find k with (dB*k + cB) > K*cS, i.e. the candidate bound fails
      Rational kr = (K * cS - cB) / dB;
      long long w = m + 1;
      if (kr.sign() > 0) {
        BigInt f = kr.floor_int() + 1;
        if (f > m) w = (f > (1LL << 62)) ? (1LL << 62) : f.convert_to<long long>();
      }
      cert.member = false;
      cert.witness_index = w;
      cert.reason = "tail growth";
      cert.candidate_bound = K;
      return cert;
    }
    K = max(K, cB / cS);
    cert.member = true;
    cert.bound = K;
    return cert;
  }
  // dS > 0: the tail ratio (dB*k + cB)/(dS*k + cS) is monotone in k, so its
  // supremum over k > m is attained at k = m+1 or in the limit dB/dS
  K = max(K, detail::seq_tail_at(sB, m + 1) / detail::seq_tail_at(sS, m + 1));
  K = max(K, dB / dS);
  cert.member = true;
  cert.bound = K;
  return cert;
}

inline bool is_strong_unit(const Element& u) {
  if (!is_positive(u)) throw PreconditionError("unit test needs a positive element");
  if (u.is_vec()) return is_strictly_positive(u);
  if (u.is_seq()) return u.tail_d().sign() > 0 && is_strictly_positive(u);
  for (const auto& blk : u.blocks())
    if (!is_strong_unit(blk)) return false;
  return true;
}

// Relative to the null-sequence part of the carrier for sequences.
inline bool is_quasi_interior(const Element& u) {
  if (!is_positive(u)) throw PreconditionError("unit test needs a positive element");
  return is_strictly_positive(u);
}

}  // namespace ulst

#endif  // ULST_IDEAL_HPP_
