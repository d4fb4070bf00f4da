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

#ifndef ULST_ELEMENT_HPP_
#define ULST_ELEMENT_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ulst/error.hpp"
#include "ulst/rational.hpp"

namespace ulst {

enum class SpaceKind { Coord, Seq, Product };
enum class NormTag { Sup, L1, Euclid };

inline const char* to_string(NormTag t) {
  switch (t) {
    case NormTag::Sup: return "sup";
    case NormTag::L1: return "l1";
    case NormTag::Euclid: return "euclid";
  }
  return "?";
}

struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::Coord;
  int dim = 0;
  std::vector<SpaceDescriptor> blocks;
  NormTag default_norm = NormTag::Sup;

  static SpaceDescriptor coord(int n, NormTag norm = NormTag::Sup) {
    if (n < 1) throw PreconditionError("coordinate space needs dimension >= 1");
    SpaceDescriptor s;
    s.kind = SpaceKind::Coord;
    s.dim = n;
    s.default_norm = norm;
    return s;
  }
  static SpaceDescriptor seq(NormTag norm = NormTag::Sup) {
    SpaceDescriptor s;
    s.kind = SpaceKind::Seq;
    s.default_norm = norm;
    return s;
  }
  static SpaceDescriptor product(std::vector<SpaceDescriptor> parts) {
    if (parts.empty()) throw PreconditionError("product space needs >= 1 block");
    SpaceDescriptor s;
    s.kind = SpaceKind::Product;
    s.blocks = std::move(parts);
    return s;
  }

  // Equality of carriers; the default norm tag is presentation metadata.
  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case SpaceKind::Coord: return a.dim == b.dim;
      case SpaceKind::Seq: return true;
      case SpaceKind::Product: return a.blocks == b.blocks;
    }
    return false;
  }
  friend bool operator!=(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    return !(a == b);
  }

  std::string to_string() const {
    switch (kind) {
      case SpaceKind::Coord: return "rn:" + std::to_string(dim);
      case SpaceKind::Seq: return "seq";
      case SpaceKind::Product: {
        std::string s = "prod(";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          if (i) s += ",";
          s += blocks[i].to_string();
        }
        return s + ")";
      }
    }
    return "?";
  }
};

// Longest explicit prefix we are willing to materialize when a tail
// crossover forces extension.
inline constexpr long long kMaxPrefixLen = 1'000'000;

namespace detail {

struct VecData {
  std::vector<Rational> coords;
  friend bool operator==(const VecData&, const VecData&) = default;
};

// entry_k = prefix[k-1] for k <= prefix.size(), else d + c/k.
struct SeqData {
  std::vector<Rational> prefix;
  Rational d, c;
  friend bool operator==(const SeqData&, const SeqData&) = default;
};

inline Rational seq_tail_at(const SeqData& s, long long k) {
  return s.d + s.c / Rational(k);
}

inline Rational seq_entry(const SeqData& s, long long k) {
  if (k < 1) throw PreconditionError("sequence index must be >= 1");
  if (k <= static_cast<long long>(s.prefix.size()))
    return s.prefix[static_cast<std::size_t>(k - 1)];
  return seq_tail_at(s, k);
}

inline void seq_canonicalize(SeqData& s) {
  while (!s.prefix.empty()) {
    long long m = static_cast<long long>(s.prefix.size());
    if (s.prefix.back() == seq_tail_at(s, m))
      s.prefix.pop_back();
    else
      break;
  }
}

inline void seq_extend_prefix(SeqData& s, long long m) {
  if (m > kMaxPrefixLen)
    throw ResourceLimitError("tail crossover at index " + std::to_string(m) +
                             " exceeds the materialization limit");
  for (long long k = static_cast<long long>(s.prefix.size()) + 1; k <= m; ++k)
    s.prefix.push_back(seq_tail_at(s, k));
}

// Clamp a rational crossover bound to a usable prefix length.
inline long long crossover_index(const Rational& kstar) {
  if (kstar.sign() <= 0) return 0;
  BigInt f = kstar.floor_int();
  if (f > kMaxPrefixLen)
    throw ResourceLimitError("tail crossover at index " + kstar.to_string() +
                             " exceeds the materialization limit");
  return f.convert_to<long long>();
}

// Index beyond which sign((a.d - b.d) + (a.c - b.c)/k) is constant.
inline long long seq_cmp_settle_index(const SeqData& a, const SeqData& b) {
  if (a.d == b.d) return 0;
  return crossover_index((b.c - a.c) / (a.d - b.d));
}

// -1/0/1: eventual ordering of the two tails (d first, then c).
inline int seq_tail_cmp(const SeqData& a, const SeqData& b) {
  int byd = cmp(a.d, b.d);
  if (byd != 0) return byd;
  return cmp(a.c, b.c);
}

struct ProdData;

}  // namespace detail

class Element;

namespace detail {
struct ProdData {
  std::vector<Element> blocks;
  friend bool operator==(const ProdData&, const ProdData&);
};
}  // namespace detail

// A point of a concrete Riesz space: a coordinate vector, a sequence with an
// affine-harmonic tail (entry_k = d + c/k beyond the prefix), or a finite
// product of such points. Immutable after construction; sequences are kept in
// canonical form so equality is structural.
class Element {
 public:
  static Element vec(std::vector<Rational> coords) {
    if (coords.empty()) throw PreconditionError("vector element needs dimension >= 1");
    detail::VecData v;
    v.coords = std::move(coords);
    return Element(std::move(v));
  }
  static Element seq(std::vector<Rational> prefix, Rational d, Rational c) {
    detail::SeqData s;
    s.prefix = std::move(prefix);
    s.d = std::move(d);
    s.c = std::move(c);
    detail::seq_canonicalize(s);
    return Element(std::move(s));
  }
  static Element product(std::vector<Element> blocks) {
    if (blocks.empty()) throw PreconditionError("product element needs >= 1 block");
    detail::ProdData p;
    p.blocks = std::move(blocks);
    return Element(std::move(p));
  }
  static Element zero(const SpaceDescriptor& space) {
    switch (space.kind) {
      case SpaceKind::Coord:
        return vec(std::vector<Rational>(static_cast<std::size_t>(space.dim)));
      case SpaceKind::Seq:
        return seq({}, 0, 0);
      case SpaceKind::Product: {
        std::vector<Element> bs;
        bs.reserve(space.blocks.size());
        for (const auto& b : space.blocks) bs.push_back(zero(b));
        return product(std::move(bs));
      }
    }
    throw Error("unreachable");
  }
  // k-th standard unit vector of the sequence space.
  static Element unit_seq(long long k) {
    std::vector<Rational> p(static_cast<std::size_t>(k));
    p[static_cast<std::size_t>(k - 1)] = 1;
    return seq(std::move(p), 0, 0);
  }
  static Element unit_coord(int dim, int k) {
    std::vector<Rational> c(static_cast<std::size_t>(dim));
    c[static_cast<std::size_t>(k - 1)] = 1;
    return vec(std::move(c));
  }
  // e = (1/n).
  static Element harmonic() { return seq({}, 0, 1); }
  static Element constant_seq(Rational v) { return seq({}, std::move(v), 0); }

  bool is_vec() const { return std::holds_alternative<detail::VecData>(v_); }
  bool is_seq() const { return std::holds_alternative<detail::SeqData>(v_); }
  bool is_product() const { return std::holds_alternative<detail::ProdData>(v_); }

  const std::vector<Rational>& coords() const { return vecdata().coords; }
  const std::vector<Rational>& prefix() const { return seqdata().prefix; }
  const Rational& tail_d() const { return seqdata().d; }
  const Rational& tail_c() const { return seqdata().c; }
  const std::vector<Element>& blocks() const { return proddata().blocks; }

  SpaceDescriptor space() const {
    if (is_vec()) return SpaceDescriptor::coord(static_cast<int>(coords().size()));
    if (is_seq()) return SpaceDescriptor::seq();
    std::vector<SpaceDescriptor> bs;
    for (const auto& b : blocks()) bs.push_back(b.space());
    return SpaceDescriptor::product(std::move(bs));
  }

  Rational entry(long long k) const {
    if (is_vec()) {
      if (k < 1 || k > static_cast<long long>(coords().size()))
        throw PreconditionError("coordinate index out of range");
      return coords()[static_cast<std::size_t>(k - 1)];
    }
    if (is_seq()) return detail::seq_entry(seqdata(), k);
    throw PreconditionError("entry() is not defined on product elements");
  }

  friend bool operator==(const Element& a, const Element& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string to_string() const {
    if (is_vec()) {
      std::string s = "[";
      for (std::size_t i = 0; i < coords().size(); ++i) {
        if (i) s += ", ";
        s += coords()[i].to_string();
      }
      return s + "]";
    }
    if (is_seq()) {
      std::string s = "{prefix=[";
      for (std::size_t i = 0; i < prefix().size(); ++i) {
        if (i) s += ", ";
        s += prefix()[i].to_string();
      }
      s += "], d=" + tail_d().to_string() + ", c=" + tail_c().to_string() + "}";
      return s;
    }
    std::string s = "prod(";
    for (std::size_t i = 0; i < blocks().size(); ++i) {
      if (i) s += ", ";
      s += blocks()[i].to_string();
    }
    return s + ")";
  }

  const detail::VecData& vecdata() const {
    if (!is_vec()) throw SpaceMismatchError("expected a coordinate element");
    return std::get<detail::VecData>(v_);
  }
  const detail::SeqData& seqdata() const {
    if (!is_seq()) throw SpaceMismatchError("expected a sequence element");
    return std::get<detail::SeqData>(v_);
  }
  const detail::ProdData& proddata() const {
    if (!is_product()) throw SpaceMismatchError("expected a product element");
    return std::get<detail::ProdData>(v_);
  }

 private:
  explicit Element(detail::VecData v) : v_(std::move(v)) {}
  explicit Element(detail::SeqData v) : v_(std::move(v)) {}
  explicit Element(detail::ProdData v) : v_(std::move(v)) {}

  std::variant<detail::VecData, detail::SeqData, detail::ProdData> v_;
};

namespace detail {
inline bool operator==(const ProdData& a, const ProdData& b) {
  return a.blocks == b.blocks;
}
}  // namespace detail

namespace detail {

inline void require_same_space(const Element& a, const Element& b) {
  if (a.space() != b.space())
    throw SpaceMismatchError("elements live in different spaces: " +
                             a.space().to_string() + " vs " + b.space().to_string());
}

template <typename ScalarOp>
Element zip_vec(const Element& a, const Element& b, ScalarOp op) {
  std::vector<Rational> out;
  out.reserve(a.coords().size());
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    out.push_back(op(a.coords()[i], b.coords()[i]));
  return Element::vec(std::move(out));
}

}  // namespace detail

inline Element add(const Element& a, const Element& b);
inline Element meet(const Element& a, const Element& b);
inline Element join(const Element& a, const Element& b);

inline Element scale(const Rational& t, const Element& x) {
  if (x.is_vec()) {
    std::vector<Rational> out;
    out.reserve(x.coords().size());
    for (const auto& c : x.coords()) out.push_back(t * c);
    return Element::vec(std::move(out));
  }
  if (x.is_seq()) {
    std::vector<Rational> p;
    p.reserve(x.prefix().size());
    for (const auto& c : x.prefix()) p.push_back(t * c);
    return Element::seq(std::move(p), t * x.tail_d(), t * x.tail_c());
  }
  std::vector<Element> bs;
  bs.reserve(x.blocks().size());
  for (const auto& blk : x.blocks()) bs.push_back(scale(t, blk));
  return Element::product(std::move(bs));
}

inline Element neg(const Element& x) { return scale(Rational(-1), x); }

inline Element add(const Element& a, const Element& b) {
  detail::require_same_space(a, b);
  if (a.is_vec())
    return detail::zip_vec(a, b, [](const Rational& x, const Rational& y) { return x + y; });
  if (a.is_seq()) {
    const auto& sa = a.seqdata();
    const auto& sb = b.seqdata();
    detail::SeqData x = sa, y = sb;
    long long m = static_cast<long long>(std::max(x.prefix.size(), y.prefix.size()));
    detail::seq_extend_prefix(x, m);
    detail::seq_extend_prefix(y, m);
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k)
      p.push_back(x.prefix[static_cast<std::size_t>(k)] + y.prefix[static_cast<std::size_t>(k)]);
    return Element::seq(std::move(p), x.d + y.d, x.c + y.c);
  }
  std::vector<Element> bs;
  bs.reserve(a.blocks().size());
  for (std::size_t i = 0; i < a.blocks().size(); ++i)
    bs.push_back(add(a.blocks()[i], b.blocks()[i]));
  return Element::product(std::move(bs));
}

inline Element sub(const Element& a, const Element& b) { return add(a, neg(b)); }

namespace detail {

inline Element seq_minmax(const Element& a, const Element& b, bool take_min) {
  const auto& sa = a.seqdata();
  const auto& sb = b.seqdata();
  long long settle = seq_cmp_settle_index(sa, sb);
  long long m = std::max<long long>(
      {static_cast<long long>(sa.prefix.size()), static_cast<long long>(sb.prefix.size()),
       settle});
  SeqData x = sa, y = sb;
  seq_extend_prefix(x, m);
  seq_extend_prefix(y, m);
  std::vector<Rational> p;
  p.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    const Rational& u = x.prefix[static_cast<std::size_t>(k)];
    const Rational& v = y.prefix[static_cast<std::size_t>(k)];
    p.push_back(take_min ? min(u, v) : max(u, v));
  }
  int tc = seq_tail_cmp(sa, sb);
  const SeqData& pick = (take_min ? tc <= 0 : tc >= 0) ? sa : sb;
  return Element::seq(std::move(p), pick.d, pick.c);
}

}  // namespace detail

inline Element meet(const Element& a, const Element& b) {
  detail::require_same_space(a, b);
  if (a.is_vec())
    return detail::zip_vec(a, b,
                           [](const Rational& x, const Rational& y) { return min(x, y); });
  if (a.is_seq()) return detail::seq_minmax(a, b, /*take_min=*/true);
  std::vector<Element> bs;
  bs.reserve(a.blocks().size());
  for (std::size_t i = 0; i < a.blocks().size(); ++i)
    bs.push_back(meet(a.blocks()[i], b.blocks()[i]));
  return Element::product(std::move(bs));
}

inline Element join(const Element& a, const Element& b) {
  detail::require_same_space(a, b);
  if (a.is_vec())
    return detail::zip_vec(a, b,
                           [](const Rational& x, const Rational& y) { return max(x, y); });
  if (a.is_seq()) return detail::seq_minmax(a, b, /*take_min=*/false);
  std::vector<Element> bs;
  bs.reserve(a.blocks().size());
  for (std::size_t i = 0; i < a.blocks().size(); ++i)
    bs.push_back(join(a.blocks()[i], b.blocks()[i]));
  return Element::product(std::move(bs));
}

inline Element abs(const Element& x) {
  if (x.is_vec()) {
    std::vector<Rational> out;
    out.reserve(x.coords().size());
    for (const auto& c : x.coords()) out.push_back(abs(c));
    return Element::vec(std::move(out));
  }
  if (x.is_seq()) {
    const auto& s = x.seqdata();
    detail::SeqData t = s;
    // the tail changes sign at most once, at -c/d
    if (s.d.sign() != 0 && s.c.sign() != 0 && s.d.sign() != s.c.sign()) {
      long long root = detail::crossover_index(-s.c / s.d);
      detail::seq_extend_prefix(t, std::max<long long>(root, static_cast<long long>(t.prefix.size())));
    }
    for (auto& v : t.prefix) v = abs(v);
    int s_tail = s.d.sign() != 0 ? s.d.sign() : s.c.sign();
    if (s_tail < 0) {
      t.d = -t.d;
      t.c = -t.c;
    }
    return Element::seq(std::move(t.prefix), std::move(t.d), std::move(t.c));
  }
  std::vector<Element> bs;
  bs.reserve(x.blocks().size());
  for (const auto& blk : x.blocks()) bs.push_back(abs(blk));
  return Element::product(std::move(bs));
}

// Pointwise x <= y at every index.
inline bool leq(const Element& a, const Element& b) {
  detail::require_same_space(a, b);
  if (a.is_vec()) {
    for (std::size_t i = 0; i < a.coords().size(); ++i)
      if (a.coords()[i] > b.coords()[i]) return false;
    return true;
  }
  if (a.is_seq()) {
    const auto& sa = a.seqdata();
    const auto& sb = b.seqdata();
    long long settle = detail::seq_cmp_settle_index(sa, sb);
    long long m = std::max<long long>({static_cast<long long>(sa.prefix.size()),
                                       static_cast<long long>(sb.prefix.size()), settle});
    for (long long k = 1; k <= m; ++k)
      if (detail::seq_entry(sa, k) > detail::seq_entry(sb, k)) return false;
    return detail::seq_tail_cmp(sa, sb) <= 0;
  }
  for (std::size_t i = 0; i < a.blocks().size(); ++i)
    if (!leq(a.blocks()[i], b.blocks()[i])) return false;
  return true;
}

inline bool is_zero(const Element& x) { return x == Element::zero(x.space()); }
inline bool is_positive(const Element& x) { return leq(Element::zero(x.space()), x); }

// Every entry strictly positive.
inline bool is_strictly_positive(const Element& x) {
  if (x.is_vec()) {
    for (const auto& c : x.coords())
      if (c.sign() <= 0) return false;
    return true;
  }
  if (x.is_seq()) {
    for (const auto& c : x.prefix())
      if (c.sign() <= 0) return false;
    const auto& s = x.seqdata();
    int ds = s.d.sign();
    if (ds < 0) return false;
    if (ds == 0) return s.c.sign() > 0;
    long long m1 = static_cast<long long>(s.prefix.size()) + 1;
    return detail::seq_tail_at(s, m1).sign() > 0;
  }
  for (const auto& b : x.blocks())
    if (!is_strictly_positive(b)) return false;
  return true;
}

// Null-sequence part: tail limit zero (vectors and their products qualify).
inline bool is_c0(const Element& x) {
  if (x.is_vec()) return true;
  if (x.is_seq()) return x.tail_d().is_zero();
  for (const auto& b : x.blocks())
    if (!is_c0(b)) return false;
  return true;
}

inline bool is_finitely_supported(const Element& x) {
  if (x.is_vec()) return true;
  if (x.is_seq()) return x.tail_d().is_zero() && x.tail_c().is_zero();
  for (const auto& b : x.blocks())
    if (!is_finitely_supported(b)) return false;
  return true;
}

inline Rational sup_norm(const Element& x) {
  if (x.is_vec()) {
    Rational m = 0;
    for (const auto& c : x.coords()) m = max(m, abs(c));
    return m;
  }
  if (x.is_seq()) {
    const auto& s = x.seqdata();
    Rational m = 0;
    for (const auto& c : s.prefix) m = max(m, abs(c));
    long long m1 = static_cast<long long>(s.prefix.size()) + 1;
    // |d + c/k| over k > m is monotone toward |d|, so the extremes are at
    // the first tail index and the limit
    m = max(m, abs(detail::seq_tail_at(s, m1)));
    m = max(m, abs(s.d));
    return m;
  }
  Rational m = 0;
  for (const auto& b : x.blocks()) m = max(m, sup_norm(b));
  return m;
}

inline Rational l1_norm(const Element& x) {
  if (x.is_vec()) {
    Rational s = 0;
    for (const auto& c : x.coords()) s += abs(c);
    return s;
  }
  if (x.is_seq()) {
    const auto& s = x.seqdata();
    if (s.d.sign() != 0 || s.c.sign() != 0)
      throw NormUndefinedError("l1 norm undefined on this element (nonzero tail)");
    Rational sum = 0;
    for (const auto& c : s.prefix) sum += abs(c);
    return sum;
  }
  Rational s = 0;
  for (const auto& b : x.blocks()) s += l1_norm(b);
  return s;
}

inline bool is_l1_evaluable(const Element& x) {
  if (x.is_vec()) return true;
  if (x.is_seq()) return x.tail_d().is_zero() && x.tail_c().is_zero();
  for (const auto& b : x.blocks())
    if (!is_l1_evaluable(b)) return false;
  return true;
}

// Entries of w kept where u is nonzero, zeroed elsewhere. Used for exact
// scaling bounds: meet(t*w, u) <= t * mask_by_support(w, u) for t >= 0.
inline Element mask_by_support(const Element& w, const Element& u) {
  detail::require_same_space(w, u);
  if (w.is_vec()) {
    std::vector<Rational> out;
    out.reserve(w.coords().size());
    for (std::size_t i = 0; i < w.coords().size(); ++i)
      out.push_back(u.coords()[i].is_zero() ? Rational(0) : w.coords()[i]);
    return Element::vec(std::move(out));
  }
  if (w.is_seq()) {
    const auto& sw = w.seqdata();
    const auto& su = u.seqdata();
    detail::SeqData tw = sw, tu = su;
    long long m = static_cast<long long>(std::max(tw.prefix.size(), tu.prefix.size()));
    // the tail of u has at most one zero entry, at -c/d
    if (su.d.sign() != 0 && su.c.sign() != 0 && su.d.sign() != su.c.sign())
      m = std::max(m, detail::crossover_index(-su.c / su.d));
    detail::seq_extend_prefix(tw, m);
    detail::seq_extend_prefix(tu, m);
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k)
      p.push_back(tu.prefix[static_cast<std::size_t>(k)].is_zero()
                      ? Rational(0)
                      : tw.prefix[static_cast<std::size_t>(k)]);
    bool tail_of_u_vanishes = su.d.is_zero() && su.c.is_zero();
    if (tail_of_u_vanishes) return Element::seq(std::move(p), 0, 0);
    return Element::seq(std::move(p), tw.d, tw.c);
  }
  std::vector<Element> bs;
  bs.reserve(w.blocks().size());
  for (std::size_t i = 0; i < w.blocks().size(); ++i)
    bs.push_back(mask_by_support(w.blocks()[i], u.blocks()[i]));
  return Element::product(std::move(bs));
}

}  // namespace ulst

#endif  // ULST_ELEMENT_HPP_
