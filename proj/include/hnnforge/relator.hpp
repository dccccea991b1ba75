#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hnnforge/gword.hpp"

// Relator words r = b t^{u1} a t^{-u2} b t^{u3} ... a t^{-ul} over the
// Baumslag group, together with the three admissibility conditions:
//   (1) l even, u_i pairwise distinct, u_i >= 2
//   (2) alternating sum u1 - u2 + u3 - ... - ul = 1
//   (3) 6 * max cyclic 3-window of u < sum u  (exact integers, strict)

namespace hnnforge {

using USequence = std::vector<long long>;

struct ConditionReport {
  bool l_even = false;
  bool distinct = false;
  bool min_ok = false;
  long long alt_sum = 0;
  long long total = 0;
  long long max_window3 = 0;
  bool sixth_ok = false;
  bool valid = false;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

// All fields are computed and reported even when some checks fail, so a
// caller can explain every reason a candidate was rejected.
inline ConditionReport validate(const USequence& u) {
  if (u.empty()) throw EmptySequenceError("empty exponent sequence");
  ConditionReport rep;
  const std::size_t l = u.size();
  rep.l_even = l % 2 == 0 && l >= 2;
  rep.distinct = std::set<long long>(u.begin(), u.end()).size() == l;
  rep.min_ok = std::all_of(u.begin(), u.end(), [](long long v) { return v >= 2; });
  for (std::size_t i = 0; i < l; ++i) {
    rep.alt_sum += i % 2 == 0 ? u[i] : -u[i];
    rep.total += u[i];
  }
  for (std::size_t i = 0; i < l; ++i) {
    long long window = u[i] + u[(i + 1) % l] + u[(i + 2) % l];
    rep.max_window3 = std::max(rep.max_window3, window);
  }
  rep.sixth_ok = 6 * rep.max_window3 < rep.total;
  rep.valid = rep.l_even && rep.distinct && rep.min_ok && rep.alt_sum == 1 && rep.sixth_ok;
  return rep;
}

class RelatorSpec {
 public:
  // validated constructor: rejects sequences failing conditions (1)-(3)
  static RelatorSpec validated(USequence u) {
    ConditionReport rep = validate(u);
    if (!rep.valid) throw Error("exponent sequence fails conditions (1)-(3)");
    return RelatorSpec(std::move(u));
  }

  // candidate under inspection; condition checks are the caller's business
  static RelatorSpec unchecked(USequence u) { return RelatorSpec(std::move(u)); }

  const USequence& u() const { return u_; }
  std::size_t l() const { return u_.size(); }

  long long total_t_length() const {
    long long s = 0;
    for (long long v : u_) s += v;
    return s;
  }

 private:
  explicit RelatorSpec(USequence u) : u_(std::move(u)) {}
  USequence u_;
};

// The paper's example: l = 20, u_{2i-1} = 100+2i-1 (i = 1..9), u_19 = 130,
// u_{2i} = 100+2i (i = 1..10).
inline RelatorSpec default_spec() {
  USequence u(20);
  for (int i = 1; i <= 9; ++i) u[2 * i - 2] = 100 + 2 * i - 1;
  u[18] = 130;
  for (int i = 1; i <= 10; ++i) u[2 * i - 1] = 100 + 2 * i;
  return RelatorSpec::validated(std::move(u));
}

// prod_j b t^{u_{2j-1}} a t^{-u_{2j}}; cyclically reduced by construction.
inline GWord build_relator(const RelatorSpec& spec) {
  GWord w = GWord::identity();
  const USequence& u = spec.u();
  for (std::size_t j = 0; j + 1 < u.size(); j += 2) {
    w.append_h(HElement::b());
    for (long long i = 0; i < u[j]; ++i) w.append_t(+1);
    w.append_h(HElement::a());
    for (long long i = 0; i < u[j + 1]; ++i) w.append_t(-1);
  }
  w.mark_reduced(true);  // no pinch can occur: blocks alternate sign around a, b
  return w;
}

// t-block structure: one (signed magnitude, preceding H-letter) pair per block.
struct Block {
  long long mag;   // nonzero
  HLetter letter;  // H-letter in front of the t-run

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockSeq {
  std::vector<Block> blocks;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const BlockSeq&, const BlockSeq&) = default;
};

inline BlockSeq exponent_sequence(const RelatorSpec& spec) {
  BlockSeq s;
  const USequence& u = spec.u();
  s.blocks.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    s.blocks.push_back(Block{i % 2 == 0 ? u[i] : -u[i], i % 2 == 0 ? HLetter::b : HLetter::a});
  return s;
}

}  // namespace hnnforge
