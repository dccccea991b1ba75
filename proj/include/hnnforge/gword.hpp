#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hnnforge/bs12.hpp"
#include "hnnforge/config.hpp"
#include "hnnforge/errors.hpp"

// Words in the Baumslag group G = <H, t | a^t = b>, HNN extension of
// H = BS(1,2) with associated subgroups A = <a>, B = <b> and t^{-1}At = B.
// A word is stored as h0 t^{e1} h1 ... t^{en} hn: a head H-element plus a
// sequence of (sign, H-element) syllables. Britton's lemma decides the word
// problem: a word is trivial iff it reduces to t-length 0 with trivial head.

namespace hnnforge {

struct Syllable {
  int sign;  // +1 or -1
  HElement h;

  friend bool operator==(const Syllable& x, const Syllable& y) {
    return x.sign == y.sign && x.h == y.h;
  }
};

class GWord {
 public:
  GWord() : head_(), reduced_(true) {}

  static GWord identity() { return GWord(); }

  static GWord from_h(HElement h) {
    GWord w;
    w.head_ = std::move(h);
    return w;
  }

  static GWord from_parts(HElement head, std::vector<Syllable> tail, bool reduced = false) {
    GWord w;
    w.head_ = std::move(head);
    w.tail_ = std::move(tail);
    w.reduced_ = reduced;
    return w;
  }

  static GWord t_pow(long long n) {
    GWord w;
    int sign = n < 0 ? -1 : +1;
    unsigned long long count = n < 0 ? -static_cast<unsigned long long>(n) : n;
    for (unsigned long long i = 0; i < count; ++i) w.append_t(sign);
    return w;
  }

  const HElement& head() const { return head_; }
  const std::vector<Syllable>& tail() const { return tail_; }
  bool reduced_flag() const { return reduced_; }

  // number of t-syllables currently stored (equals the t-length once reduced)
  std::size_t syllable_count() const { return tail_.size(); }

  long long t_exponent_sum() const {
    long long s = 0;
    for (const Syllable& syl : tail_) s += syl.sign;
    return s;
  }

  void append_t(int sign) {
    if (tail_.size() >= config::syllable_cap())
      throw ResourceLimitError("word exceeds syllable cap");
    tail_.push_back(Syllable{sign, HElement::identity()});
    reduced_ = false;
  }

  // merge an H-element into the trailing slot
  void append_h(const HElement& h) {
    if (tail_.empty())
      head_ = h_mul(head_, h);
    else
      tail_.back().h = h_mul(tail_.back().h, h);
    reduced_ = false;
  }

  void mark_reduced(bool value) { reduced_ = value; }

  // structural identity (same syllable decomposition), not equality in G
  friend bool operator==(const GWord& x, const GWord& y) {
    return x.head_ == y.head_ && x.tail_ == y.tail_;
  }

 private:
  HElement head_;
  std::vector<Syllable> tail_;
  bool reduced_;
};

// Syntactic pinch-freeness: no t^{-1} x t with x in A, no t y t^{-1} with y in B.
inline bool is_reduced(const GWord& w) {
  const auto& tail = w.tail();
  for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
    if (tail[i].sign == -1 && tail[i + 1].sign == +1 && in_A(tail[i].h)) return false;
    if (tail[i].sign == +1 && tail[i + 1].sign == -1 && in_B(tail[i].h)) return false;
  }
  return true;
}

// Single left-to-right stack pass; cascading re-checks make one pass complete.
inline GWord britton_reduce(const GWord& w) {
  if (w.reduced_flag()) return w;
  HElement head = w.head();
  std::vector<Syllable> stack;
  stack.reserve(w.tail().size());
  for (const Syllable& syl : w.tail()) {
    if (!stack.empty()) {
      const Syllable& top = stack.back();
      if (top.sign == -1 && syl.sign == +1 && in_A(top.h)) {
        HElement merged = h_mul(HElement::b_pow(top.h.q.num()), syl.h);
        stack.pop_back();
        if (stack.empty())
          head = h_mul(head, merged);
        else
          stack.back().h = h_mul(stack.back().h, merged);
        continue;
      }
      if (top.sign == +1 && syl.sign == -1 && in_B(top.h)) {
        HElement merged = h_mul(HElement::a_pow(top.h.k), syl.h);
        stack.pop_back();
        if (stack.empty())
          head = h_mul(head, merged);
        else
          stack.back().h = h_mul(stack.back().h, merged);
        continue;
      }
    }
    stack.push_back(syl);
  }
  return GWord::from_parts(std::move(head), std::move(stack), true);
}

// raw concatenation, no reduction
inline GWord g_concat(const GWord& w1, const GWord& w2) {
  if (w1.tail().size() + w2.tail().size() > config::syllable_cap())
    throw ResourceLimitError("word exceeds syllable cap");
  GWord out = w1;
  out.append_h(w2.head());
  for (const Syllable& syl : w2.tail()) {
    out.append_t(syl.sign);
    out.append_h(syl.h);
  }
  return out;
}

inline GWord g_mul(const GWord& w1, const GWord& w2) { return britton_reduce(g_concat(w1, w2)); }

inline GWord g_inv(const GWord& w) {
  const auto& tail = w.tail();
  std::vector<Syllable> out;
  out.reserve(tail.size());
  HElement head = tail.empty() ? h_inv(w.head()) : h_inv(tail.back().h);
  for (std::size_t i = tail.size(); i-- > 0;) {
    const HElement& prev = i == 0 ? w.head() : tail[i - 1].h;
    out.push_back(Syllable{-tail[i].sign, h_inv(prev)});
  }
  // inverse of a reduced word is reduced (pinch patterns map onto each other)
  return GWord::from_parts(std::move(head), std::move(out), w.reduced_flag());
}

inline std::size_t t_length(const GWord& w) {
  if (w.reduced_flag()) return w.tail().size();
  return britton_reduce(w).tail().size();
}

inline bool is_identity_in_G(const GWord& w) {
  GWord r = britton_reduce(w);
  return r.tail().empty() && h_is_identity(r.head());
}

// equality in G, decided by reduce-to-identity (no canonical form)
inline bool g_equal(const GWord& w1, const GWord& w2) {
  return is_identity_in_G(g_mul(w1, g_inv(w2)));
}

inline bool is_cyclically_reduced(const GWord& w) {
  if (!is_reduced(w)) return false;
  const auto& tail = w.tail();
  if (tail.empty()) return true;
  HElement wrap = h_mul(tail.back().h, w.head());
  int last = tail.back().sign;
  int first = tail.front().sign;
  if (last == -1 && first == +1 && in_A(wrap)) return false;
  if (last == +1 && first == -1 && in_B(wrap)) return false;
  return true;
}

inline GWord britton_reduced_checked(const GWord& w) {
  return w.reduced_flag() ? w : britton_reduce(w);
}

// Peels conjugating syllables until the core is cyclically reduced.
// Returns (core, conjugator) with w = conjugator^{-1} * core * conjugator in G.
inline std::pair<GWord, GWord> cyclic_reduce(const GWord& w_in) {
  GWord w = britton_reduced_checked(w_in);
  GWord prefix = GWord::identity();  // product of peeled p = h0 t^{e1}
  while (!is_cyclically_reduced(w)) {
    // reachable only with >= 2 syllables: a wrap pinch needs opposite signs
    const auto& tail = w.tail();
    GWord p = GWord::from_h(w.head());
    p.append_t(tail.front().sign);
    // rotate first syllable to the end: h1 t^{e2} ... t^{en} (hn h0) t^{e1}
    std::vector<Syllable> rot(tail.begin() + 1, tail.end());
    rot.back().h = h_mul(rot.back().h, w.head());
    rot.push_back(Syllable{tail.front().sign, HElement::identity()});
    w = britton_reduce(GWord::from_parts(tail.front().h, std::move(rot)));
    prefix = g_mul(prefix, p);
  }
  return {w, g_inv(prefix)};
}

// j-th syllable rotation of a cyclically reduced word, splitting before the
// H-element that precedes syllable j+1; j = 0 returns w itself. Rotations of
// words with a trailing identity slot compose back to the original exactly.
inline GWord cyclic_permutation(const GWord& w, std::size_t j) {
  if (j == 0 || w.tail().empty()) return w;
  const auto& tail = w.tail();
  const std::size_t n = tail.size();
  std::vector<Syllable> out;
  out.reserve(n);
  for (std::size_t s = j + 1; s <= n; ++s) {
    HElement h = s == n ? h_mul(tail[s - 1].h, w.head()) : tail[s - 1].h;
    out.push_back(Syllable{tail[s - 1].sign, std::move(h)});
  }
  for (std::size_t s = 1; s <= j; ++s) {
    HElement h = s == j ? HElement::identity() : tail[s - 1].h;
    out.push_back(Syllable{tail[s - 1].sign, std::move(h)});
  }
  return GWord::from_parts(tail[j - 1].h, std::move(out), true);
}

// All n syllable rotations; requires w cyclically reduced with t-length >= 1.
inline std::vector<GWord> cyclic_permutations(const GWord& w) {
  std::vector<GWord> out;
  out.reserve(w.tail().size());
  for (std::size_t j = 0; j < w.tail().size(); ++j) out.push_back(cyclic_permutation(w, j));
  return out;
}

inline std::optional<HElement> element_of_H(const GWord& w) {
  GWord r = britton_reduce(w);
  if (!r.tail().empty()) return std::nullopt;
  return r.head();
}

// Whether t^n y t^{-n} = x in G. For n >= 2 this holds iff x = y = 1.
inline bool star_check(long long n, const HElement& y, const HElement& x) {
  GWord w = GWord::t_pow(n);
  w.append_h(y);
  unsigned long long count = n < 0 ? -static_cast<unsigned long long>(n) : n;
  for (unsigned long long i = 0; i < count; ++i) w.append_t(n < 0 ? +1 : -1);
  w.append_h(h_inv(x));
  return is_identity_in_G(w);
}

}  // namespace hnnforge
