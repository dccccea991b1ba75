#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnnforge/dyadic.hpp"

// Exact arithmetic in the Baumslag-Solitar group H = <a,b | a^b = a^2>,
// modelled faithfully by affine maps x |-> 2^{-k} x + q over Z[1/2].
// a = (1,0) acts as x+1, b = (0,1) acts as x/2. Composition gives the
// multiplication convention (q1,k1)(q2,k2) = (q1 + 2^{-k1} q2, k1+k2),
// under which b^{-1} a b = a^2 holds.

namespace hnnforge {

struct HElement {
  Dyadic q;
  BigInt k;

  HElement() : q(), k(0) {}
  HElement(Dyadic q_, BigInt k_) : q(std::move(q_)), k(std::move(k_)) {}

  static HElement identity() { return HElement(); }
  static HElement a() { return HElement(Dyadic(1), 0); }
  static HElement b() { return HElement(Dyadic(0), 1); }
  static HElement a_pow(BigInt m) { return HElement(Dyadic(std::move(m)), 0); }
  static HElement b_pow(BigInt m) { return HElement(Dyadic(0), std::move(m)); }

  friend bool operator==(const HElement& g, const HElement& h) {
    return g.k == h.k && g.q == h.q;
  }
  friend bool operator!=(const HElement& g, const HElement& h) { return !(g == h); }

  // report serialization: "num/2^exp|k"
  std::string to_string() const {
    return q.num().str() + "/2^" + q.exp().str() + "|" + k.str();
  }
};

inline HElement h_mul(const HElement& g, const HElement& h) {
  return HElement(g.q + h.q.scaled_pow2(-g.k), g.k + h.k);
}

inline HElement h_inv(const HElement& g) {
  return HElement((-g.q).scaled_pow2(g.k), -g.k);
}

inline bool h_is_identity(const HElement& g) { return g.q.is_zero() && g.k.is_zero(); }

// Membership in the associated subgroups A = <a> and B = <b>.
inline bool in_A(const HElement& g) { return g.k.is_zero() && g.q.is_integer(); }
inline bool in_B(const HElement& g) { return g.q.is_zero(); }

inline std::optional<BigInt> a_exponent(const HElement& g) {
  if (!in_A(g)) return std::nullopt;
  return g.q.num();
}

inline std::optional<BigInt> b_exponent(const HElement& g) {
  if (!in_B(g)) return std::nullopt;
  return g.k;
}

// m-fold product by square-and-multiply on the affine form.
inline HElement h_pow(const HElement& g, long long m) {
  HElement base = m < 0 ? h_inv(g) : g;
  unsigned long long e = m < 0 ? -static_cast<unsigned long long>(m) : m;
  HElement acc;
  while (e != 0) {
    if (e & 1) acc = h_mul(acc, base);
    e >>= 1;
    if (e != 0) base = h_mul(base, base);
  }
  return acc;
}

enum class HLetter : unsigned char { a, a_inv, b, b_inv };

inline HElement h_letter_value(HLetter l) {
  switch (l) {
    case HLetter::a: return HElement::a();
    case HLetter::a_inv: return h_inv(HElement::a());
    case HLetter::b: return HElement::b();
    default: return h_inv(HElement::b());
  }
}

// Left-to-right product of generator images.
inline HElement h_eval_word(std::span<const HLetter> letters) {
  HElement acc;
  for (HLetter l : letters) acc = h_mul(acc, h_letter_value(l));
  return acc;
}

inline HElement h_eval_word(const std::vector<HLetter>& letters) {
  return h_eval_word(std::span<const HLetter>(letters));
}

// The finite test ball { (m/2^e, k) : |m| <= max_num, 0 <= e <= max_exp,
// |k| <= max_k }, deduplicated after normalization, in a fixed order.
inline std::vector<HElement> enumerate_h_ball(long long max_num, long long max_exp,
                                              long long max_k) {
  std::vector<HElement> out;
  for (long long m = -max_num; m <= max_num; ++m)
    for (long long e = 0; e <= max_exp; ++e) {
      if (e > 0 && (m % 2 == 0)) continue;  // normalized duplicate of smaller e
      for (long long k = -max_k; k <= max_k; ++k)
        out.emplace_back(Dyadic::make(m, e), k);
    }
  return out;
}

}  // namespace hnnforge
