#pragma once

#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "hnnforge/relator.hpp"

// Piece analysis over the symmetrized relator set R (all cyclically reduced
// conjugates of r and r^{-1}) and certification of the C'(1/6) metric.
// Pieces are measured in t-length with a 3-t-block cap: the symmetrized set
// is infinite (conjugators range over all of H), but any common left factor
// of two distinct members spans at most 3 whole t-blocks, so condition (3)'s
// maximum cyclic 3-window bounds every piece. The ball check below is a
// falsification harness for that bound, not a proof.

namespace hnnforge {

struct PieceReport {
  long long max_run_blocks = 0;
  long long max_piece_tlen = 0;
  long long total_tlen = 0;
  bool sixth_certified = false;

  friend bool operator==(const PieceReport&, const PieceReport&) = default;
};

// Reverse the cyclic order and negate every magnitude; each H-letter
// re-attaches to the preceding block of the inverted word.
inline BlockSeq inverse_block_seq(const BlockSeq& s) {
  const std::size_t l = s.size();
  BlockSeq out;
  out.blocks.resize(l);
  if (l == 0) return out;
  out.blocks[0] = Block{-s.blocks[l - 1].mag, s.blocks[0].letter};
  for (std::size_t j = 1; j < l; ++j)
    out.blocks[j] = Block{-s.blocks[l - 1 - j].mag, s.blocks[l - j].letter};
  return out;
}

// Longest run of consecutive equal (signed magnitude, letter) pairs over all
// cyclic alignments; the self-alignment is excluded when the two sequences
// are the identical list.
inline std::size_t max_common_run(const BlockSeq& s1, const BlockSeq& s2) {
  const std::size_t l1 = s1.size(), l2 = s2.size();
  if (l1 == 0 || l2 == 0) return 0;
  const bool identical = s1 == s2;
  const std::size_t window = std::lcm(l1, l2);
  std::size_t best = 0;
  for (std::size_t d = 0; d < l2; ++d) {
    if (identical && d == 0) continue;
    std::size_t run = 0, longest = 0;
    for (std::size_t j = 0; j < 2 * window; ++j) {
      if (s1.blocks[j % l1] == s2.blocks[(j + d) % l2]) {
        ++run;
        longest = std::max(longest, run);
      } else {
        run = 0;
      }
    }
    best = std::max(best, std::min(longest, window));
  }
  return best;
}

inline PieceReport piece_bound(const RelatorSpec& spec) {
  PieceReport rep;
  const USequence& u = spec.u();
  const std::size_t l = u.size();
  for (long long v : u) rep.total_tlen += v;
  for (std::size_t i = 0; i < l; ++i) {
    long long window = u[i] + u[(i + 1) % l] + u[(i + 2) % l];
    rep.max_piece_tlen = std::max(rep.max_piece_tlen, window);
  }
  BlockSeq s = exponent_sequence(spec);
  rep.max_run_blocks = static_cast<long long>(
      std::max(max_common_run(s, s), max_common_run(s, inverse_block_seq(s))));
  rep.sixth_certified = 6 * rep.max_piece_tlen < rep.total_tlen;
  return rep;
}

// britton_reduce(h^{-1} w h)
inline GWord h_conjugate(const GWord& w, const HElement& h) {
  GWord out = GWord::from_h(h_inv(h));
  out = g_concat(out, w);
  out.append_h(h);
  return britton_reduce(out);
}

// Collins: whether w' = h^{-1} w* h in G for some cyclic permutation w* of w.
inline bool collins_verify(const GWord& w, const GWord& w_prime, const HElement& h) {
  const std::size_t n = std::max<std::size_t>(w.tail().size(), 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (g_equal(h_conjugate(cyclic_permutation(w, j), h), w_prime)) return true;
  }
  return false;
}

// Number of whole t-blocks in the longest common left factor of two reduced
// words. A block is a maximal run of equal-sign t-syllables with identity
// interior slots; it counts only once both words close it (by a nontrivial
// H-letter, a sign change, or the word end). Partial run overlap counts 0.
inline std::size_t common_prefix_blocks(const GWord& w1, const GWord& w2) {
  if (!(w1.head() == w2.head())) return 0;
  const auto& t1 = w1.tail();
  const auto& t2 = w2.tail();
  const std::size_t n = std::min(t1.size(), t2.size());
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(t1[i] == t2[i])) break;
    const bool boundary = !h_is_identity(t1[i].h);
    const bool closed1 = boundary || i + 1 == t1.size() || t1[i + 1].sign != t1[i].sign;
    const bool closed2 = boundary || i + 1 == t2.size() || t2[i + 1].sign != t2[i].sign;
    if (closed1 && closed2) ++blocks;
  }
  return blocks;
}

// ---------------------------------------------------------------------------
// Lemma-main falsification harness.
//
// Checks that for all cyclic shifts s1, s2 of r and r^{-1} and every h in a
// finite ball of H, common_prefix_blocks(h_conjugate(s1, h), s2) stays within
// the bound (3), excluding only the identity pair s1 = s2, h = 1. Work runs
// over a shared skeleton of the two base words, so no rotation is ever
// materialized; unit tests cross-check sampled triples against the public
// GWord route.

struct LemmaMainOptions {
  long long ball_num = 8;
  long long ball_exp = 2;
  long long ball_k = 2;
  std::size_t block_bound = 3;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct LemmaMainViolation {
  int base1;  // 0 = r, 1 = r^{-1}
  std::size_t shift1;
  HElement h;
  int base2;
  std::size_t shift2;
  std::size_t blocks;
};

struct LemmaMainResult {
  unsigned long long pairs_checked = 0;
  unsigned long long violations = 0;
  std::size_t max_blocks_seen = 0;
  std::optional<LemmaMainViolation> first;
};

namespace lemma_detail {

enum Slot : unsigned char { SLOT_ID = 0, SLOT_A, SLOT_B, SLOT_AI, SLOT_BI, SLOT_N };

inline const HElement& slot_value(unsigned char s) {
  static const HElement table[SLOT_N] = {HElement::identity(), HElement::a(), HElement::b(),
                                         h_inv(HElement::a()), h_inv(HElement::b())};
  return table[s];
}

// One base word as flat arrays: sign[i], slot[i] = H-element after syllable i.
// `wrap` is slot[n-1] merged with the head, the value interior rotations see.
struct Skeleton {
  std::vector<signed char> sign;
  std::vector<unsigned char> slot;
  unsigned char head;
  unsigned char wrap;

  std::size_t size() const { return sign.size(); }

  unsigned char rotation_head(std::size_t j) const { return j == 0 ? head : slot[j - 1]; }

  // slot of rotation j at position i, before any conjugation
  unsigned char rotation_slot(std::size_t j, std::size_t i) const {
    const std::size_t n = size();
    if (i == n - 1) return j == 0 ? slot[n - 1] : SLOT_ID;
    const std::size_t p = (j + i) % n;
    return p == n - 1 ? wrap : slot[p];
  }

  signed char rotation_sign(std::size_t j, std::size_t i) const {
    return sign[(j + i) % size()];
  }
};

inline Skeleton relator_skeleton(const USequence& u) {
  Skeleton sk;
  sk.head = SLOT_B;
  for (std::size_t j = 0; j + 1 < u.size(); j += 2) {
    for (long long i = 0; i < u[j]; ++i) {
      sk.sign.push_back(+1);
      sk.slot.push_back(i + 1 == u[j] ? SLOT_A : SLOT_ID);
    }
    const bool last_pair = j + 2 >= u.size();
    for (long long i = 0; i < u[j + 1]; ++i) {
      sk.sign.push_back(-1);
      sk.slot.push_back(i + 1 == u[j + 1] ? (last_pair ? SLOT_ID : SLOT_B) : SLOT_ID);
    }
  }
  sk.wrap = SLOT_B;  // trailing identity slot merged with head b
  return sk;
}

inline Skeleton inverse_relator_skeleton(const USequence& u) {
  Skeleton sk;
  sk.head = SLOT_ID;
  // r^{-1} = t^{u_l} a^{-1} t^{-u_{l-1}} b^{-1} ... t^{u_2} a^{-1} t^{-u_1} b^{-1}
  for (std::size_t p = 0; p < u.size(); ++p) {
    const long long mag = u[u.size() - 1 - p];
    const bool positive = p % 2 == 0;
    for (long long i = 0; i < mag; ++i) {
      sk.sign.push_back(positive ? +1 : -1);
      sk.slot.push_back(i + 1 == mag ? (positive ? SLOT_AI : SLOT_BI) : SLOT_ID);
    }
  }
  sk.wrap = SLOT_BI;  // trailing b^{-1} merged with identity head
  return sk;
}

// Whole-block count of the common left factor of (rotation j1 of sk1,
// conjugated by h) and (rotation j2 of sk2). `h_nontrivial` avoids HElement
// work on the overwhelmingly common enum-only path.
inline std::size_t prefix_blocks(const Skeleton& sk1, std::size_t j1, const HElement& h,
                                 const HElement& h_inverse, const Skeleton& sk2,
                                 std::size_t j2) {
  const std::size_t n = sk1.size();
  const HElement head1 = h_mul(h_inverse, slot_value(sk1.rotation_head(j1)));
  if (!(head1 == slot_value(sk2.rotation_head(j2)))) return 0;

  std::size_t blocks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sk1.rotation_sign(j1, i) != sk2.rotation_sign(j2, i)) break;
    const unsigned char s1 = sk1.rotation_slot(j1, i);
    const unsigned char s2 = sk2.rotation_slot(j2, i);
    bool boundary;
    if (i == n - 1) {
      // trailing slot of the conjugated word picks up h
      const HElement v1 = h_mul(slot_value(s1), h);
      if (!(v1 == slot_value(s2))) break;
      boundary = true;  // word end closes both
    } else {
      if (s1 != s2) break;
      boundary = s1 != SLOT_ID;
    }
    const bool closed1 =
        boundary || i + 1 == n || sk1.rotation_sign(j1, i + 1) != sk1.rotation_sign(j1, i);
    const bool closed2 =
        boundary || i + 1 == n || sk2.rotation_sign(j2, i + 1) != sk2.rotation_sign(j2, i);
    if (closed1 && closed2) ++blocks;
  }
  return blocks;
}

}  // namespace lemma_detail

// Exact block count for one (shift, conjugator, shift) triple; bases are
// 0 for r and 1 for r^{-1}. Used by tests to cross-check the harness against
// the public cyclic_permutation / h_conjugate / common_prefix_blocks route.
inline std::size_t lemma_main_prefix_blocks(const RelatorSpec& spec, int base1,
                                            std::size_t shift1, const HElement& h, int base2,
                                            std::size_t shift2) {
  using namespace lemma_detail;
  const Skeleton r = relator_skeleton(spec.u());
  const Skeleton ri = inverse_relator_skeleton(spec.u());
  const Skeleton& sk1 = base1 == 0 ? r : ri;
  const Skeleton& sk2 = base2 == 0 ? r : ri;
  return prefix_blocks(sk1, shift1, h, h_inv(h), sk2, shift2);
}

inline LemmaMainResult lemma_main_ball_check(const RelatorSpec& spec,
                                             const LemmaMainOptions& opt = {}) {
  using namespace lemma_detail;
  const Skeleton skel[2] = {relator_skeleton(spec.u()), inverse_relator_skeleton(spec.u())};
  const std::size_t n = skel[0].size();
  const std::vector<HElement> ball = enumerate_h_ball(opt.ball_num, opt.ball_exp, opt.ball_k);

  // shifts grouped by head letter so a conjugated head rules out whole groups
  std::vector<std::pair<int, std::size_t>> head_group[SLOT_N];
  for (int b = 0; b < 2; ++b)
    for (std::size_t j = 0; j < n; ++j)
      head_group[skel[b].rotation_head(j)].push_back({b, j});

  const std::size_t total_shifts = 2 * n;

  struct Chunk {
    LemmaMainResult res;
  };

  auto run_range = [&](std::size_t lo, std::size_t hi, Chunk& out) {
    // flat shift index: base = idx / n, j = idx % n
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const int b1 = static_cast<int>(idx / n);
      const std::size_t j1 = idx % n;
      for (const HElement& h : ball) {
        const HElement hi_inv = h_inv(h);
        const HElement head1 = h_mul(hi_inv, slot_value(skel[b1].rotation_head(j1)));
        const bool h_trivial = h_is_identity(h);
        int head_match = -1;
        for (int s = 0; s < SLOT_N; ++s)
          if (head1 == slot_value(static_cast<unsigned char>(s))) {
            head_match = s;
            break;
          }
        out.res.pairs_checked += total_shifts - (h_trivial ? 1 : 0);
        if (head_match < 0) continue;  // every target head differs: 0 blocks
        for (auto [b2, j2] : head_group[head_match]) {
          if (h_trivial && b2 == b1 && j2 == j1) continue;
          const std::size_t blocks =
              prefix_blocks(skel[b1], j1, h, hi_inv, skel[b2], static_cast<std::size_t>(j2));
          out.res.max_blocks_seen = std::max(out.res.max_blocks_seen, blocks);
          if (blocks > opt.block_bound) {
            ++out.res.violations;
            if (!out.res.first)
              out.res.first = LemmaMainViolation{b1, j1, h, b2, j2, blocks};
          }
        }
      }
    }
  };

  unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(total_shifts));

  std::vector<Chunk> chunks(threads);
  if (threads <= 1) {
    run_range(0, total_shifts, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t per = (total_shifts + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = t * per;
      const std::size_t hi = std::min(total_shifts, lo + per);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi, t] { run_range(lo, hi, chunks[t]); });
    }
    for (auto& th : pool) th.join();
  }

  // deterministic merge in shift order, independent of thread count
  LemmaMainResult res;
  for (const Chunk& c : chunks) {
    res.pairs_checked += c.res.pairs_checked;
    res.violations += c.res.violations;
    res.max_blocks_seen = std::max(res.max_blocks_seen, c.res.max_blocks_seen);
    if (!res.first && c.res.first) res.first = c.res.first;
  }
  return res;
}

}  // namespace hnnforge
