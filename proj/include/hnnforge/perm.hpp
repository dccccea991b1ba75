#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hnnforge/errors.hpp"

// Permutations of {0,...,n-1} with composition (p*q)(x) = p(q(x)), cycle
// decomposition, and fast powering with exponents reduced per cycle length.

namespace hnnforge {

class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), static_cast<std::uint8_t>(0));
  }

  static Perm from_images(std::vector<std::uint8_t> images) {
    Perm p;
    p.img_ = std::move(images);
    return p;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  std::uint8_t operator[](int x) const { return img_[x]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  friend bool operator==(const Perm&, const Perm&) = default;

  // disjoint cycle notation on 1-based points, e.g. "(1 2 3)(4 5)"; "()" for id
  std::string to_cycles_string() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (int x = 0; x < degree(); ++x) {
      if (seen[x] || img_[x] == x) continue;
      out += '(';
      int y = x;
      bool first = true;
      do {
        if (!first) out += ' ';
        out += std::to_string(y + 1);
        seen[y] = true;
        y = img_[y];
        first = false;
      } while (y != x);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<std::uint8_t> img_;
};

inline void check_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("permutation degrees differ: " + std::to_string(p.degree()) +
                              " vs " + std::to_string(q.degree()));
}

inline Perm p_mul(const Perm& p, const Perm& q) {
  check_same_degree(p, q);
  std::vector<std::uint8_t> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[x] = p[q[x]];
  return Perm::from_images(std::move(img));
}

inline Perm p_inv(const Perm& p) {
  std::vector<std::uint8_t> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[p[x]] = static_cast<std::uint8_t>(x);
  return Perm::from_images(std::move(img));
}

inline Perm p_conj(const Perm& p, const Perm& by) {  // by^{-1} p by
  return p_mul(p_mul(p_inv(by), p), by);
}

// Cycle decomposition of one permutation, reused across many powers.
class PermPowers {
 public:
  explicit PermPowers(const Perm& p) : base_(p) {
    std::vector<bool> seen(p.degree(), false);
    for (int x = 0; x < p.degree(); ++x) {
      if (seen[x]) continue;
      cycles_.emplace_back();
      int y = x;
      do {
        cycles_.back().push_back(y);
        seen[y] = true;
        y = p[y];
      } while (y != x);
    }
  }

  // p^e with e reduced modulo each cycle length
  Perm pow(long long e) const {
    std::vector<std::uint8_t> img(base_.degree());
    for (const auto& cyc : cycles_) {
      const long long len = static_cast<long long>(cyc.size());
      long long shift = e % len;
      if (shift < 0) shift += len;
      for (std::size_t i = 0; i < cyc.size(); ++i)
        img[cyc[i]] = static_cast<std::uint8_t>(cyc[(i + shift) % cyc.size()]);
    }
    return Perm::from_images(std::move(img));
  }

 private:
  Perm base_;
  std::vector<std::vector<int>> cycles_;
};

inline Perm p_pow(const Perm& p, long long e) { return PermPowers(p).pow(e); }

// All n! permutations in lexicographic order on image tuples.
inline std::vector<Perm> all_permutations(int degree) {
  std::vector<std::uint8_t> img(degree);
  std::iota(img.begin(), img.end(), static_cast<std::uint8_t>(0));
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// One conjugacy class of S_n: a partition of n, its representative built from
// consecutive cycles, and the class size n! / prod(j^{m_j} m_j!).
struct ConjClass {
  std::vector<int> parts;  // weakly decreasing
  Perm rep;
  std::uint64_t size = 0;
};

inline std::vector<ConjClass> conjugacy_classes(int degree) {
  std::vector<ConjClass> out;
  std::vector<int> parts;
  auto emit = [&]() {
    ConjClass c;
    c.parts = parts;
    std::vector<std::uint8_t> img(degree);
    int at = 0;
    for (int len : parts) {
      for (int i = 0; i < len; ++i)
        img[at + i] = static_cast<std::uint8_t>(at + (i + 1) % len);
      at += len;
    }
    c.rep = Perm::from_images(std::move(img));
    std::uint64_t denom = 1;
    int run_value = 0, run_count = 0;
    auto close_run = [&]() {
      for (int i = 1; i <= run_count; ++i) denom *= static_cast<std::uint64_t>(i);
      for (int i = 0; i < run_count; ++i) denom *= static_cast<std::uint64_t>(run_value);
    };
    for (int len : parts) {
      if (len == run_value) {
        ++run_count;
      } else {
        close_run();
        run_value = len;
        run_count = 1;
      }
    }
    close_run();
    c.size = factorial(degree) / denom;
    out.push_back(std::move(c));
  };
  // partitions in decreasing-part order, largest first
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, degree, degree);
  return out;
}

}  // namespace hnnforge
