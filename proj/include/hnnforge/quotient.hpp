#pragma once

#include <chrono>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hnnforge/perm.hpp"
#include "hnnforge/relator.hpp"
#include "hnnforge/word_text.hpp"

// Exhaustive homomorphism search into symmetric groups. A finite factor of
// order m embeds into S_m (Cayley), so triviality of every homomorphism to
// S_n for n <= N certifies that no non-trivial finite quotient of order <= N
// exists. Pairs (alpha, tau) are enumerated with alpha over conjugacy-class
// representatives only: the Baumslag relation and the relator condition are
// both invariant under simultaneous conjugation, so counts are weighted by
// class size.

namespace hnnforge {

enum class SearchMode { G, K, Presentation };

struct SearchReport {
  SearchMode mode = SearchMode::G;
  int degree = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t g_hom_count = 0;
  bool g_all_alpha_trivial = true;
  std::uint64_t k_hom_count = 0;  // 0 in G-only searches (not evaluated)
  std::int64_t elapsed_us = 0;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

// beta^{-1} alpha beta = alpha^2 with beta = tau^{-1} alpha tau
inline bool baumslag_relation_holds(const Perm& alpha, const Perm& tau) {
  check_same_degree(alpha, tau);
  Perm beta = p_conj(alpha, tau);
  return p_conj(alpha, beta) == p_mul(alpha, alpha);
}

// Image of r = prod_j b t^{u_{2j-1}} a t^{-u_{2j}} under a |-> alpha, t |-> tau,
// b = tau^{-1} alpha tau. Powers of tau go through one cycle decomposition.
inline Perm relator_image(const Perm& alpha, const Perm& tau, const RelatorSpec& spec) {
  check_same_degree(alpha, tau);
  const Perm beta = p_conj(alpha, tau);
  const PermPowers tau_powers(tau);
  Perm acc(alpha.degree());
  const USequence& u = spec.u();
  for (std::size_t j = 0; j + 1 < u.size(); j += 2) {
    acc = p_mul(acc, beta);
    acc = p_mul(acc, tau_powers.pow(u[j]));
    acc = p_mul(acc, alpha);
    acc = p_mul(acc, tau_powers.pow(-u[j + 1]));
  }
  return acc;
}

inline void check_degree_allowed(int degree) {
  if (degree < 1) throw Error("degree must be >= 1");
  if (degree > config::max_search_degree())
    throw ResourceLimitError("degree " + std::to_string(degree) +
                             " exceeds configured maximum " +
                             std::to_string(config::max_search_degree()));
}

namespace search_detail {

// Workers take conjugacy classes in strides and share nothing; partial counts
// merge by plain sums and conjunctions, so the report is independent of the
// worker count.
template <typename KeepPair>
SearchReport search_homs(int degree, KeepPair&& keep, SearchMode mode, unsigned threads) {
  check_degree_allowed(degree);
  const auto started = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.mode = mode;
  rep.degree = degree;
  const std::vector<Perm> taus = all_permutations(degree);
  const std::vector<ConjClass> classes = conjugacy_classes(degree);

  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(classes.size()));
  if (degree <= 4) workers = 1;  // not worth spawning for a few thousand pairs

  struct Partial {
    std::uint64_t pairs = 0, g = 0, k = 0;
    bool alpha_trivial = true;
  };
  std::vector<Partial> parts(workers);

  auto run_stride = [&](unsigned w) {
    Partial& p = parts[w];
    for (std::size_t ci = w; ci < classes.size(); ci += workers) {
      const ConjClass& cls = classes[ci];
      const bool alpha_trivial = cls.rep.is_identity();
      for (const Perm& tau : taus) {
        ++p.pairs;
        if (!baumslag_relation_holds(cls.rep, tau)) continue;
        p.g += cls.size;
        if (!alpha_trivial) p.alpha_trivial = false;
        if (mode == SearchMode::K && keep(cls.rep, tau)) p.k += cls.size;
      }
    }
  };

  if (workers <= 1) {
    run_stride(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_stride, w);
    for (auto& th : pool) th.join();
  }
  for (const Partial& p : parts) {
    rep.pairs_checked += p.pairs;
    rep.g_hom_count += p.g;
    rep.k_hom_count += p.k;
    rep.g_all_alpha_trivial = rep.g_all_alpha_trivial && p.alpha_trivial;
  }
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return rep;
}

}  // namespace search_detail

// Homomorphisms G -> S_n: solutions of the Baumslag relation alone.
inline SearchReport search_homs_G(int degree, unsigned threads = 0) {
  return search_detail::search_homs(
      degree, [](const Perm&, const Perm&) { return false; }, SearchMode::G, threads);
}

// Homomorphisms K -> S_n: Baumslag solutions whose relator image is trivial.
inline SearchReport search_homs_K(int degree, const RelatorSpec& spec, unsigned threads = 0) {
  return search_detail::search_homs(
      degree,
      [&spec](const Perm& alpha, const Perm& tau) {
        return relator_image(alpha, tau, spec).is_identity();
      },
      SearchMode::K, threads);
}

// Cayley bound: clean K-searches for every n <= max_degree certify that K has
// no non-trivial finite quotient of order <= max_degree.
inline int certified_order_bound(int max_degree, const std::vector<SearchReport>& k_reports) {
  for (int n = 1; n <= max_degree; ++n) {
    bool found = false;
    for (const SearchReport& rep : k_reports) {
      if (rep.degree != n || rep.mode != SearchMode::K) continue;
      if (rep.k_hom_count != 1)
        throw NotCertifiedError("degree " + std::to_string(n) + " search found " +
                                std::to_string(rep.k_hom_count) + " homomorphisms");
      found = true;
      break;
    }
    if (!found)
      throw NotCertifiedError("no K-search report for degree " + std::to_string(n));
  }
  return max_degree;
}

// ---------------------------------------------------------------------------
// Generic finitely presented search (control inputs, e.g. Higman's group).
//
// File format: a "gens:" line declaring single-letter generators, then one
// "rel:" line per relator in the shared word grammar extended to the declared
// alphabet. '#' lines are comments.

struct Presentation {
  std::vector<char> gen_names;
  std::vector<std::vector<GenTerm>> relators;

  int num_gens() const { return static_cast<int>(gen_names.size()); }
};

inline Presentation parse_presentation(std::istream& in) {
  Presentation pres;
  std::map<char, int> alphabet;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = 0;
    detail::skip_ws(line, i);
    if (i >= line.size() || line[i] == '#') continue;
    if (line.compare(i, 5, "gens:") == 0) {
      i += 5;
      while (i < line.size()) {
        detail::skip_ws(line, i);
        if (i >= line.size()) break;
        char name = line[i++];
        if (!std::isalpha(static_cast<unsigned char>(name)))
          throw WordParseError("generator names must be letters");
        if (alphabet.count(name)) throw WordParseError("duplicate generator name");
        alphabet[name] = pres.num_gens();
        pres.gen_names.push_back(name);
      }
    } else if (line.compare(i, 4, "rel:") == 0) {
      if (pres.gen_names.empty()) throw WordParseError("rel: before gens:");
      pres.relators.push_back(parse_gen_word(line.substr(i + 4), alphabet));
    } else {
      throw WordParseError("expected 'gens:' or 'rel:' line");
    }
  }
  if (pres.gen_names.empty()) throw WordParseError("presentation declares no generators");
  return pres;
}

inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

namespace search_detail {

inline Perm eval_gen_word(const std::vector<GenTerm>& word, const std::vector<Perm>& images,
                          int degree) {
  Perm acc(degree);
  for (const GenTerm& term : word)
    acc = p_mul(acc, term.exp == 1 ? images[term.gen] : p_pow(images[term.gen], term.exp));
  return acc;
}

}  // namespace search_detail

// Backtracking over generator images; a relator is checked as soon as all its
// generators are assigned. Counts every homomorphism Presentation -> S_n.
inline SearchReport search_homs_presentation(const Presentation& pres, int degree) {
  check_degree_allowed(degree);
  const auto started = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.mode = SearchMode::Presentation;
  rep.degree = degree;

  const std::vector<Perm> all = all_permutations(degree);
  const int ngens = pres.num_gens();

  // relators become checkable once their highest generator is assigned;
  // empty-support relators are identities and never need evaluation
  std::vector<std::vector<const std::vector<GenTerm>*>> due(ngens + 1);
  for (const auto& rel : pres.relators) {
    int highest = -1;
    for (const GenTerm& term : rel) highest = std::max(highest, term.gen);
    due[highest + 1].push_back(&rel);
  }

  std::vector<Perm> images(ngens, Perm(degree));
  std::uint64_t homs = 0;
  bool all_trivial = true;

  auto rec = [&](auto&& self, int g) -> void {
    if (g == ngens) {
      ++homs;
      for (const Perm& p : images)
        if (!p.is_identity()) all_trivial = false;
      return;
    }
    for (const Perm& candidate : all) {
      images[g] = candidate;
      ++rep.pairs_checked;
      bool ok = true;
      for (const auto* rel : due[g + 1]) {
        if (!search_detail::eval_gen_word(*rel, images, degree).is_identity()) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, g + 1);
    }
  };
  rec(rec, 0);

  rep.g_hom_count = homs;
  rep.k_hom_count = homs;
  rep.g_all_alpha_trivial = all_trivial;
  rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return rep;
}

}  // namespace hnnforge
