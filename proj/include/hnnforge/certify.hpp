#pragma once

#include <functional>
#include <random>
#include <string>

#include "hnnforge/report.hpp"

// The full certification pipeline behind `certify`:
//   validate -> build_relator -> cyclic-reduction check -> t-exponent sum
//   -> piece bound -> star sampling -> quotient search up to max_degree.
// Every stage that runs leaves its figures in the CertReport, so a failed run
// still carries a usable partial report. Embedded quotient reports have their
// elapsed time zeroed: wall-clock goes to the progress stream, and reports
// with the same inputs and seed must stay byte-identical.

namespace hnnforge {

struct CertifyOptions {
  USequence u;
  int max_degree = 6;
  std::uint64_t seed = 0;
  long long star_ball_num = 16;
  long long star_ball_exp = 3;
  long long star_ball_k = 3;
  std::vector<long long> star_exponents = {2, 3, 4};
  int star_extra_samples = 100;
  std::function<void(const std::string&)> progress;  // diagnostics sink, may be empty
};

namespace certify_detail {

inline void note(const CertifyOptions& opt, const std::string& msg) {
  if (opt.progress) opt.progress(msg);
}

// t^n y t^{-n} lands in H iff y = 1; and then it is trivial.
inline bool star_sample_ok(long long n, const HElement& y) {
  auto elem = element_of_H([&] {
    GWord w = GWord::t_pow(n);
    w.append_h(y);
    for (long long i = 0; i < n; ++i) w.append_t(-1);
    return w;
  }());
  if (h_is_identity(y)) return elem.has_value() && h_is_identity(*elem);
  return !elem.has_value();
}

}  // namespace certify_detail

inline CertReport run_certification(const CertifyOptions& opt) {
  using certify_detail::note;
  using certify_detail::star_sample_ok;

  CertReport rep;
  rep.seed = opt.seed;
  rep.max_degree = opt.max_degree;
  rep.u = opt.u;

  auto fail = [&](const std::string& reason) {
    rep.certified = false;
    rep.failure_reason = reason;
    return rep;
  };

  try {
    // conditions (1)-(3)
    rep.spec_report = validate(opt.u);
    note(opt, "validate: total=" + std::to_string(rep.spec_report.total) +
                  " max_window3=" + std::to_string(rep.spec_report.max_window3));
    if (!(rep.spec_report.l_even && rep.spec_report.distinct && rep.spec_report.min_ok))
      return fail("condition1");
    if (rep.spec_report.alt_sum != 1) return fail("condition2");
    if (!rep.spec_report.sixth_ok) return fail("condition3");

    RelatorSpec spec = RelatorSpec::unchecked(opt.u);
    GWord r = build_relator(spec);
    rep.relator_tlength = static_cast<long long>(t_length(r));
    rep.cyclically_reduced = is_cyclically_reduced(r);
    rep.t_exponent_sum = r.t_exponent_sum();
    note(opt, "relator: t-length " + std::to_string(*rep.relator_tlength));
    if (!*rep.cyclically_reduced) return fail("not_cyclically_reduced");
    if (*rep.t_exponent_sum != 1) return fail("t_exponent_sum");

    rep.piece_report = piece_bound(spec);
    if (!rep.piece_report->sixth_certified) return fail("sixth");

    // star sampling: exhaustive over the ball, then seeded extras
    const std::vector<HElement> ball =
        enumerate_h_ball(opt.star_ball_num, opt.star_ball_exp, opt.star_ball_k);
    long long samples = 0;
    bool star_ok = true;
    for (long long n : opt.star_exponents) {
      for (const HElement& y : ball) {
        ++samples;
        if (!star_sample_ok(n, y)) {
          star_ok = false;
          note(opt, "star violation at n=" + std::to_string(n) + " y=" + y.to_string());
        }
      }
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long long> pick_n(2, 4);
    std::uniform_int_distribution<long long> pick_num(-64, 64);
    std::uniform_int_distribution<long long> pick_exp(0, 4);
    std::uniform_int_distribution<long long> pick_k(-4, 4);
    for (int i = 0; i < opt.star_extra_samples; ++i) {
      HElement y(Dyadic::make(pick_num(rng), pick_exp(rng)), pick_k(rng));
      ++samples;
      if (!star_sample_ok(pick_n(rng), y)) star_ok = false;
    }
    rep.star_samples_passed = star_ok;
    rep.star_samples_count = samples;
    note(opt, "star: " + std::to_string(samples) + " samples");
    if (!star_ok) return fail("star");

    // quotient searches, degree by degree
    for (int n = 1; n <= opt.max_degree; ++n) {
      SearchReport sr = search_homs_K(n, spec);
      note(opt, "degree " + std::to_string(n) + ": g_hom_count=" +
                    std::to_string(sr.g_hom_count) + " k_hom_count=" +
                    std::to_string(sr.k_hom_count) + " (" +
                    std::to_string(sr.elapsed_us) + " us)");
      sr.elapsed_us = 0;  // reports must be reproducible byte-for-byte
      rep.quotient_reports.push_back(sr);
      if (!sr.g_all_alpha_trivial || sr.k_hom_count != 1)
        return fail("quotient_degree_" + std::to_string(n));
    }
    rep.certified_order = certified_order_bound(opt.max_degree, rep.quotient_reports);
    rep.certified = true;
    return rep;
  } catch (const ResourceLimitError&) {
    return fail("resource_limit");
  }
}

}  // namespace hnnforge
