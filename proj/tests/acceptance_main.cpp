// Acceptance suite. Runs each criterion at its stated tolerance and prints
// one [PASS]/[FAIL] line per criterion; exits nonzero if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hnnforge/hnnforge.hpp"
#include "oracles.hpp"

using namespace hnnforge;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int criterion, bool ok, const std::string& detail, double elapsed_ms,
            double budget_ms) {
  const bool in_budget = elapsed_ms < budget_ms;
  const bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2f ms%s of %.0f ms budget)\n", pass ? "PASS" : "FAIL",
              criterion, detail.c_str(), elapsed_ms, in_budget ? "" : " OVER", budget_ms);
  std::fflush(stdout);
}

// --- criterion 1: default relator certification figures, exact integers ----

void criterion1() {
  const USequence u = default_spec().u();
  const auto start = Clock::now();
  ConditionReport rep = validate(u);
  const double elapsed = ms_since(start);
  bool ok = rep.alt_sum == 1 && rep.total == 2221 && rep.max_window3 == 368 &&
            6 * rep.max_window3 == 2208 && rep.sixth_ok && rep.valid;
  std::ostringstream detail;
  detail << "default figures alt_sum=" << rep.alt_sum << " total=" << rep.total
         << " max_window3=" << rep.max_window3 << " 6*368=2208<2221";
  report(1, ok, detail.str(), elapsed, 1.0);
}

// --- criterion 2: Britton machinery ----------------------------------------

void criterion2() {
  const auto start = Clock::now();
  bool ok = is_identity_in_G(parse_word("t^-1 a^-1 t a t^-1 a t a^-2"));

  std::mt19937_64 rng(0xB512ACCE);
  int strategy_violations = 0, invariant_violations = 0;
  for (int i = 0; i < 10'000; ++i) {
    GWord raw = oracles::gword_of(oracles::random_gletters(rng, 40));
    GWord red = britton_reduce(raw);
    if (red.t_exponent_sum() != raw.t_exponent_sum()) ++invariant_violations;
    if (red.tail().size() % 2 != raw.tail().size() % 2) ++invariant_violations;
    GWord oracle = oracles::leftmost_pinch_reduce(raw);
    const bool id_stack = red.tail().empty() && h_is_identity(red.head());
    const bool id_oracle = oracle.tail().empty() && h_is_identity(oracle.head());
    if (id_stack != id_oracle || red.tail().size() != oracle.tail().size())
      ++strategy_violations;
  }
  ok = ok && strategy_violations == 0 && invariant_violations == 0;
  std::ostringstream detail;
  detail << "Baumslag relation trivial; 10^4 random words: " << invariant_violations
         << " invariant violations, " << strategy_violations << " strategy disagreements";
  report(2, ok, detail.str(), ms_since(start), 10'000.0);
}

// --- criterion 3: property (star) over the exhaustive ball ------------------

void criterion3() {
  const auto start = Clock::now();
  const std::vector<HElement> ball = enumerate_h_ball(16, 3, 3);
  long long checked = 0;
  int exceptions = 0;
  for (long long n : {2, 3, 4}) {
    for (const HElement& y : ball) {
      GWord w = GWord::t_pow(n);
      w.append_h(y);
      for (long long i = 0; i < n; ++i) w.append_t(-1);
      const bool lands_in_H = element_of_H(w).has_value();
      ++checked;
      if (lands_in_H != h_is_identity(y)) ++exceptions;
    }
  }
  std::ostringstream detail;
  detail << "star ball: " << checked << " words t^n y t^-n, n in {2,3,4}; " << exceptions
         << " exceptions";
  report(3, exceptions == 0 && checked == 3 * static_cast<long long>(ball.size()),
         detail.str(), ms_since(start), 30'000.0);
}

// --- criterion 4: small cancellation ----------------------------------------

void criterion4() {
  const auto start = Clock::now();
  RelatorSpec spec = default_spec();
  BlockSeq s = exponent_sequence(spec);
  const std::size_t run_self = max_common_run(s, s);
  const std::size_t run_inv = max_common_run(s, inverse_block_seq(s));

  LemmaMainOptions opt;  // ball |m|<=8, e<=2, |k|<=2, bound 3
  LemmaMainResult res = lemma_main_ball_check(spec, opt);

  const bool ok = run_self == 0 && run_inv == 0 && res.violations == 0;
  std::ostringstream detail;
  detail << "max_common_run self=" << run_self << " inv=" << run_inv << "; lemma-main ball: "
         << res.pairs_checked << " pairs, max blocks " << res.max_blocks_seen << ", "
         << res.violations << " counterexamples";
  report(4, ok, detail.str(), ms_since(start), 300'000.0);
}

// --- criterion 5: quotient triviality at desk scale --------------------------

void criterion5() {
  const auto start = Clock::now();
  RelatorSpec spec = default_spec();
  bool ok = true;
  std::ostringstream detail;
  detail << "degrees 1..7:";
  for (int n = 1; n <= 7; ++n) {  // n = 7 is the optional extra degree
    SearchReport g = search_homs_G(n);
    SearchReport k = search_homs_K(n, spec);
    const bool degree_ok = g.g_all_alpha_trivial && g.g_hom_count == factorial(n) &&
                           k.k_hom_count == 1 && k.g_hom_count == factorial(n);
    ok = ok && degree_ok;
    detail << " n=" << n << (degree_ok ? " ok" : " FAIL");
  }
  detail << "; g_hom_count = n!, k_hom_count = 1 throughout";
  report(5, ok, detail.str(), ms_since(start), 660'000.0);
}

// --- criterion 6: pipeline determinism ---------------------------------------

std::string run_cli(const std::string& bin, const std::string& args, int& exit_code) {
  std::string cmd = "\"" + bin + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void criterion6() {
  const auto start = Clock::now();
  const char* bin = std::getenv("HNN_FORGE_BIN");
  if (!bin) {
    report(6, false, "HNN_FORGE_BIN not set; cannot spawn the CLI", ms_since(start), 120'000.0);
    return;
  }
  const std::string args = "certify --default --max-degree 5 --seed 20260809 --json";
  int code1 = 0, code2 = 0;
  std::string out1 = run_cli(bin, args, code1);
  std::string out2 = run_cli(bin, args, code2);
  const bool ok = code1 == 0 && code2 == 0 && !out1.empty() && out1 == out2;
  std::ostringstream detail;
  detail << "two certify runs, seed 20260809: exits " << code1 << "/" << code2 << ", "
         << out1.size() << " bytes, byte-identical=" << (out1 == out2 ? "true" : "false");
  report(6, ok, detail.str(), ms_since(start), 120'000.0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  if (failures == 0)
    std::printf("acceptance: all 6 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
