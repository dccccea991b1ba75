// hnn-forge: exact computation in the Baumslag group G = <a,t | a^{a^t} = a^2>,
// validation of relator exponent sequences, C'(1/6) certification, and
// exhaustive quotient search in small symmetric groups.
//
// Exit codes: 0 success/certified, 1 verification failure, 2 input/parse
// error, 3 resource limit. Reports go to stdout, diagnostics to stderr.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hnnforge/hnnforge.hpp"

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_VERIFICATION = 1;
constexpr int EXIT_INPUT = 2;
constexpr int EXIT_RESOURCE = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hnnforge::WordParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hnnforge::USequence load_u(bool use_default, const std::string& path) {
  if (use_default) return hnnforge::default_spec().u();
  return hnnforge::parse_ulist(read_file(path));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_reduce(const std::string& word_text, bool as_json) {
  using namespace hnnforge;
  GWord reduced = britton_reduce(parse_word(word_text));
  const auto tlen = reduced.tail().size();
  if (as_json) {
    json j{{"schema", SCHEMA_ID},
           {"kind", "reduce"},
           {"word", print_word(reduced)},
           {"t_length", tlen},
           {"t_exponent_sum", reduced.t_exponent_sum()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print_word(reduced) << "\n";
    std::cout << "t-length: " << tlen << "\n";
  }
  return EXIT_OK;
}

int cmd_check_relator(const hnnforge::USequence& u, bool as_json) {
  using namespace hnnforge;
  ConditionReport cr = validate(u);
  std::optional<PieceReport> pr;
  if (cr.valid) pr = piece_bound(RelatorSpec::unchecked(u));
  if (as_json) {
    json j{{"schema", SCHEMA_ID},
           {"kind", "relator_check"},
           {"u", u},
           {"condition_report", cr},
           {"piece_report", pr ? json(*pr) : json(nullptr)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "l: " << u.size() << "\n"
              << "conditions: l_even=" << bool_text(cr.l_even)
              << " distinct=" << bool_text(cr.distinct) << " min_ok=" << bool_text(cr.min_ok)
              << "\n"
              << "alt_sum: " << cr.alt_sum << "\n"
              << "total: " << cr.total << "\n"
              << "max_window3: " << cr.max_window3 << " (6x = " << 6 * cr.max_window3 << ")\n"
              << "sixth_ok: " << bool_text(cr.sixth_ok) << "\n"
              << "valid: " << bool_text(cr.valid) << "\n";
    if (pr)
      std::cout << "pieces: max_run_blocks=" << pr->max_run_blocks
                << " max_piece_tlen=" << pr->max_piece_tlen
                << " total_tlen=" << pr->total_tlen
                << " sixth_certified=" << bool_text(pr->sixth_certified) << "\n";
  }
  return cr.valid && pr && pr->sixth_certified ? EXIT_OK : EXIT_VERIFICATION;
}

void print_search_line(const hnnforge::SearchReport& rep, bool as_json) {
  using namespace hnnforge;
  if (as_json) {
    json j(rep);
    j["schema"] = SCHEMA_ID;
    j["kind"] = "search_report";
    std::cout << j.dump() << "\n";  // one object per line
  } else {
    std::cout << "degree " << rep.degree << ": mode=" << to_string(rep.mode)
              << " pairs_checked=" << rep.pairs_checked << " g_hom_count=" << rep.g_hom_count
              << " g_all_alpha_trivial=" << bool_text(rep.g_all_alpha_trivial);
    if (rep.mode != SearchMode::G) std::cout << " k_hom_count=" << rep.k_hom_count;
    std::cout << "\n";
  }
  std::cout.flush();
}

int cmd_search_quotients(const std::string& group, int max_degree, bool use_default,
                         const std::string& ulist_path, bool force, bool as_json) {
  using namespace hnnforge;
  if (max_degree > config::max_search_degree()) {
    if (!force || max_degree > config::ABSOLUTE_MAX_DEGREE) {
      std::cerr << "degree " << max_degree << " exceeds the cap ("
                << config::max_search_degree() << "); rerun with --force (absolute maximum "
                << config::ABSOLUTE_MAX_DEGREE << ")\n";
      return EXIT_RESOURCE;
    }
    std::cerr << "forcing degree " << max_degree << "; the top degree alone takes roughly "
              << (max_degree >= 10 ? "a minute" : "seconds") << " of search\n";
    config::set_max_search_degree(max_degree);
  }

  bool all_ok = true;
  if (group == "G") {
    for (int n = 1; n <= max_degree; ++n) {
      SearchReport rep = search_homs_G(n);
      print_search_line(rep, as_json);
      all_ok = all_ok && rep.g_all_alpha_trivial;
    }
  } else if (group == "K") {
    RelatorSpec spec =
        RelatorSpec::unchecked(load_u(use_default || ulist_path.empty(), ulist_path));
    for (int n = 1; n <= max_degree; ++n) {
      SearchReport rep = search_homs_K(n, spec);
      print_search_line(rep, as_json);
      all_ok = all_ok && rep.g_all_alpha_trivial && rep.k_hom_count == 1;
    }
  } else {
    std::ifstream in(group);
    if (!in) throw WordParseError("cannot open presentation file: " + group);
    Presentation pres = parse_presentation(in);
    for (int n = 1; n <= max_degree; ++n) {
      SearchReport rep = search_homs_presentation(pres, n);
      print_search_line(rep, as_json);
      all_ok = all_ok && rep.k_hom_count == 1;
    }
  }
  return all_ok ? EXIT_OK : EXIT_VERIFICATION;
}

int cmd_certify(const hnnforge::USequence& u, int max_degree, std::uint64_t seed,
                bool as_json) {
  using namespace hnnforge;
  CertifyOptions opt;
  opt.u = u;
  opt.max_degree = max_degree;
  opt.seed = seed;
  opt.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
  CertReport rep = run_certification(opt);

  if (as_json) {
    std::cout << json(rep).dump(2) << "\n";
  } else {
    std::cout << "conditions: valid=" << bool_text(rep.spec_report.valid)
              << " alt_sum=" << rep.spec_report.alt_sum << " total=" << rep.spec_report.total
              << " max_window3=" << rep.spec_report.max_window3 << "\n";
    if (rep.relator_tlength)
      std::cout << "relator: t_length=" << *rep.relator_tlength
                << " cyclically_reduced=" << bool_text(*rep.cyclically_reduced)
                << " t_exponent_sum=" << *rep.t_exponent_sum << "\n";
    if (rep.piece_report)
      std::cout << "pieces: max_piece_tlen=" << rep.piece_report->max_piece_tlen
                << " sixth_certified=" << bool_text(rep.piece_report->sixth_certified) << "\n";
    if (rep.star_samples_count)
      std::cout << "star: samples=" << *rep.star_samples_count
                << " passed=" << bool_text(rep.star_samples_passed.value_or(false)) << "\n";
    for (const SearchReport& sr : rep.quotient_reports)
      std::cout << "degree " << sr.degree << ": g_hom_count=" << sr.g_hom_count
                << " k_hom_count=" << sr.k_hom_count << "\n";
    if (rep.certified_order) std::cout << "certified_order: " << *rep.certified_order << "\n";
    std::cout << "verdict: "
              << (rep.certified ? "certified" : "failed(" + rep.failure_reason + ")") << "\n";
  }
  if (rep.certified) return EXIT_OK;
  return rep.failure_reason == "resource_limit" ? EXIT_RESOURCE : EXIT_VERIFICATION;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap_text = std::getenv("HNN_FORGE_BIT_CAP")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(cap_text, &end, 10);
    if (end == cap_text || *end != '\0' || cap == 0) {
      std::cerr << "HNN_FORGE_BIT_CAP must be a positive integer\n";
      return EXIT_INPUT;
    }
    hnnforge::config::set_bit_cap(cap);
  }

  CLI::App app{"Baumslag group calculator and finite-quotient certifier"};
  app.require_subcommand(1);

  std::string word_text;
  bool reduce_json = false;
  CLI::App* reduce = app.add_subcommand("reduce", "Britton-reduce a word in a, b, t");
  reduce->add_option("word", word_text, "word text, e.g. \"t^-1 a t\"");
  reduce->add_flag("--json", reduce_json, "emit a JSON report");

  std::string check_path;
  bool check_default = false, check_json = false;
  CLI::App* check =
      app.add_subcommand("check-relator", "validate conditions (1)-(3) and the piece bound");
  CLI::Option* check_path_opt = check->add_option("ulist", check_path, "u-list file");
  CLI::Option* check_default_opt =
      check->add_flag("--default", check_default, "use the built-in example sequence");
  check_path_opt->excludes(check_default_opt);
  check->add_flag("--json", check_json, "emit a JSON report");

  std::string group = "K", sq_path;
  int sq_degree = 0;
  bool sq_default = false, sq_force = false, sq_json = false;
  CLI::App* sq =
      app.add_subcommand("search-quotients", "enumerate homomorphisms to symmetric groups");
  sq->add_option("--group", group, "K, G, or a presentation file path")->capture_default_str();
  sq->add_option("--max-degree", sq_degree, "largest symmetric-group degree")
      ->required()
      ->check(CLI::PositiveNumber);
  CLI::Option* sq_path_opt = sq->add_option("ulist", sq_path, "u-list file (group K)");
  CLI::Option* sq_default_opt =
      sq->add_flag("--default", sq_default, "use the built-in example sequence");
  sq_path_opt->excludes(sq_default_opt);
  sq->add_flag("--force", sq_force, "allow degrees past the configured cap");
  sq->add_flag("--json", sq_json, "emit one JSON object per degree");

  std::string cert_path;
  int cert_degree = 6;
  std::uint64_t cert_seed = 0;
  bool cert_default = false, cert_json = false;
  CLI::App* cert = app.add_subcommand("certify", "run the full certification pipeline");
  CLI::Option* cert_path_opt = cert->add_option("ulist", cert_path, "u-list file");
  CLI::Option* cert_default_opt =
      cert->add_flag("--default", cert_default, "use the built-in example sequence");
  cert_path_opt->excludes(cert_default_opt);
  cert->add_option("--max-degree", cert_degree, "quotient search depth")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cert->add_option("--seed", cert_seed, "seed for the extra star samples")
      ->capture_default_str();
  cert->add_flag("--json", cert_json, "emit the JSON certification report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {  // --help and friends
    return app.exit(e) == 0 ? EXIT_OK : EXIT_INPUT;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return EXIT_INPUT;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(word_text, reduce_json);
    if (check->parsed()) {
      if (!check_default && check_path.empty()) {
        std::cerr << "check-relator needs a u-list file or --default\n";
        return EXIT_INPUT;
      }
      return cmd_check_relator(load_u(check_default, check_path), check_json);
    }
    if (sq->parsed())
      return cmd_search_quotients(group, sq_degree, sq_default, sq_path, sq_force, sq_json);
    if (cert->parsed()) {
      if (!cert_default && cert_path.empty()) {
        std::cerr << "certify needs a u-list file or --default\n";
        return EXIT_INPUT;
      }
      return cmd_certify(load_u(cert_default, cert_path), cert_degree, cert_seed, cert_json);
    }
    return EXIT_INPUT;
  } catch (const hnnforge::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return EXIT_RESOURCE;
  } catch (const hnnforge::WordParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return EXIT_INPUT;
  } catch (const hnnforge::EmptySequenceError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return EXIT_INPUT;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_INPUT;
  }
}
