// ulg: census, closed-form and verification commands for uniquely labelled
// geodesics on Coxeter diagrams.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ulg/census.hpp"
#include "ulg/diagram.hpp"
#include "ulg/dtilde6.hpp"
#include "ulg/element.hpp"
#include "ulg/errors.hpp"
#include "ulg/polynomial_io.hpp"
#include "ulg/treepath.hpp"
#include "ulg/typea.hpp"

namespace {

using namespace ulg;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

CoxeterDiagram resolve_diagram(const std::string& source) {
  try {
    return builtin(source);
  } catch (const InvalidArgument&) {
  }
  if (std::filesystem::exists(source)) return load_diagram_file(source);
  throw InvalidArgument("'" + source +
                        "' is neither a builtin diagram nor a readable file");
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidArgument("cannot open output file: " + out_path);
  out << text;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t single = std::stoul(text);
    return {single, single};
  }
  const std::size_t lo = std::stoul(text.substr(0, dots));
  const std::size_t hi = std::stoul(text.substr(dots + 2));
  if (hi < lo) throw InvalidArgument("empty rank range '" + text + "'");
  return {lo, hi};
}

struct Options {
  std::string diagram;
  std::string word_text;
  std::vector<std::string> words;
  std::string label_text;
  std::string range_text = "3..5";
  std::string out_path;
  std::uint64_t radius = 0;
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed;  // reserved for sampling subcommands
  std::uint64_t cap = 10'000'000;
  std::size_t nmax = 2;
  std::size_t prefix_length = 60;
};

int run_genfun(const Options& options) {
  CoxeterDiagram d = resolve_diagram(options.diagram);
  GeodesicCensus census =
      ball_census(d, options.radius, options.threads, /*keep_levels=*/false);
  LabelPolynomial series = generating_series(census);
  if (series.diagram_name.empty()) series.diagram_name = options.diagram;
  write_output(options.out_path, format_polynomial(series));
  return kExitOk;
}

int run_ulg_check(const Options& options) {
  CoxeterDiagram d = resolve_diagram(options.diagram);
  const Word w = parse_word(d, options.word_text);
  std::ostringstream out;
  const bool reduced = is_reduced(d, w);
  out << "word\t" << format_word(d, w) << '\n';
  out << "length\t" << length(d, evaluate(d, w)) << '\n';
  out << "letters\t" << w.size() << '\n';
  out << "label\t" << format_label(label_of(d, w)) << '\n';
  out << "reduced\t" << (reduced ? "true" : "false") << '\n';
  bool unique = false;
  if (reduced) {
    const Count count =
        geodesic_count(d, evaluate(d, w), label_of(d, w), options.cap);
    out << "geodesics_with_label\t" << count.get_str() << '\n';
    unique = count == 1;
  }
  out << "ulg\t" << (unique ? "true" : "false") << '\n';
  write_output(options.out_path, out.str());
  return kExitOk;
}

int run_reduced_words(const Options& options) {
  CoxeterDiagram d = resolve_diagram(options.diagram);
  const Word w = parse_word(d, options.word_text);
  std::optional<LabelVector> filter;
  if (!options.label_text.empty())
    filter = parse_label(d, options.label_text);
  const auto words =
      reduced_words(d, evaluate(d, w), filter, options.cap);
  std::ostringstream out;
  for (const Word& candidate : words) out << format_word(d, candidate) << '\n';
  write_output(options.out_path, out.str());
  return kExitOk;
}

int run_typea_report(const Options& options) {
  const auto [lo, hi] = parse_range(options.range_text);
  if (lo < 2) throw InvalidArgument("typea-report needs ranks >= 2");
  std::vector<TypeAReportRow> rows;
  bool all_match = true;
  for (std::size_t n = lo; n <= hi; ++n) {
    rows.push_back(typea_report_row(n, options.threads));
    all_match = all_match && rows.back().oracle_matches;
  }
  write_output(options.out_path, format_typea_report(rows));
  return all_match ? kExitOk : kExitVerificationFailure;
}

int run_tree_check(const Options& options) {
  CoxeterDiagram d = resolve_diagram(options.diagram);
  std::vector<Word> words;
  for (const auto& text : options.words) words.push_back(parse_word(d, text));
  write_output(options.out_path, format_tree_report(d, words));
  return kExitOk;
}

int run_dtilde6_verify(const Options& options) {
  using namespace ulg::dtilde6;
  std::ostringstream out;
  bool ok = true;
  auto record = [&](const std::string& name, bool pass,
                    const std::string& observed) {
    out << name << '\t' << observed << '\t' << (pass ? "pass" : "fail") << '\n';
    ok = ok && pass;
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t len = power_length(Variant::w, n);
    record("length(w^" + std::to_string(n) + ")=12n", len == 12 * n,
           std::to_string(len));
  }
  {
    const std::uint64_t len = power_length(Variant::base, 2);
    record("length(base^2)<24", len < 24, std::to_string(len));
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::uint64_t len = power_length(Variant::cox_ij, n);
    record("length(coxIJ^" + std::to_string(n) + ")=6n", len == 6 * n,
           std::to_string(len));
  }
  for (std::size_t n = 1; n <= 4; ++n)
    record("normal-form(n=" + std::to_string(n) + ")",
           normal_form_identity(n).holds(), "");
  for (const auto& [variant, name] :
       {std::pair{Variant::w, "w"}, {Variant::w2, "w2"}, {Variant::w3, "w3"}})
    for (std::size_t n = 1; n <= options.nmax; ++n)
      record("ulg(" + std::string(name) + "^" + std::to_string(n) + ")",
             power_is_ulg(variant, n, options.cap), "");
  const auto results = run_case_corpus(options.cap);
  for (const auto& result : results)
    if (result.status == CaseResult::Status::fail) {
      record("case " + std::to_string(result.id), false, result.observed);
    }
  out << format_case_report(results);
  write_output(options.out_path, out.str());
  return ok ? kExitOk : kExitVerificationFailure;
}

int run_dtilde6_fellow_travel(const Options& options) {
  using namespace ulg::dtilde6;
  const WordFamily family = ulg_word_family();
  std::ostringstream out;
  out << "line\tinterior_min\tmax\traw_unanchored_min\n";
  bool ok = true;
  struct Line {
    const char* name;
    Word period;
    Word anchor;
  };
  for (const auto& line : {Line{"w2", family.w2, w2_anchor()},
                           Line{"w3", family.w3, w3_anchor()}}) {
    const FellowTravelProfile profile = fellow_travel_profile(
        family.w, line.period, line.anchor, options.prefix_length);
    out << line.name << '\t' << profile.min_distance << '\t'
        << profile.max_distance << '\t' << profile.raw_unanchored_min << '\n';
    ok = ok && profile.max_distance <= 5 && profile.min_distance >= 2;
  }
  write_output(options.out_path, out.str());
  return ok ? kExitOk : kExitVerificationFailure;
}

int run_appendix_diff(const Options& options) {
  const auto [lo, hi] = parse_range(options.range_text);
  std::ostringstream out;
  bool ok = true;
  for (std::size_t n = lo; n <= hi; ++n) {
    const std::string path = dtilde6::corpus_directory() +
                             "/typea_ulg_labels_a" + std::to_string(n) + ".txt";
    std::ifstream in(path);
    if (!in) throw InvalidArgument("no shipped label set for rank " +
                                   std::to_string(n) + " (" + path + ")");
    std::set<LabelVector> shipped;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      LabelVector label;
      for (char ch : line) label.push_back(static_cast<std::uint32_t>(ch - '0'));
      if (label.size() != n)
        throw InvalidArgument("bad label width in " + path + ": " + line);
      shipped.insert(label);
    }
    GeodesicCensus census =
        ball_census(build_chain(n), n * (n + 1) / 2, options.threads, false);
    std::set<LabelVector> computed;
    for (const auto& [label, c] : generating_series(census).coefficients) {
      (void)c;
      computed.insert(label);
    }
    if (computed == shipped) {
      out << "A" << n << "\tequal\t" << shipped.size() << " labels\n";
    } else {
      ok = false;
      for (const auto& label : computed)
        if (!shipped.count(label))
          out << "A" << n << "\tcomputed-only\t" << format_label(label) << '\n';
      for (const auto& label : shipped)
        if (!computed.count(label))
          out << "A" << n << "\tshipped-only\t" << format_label(label) << '\n';
    }
  }
  write_output(options.out_path, out.str());
  return ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uniquely labelled geodesics on Coxeter diagrams"};
  app.require_subcommand(1);
  Options options;

  auto add_common = [&](CLI::App* cmd, bool with_diagram) {
    if (with_diagram)
      cmd->add_option("--diagram", options.diagram,
                      "builtin diagram name or diagram file path")
          ->required();
    cmd->add_option("--out", options.out_path, "write output to a file");
    cmd->add_option("--threads", options.threads, "level expansion shards");
    cmd->add_option("--seed", options.seed, "seed for sampled subcommands");
    cmd->add_option("--cap", options.cap, "state/result cap for enumerations");
  };

  CLI::App* genfun = app.add_subcommand(
      "genfun", "generating function of a ball census, polynomial text format");
  add_common(genfun, true);
  genfun->add_option("--radius", options.radius, "ball radius")->required();

  CLI::App* ulg_check = app.add_subcommand(
      "ulg-check", "reduced / label / uniquely-labelled verdict for a word");
  add_common(ulg_check, true);
  ulg_check->add_option("--word", options.word_text, "word text")->required();

  CLI::App* reduced = app.add_subcommand(
      "reduced-words", "all reduced expressions of a word's element");
  add_common(reduced, true);
  reduced->add_option("--word", options.word_text, "word text")->required();
  reduced->add_option("--label", options.label_text,
                      "restrict to a label, comma-separated counts");

  CLI::App* report = app.add_subcommand(
      "typea-report", "closed forms vs census for chain diagrams");
  add_common(report, false);
  report->add_option("--n", options.range_text, "rank range a..b");

  CLI::App* tree = app.add_subcommand(
      "tree-check", "turning profile and structural checks for tree words");
  add_common(tree, true);
  tree->add_option("--word", options.words, "word text (repeatable)")
      ->required();

  CLI::App* dtilde6_cmd =
      app.add_subcommand("dtilde6", "six-vertex tree case study");
  dtilde6_cmd->require_subcommand(1);
  CLI::App* verify =
      dtilde6_cmd->add_subcommand("verify", "run the full verification suite");
  add_common(verify, false);
  verify->add_option("--nmax", options.nmax,
                     "largest power checked for unique labelling");
  CLI::App* fellow = dtilde6_cmd->add_subcommand(
      "fellow-travel", "distance profile between the periodic lines");
  add_common(fellow, false);
  fellow->add_option("--length", options.prefix_length, "prefix length");

  CLI::App* appendix =
      app.add_subcommand("appendix", "shipped corpus maintenance");
  appendix->require_subcommand(1);
  CLI::App* diff = appendix->add_subcommand(
      "diff", "recompute chain label sets and diff against the shipped files");
  add_common(diff, false);
  diff->add_option("--n", options.range_text, "rank range a..b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (genfun->parsed()) return run_genfun(options);
    if (ulg_check->parsed()) return run_ulg_check(options);
    if (reduced->parsed()) return run_reduced_words(options);
    if (report->parsed()) return run_typea_report(options);
    if (tree->parsed()) return run_tree_check(options);
    if (dtilde6_cmd->parsed()) {
      if (verify->parsed()) return run_dtilde6_verify(options);
      if (fellow->parsed()) return run_dtilde6_fellow_travel(options);
    }
    if (appendix->parsed() && diff->parsed()) return run_appendix_diff(options);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
}
