#include "ulg/dtilde6.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "ulg/census.hpp"
#include "ulg/element.hpp"
#include "ulg/errors.hpp"

#ifndef ULGCOX_SOURCE_DATA_DIR
#define ULGCOX_SOURCE_DATA_DIR "./data"
#endif

namespace ulg::dtilde6 {

const CoxeterDiagram& diagram() {
  static const CoxeterDiagram d = builtin("Dtilde6-paper");
  return d;
}

namespace {

Word word_from(const std::string& text) { return parse_word(diagram(), text); }

}  // namespace

WordFamily ulg_word_family() {
  return WordFamily{word_from("a1ab3ba2ab4b"), word_from("a1ab4ba2ab3b"),
                    word_from("a2ab3ba1ab4b")};
}

Variant parse_variant(const std::string& token) {
  if (token == "w") return Variant::w;
  if (token == "w2") return Variant::w2;
  if (token == "w3") return Variant::w3;
  if (token == "base") return Variant::base;
  if (token == "coxIJ") return Variant::cox_ij;
  throw InvalidArgument("unknown word variant '" + token +
                        "'; expected w, w2, w3, base or coxIJ");
}

Word variant_word(Variant variant) {
  switch (variant) {
    case Variant::w: return ulg_word_family().w;
    case Variant::w2: return ulg_word_family().w2;
    case Variant::w3: return ulg_word_family().w3;
    case Variant::base: return word_from("a1a2ab3b4b");
    case Variant::cox_ij: return word_from("a34b12");
  }
  throw InvalidArgument("bad variant");
}

std::uint64_t power_length(Variant variant, std::size_t n) {
  if (n == 0) throw InvalidArgument("power must be positive");
  return length(diagram(), evaluate(diagram(), power(variant_word(variant), n)));
}

bool power_is_ulg(Variant variant, std::size_t n, std::uint64_t state_cap) {
  if (n == 0) throw InvalidArgument("power must be positive");
  const Word word = power(variant_word(variant), n);
  if (!is_reduced(diagram(), word)) return false;
  const GroupElement e = evaluate(diagram(), word);
  const LabelVector label = label_of(diagram(), word);
  try {
    return geodesic_count(diagram(), e, label, state_cap) == 1;
  } catch (const ResourceError&) {
    return geodesic_count_by_sweep(diagram(), e, label) == 1;
  }
}

NormalFormCheck normal_form_identity(std::size_t n) {
  if (n == 0) throw InvalidArgument("power must be positive");
  const CoxeterDiagram& d = diagram();
  NormalFormCheck check;
  const Word lhs = power(ulg_word_family().w, n);
  const Word middle = power(word_from("1b23a4"), 2 * n - 1);
  const Word rhs = concat(concat(word_from("1a3"), middle), word_from("2b4"));
  check.element_equal = evaluate(d, lhs) == evaluate(d, rhs);
  check.middle_reduced = is_reduced(d, middle);
  check.length = length(d, evaluate(d, lhs));
  check.length_ok = check.length + 12 >= 12 * n;  // length >= 12n - 12
  return check;
}

Mechanism parse_mechanism(const std::string& token) {
  if (token == "PROOF_HANDLED") return Mechanism::proof_handled;
  if (token == "XYXY_NOT_REDUCED") return Mechanism::xyxy_not_reduced;
  if (token == "XYX_DOTS_XYX_NOT_REDUCED")
    return Mechanism::xyx_dots_xyx_not_reduced;
  if (token == "XY_DOTS_YXY_NOT_ULG") return Mechanism::xy_dots_yxy_not_ulg;
  throw InvalidArgument("unknown mechanism '" + token + "'");
}

std::string to_string(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::proof_handled: return "PROOF_HANDLED";
    case Mechanism::xyxy_not_reduced: return "XYXY_NOT_REDUCED";
    case Mechanism::xyx_dots_xyx_not_reduced: return "XYX_DOTS_XYX_NOT_REDUCED";
    case Mechanism::xy_dots_yxy_not_ulg: return "XY_DOTS_YXY_NOT_ULG";
  }
  return "?";
}

std::string corpus_directory() {
  if (const char* env = std::getenv("ULG_CORPUS_DIR")) return env;
  return ULGCOX_SOURCE_DATA_DIR;
}

std::vector<CaseRecord> load_case_corpus() {
  const std::string path = corpus_directory() + "/dtilde6_cases.tsv";
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open case corpus: " + path);
  std::vector<CaseRecord> records;
  std::string line;
  std::size_t line_no = 0;
  std::set<int> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    CaseRecord record;
    std::string word_text, mechanism_text;
    if (!(fields >> record.id >> word_text >> mechanism_text))
      throw ParseError(line_no, "expected <id>\\t<word>\\t<mechanism>");
    record.word_text = word_text;
    record.word = word_from(word_text);
    record.mechanism = parse_mechanism(mechanism_text);
    if (!seen.insert(record.id).second)
      throw InvalidArgument("duplicate case id " + std::to_string(record.id));
    records.push_back(std::move(record));
  }
  if (records.size() != 68 || *seen.begin() != 1 || *seen.rbegin() != 68)
    throw InvalidArgument("case corpus must hold cases 1..68 exactly");
  std::sort(records.begin(), records.end(),
            [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; });
  return records;
}

namespace {

CaseResult check_not_reduced(const CaseRecord& record) {
  CaseResult result;
  result.id = record.id;
  result.claim = "not reduced";
  const std::uint64_t l = length(diagram(), evaluate(diagram(), record.word));
  result.observed =
      "length " + std::to_string(l) + " of " + std::to_string(record.word.size());
  result.status = l < record.word.size() ? CaseResult::Status::pass
                                         : CaseResult::Status::fail;
  return result;
}

CaseResult check_not_ulg(const CaseRecord& record, std::uint64_t state_cap) {
  CaseResult result;
  result.id = record.id;
  result.claim = "not a u.l.g.";
  const bool reduced = is_reduced(diagram(), record.word);
  if (!reduced) {
    result.observed = "not reduced (hence not a u.l.g.)";
    result.status = CaseResult::Status::pass;
    return result;
  }
  const Count c = geodesic_count(diagram(), evaluate(diagram(), record.word),
                                 label_of(diagram(), record.word), state_cap);
  result.observed = "geodesic count " + c.get_str();
  result.status = c != 1 ? CaseResult::Status::pass : CaseResult::Status::fail;
  return result;
}

CaseResult check_same_element(int id, const std::string& first,
                              const std::string& second) {
  CaseResult result;
  result.id = id;
  result.claim = "two words, same label, same element";
  const Word a = word_from(first), b = word_from(second);
  const bool same_label = label_of(diagram(), a) == label_of(diagram(), b);
  const bool same_element = evaluate(diagram(), a) == evaluate(diagram(), b);
  const bool distinct = a != b;
  result.observed = std::string("same label: ") + (same_label ? "yes" : "no") +
                    ", same element: " + (same_element ? "yes" : "no");
  result.status = same_label && same_element && distinct
                      ? CaseResult::Status::pass
                      : CaseResult::Status::fail;
  return result;
}

CaseResult check_word_not_reduced(int id, const std::string& claim,
                                  const std::string& text) {
  CaseResult result;
  result.id = id;
  result.claim = claim;
  const Word w = word_from(text);
  const std::uint64_t l = length(diagram(), evaluate(diagram(), w));
  result.observed =
      "length " + std::to_string(l) + " of " + std::to_string(w.size());
  result.status =
      l < w.size() ? CaseResult::Status::pass : CaseResult::Status::fail;
  return result;
}

}  // namespace

std::vector<CaseResult> run_case_corpus(std::uint64_t state_cap) {
  const std::vector<CaseRecord> records = load_case_corpus();
  std::vector<CaseResult> results;
  for (const CaseRecord& record : records) {
    switch (record.mechanism) {
      case Mechanism::xyxy_not_reduced:
      case Mechanism::xyx_dots_xyx_not_reduced:
        results.push_back(check_not_reduced(record));
        break;
      case Mechanism::xy_dots_yxy_not_ulg:
        results.push_back(check_not_ulg(record, state_cap));
        break;
      case Mechanism::proof_handled: {
        switch (record.id) {
          case 28:
          case 33:
          case 36:
          case 59:
          case 60:
          case 62:
          case 68:
            results.push_back(check_not_reduced(record));
            break;
          case 27:
            results.push_back(
                check_same_element(27, record.word_text, "a14bab3b4bab3b"));
            break;
          case 52:
            results.push_back(check_word_not_reduced(
                52, "suffix not reduced", "a2ab3b4ba1a2aba1a2a"));
            break;
          case 23:
            results.push_back(check_word_not_reduced(
                23, "extension not reduced", "a1aba2a1ab4b3ba2ab4ba1a"));
            break;
          case 5: {
            // the 3<->4 image of case 6's refutation
            CaseResult result = check_word_not_reduced(
                5, "3<->4 image of case 6 not reduced", "a1a2ab4b4b");
            const Word image =
                apply_letter_swap(diagram(), record.word, "3", "4");
            if (format_word(diagram(), image) != "a1a2ab3b3b")
              result.observed += "; note: image of case 5 is a prefix of case 6";
            results.push_back(result);
            break;
          }
          case 14: {
            // 3<->4 symmetric to the explicitly enumerated a1ab4b3b subtree;
            // the word itself is a u.l.g., its extensions are refuted there.
            CaseResult result;
            result.id = 14;
            result.claim = "3<->4 image opens the enumerated a1ab4b3b subtree";
            const Word image =
                apply_letter_swap(diagram(), record.word, "3", "4");
            const std::string image_text = format_word(diagram(), image);
            const std::string subtree_prefix = "a1ab4b3b";
            const bool prefix_ok = image_text == subtree_prefix;
            result.observed = "image " + image_text +
                              (prefix_ok ? " matches the subtree prefix"
                                         : " does not match " + subtree_prefix);
            result.status = prefix_ok ? CaseResult::Status::pass
                                      : CaseResult::Status::fail;
            results.push_back(result);
            break;
          }
          case 31: {
            CaseResult result;
            result.id = 31;
            result.claim = "reverse of case 23; reversed extension not reduced";
            const bool reversal_matches =
                reversed(record.word) == word_from("a1ab4b3ba2ab4ba1a");
            const Word extension =
                reversed(word_from("a1aba2a1ab4b3ba2ab4ba1a"));
            const std::uint64_t l =
                length(diagram(), evaluate(diagram(), extension));
            result.observed = std::string("reversal matches: ") +
                              (reversal_matches ? "yes" : "no") + ", length " +
                              std::to_string(l) + " of " +
                              std::to_string(extension.size());
            result.status = reversal_matches && l < extension.size()
                                ? CaseResult::Status::pass
                                : CaseResult::Status::fail;
            results.push_back(result);
            break;
          }
          case 17: {
            CaseResult result;
            result.id = 17;
            result.claim = "periodicity argument on the limit word";
            result.observed = "no word-level assertion";
            result.status = CaseResult::Status::prose_only;
            results.push_back(result);
            break;
          }
          default: {
            CaseResult result;
            result.id = record.id;
            result.claim = "unrecognised proof-handled case";
            result.observed = "no check implemented";
            result.status = CaseResult::Status::fail;
            results.push_back(result);
          }
        }
        break;
      }
    }
  }
  return results;
}

std::string format_case_report(const std::vector<CaseResult>& results) {
  std::ostringstream out;
  out << "id\tclaim\tobserved\tstatus\n";
  for (const auto& result : results) {
    const char* status = result.status == CaseResult::Status::pass ? "pass"
                         : result.status == CaseResult::Status::fail
                             ? "fail"
                             : "prose-only";
    out << result.id << '\t' << result.claim << '\t' << result.observed << '\t'
        << status << '\n';
  }
  return out.str();
}

Word w2_anchor() { return word_from("1a23b3"); }
Word w3_anchor() { return word_from("1a3b41"); }

FellowTravelProfile fellow_travel_profile(const Word& line_a, const Word& line_b,
                                          const Word& anchor,
                                          std::size_t prefix_length) {
  const CoxeterDiagram& d = diagram();
  const std::size_t n = prefix_length;

  auto line_points = [&](const Word& period, const GroupElement& start) {
    std::vector<GroupElement> points;
    points.reserve(n + 1);
    GroupElement cur = start;
    points.push_back(cur);
    for (std::size_t i = 0; i < n; ++i) {
      cur = right_multiply(d, cur, period[i % period.size()]);
      points.push_back(cur);
    }
    return points;
  };

  const std::vector<GroupElement> a_points = line_points(line_a, identity(d));
  const std::vector<GroupElement> b_points =
      line_points(line_b, evaluate(d, anchor));

  std::vector<GroupElement> a_inverses;
  a_inverses.reserve(a_points.size());
  for (const auto& u : a_points) a_inverses.push_back(inverse(d, u));

  const std::size_t margin = anchor.size();
  constexpr std::size_t half_window = 12;  // window width 25 >= 24

  auto windowed_min = [&](std::size_t i) {
    std::uint64_t best = UINT64_MAX;
    const std::size_t lo = i > half_window ? i - half_window : 0;
    const std::size_t hi = std::min(n, i + half_window);
    for (std::size_t j = lo; j <= hi; ++j)
      best = std::min(best, length(d, multiply(d, a_inverses[j], b_points[i])));
    return best;
  };

  FellowTravelProfile profile;
  profile.prefix_length = n;
  profile.interior_begin = margin;
  profile.min_distance = UINT64_MAX;
  profile.max_distance = 0;
  for (std::size_t i = margin; i + margin <= n; ++i) {
    const std::uint64_t m = windowed_min(i);
    profile.min_distances.push_back(m);
    profile.min_distance = std::min(profile.min_distance, m);
    profile.max_distance = std::max(profile.max_distance, m);
  }

  // transparency: the same scan with line B left at the identity
  const std::vector<GroupElement> raw_points = line_points(line_b, identity(d));
  std::uint64_t raw_min = UINT64_MAX;
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t lo = i > half_window ? i - half_window : 0;
    const std::size_t hi = std::min(n, i + half_window);
    for (std::size_t j = lo; j <= hi; ++j)
      raw_min = std::min(raw_min,
                         length(d, multiply(d, a_inverses[j], raw_points[i])));
  }
  profile.raw_unanchored_min = raw_min;
  return profile;
}

Word apply_letter_swap(const CoxeterDiagram& d, const Word& w,
                       const std::string& x, const std::string& y) {
  const std::uint32_t xi = static_cast<std::uint32_t>(d.index_of(x));
  const std::uint32_t yi = static_cast<std::uint32_t>(d.index_of(y));
  Word out = w;
  for (auto& g : out) {
    if (g == xi)
      g = yi;
    else if (g == yi)
      g = xi;
  }
  return out;
}

}  // namespace ulg::dtilde6
