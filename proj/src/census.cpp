#include "ulg/census.hpp"

#include <algorithm>
#include <thread>

#include "ulg/errors.hpp"

namespace ulg {

namespace {

LabelVector bumped(const LabelVector& label, std::size_t g) {
  LabelVector r = label;
  ++r[g];
  return r;
}

// One shard of a level expansion: successors of entries [begin, end).
void expand_range(const CoxeterDiagram& d,
                  const std::vector<const std::pair<const GroupElement,
                                                    GeodesicCensus::Record>*>& entries,
                  std::size_t begin, std::size_t end,
                  GeodesicCensus::Level& out) {
  const std::size_t n = d.rank();
  for (std::size_t idx = begin; idx < end; ++idx) {
    const auto& [e, record] = *entries[idx];
    for (std::size_t g = 0; g < n; ++g) {
      if (is_right_descent(d, e, g)) continue;
      GroupElement succ = right_multiply(d, e, g);
      auto& target = out[succ];
      for (const auto& [label, c] : record) target[bumped(label, g)] += c;
    }
  }
}

bool has_any_successor(const CoxeterDiagram& d, const GeodesicCensus::Level& level) {
  for (const auto& [e, record] : level) {
    (void)record;
    for (std::size_t g = 0; g < d.rank(); ++g)
      if (!is_right_descent(d, e, g)) return true;
  }
  return false;
}

}  // namespace

GeodesicCensus::GeodesicCensus(const CoxeterDiagram& d, const CensusOptions& options)
    : diagram_(d), radius_(options.radius), keep_levels_(options.keep_levels) {
  series_.radius = radius_;
  series_.diagram_name = d.display_name();

  Level frontier;
  frontier.emplace(identity(d), Record{{LabelVector(d.rank(), 0), Count(1)}});
  std::uint64_t pair_budget = options.max_pairs;
  std::uint64_t pairs_used = 0;

  const unsigned threads = std::max(1u, options.threads);

  auto fold_level = [&](const Level& level) {
    level_sizes_.push_back(level.size());
    element_count_ += level.size();
    for (const auto& [e, record] : level) {
      (void)e;
      Count total = 0;
      for (const auto& [label, c] : record) {
        if (c == 1) ++series_.coefficients[label];
        total += c;
      }
      if (total == 1) ++unique_expression_elements_;
    }
  };

  for (std::uint64_t level_index = 0;; ++level_index) {
    for (const auto& [e, record] : frontier) {
      (void)e;
      pairs_used += record.size();
    }
    if (pairs_used > pair_budget)
      throw ResourceError("census budget exceeded at level " +
                              std::to_string(level_index),
                          level_index);
    fold_level(frontier);

    if (level_index == radius_) {
      complete_ = !has_any_successor(diagram_, frontier);
      if (keep_levels_) levels_.push_back(std::move(frontier));
      break;
    }

    std::vector<const std::pair<const GroupElement, Record>*> entries;
    entries.reserve(frontier.size());
    for (const auto& entry : frontier) entries.push_back(&entry);

    Level next;
    if (threads == 1 || entries.size() < 2 * threads) {
      expand_range(diagram_, entries, 0, entries.size(), next);
    } else {
      std::vector<Level> partial(threads);
      std::vector<std::thread> workers;
      const std::size_t chunk = (entries.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(entries.size(), t * chunk);
        const std::size_t end = std::min(entries.size(), begin + chunk);
        workers.emplace_back([&, begin, end, t] {
          expand_range(diagram_, entries, begin, end, partial[t]);
        });
      }
      for (auto& w : workers) w.join();
      // Exact integer addition keyed on elements: merge order cannot matter.
      for (auto& part : partial)
        for (auto& [e, record] : part) {
          auto& target = next[e];
          for (auto& [label, c] : record) target[label] += c;
        }
    }

    if (keep_levels_)
      levels_.push_back(std::move(frontier));
    frontier = std::move(next);
    if (frontier.empty()) {
      complete_ = true;
      break;
    }
  }
  series_.complete = complete_;
}

Count GeodesicCensus::count(const GroupElement& e, const LabelVector& label) const {
  const std::uint64_t deg = degree(label);
  if (deg >= levels().size()) return 0;
  const Level& level = levels()[deg];
  auto it = level.find(e);
  if (it == level.end()) return 0;
  auto jt = it->second.find(label);
  return jt == it->second.end() ? Count(0) : jt->second;
}

const std::vector<GeodesicCensus::Level>& GeodesicCensus::levels() const {
  if (!keep_levels_)
    throw InvalidState("census was built without level retention");
  return levels_;
}

GeodesicCensus ball_census(const CoxeterDiagram& d, std::uint64_t radius,
                           unsigned threads, bool keep_levels) {
  CensusOptions options;
  options.radius = radius;
  options.threads = threads;
  options.keep_levels = keep_levels;
  return GeodesicCensus(d, options);
}

LabelPolynomial generating_series(const GeodesicCensus& census) {
  return census.series();
}

namespace {

struct StateKey {
  std::vector<std::int64_t> matrix;
  LabelVector remaining;
  bool operator==(const StateKey& o) const {
    return matrix == o.matrix && remaining == o.remaining;
  }
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& s) const {
    std::size_t h = ElementHash{}(s.matrix);
    for (auto c : s.remaining) {
      h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Count count_rec(const CoxeterDiagram& d, const GroupElement& e,
                const LabelVector& remaining,
                std::unordered_map<StateKey, Count, StateKeyHash>& memo,
                std::uint64_t state_cap) {
  if (e.is_identity()) return 1;  // remaining is all zero here by construction
  StateKey key{e.key(), remaining};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  if (memo.size() >= state_cap)
    throw ResourceError("geodesic_count state cap exceeded", memo.size());
  Count total = 0;
  for (std::size_t g = 0; g < d.rank(); ++g) {
    if (remaining[g] == 0 || !is_right_descent(d, e, g)) continue;
    LabelVector rest = remaining;
    --rest[g];
    total += count_rec(d, right_multiply(d, e, g), rest, memo, state_cap);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Count geodesic_count(const CoxeterDiagram& d, const GroupElement& e,
                     const LabelVector& label, std::uint64_t state_cap) {
  if (label.size() != d.rank())
    throw InvalidArgument("label arity does not match diagram rank");
  if (degree(label) != length(d, e)) return 0;
  std::unordered_map<StateKey, Count, StateKeyHash> memo;
  return count_rec(d, e, label, memo, state_cap);
}

Count geodesic_count_by_sweep(const CoxeterDiagram& d, const GroupElement& e,
                              const LabelVector& label, std::uint64_t max_pairs) {
  if (label.size() != d.rank())
    throw InvalidArgument("label arity does not match diagram rank");
  const std::uint64_t target_degree = degree(label);
  if (target_degree != length(d, e)) return 0;
  GeodesicCensus::Level frontier;
  frontier.emplace(identity(d), GeodesicCensus::Record{
                                    {LabelVector(d.rank(), 0), Count(1)}});
  std::uint64_t pairs = 0;
  for (std::uint64_t k = 0; k < target_degree; ++k) {
    GeodesicCensus::Level next;
    for (const auto& [u, record] : frontier) {
      for (std::size_t g = 0; g < d.rank(); ++g) {
        if (is_right_descent(d, u, g)) continue;
        GroupElement succ = right_multiply(d, u, g);
        for (const auto& [partial, c] : record) {
          if (partial[g] + 1 > label[g]) continue;  // prune over-budget labels
          next[succ][bumped(partial, g)] += c;
          if (++pairs > max_pairs)
            throw ResourceError("label-bounded sweep budget exceeded", k);
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return 0;
  }
  auto it = frontier.find(e);
  if (it == frontier.end()) return 0;
  auto jt = it->second.find(label);
  return jt == it->second.end() ? Count(0) : jt->second;
}

bool is_ulg(const CoxeterDiagram& d, const Word& w, std::uint64_t state_cap) {
  if (!is_reduced(d, w)) return false;
  return geodesic_count(d, evaluate(d, w), label_of(d, w), state_cap) == 1;
}

namespace {

void enumerate_rec(const CoxeterDiagram& d, const GroupElement& e,
                   std::optional<LabelVector>& remaining, Word& suffix_rev,
                   std::vector<Word>& out, std::uint64_t cap) {
  if (e.is_identity()) {
    if (out.size() >= cap)
      throw ResourceError("reduced_words cap exceeded; partial count " +
                              std::to_string(out.size()),
                          out.size());
    out.emplace_back(suffix_rev.rbegin(), suffix_rev.rend());
    return;
  }
  for (std::size_t g = 0; g < d.rank(); ++g) {
    if (remaining && (*remaining)[g] == 0) continue;
    if (!is_right_descent(d, e, g)) continue;
    if (remaining) --(*remaining)[g];
    suffix_rev.push_back(static_cast<std::uint32_t>(g));
    enumerate_rec(d, right_multiply(d, e, g), remaining, suffix_rev, out, cap);
    suffix_rev.pop_back();
    if (remaining) ++(*remaining)[g];
  }
}

}  // namespace

std::vector<Word> reduced_words(const CoxeterDiagram& d, const GroupElement& e,
                                const std::optional<LabelVector>& label_filter,
                                std::uint64_t cap) {
  std::optional<LabelVector> remaining = label_filter;
  if (remaining && remaining->size() != d.rank())
    throw InvalidArgument("label arity does not match diagram rank");
  if (remaining && degree(*remaining) != length(d, e)) return {};
  std::vector<Word> out;
  Word suffix_rev;
  enumerate_rec(d, e, remaining, suffix_rev, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t unique_geodesic_elements(const GeodesicCensus& census) {
  if (!census.complete())
    throw InvalidState("unique_geodesic_elements requires a complete census");
  return census.unique_expression_elements();
}

}  // namespace ulg
