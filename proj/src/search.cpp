#include "fewdist/search.hpp"

#include <map>

#include "fewdist/errors.hpp"

namespace fewdist {

namespace {

// Pairwise squared distances compressed to small ids so subset spectra are
// integer counting, not rational arithmetic.
struct DistanceTable {
  std::size_t n = 0;
  std::size_t classes = 0;
  std::vector<int> id;  // n*n, diagonal unused

  int at(std::size_t i, std::size_t j) const { return id[i * n + j]; }
};

DistanceTable build_table(const PointSet& ground) {
  DistanceTable t;
  t.n = ground.size();
  t.id.assign(t.n * t.n, -1);
  std::map<Rational, int> ids;
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = i + 1; j < t.n; ++j) {
      const Rational d = squared_distance(ground[i], ground[j]);
      auto [it, inserted] = ids.emplace(d, static_cast<int>(ids.size()));
      t.id[i * t.n + j] = t.id[j * t.n + i] = it->second;
    }
  }
  t.classes = ids.size();
  return t;
}

struct SearchState {
  const DistanceTable& table;
  unsigned s;
  std::uint64_t budget;
  Int size_cap;  // C(d+s,s); no subset can beat it

  std::vector<std::size_t> chosen;
  std::vector<int> class_count;
  std::size_t distinct = 0;

  std::vector<std::size_t> best;
  std::uint64_t nodes = 0;
  std::uint64_t bound_prunes = 0;
  bool out_of_budget = false;
  bool cap_reached = false;
};

// Distinct-distance bookkeeping for adding/removing the candidate point.
std::size_t classes_added(SearchState& st, std::size_t p) {
  std::size_t added = 0;
  for (std::size_t q : st.chosen) {
    const int c = st.table.at(p, q);
    if (st.class_count[c]++ == 0) ++added;
  }
  return added;
}

void classes_remove(SearchState& st, std::size_t p) {
  for (std::size_t q : st.chosen) {
    --st.class_count[st.table.at(p, q)];
  }
}

void explore(SearchState& st, std::size_t next) {
  if (st.cap_reached || st.out_of_budget) return;
  if (++st.nodes > st.budget) {
    st.out_of_budget = true;
    return;
  }
  if (st.chosen.size() > st.best.size()) {
    st.best = st.chosen;
    if (Int(st.best.size()) >= st.size_cap) {
      // Nothing can beat the bound; the rest of the tree is settled.
      st.cap_reached = true;
      ++st.bound_prunes;
      return;
    }
  }
  if (next == st.table.n) return;
  if (st.chosen.size() + (st.table.n - next) <= st.best.size()) {
    ++st.bound_prunes;
    return;
  }
  // Include next when the spectrum stays within s values.
  const std::size_t added = classes_added(st, next);
  const std::size_t distinct_before = st.distinct;
  st.distinct += added;
  if (st.distinct <= st.s) {
    st.chosen.push_back(next);
    explore(st, next + 1);
    st.chosen.pop_back();
  }
  classes_remove(st, next);
  st.distinct = distinct_before;
  // Exclude next.
  explore(st, next + 1);
}

}  // namespace

SearchResult max_s_distance_subset(const PointSet& ground, unsigned s,
                                   std::uint64_t budget) {
  if (s < 1) throw BadParamsError("search needs s >= 1");
  const DistanceTable table = build_table(ground);
  SearchState st{.table = table,
                 .s = s,
                 .budget = budget,
                 .size_cap = bbs_bound(ground.dimension(), s),
                 .chosen = {},
                 .class_count = std::vector<int>(table.classes, 0),
                 .distinct = 0,
                 .best = {0},  // a single point realizes no distance at all
                 .nodes = 0,
                 .bound_prunes = 0,
                 .out_of_budget = false,
                 .cap_reached = false};
  explore(st, 0);

  if (Int(st.best.size()) > st.size_cap) {
    throw InternalError("subset larger than C(d+s,s) found");
  }
  SearchResult result{.best_indices = st.best,
                      .best_subset = ground.subset(st.best),
                      .best_size = st.best.size(),
                      .nodes_explored = st.nodes,
                      .pruned_by_bound = st.bound_prunes,
                      .exhaustive = !st.out_of_budget};
  return result;
}

std::size_t exhaustive_oracle(const PointSet& ground, unsigned s) {
  const std::size_t n = ground.size();
  if (n > 16) throw SetTooLargeError("oracle limited to 16 points");
  const DistanceTable table = build_table(ground);
  const std::uint32_t total = std::uint32_t{1} << n;
  std::size_t best = 0;
#pragma omp parallel
  {
    std::vector<bool> seen(table.classes, false);
    std::vector<int> marked;
    std::size_t local_best = 0;
#pragma omp for schedule(static)
    for (long m = 1; m < static_cast<long>(total); ++m) {
      const std::uint32_t mask = static_cast<std::uint32_t>(m);
      const std::size_t size =
          static_cast<std::size_t>(__builtin_popcount(mask));
      if (size <= local_best) continue;
      std::size_t distinct = 0;
      bool feasible = true;
      for (std::size_t i = 0; i < n && feasible; ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!(mask >> j & 1)) continue;
          const int c = table.at(i, j);
          if (!seen[c]) {
            seen[c] = true;
            marked.push_back(c);
            if (++distinct > s) {
              feasible = false;
              break;
            }
          }
        }
      }
      for (int c : marked) seen[c] = false;
      marked.clear();
      if (feasible) local_best = size;
    }
#pragma omp critical
    if (local_best > best) best = local_best;
  }
  return best;
}

}  // namespace fewdist
