#include "veronese/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "veronese/error.hpp"

namespace veronese {

namespace {

// Calls visit(parts) for each sequence of `count` integers in [lo, hi] summing to total.
template <typename Visit>
void for_each_composition(int total, int count, int lo, int hi, Visit&& visit) {
  std::vector<int> parts(static_cast<std::size_t>(count));
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == count) {
      if (left == 0) visit(std::as_const(parts));
      return;
    }
    const int rest = count - j - 1;
    for (int v = lo; v <= std::min(hi, left - rest * lo); ++v) {
      parts[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, left - v);
    }
  };
  if (count > 0) rec(rec, 0, total);
}

void add_canonical_classes(int d, int l, int total, int lo, int hi, std::vector<CircularComposition>& out) {
  for_each_composition(total, l, lo, hi, [&](const std::vector<int>& arcs) {
    CircularComposition c(d, arcs, l);
    if (canonical_arcs(c) == c) out.push_back(std::move(c));
  });
}

void require_dimension(int d, int n) {
  if (d < 1) throw Error(ErrorCode::domain, "dimension must be positive");
  if (n < d + 1)
    throw Error(ErrorCode::underdetermined,
                "need n >= d + 1, got n = " + std::to_string(n) + ", d = " + std::to_string(d));
}

// Runs work(i) for i in [0, count) over `jobs` threads; results are written by index.
template <typename Work>
void parallel_for(std::size_t count, int jobs, Work&& work) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Member {
  FacetComplex complex;
  ComplexInvariant inv;
  std::optional<Certificate> cert;
};

std::vector<Member> build_members(const std::vector<CircularComposition>& candidates, int jobs) {
  std::vector<Member> members(candidates.size());
  parallel_for(candidates.size(), jobs, [&](std::size_t i) {
    members[i].complex = enumerate_facets_circular(candidates[i]).restricted_to_vertices();
    members[i].inv = invariant(members[i].complex);
  });
  return members;
}

// Members sharing an invariant with another member need full certificates.
std::vector<std::size_t> ambiguous_members(const std::vector<Member>& members) {
  std::map<ComplexInvariant, int> seen;
  for (const auto& m : members) ++seen[m.inv];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (seen[members[i].inv] > 1) out.push_back(i);
  return out;
}

}  // namespace

std::vector<CircularComposition> enumerate_compositions(int d, int n_generators) {
  require_dimension(d, n_generators);
  std::vector<CircularComposition> out;
  for (int l = d % 2; l <= d; l += 2) {
    if (l == 0)
      out.emplace_back(d, std::vector<int>{n_generators}, 0);
    else
      add_canonical_classes(d, l, n_generators, 1, n_generators, out);
  }
  return out;
}

std::vector<CircularComposition> type_candidates(int d, int n_vertices) {
  require_dimension(d, n_vertices);
  std::vector<CircularComposition> out;
  for (int l = d % 2; l < d; l += 2) {
    if (l == 0)
      out.emplace_back(d, std::vector<int>{n_vertices}, 0);
    else
      add_canonical_classes(d, l, n_vertices, 1, n_vertices, out);
  }
  add_canonical_classes(d, d, n_vertices, 1, 2, out);
  return out;
}

int count_types(int d, int n_vertices, int jobs) {
  const auto candidates = type_candidates(d, n_vertices);
  auto members = build_members(candidates, jobs);
  const auto ambiguous = ambiguous_members(members);
  parallel_for(ambiguous.size(), jobs, [&](std::size_t i) {
    auto& m = members[ambiguous[i]];
    m.cert = certificate(m.complex);
  });
  std::map<ComplexInvariant, std::vector<Certificate>> buckets;
  for (const auto& m : members) {
    auto& certs = buckets[m.inv];
    if (m.cert && std::find(certs.begin(), certs.end(), *m.cert) == certs.end()) certs.push_back(*m.cert);
  }
  int count = 0;
  for (const auto& [inv, certs] : buckets) count += certs.empty() ? 1 : static_cast<int>(certs.size());
  return count;
}

TableRow table_row(int d, int n_vertices, int jobs) {
  const auto candidates = type_candidates(d, n_vertices);
  auto members = build_members(candidates, jobs);
  parallel_for(members.size(), jobs, [&](std::size_t i) { members[i].cert = certificate(members[i].complex); });

  const Certificate cyclic_cert =
      certificate(enumerate_facets_circular(CircularComposition::cyclic(d, n_vertices)));

  // Deterministic merge: candidates are already in (l, arcs) order.
  std::map<Certificate, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < members.size(); ++i) groups[*members[i].cert].push_back(i);

  TableRow row{d, n_vertices, {}};
  std::vector<std::pair<Certificate, std::vector<std::size_t>>> ordered(groups.begin(), groups.end());
  row.types.resize(ordered.size());
  parallel_for(ordered.size(), jobs, [&](std::size_t g) {
    const auto& [cert, idx] = ordered[g];
    const FacetComplex& f = members[idx.front()].complex;
    TypeEntry entry;
    entry.representative = candidates[idx.front()];
    entry.certificate = cert;
    entry.flags.simplex = n_vertices == d + 1;
    entry.flags.cross = is_cross_polytope(f);
    entry.flags.cyclic = cert == cyclic_cert;
    entry.flags.neighbourly = d < 2 || is_k_neighbourly(f, d / 2);
    if (d >= 3)
      for (std::size_t i : idx) entry.flags.stacked_family = entry.flags.stacked_family || is_stacked_family(candidates[i]);
    row.types[g] = std::move(entry);
  });
  return row;
}

std::vector<TableRow> table_report(int d_min, int d_max, int n_min, int n_max, int jobs) {
  std::vector<TableRow> out;
  for (int d = d_min; d <= d_max; ++d)
    for (int n = std::max(n_min, d + 1); n <= n_max; ++n) out.push_back(table_row(d, n, jobs));
  return out;
}

}  // namespace veronese
