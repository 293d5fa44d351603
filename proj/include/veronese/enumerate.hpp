#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "veronese/certificate.hpp"
#include "veronese/circular.hpp"
#include "veronese/classify.hpp"

namespace veronese {

/// Dihedral classes of compositions of n_generators with l = d mod 2, ..., d
/// dividers, each in canonical_arcs form. Ordered by (l, arcs).
std::vector<CircularComposition> enumerate_compositions(int d, int n_generators);

/// Compositions whose vertex-reduced complexes have n_vertices vertices:
/// l < d with n_vertices points, and l = d with arcs in {1, 2}.
std::vector<CircularComposition> type_candidates(int d, int n_vertices);

/// Number of combinatorial types with n_vertices vertices.
int count_types(int d, int n_vertices, int jobs = 1);

struct TypeFlags {
  bool simplex = false;
  bool cross = false;
  bool stacked_family = false;  ///< any member composition is in the stacked family
  bool cyclic = false;
  bool neighbourly = false;
};

struct TypeEntry {
  CircularComposition representative;  ///< first member in (l, arcs) order
  Certificate certificate;
  TypeFlags flags;
};

struct TableRow {
  int d = 0;
  int n = 0;
  std::vector<TypeEntry> types;  ///< sorted by certificate bytes

  int count() const { return static_cast<int>(types.size()); }
};

TableRow table_row(int d, int n_vertices, int jobs = 1);
std::vector<TableRow> table_report(int d_min, int d_max, int n_min, int n_max, int jobs = 1);

}  // namespace veronese
