#include "veronese/certificate.hpp"

#include <algorithm>
#include <map>

#include "veronese/error.hpp"

namespace veronese {

std::string Certificate::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

namespace {

struct Incidence {
  int nv = 0;
  int d = 0;
  std::vector<Facet> facets;
  std::vector<std::vector<int>> incident;  // vertex -> facet indices
};

Incidence make_incidence(const FacetComplex& f) {
  if (f.empty()) throw Error(ErrorCode::degenerate_complex, "certificate of an empty complex");
  const FacetComplex r = f.restricted_to_vertices();
  Incidence inc;
  inc.nv = r.n_labels();
  inc.d = r.d();
  inc.facets = r.facets();
  inc.incident.resize(static_cast<std::size_t>(inc.nv));
  for (std::size_t i = 0; i < inc.facets.size(); ++i)
    for (int v : inc.facets[i]) inc.incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  return inc;
}

// Replaces colours by dense ranks of (colour, multiset of incident facet
// colour-multisets) until the number of cells stops growing. Ranks follow the
// key order, so the result only depends on the structure and the input colours.
std::vector<int> refine(const Incidence& inc, std::vector<int> colour) {
  const auto nv = static_cast<std::size_t>(inc.nv);
  int cells = -1;
  while (true) {
    std::vector<std::vector<int>> facet_key(inc.facets.size());
    for (std::size_t i = 0; i < inc.facets.size(); ++i) {
      auto& key = facet_key[i];
      for (int v : inc.facets[i]) key.push_back(colour[static_cast<std::size_t>(v)]);
      std::sort(key.begin(), key.end());
    }
    std::vector<std::pair<int, std::vector<std::vector<int>>>> vertex_key(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      vertex_key[v].first = colour[v];
      for (int fi : inc.incident[v]) vertex_key[v].second.push_back(facet_key[static_cast<std::size_t>(fi)]);
      std::sort(vertex_key[v].second.begin(), vertex_key[v].second.end());
    }
    std::vector<std::size_t> order(nv);
    for (std::size_t v = 0; v < nv; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vertex_key[a] < vertex_key[b]; });
    std::vector<int> next(nv);
    int rank = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      if (i > 0 && vertex_key[order[i]] != vertex_key[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const int new_cells = nv == 0 ? 0 : rank + 1;
    colour = std::move(next);
    if (new_cells == cells) return colour;
    cells = new_cells;
  }
}

std::vector<Facet> encode(const Incidence& inc, const std::vector<int>& label) {
  std::vector<Facet> out;
  out.reserve(inc.facets.size());
  for (const auto& f : inc.facets) {
    Facet g;
    for (int v : f) g.push_back(label[static_cast<std::size_t>(v)]);
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Search {
  const Incidence& inc;
  bool have_best = false;
  std::vector<Facet> best;
  std::vector<int> best_label;
  // Automorphisms found as pairs of leaves with equal encodings.
  std::vector<std::vector<int>> automorphisms;
  std::vector<int> path;

  void leaf(const std::vector<int>& label) {
    auto enc = encode(inc, label);
    if (!have_best || enc < best) {
      best = std::move(enc);
      best_label = label;
      have_best = true;
    } else if (enc == best) {
      std::vector<int> inverse(label.size());
      for (std::size_t w = 0; w < label.size(); ++w) inverse[static_cast<std::size_t>(best_label[w])] = static_cast<int>(w);
      std::vector<int> sigma(label.size());
      for (std::size_t v = 0; v < label.size(); ++v) sigma[v] = inverse[static_cast<std::size_t>(label[v])];
      automorphisms.push_back(std::move(sigma));
    }
  }

  // Orbit representatives under the automorphisms that fix the current path pointwise.
  std::vector<int> orbits() const {
    std::vector<int> parent(static_cast<std::size_t>(inc.nv));
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = static_cast<int>(v);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      return v;
    };
    for (const auto& sigma : automorphisms) {
      bool fixes = true;
      for (int p : path) fixes = fixes && sigma[static_cast<std::size_t>(p)] == p;
      if (!fixes) continue;
      for (std::size_t v = 0; v < sigma.size(); ++v) parent[static_cast<std::size_t>(find(static_cast<int>(v)))] = find(sigma[v]);
    }
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = find(static_cast<int>(v));
    return parent;
  }

  void run(const std::vector<int>& colour) {
    // First non-singleton cell in colour order.
    std::map<int, std::vector<int>> cells;
    for (std::size_t v = 0; v < colour.size(); ++v) cells[colour[v]].push_back(static_cast<int>(v));
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (target == nullptr) {
      leaf(colour);
      return;
    }
    std::vector<int> explored;
    for (int v : *target) {
      if (!explored.empty()) {
        const auto orbit = orbits();
        const bool known = std::any_of(explored.begin(), explored.end(), [&](int e) {
          return orbit[static_cast<std::size_t>(e)] == orbit[static_cast<std::size_t>(v)];
        });
        if (known) continue;
      }
      std::vector<int> split(colour.size());
      for (std::size_t w = 0; w < colour.size(); ++w) split[w] = 2 * colour[w] + 1;
      split[static_cast<std::size_t>(v)] -= 1;
      path.push_back(v);
      run(refine(inc, std::move(split)));
      path.pop_back();
      explored.push_back(v);
    }
  }
};

}  // namespace

FacetComplex canonical_form(const FacetComplex& f) {
  const Incidence inc = make_incidence(f);
  Search search{inc, false, {}, {}, {}, {}};
  search.run(refine(inc, std::vector<int>(static_cast<std::size_t>(inc.nv), 0)));
  return FacetComplex(inc.nv, inc.d, std::move(search.best));
}

Certificate certificate(const FacetComplex& f) {
  const FacetComplex canon = canonical_form(f);
  std::vector<std::uint8_t> bytes;
  auto put32 = [&](std::uint32_t x) {
    for (int shift = 24; shift >= 0; shift -= 8) bytes.push_back(static_cast<std::uint8_t>(x >> shift));
  };
  // Labels fit in a byte at desk scale; wider complexes switch to 4 bytes per label.
  const bool wide = canon.n_labels() > 255;
  bytes.push_back(wide ? 1 : 0);
  put32(static_cast<std::uint32_t>(canon.d()));
  put32(static_cast<std::uint32_t>(canon.n_labels()));
  put32(static_cast<std::uint32_t>(canon.size()));
  for (const auto& facet : canon.facets()) {
    for (int v : facet) {
      if (wide)
        put32(static_cast<std::uint32_t>(v));
      else
        bytes.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return Certificate(std::move(bytes));
}

ComplexInvariant invariant(const FacetComplex& f) {
  if (f.empty()) throw Error(ErrorCode::degenerate_complex, "invariant of an empty complex");
  const FacetComplex r = f.restricted_to_vertices();
  ComplexInvariant out;
  out.d = r.d();
  out.vertices = r.n_labels();
  out.facets = r.size();
  out.degrees.assign(static_cast<std::size_t>(r.n_labels()), 0);
  for (const auto& facet : r.facets())
    for (int v : facet) ++out.degrees[static_cast<std::size_t>(v)];
  std::sort(out.degrees.begin(), out.degrees.end());
  out.intersections.assign(static_cast<std::size_t>(r.d()) + 1, 0);
  const auto& fs = r.facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      std::size_t common = 0;
      auto a = fs[i].begin();
      auto b = fs[j].begin();
      while (a != fs[i].end() && b != fs[j].end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++common;
          ++a;
          ++b;
        }
      }
      ++out.intersections[common];
    }
  }
  return out;
}

}  // namespace veronese
