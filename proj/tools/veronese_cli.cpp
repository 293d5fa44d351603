// Command line front end. Every subcommand prints one JSON document (or
// CSV/pretty text) on stdout; errors go to stderr as {"error","message","context"}.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "veronese/certificate.hpp"
#include "veronese/circular.hpp"
#include "veronese/classify.hpp"
#include "veronese/enumerate.hpp"
#include "veronese/geometry.hpp"
#include "veronese/io.hpp"
#include "veronese/line.hpp"

using namespace veronese;
using io::Json;

namespace {

constexpr int exit_invalid = 2;
constexpr int exit_check_failed = 3;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "json";
  std::uint64_t seed = 0;
  int jobs = 1;
  bool check = false;
};

struct InputArgs {
  std::string input;
  std::optional<int> d;
  std::string t;
  std::string xi;
  std::string arcs;
  std::optional<int> dividers;
};

Json read_json_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::parse, "cannot open input file '" + path + "'");
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
  }
}

int require_d(const InputArgs& a) {
  if (!a.d) throw Error(ErrorCode::parse, "--d is required");
  return *a.d;
}

bool has_composition(const InputArgs& a, const Json& file) {
  return !a.arcs.empty() || (file.is_object() && file.contains("arcs"));
}

Json load_file(const InputArgs& a) { return a.input.empty() ? Json() : read_json_input(a.input); }

io::Instance instance_from_args(const InputArgs& a, const Json& file) {
  if (file.is_object()) return io::instance_from_json(file);
  if (a.t.empty() || a.xi.empty()) throw Error(ErrorCode::parse, "an instance needs --t and --xi (or --input)");
  Json j;
  j["d"] = require_d(a);
  j["t"] = Json::array();
  for (const auto& r : io::parse_rational_list(a.t)) j["t"].push_back(io::to_json(r));
  j["xi"] = Json::array();
  for (const auto& r : io::parse_rational_list(a.xi)) j["xi"].push_back(io::to_json(r));
  return io::instance_from_json(j);
}

CircularComposition composition_from_args(const InputArgs& a, const Json& file) {
  if (file.is_object()) return io::composition_from_json(file);
  if (a.arcs.empty()) throw Error(ErrorCode::parse, "a composition needs --arcs (or --input)");
  return CircularComposition(require_d(a), io::parse_int_list(a.arcs), a.dividers);
}

void add_instance_options(CLI::App* sub, InputArgs& a) {
  sub->add_option("--input", a.input, "JSON file ('-' for stdin)");
  sub->add_option("--d", a.d, "dimension");
  sub->add_option("--t", a.t, "parameters, comma separated rationals");
  sub->add_option("--xi", a.xi, "chart coefficients xi_0..xi_d");
}

void add_composition_options(CLI::App* sub, InputArgs& a) {
  sub->add_option("--arcs", a.arcs, "arc sizes, comma separated");
  sub->add_option("--dividers", a.dividers, "divider count (0 for a bare cycle)");
}

// The four line characterizations; throws CheckFailure if they disagree.
Json cross_check(const io::Instance& inst, const FacetComplex* expected) {
  const auto lambda = enumerate_facets_geometric(inst.xi, inst.t);
  const auto det = enumerate_facets_determinant(inst.xi, inst.t);
  const auto decomposition = decompose_chart(inst.xi, inst.t);
  const auto line = enumerate_facets_line(decomposition);
  const auto s123 = enumerate_facets_s123(decomposition);
  Json j;
  j["lambda"] = io::to_json(lambda)["facets"];
  j["determinant"] = io::to_json(det)["facets"];
  j["sigma_pa"] = io::to_json(line)["facets"];
  j["s123"] = io::to_json(s123)["facets"];
  bool ok = lambda == det && det == line && line == s123;
  if (expected != nullptr) ok = ok && expected->facets() == lambda.facets();
  if (!ok) throw CheckFailure(j.dump());
  return j;
}

std::string render_csv(const Json& j) {
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      out << key << '\n';
      for (const auto& row : value) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << (row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
        out << '\n';
      }
    } else if (value.is_array()) {
      out << key;
      for (const auto& x : value) out << ',' << (x.is_string() ? x.get<std::string>() : x.dump());
      out << '\n';
    } else if (value.is_object()) {
      for (const auto& [k2, v2] : value.items()) out << key << '.' << k2 << ',' << v2.dump() << '\n';
    } else {
      out << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return out.str();
}

void emit(const Global& g, const Json& j) {
  if (g.format == "pretty")
    std::cout << j.dump(2) << '\n';
  else if (g.format == "csv")
    std::cout << render_csv(j);
  else
    std::cout << j.dump() << '\n';
}

SignedDecomposition random_decomposition(std::mt19937_64& rng, int d, int n) {
  std::uniform_int_distribution<int> changes_dist(0, std::min(d, n - 1));
  const int k = changes_dist(rng);
  // k distinct cut points among the n - 1 gaps.
  std::vector<int> gaps(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) gaps[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(gaps.begin(), gaps.end(), rng);
  std::vector<int> cuts(gaps.begin(), gaps.begin() + k);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return SignedDecomposition(sizes, std::bernoulli_distribution(0.5)(rng) ? 1 : -1, d);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact facets, counts and combinatorial types of Veronese polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--seed", g.seed, "seed for randomized self-tests");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--check", g.check, "cross-check all facet characterizations");

  InputArgs a;

  auto* facets = app.add_subcommand("facets", "facets of an instance or a composition");
  add_instance_options(facets, a);
  add_composition_options(facets, a);

  auto* decompose = app.add_subcommand("decompose", "chart -> signed decomposition and induced composition");
  add_instance_options(decompose, a);

  std::string sizes;
  int first_sign = 1;
  auto* chart = app.add_subcommand("chart", "signed decomposition -> representative chart");
  chart->add_option("--input", a.input, "JSON file ('-' for stdin)");
  chart->add_option("--d", a.d, "dimension");
  chart->add_option("--sizes", sizes, "interval sizes, comma separated");
  chart->add_option("--first-sign", first_sign, "sign of the first interval")->check(CLI::IsMember({-1, 1}));
  chart->add_option("--t", a.t, "parameters (default 1..n)");

  bool verify = false;
  auto* count = app.add_subcommand("count", "closed-form facet count of a composition");
  count->add_option("--input", a.input, "JSON file ('-' for stdin)");
  count->add_option("--d", a.d, "dimension");
  add_composition_options(count, a);
  count->add_flag("--verify", verify, "also enumerate the facets");

  auto* classify_cmd = app.add_subcommand("classify", "named-type flags of a composition");
  classify_cmd->add_option("--input", a.input, "JSON file ('-' for stdin)");
  classify_cmd->add_option("--d", a.d, "dimension");
  add_composition_options(classify_cmd, a);

  auto* vertices = app.add_subcommand("vertices", "vertex labels of an instance or a composition");
  add_instance_options(vertices, a);
  add_composition_options(vertices, a);

  auto* chart_order = app.add_subcommand("chart-order", "is the chart curve of order d");
  chart_order->add_option("--xi", a.xi, "chart coefficients xi_0..xi_d")->required();
  chart_order->add_option("--d", a.d, "dimension (defaults to len(xi) - 1)");

  std::string d_range;
  std::string n_range;
  auto* enumerate = app.add_subcommand("enumerate", "count combinatorial types per (d, n)");
  enumerate->add_option("--d", d_range, "dimension or range a..b")->required();
  enumerate->add_option("--n", n_range, "vertex count or range a..b")->required();

  std::string facet_text;
  auto* certify = app.add_subcommand("certify", "canonical certificate of a facet complex");
  certify->add_option("--input", a.input, "JSON file {\"facets\": [[...]]} ('-' for stdin)");
  certify->add_option("--facets", facet_text, "facets inline, e.g. 0,1,2;0,1,3");

  int instances = 50;
  auto* selftest = app.add_subcommand("selftest", "seeded random cross-characterization check");
  selftest->add_option("--instances", instances, "number of random instances")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << io::error_json(ErrorCode::parse, e.what()).dump() << '\n';
    return exit_invalid;
  }

  Json context = Json::object();
  try {
    const Json file = load_file(a);
    if (facets->parsed()) {
      if (has_composition(a, file)) {
        const auto c = composition_from_args(a, file);
        const auto f = enumerate_facets_circular(c);
        Json out = io::to_json(f);
        if (g.check) {
          const auto r = realize(c);
          out["check"] = cross_check({c.d(), r.t, r.xi}, &f);
        }
        emit(g, out);
      } else {
        const auto inst = instance_from_args(a, file);
        const auto f = enumerate_facets_geometric(inst.xi, inst.t);
        Json out = io::to_json(f);
        if (g.check) out["check"] = cross_check(inst, &f);
        emit(g, out);
      }
    } else if (decompose->parsed()) {
      const auto inst = instance_from_args(a, file);
      const auto decomposition = decompose_chart(inst.xi, inst.t);
      const auto induced = induce_composition(decomposition);
      Json out;
      out["decomposition"] = io::to_json(decomposition);
      out["composition"] = io::to_json(induced.composition);
      out["tau"] = induced.tau;
      if (g.check) out["check"] = cross_check(inst, nullptr);
      emit(g, out);
    } else if (chart->parsed()) {
      const SignedDecomposition decomposition =
          file.is_object() ? io::decomposition_from_json(file)
                           : SignedDecomposition(io::parse_int_list(sizes), first_sign, require_d(a));
      const GroundSet t = a.t.empty() ? GroundSet::consecutive(1, decomposition.total())
                                      : GroundSet(io::parse_rational_list(a.t));
      const Chart xi = chart_from_decomposition(decomposition, t);
      const io::Instance inst{decomposition.d, t, xi};
      Json out = io::to_json(inst);
      if (g.check) {
        if (decompose_chart(xi, t) != decomposition) throw CheckFailure("chart does not reproduce the decomposition");
        out["check"] = cross_check(inst, nullptr);
      }
      emit(g, out);
    } else if (count->parsed()) {
      const auto c = composition_from_args(a, file);
      Json out;
      out["count"] = facet_count(c);
      if (verify || g.check) {
        const auto enumerated = enumerate_facets_circular(c).size();
        out["enumerated"] = enumerated;
        if (enumerated != facet_count(c)) {
          emit(g, out);
          throw CheckFailure("formula and enumeration disagree");
        }
      }
      emit(g, out);
    } else if (classify_cmd->parsed()) {
      emit(g, io::to_json(classify(composition_from_args(a, file))));
    } else if (vertices->parsed()) {
      Json out;
      if (has_composition(a, file)) {
        const auto c = composition_from_args(a, file);
        out["vertices"] = vertex_set(c);
        if (g.check) {
          const auto r = realize(c);
          if (vertices_geometric(r.xi, r.t) != vertex_set(c)) throw CheckFailure("geometric vertices disagree");
        }
      } else {
        const auto inst = instance_from_args(a, file);
        out["vertices"] = vertices_geometric(inst.xi, inst.t);
        if (g.check) out["check"] = cross_check(inst, nullptr);
      }
      emit(g, out);
    } else if (chart_order->parsed()) {
      const auto xi = io::parse_rational_list(a.xi);
      Vector v(static_cast<Eigen::Index>(xi.size()));
      for (std::size_t i = 0; i < xi.size(); ++i) v(static_cast<Eigen::Index>(i)) = xi[i];
      if (a.d && *a.d + 1 != v.size())
        throw Error(ErrorCode::dimension, "xi has " + std::to_string(v.size()) + " entries, expected d + 1");
      Json out;
      out["d"] = v.size() - 1;
      out["d_order"] = is_power_of_linear_form(v);
      emit(g, out);
    } else if (enumerate->parsed()) {
      const auto [d_lo, d_hi] = io::parse_range(d_range);
      const auto [n_lo, n_hi] = io::parse_range(n_range);
      context["d"] = d_range;
      context["n"] = n_range;
      if (g.format == "csv") std::cout << "d,n,count\n";
      for (int d = d_lo; d <= d_hi; ++d) {
        for (int n = std::max(n_lo, d + 1); n <= n_hi; ++n) {
          const TableRow row = table_row(d, n, g.jobs);
          if (g.format == "csv")
            std::cout << io::csv_line(row) << '\n';
          else if (g.format == "pretty")
            std::cout << "d=" << row.d << " n=" << row.n << " types=" << row.count() << '\n';
          else
            std::cout << io::to_json(row).dump() << '\n';
          std::cout.flush();
        }
      }
    } else if (certify->parsed()) {
      FacetComplex f;
      if (file.is_object()) {
        f = io::facets_from_json(file);
      } else {
        if (facet_text.empty()) throw Error(ErrorCode::parse, "certify needs --facets or --input");
        Json j;
        j["facets"] = Json::array();
        std::stringstream ss(facet_text);
        std::string part;
        while (std::getline(ss, part, ';')) j["facets"].push_back(io::parse_int_list(part));
        f = io::facets_from_json(j);
      }
      Json out;
      out["certificate"] = certificate(f).hex();
      out["vertices"] = f.vertices().size();
      out["facets"] = f.size();
      emit(g, out);
    } else if (selftest->parsed()) {
      std::mt19937_64 rng(g.seed);
      std::uniform_int_distribution<int> d_dist(2, 6);
      for (int i = 0; i < instances; ++i) {
        const int d = d_dist(rng);
        const int n = std::uniform_int_distribution<int>(d + 1, 10)(rng);
        const auto decomposition = random_decomposition(rng, d, n);
        const GroundSet t = GroundSet::consecutive(1, n);
        const io::Instance inst{d, t, chart_from_decomposition(decomposition, t)};
        context["instance"] = io::to_json(inst);
        cross_check(inst, nullptr);
      }
      Json out;
      out["seed"] = g.seed;
      out["instances"] = instances;
      out["ok"] = true;
      emit(g, out);
    }
  } catch (const Error& e) {
    std::cerr << io::error_json(e.code(), e.what(), context).dump() << '\n';
    return exit_invalid;
  } catch (const CheckFailure& e) {
    Json j;
    j["error"] = "cross_check";
    j["message"] = "facet characterizations disagree";
    context["detail"] = e.what();
    j["context"] = context;
    std::cerr << j.dump() << '\n';
    return exit_check_failed;
  } catch (const Json::exception& e) {
    std::cerr << io::error_json(ErrorCode::parse, e.what(), context).dump() << '\n';
    return exit_invalid;
  }
  return 0;
}
