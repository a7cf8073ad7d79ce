#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "render.hpp"
#include "roelcke/epsnet.hpp"
#include "roelcke/gaps.hpp"
#include "roelcke/json_io.hpp"
#include "roelcke/quotdist.hpp"
#include "roelcke/sampling.hpp"

namespace roelcke::cli {

namespace {

namespace io = roelcke::json;
using nlohmann::json;

struct Config {
  std::string tol = "1/256";
  std::optional<std::size_t> grid;
  std::size_t net = 8;
  std::uint64_t seed = 0;
  std::string format;
  std::string out;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

json read_json(const std::string& path, std::istream& in) { return io::parse(read_text(path, in)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Rational positive_rational(const std::string& text, const char* what) {
  Rational r = parse_rational(text);
  if (r <= 0) throw InputError(std::string(what) + " must be positive");
  return r;
}

void require_json(const Config& c) {
  if (!c.format.empty() && c.format != "json") throw InputError("only plot supports --format " + c.format);
}

json rationals(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

std::string cmd_canon(const Config& c, const std::string& input, std::istream& in) {
  require_json(c);
  const auto [t, w] = io::tuple_from_json(read_json(input, in));
  const auto r = canonicalize(t, w);
  return dump({{"canonical", io::to_json(r.canonical)}, {"mean", io::to_json(r.mean)}});
}

std::string cmd_dist(const Config& c, const std::string& a_path, const std::string& b_path, std::istream& in) {
  require_json(c);
  const Rational tol = positive_rational(c.tol, "--tol");
  const auto a = io::tuple_from_json(read_json(a_path, in)).first;
  const auto b = io::tuple_from_json(read_json(b_path, in)).first;
  if (a.size() != b.size()) throw InputError("tuple lengths differ");
  json j = io::to_json(quot_dist(a, b, tol));
  j["tol"] = to_string(tol);
  j["canonical_sup_dist"] =
      to_string(tuple_sup_dist(canonicalize(a).canonical.tuple(), canonicalize(b).canonical.tuple()));
  if (c.grid) {
    if (*c.grid == 0) throw InputError("--grid must be positive");
    j["oracle_upper_bound"] = to_string(brute_oracle(a, b, *c.grid));
    j["grid"] = *c.grid;
  }
  return dump(j);
}

std::string cmd_epsnet(const Config& c, std::size_t n, std::size_t samples, bool points, std::size_t limit) {
  require_json(c);
  json j{{"n", n}, {"m", c.net}, {"size", epsnet_size(n, c.net).get_str()}};
  if (points) {
    json pts = json::array();
    for (const auto& p : epsnet_points(n, c.net, limit)) pts.push_back(io::to_json(p));
    j["points"] = std::move(pts);
  }
  if (n == 2 && samples > 0) {
    Sampler rng(c.seed);
    const auto r = check_covering_s2(c.net, samples, rng);
    j["covering"] = {{"samples", r.samples},
                     {"covered", r.covered},
                     {"max_distance", to_string(r.max_distance)},
                     {"bound", to_string(r.bound)},
                     {"passed", r.passed()}};
    if (!r.passed()) {
      throw InvariantViolation("covering check failed: max distance " + to_string(r.max_distance) + " exceeds " +
                               to_string(r.bound));
    }
  }
  return dump(j);
}

std::string cmd_sample(const Config& c, std::size_t n, std::size_t count) {
  require_json(c);
  if (n == 0) throw InputError("--n must be positive");
  Sampler rng(c.seed);
  json samples = json::array();
  for (std::size_t k = 0; k < count; ++k) samples.push_back(io::to_json(rng.canonical(n)));
  return dump({{"n", n}, {"seed", c.seed}, {"samples", std::move(samples)}});
}

std::string cmd_plot(const Config& c, const std::string& input, std::istream& in) {
  const json doc = read_json(input, in);
  if (c.format.empty() || c.format == "svg") return render::svg(doc);
  if (c.format == "csv") return render::csv(doc);
  throw InputError("plot supports --format svg or csv");
}

std::string cmd_witness(const Config& c, const std::string& input, std::istream& in) {
  require_json(c);
  const PLHomeo g = io::homeo_from_json(read_json(input, in));
  const auto w = uniform_witness(g);
  const Rational d = sup_dist(compose(w.witness, w.shift.inverse()), w.witness);
  if (d != 1) throw InvariantViolation("witness distance is " + to_string(d) + ", not 1");
  return dump({{"witness", io::to_json(w.witness)},
               {"shift", io::to_json(w.shift)},
               {"used_inverse", w.used_inverse},
               {"t", to_string(w.t)},
               {"distance", to_string(d)}});
}

std::string cmd_gaps(const Config& c, const std::string& op, const std::string& input, std::istream& in) {
  require_json(c);
  const json doc = read_json(input, in);
  const GapSet g = io::gapset_from_json(doc);
  if (op == "merge") return dump(io::to_json(g));
  if (op == "isolated") return dump({{"isolated_points", rationals(isolated_points(g))}});
  if (op == "extreme") {
    const auto p = extreme_pair_all(g);
    return dump({{"xi", io::to_json(p.xi)}, {"zeta", io::to_json(p.zeta)}});
  }
  if (op == "collapse") return dump({{"chi", io::to_json(collapse_map(g))}});
  if (op == "equiv") {
    const auto t = io::tuple_from_json(doc).first;
    if (t.size() != 2) throw InputError("equiv needs exactly two components");
    return dump({{"equivalent", equiv_test(t[0], t[1], g)}});
  }
  throw InputError("unknown --op " + op);
}

std::string cmd_veps(const Config& c, const std::string& eps_text, const std::string& input, std::istream& in) {
  require_json(c);
  const Rational tol = positive_rational(c.tol, "--tol");
  const Rational eps = positive_rational(eps_text, "--eps");
  if (c.net == 0) throw InputError("--net must be positive");
  auto [t, w] = io::tuple_from_json(read_json(input, in));
  const auto p = CanonicalTuple::from(std::move(t), std::move(w));
  const auto r = v_eps_upper(p, eps, c.net, tol);
  return dump({{"upper_bound", to_string(r.upper_bound)},
               {"member", r.member},
               {"eps", to_string(eps)},
               {"net", c.net},
               {"tol", to_string(tol)},
               {"candidates", r.candidates},
               {"best_reparameterization", io::to_json(r.best)}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on PL monotone surjections of [0,1] and their type spaces", "roelcke"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--tol", cfg.tol, "Distance tolerance p/q")->capture_default_str();
  app.add_option("--grid", cfg.grid, "Brute-force oracle grid size k (dist)");
  app.add_option("--net", cfg.net, "Net resolution m (epsnet, veps)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--out", cfg.out, "Write output to this path instead of stdout");

  std::string input, second, op = "merge", eps = "1/16";
  std::size_t n = 2, samples = 100, count = 1, limit = 10000;
  bool points = false;

  auto* canon = app.add_subcommand("canon", "Canonical form and mean of a tuple");
  canon->add_option("input", input, "Tuple JSON ('-' for stdin)")->required();

  auto* dist = app.add_subcommand("dist", "Quotient distance bracket between two tuples");
  dist->add_option("a", input, "First tuple JSON")->required();
  dist->add_option("b", second, "Second tuple JSON")->required();

  auto* net = app.add_subcommand("epsnet", "Size of the grid net of S_n and a covering check");
  net->add_option("--n", n, "Tuple length")->capture_default_str();
  net->add_option("--samples", samples, "Random points for the covering check (n = 2)")->capture_default_str();
  net->add_flag("--points", points, "List all net points");
  net->add_option("--limit", limit, "Refuse to list more points than this")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Random points of S_n");
  sample->add_option("--n", n, "Tuple length")->capture_default_str();
  sample->add_option("--count", count, "Number of samples")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "SVG or CSV rendering of a function, tuple or gap set");
  plot->add_option("input", input, "Object JSON")->required();

  auto* witness = app.add_subcommand("witness", "Element at uniform distance 1 from its g-translate");
  witness->add_option("input", input, "Homeomorphism JSON")->required();

  auto* gaps = app.add_subcommand("gaps", "Gap set operations");
  gaps->add_option("--op", op, "merge, isolated, extreme, collapse or equiv")
      ->check(CLI::IsMember({"merge", "isolated", "extreme", "collapse", "equiv"}))
      ->capture_default_str();
  gaps->add_option("input", input, "Gap set JSON (equiv also reads two components)")->required();

  auto* veps = app.add_subcommand("veps", "Upper bound on the distance from Gp to 1 for p in S_2");
  veps->add_option("--eps", eps, "Membership threshold p/q")->capture_default_str();
  veps->add_option("input", input, "Canonical pair JSON")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    std::string result;
    if (canon->parsed()) result = cmd_canon(cfg, input, in);
    if (dist->parsed()) result = cmd_dist(cfg, input, second, in);
    if (net->parsed()) result = cmd_epsnet(cfg, n, samples, points, limit);
    if (sample->parsed()) result = cmd_sample(cfg, n, count);
    if (plot->parsed()) result = cmd_plot(cfg, input, in);
    if (witness->parsed()) result = cmd_witness(cfg, input, in);
    if (gaps->parsed()) result = cmd_gaps(cfg, op, input, in);
    if (veps->parsed()) result = cmd_veps(cfg, eps, input, in);

    if (cfg.out.empty()) {
      out << result;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!(file << result)) throw InputError("cannot write " + cfg.out);
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace roelcke::cli
