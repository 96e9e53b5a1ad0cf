// Command-line front end: BRSK and its inverse, multiplicities, path
// families, degree-by-degree counts and sweeps.
//
// Exit status: 0 on success, 1 on a verification mismatch, 2 on invalid input.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "richardson/groebner.hpp"
#include "richardson/io.hpp"

using namespace richardson;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kInvalid = 2;

struct TripleArgs {
  int n = 0;
  int d = 0;
  std::string alpha;
  std::string beta;
  std::string gamma;
};

void add_triple_options(CLI::App* app, TripleArgs& t, bool required = true) {
  app->add_option("--n", t.n, "ambient dimension")->required(required);
  app->add_option("--d", t.d, "subspace dimension")->required(required);
  app->add_option("--alpha", t.alpha, "alpha as 1,2,3,5")->required(required);
  app->add_option("--beta", t.beta, "beta, the torus-fixed point")->required(required);
  app->add_option("--gamma", t.gamma, "gamma")->required(required);
}

struct Triple {
  GrassIndex alpha;
  GrassIndex beta;
  GrassIndex gamma;
};

Triple parse_triple(const TripleArgs& t) {
  Triple out{GrassIndex(t.d, t.n, parse_int_list(t.alpha)), GrassIndex(t.d, t.n, parse_int_list(t.beta)),
             GrassIndex(t.d, t.n, parse_int_list(t.gamma))};
  if (!index_leq(out.alpha, out.beta) || !index_leq(out.beta, out.gamma))
    throw EmptyRichardsonError("need alpha <= beta <= gamma");
  return out;
}

std::vector<Triple> all_triples(int d, int n) {
  const auto idx = all_indices(d, n);
  std::vector<Triple> out;
  for (const auto& b : idx)
    for (const auto& a : idx) {
      if (!index_leq(a, b)) continue;
      for (const auto& g : idx)
        if (index_leq(b, g)) out.push_back({a, b, g});
    }
  return out;
}

std::string index_str(const GrassIndex& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

json triple_json(const Triple& t) {
  return json{{"alpha", t.alpha.elems()}, {"beta", t.beta.elems()}, {"gamma", t.gamma.elems()}};
}

/// P and Q side by side, P right-aligned against the bar.
std::string render_side_by_side(const NotchedBitableau& bt) {
  std::vector<std::string> left;
  std::size_t width = 0;
  for (const auto& r : bt.p().rows) {
    std::ostringstream os;
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    left.push_back(os.str());
    width = std::max(width, left.back().size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    out << std::setw(static_cast<int>(width)) << left[i] << " |";
    for (int x : bt.q().rows[i]) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

MultisetNN2 read_multiset(const std::string& pairs, const std::string& input) {
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw DomainError("cannot open " + input);
    try {
      return json::parse(in).get<MultisetNN2>();
    } catch (const json::exception& e) {
      throw DomainError(std::string("bad JSON in ") + input + ": " + e.what());
    }
  }
  return parse_pairs(pairs);
}

// --------------------------------------------------------------------------
// Subcommands

struct BrskArgs {
  std::string pairs;
  std::string input;
  bool trace = false;
};

int run_brsk(const BrskArgs& a, bool as_json) {
  const MultisetNN2 u = read_multiset(a.pairs, a.input);
  if (a.trace) {
    // the trace covers the negative part; the positive part goes through ι
    BrskTrace trace;
    (void)brsk_negative(negative_part(u), &trace);
    for (const auto& step : trace.steps) {
      if (as_json) {
        std::cout << json(step).dump() << '\n';
      } else {
        std::cout << "insert " << step.pair << '\n' << render_side_by_side(step.snapshot) << '\n';
      }
    }
  }
  const auto b = brsk(u);
  if (as_json) {
    std::cout << json(b).dump() << '\n';
  } else {
    std::cout << render_side_by_side(b);
  }
  return 0;
}

struct RbrskArgs {
  std::string p;
  std::string q;
  std::string input;
};

int run_rbrsk(const RbrskArgs& a, bool as_json) {
  NotchedBitableau b;
  if (!a.input.empty()) {
    std::ifstream in(a.input);
    if (!in) throw DomainError("cannot open " + a.input);
    try {
      b = json::parse(in).get<NotchedBitableau>();
    } catch (const json::exception& e) {
      throw DomainError(std::string("bad JSON in ") + a.input + ": " + e.what());
    }
  } else {
    b = NotchedBitableau(parse_tableau(a.p), parse_tableau(a.q));
  }
  const auto u = rbrsk(b);
  if (as_json) {
    std::cout << json(u).dump() << '\n';
  } else {
    for (const auto& p : u.elements()) std::cout << p.e << ',' << p.f << ' ';
    std::cout << '\n';
  }
  return 0;
}

int run_mult(const TripleArgs& t, bool as_json) {
  const auto tr = parse_triple(t);
  const auto m = multiplicity(tr.alpha, tr.beta, tr.gamma);
  if (as_json) {
    json j = triple_json(tr);
    j["multiplicity"] = m;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << m << '\n';
  }
  return 0;
}

int run_paths(const TripleArgs& t, bool render, bool as_json) {
  const auto tr = parse_triple(t);
  const BetaContext ctx(tr.beta);
  const auto b = build_bound_multisets(tr.alpha, tr.gamma, ctx);
  json families = json::array();
  std::size_t k = 0;
  for_each_family(b.lower, b.upper, ctx, [&](const PathFamily& fam) {
    ++k;
    if (as_json) {
      families.push_back(fam);
    } else if (render) {
      std::cout << "family " << k << '\n' << render_family(fam, ctx) << '\n';
    }
    return true;
  });
  if (as_json) {
    json j = triple_json(tr);
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["families"] = families;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << k << " families\n";
  }
  return 0;
}

int run_count(const TripleArgs& t, std::size_t m_max, bool as_json) {
  const auto tr = parse_triple(t);
  const RichardsonData data(tr.alpha, tr.gamma, BetaContext(tr.beta));
  bool all_equal = true;
  json rows = json::array();
  if (!as_json) std::cout << std::setw(3) << "m" << std::setw(14) << "monomials" << std::setw(14) << "standard" << "  equal\n";
  for (std::size_t m = 0; m <= m_max; ++m) {
    const auto mono = count_bounded_multisets(data, m);
    const auto sieve = count_monomials_by_sieve(data, m);
    const auto standard = count_standard_monomials(data, m);
    const bool eq = mono == sieve && mono == standard;
    all_equal = all_equal && eq;
    if (as_json) {
      rows.push_back(json{{"m", m}, {"monomials", mono}, {"sieve", sieve}, {"standard", standard}, {"equal", eq}});
    } else {
      std::cout << std::setw(3) << m << std::setw(14) << mono << std::setw(14) << standard << "  "
                << (eq ? "yes" : "NO") << '\n';
    }
  }
  if (as_json) {
    json j = triple_json(tr);
    j["degrees"] = rows;
    std::cout << j.dump() << '\n';
  }
  return all_equal ? 0 : kVerifyFailed;
}

struct VerifyArgs {
  TripleArgs triple;
  bool all_triples = false;
  std::size_t m_max = 3;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
};

/// Counting identity, multiplicity against brute force where the grid is
/// small, and seeded BRSK round trips on the grid.
std::optional<std::string> verify_one(const Triple& t, const VerifyArgs& a, std::mt19937_64& rng) {
  const BetaContext ctx(t.beta);
  const RichardsonData data(t.alpha, t.gamma, ctx);
  const auto rep = verify_groebner(data, a.m_max);
  if (!rep.ok()) return "counts differ at degree " + std::to_string(*rep.witness());

  const auto fam = count_families(data.bounds.lower, data.bounds.upper, ctx);
  if (ctx.grid_points().size() <= default_grid_cap) {
    const auto brute = maximal_bounded_subsets(data.bounds.lower, data.bounds.upper, ctx);
    if (brute.count != fam) return "path families " + std::to_string(fam) + " vs brute force " + std::to_string(brute.count);
    if (static_cast<int>(brute.max_degree) != length(t.gamma) - length(t.alpha))
      return "maximal bounded degree " + std::to_string(brute.max_degree);
  }

  const auto grid = ctx.grid_points();
  std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
  std::uniform_int_distribution<std::size_t> deg(0, 6);
  for (std::size_t k = 0; k < a.samples; ++k) {
    MultisetNN2 u;
    for (std::size_t i = deg(rng); i > 0; --i) u.insert(grid[pick(rng)]);
    if (rbrsk(brsk(u)) != u) return "BRSK round trip failed";
  }
  return std::nullopt;
}

int run_verify(const VerifyArgs& a, bool as_json) {
  std::vector<Triple> triples;
  if (a.all_triples) {
    if (a.triple.n < 2 || a.triple.d < 1 || a.triple.d >= a.triple.n) throw DomainError("need 1 <= d < n");
    triples = all_triples(a.triple.d, a.triple.n);
  } else {
    triples.push_back(parse_triple(a.triple));
  }
  std::mt19937_64 rng(a.seed);
  std::size_t failures = 0;
  json bad = json::array();
  for (const auto& t : triples) {
    const auto err = verify_one(t, a, rng);
    if (!err) continue;
    ++failures;
    if (as_json) {
      json j = triple_json(t);
      j["error"] = *err;
      bad.push_back(j);
    } else {
      std::cout << "FAIL " << index_str(t.alpha) << ' ' << index_str(t.beta) << ' ' << index_str(t.gamma) << ": "
                << *err << '\n';
    }
  }
  if (as_json) {
    std::cout << json{{"triples", triples.size()}, {"failures", bad}, {"seed", a.seed}}.dump() << '\n';
  } else {
    std::cout << triples.size() << " triples checked, " << failures << " failed\n";
  }
  return failures == 0 ? 0 : kVerifyFailed;
}

struct CanonArgs {
  std::string pairs;
  std::string sign = "negative";
  bool brute = false;
};

int run_canonicalize(const CanonArgs& a, bool as_json) {
  const Sign s = a.sign == "negative" ? Sign::negative : Sign::positive;
  const auto u = parse_pairs(a.pairs);
  const auto t = canonicalize(u.elements(), s);
  if (a.brute && canonicalize(u.elements(), s, true) != t) {
    std::cerr << "greedy and exhaustive canonical forms differ\n";
    return kVerifyFailed;
  }
  if (as_json) {
    std::cout << json(t).dump() << '\n';
  } else {
    for (const auto& p : t.points) std::cout << p.e << ',' << p.f << ' ';
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Richardson varieties: BRSK, multiplicities and Groebner counts"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  BrskArgs brsk_args;
  auto* brsk_cmd = app.add_subcommand("brsk", "bitableau of a multiset");
  auto* pairs_opt = brsk_cmd->add_option("--pairs", brsk_args.pairs, "pairs as \"7,8 2,8 ...\"");
  brsk_cmd->add_option("--input", brsk_args.input, "JSON array of [e, f]")->check(CLI::ExistingFile)->excludes(pairs_opt);
  brsk_cmd->add_flag("--trace", brsk_args.trace, "print every insertion step");

  RbrskArgs rbrsk_args;
  auto* rbrsk_cmd = app.add_subcommand("rbrsk", "multiset of a bitableau");
  rbrsk_cmd->add_option("--P", rbrsk_args.p, "rows separated by /, e.g. \"1 2/2 3 4 7/6\"");
  rbrsk_cmd->add_option("--Q", rbrsk_args.q, "rows of Q");
  rbrsk_cmd->add_option("--input", rbrsk_args.input, "JSON {\"P\": ..., \"Q\": ...}")->check(CLI::ExistingFile);

  TripleArgs mult_args;
  auto* mult_cmd = app.add_subcommand("mult", "multiplicity at beta");
  add_triple_options(mult_cmd, mult_args);

  TripleArgs paths_args;
  bool render = false;
  auto* paths_cmd = app.add_subcommand("paths", "nonintersecting path families");
  add_triple_options(paths_cmd, paths_args);
  paths_cmd->add_flag("--render", render, "draw each family on the grid");

  TripleArgs count_args;
  std::size_t count_mmax = 3;
  auto* count_cmd = app.add_subcommand("count", "degree-by-degree counts");
  add_triple_options(count_cmd, count_args);
  count_cmd->add_option("--mmax", count_mmax, "largest degree")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check one triple or sweep all of them");
  add_triple_options(verify_cmd, verify_args.triple, false);
  verify_cmd->add_flag("--all-triples", verify_args.all_triples, "every triple for the given n, d");
  verify_cmd->add_option("--mmax", verify_args.m_max, "largest degree")->capture_default_str();
  verify_cmd->add_option("--seed", verify_args.seed, "seed for the random round trips")->capture_default_str();
  verify_cmd->add_option("--samples", verify_args.samples, "random round trips per triple")->capture_default_str();

  CanonArgs canon_args;
  auto* canon_cmd = app.add_subcommand("canonicalize", "rearrange into a twisted chain");
  canon_cmd->add_option("--pairs", canon_args.pairs, "pairs as \"1,7 3,9\"")->required();
  canon_cmd->add_option("--sign", canon_args.sign, "negative or positive")
      ->check(CLI::IsMember({"negative", "positive"}))
      ->capture_default_str();
  canon_cmd->add_flag("--brute", canon_args.brute, "cross-check against the exhaustive search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*brsk_cmd) return run_brsk(brsk_args, as_json);
    if (*rbrsk_cmd) return run_rbrsk(rbrsk_args, as_json);
    if (*mult_cmd) return run_mult(mult_args, as_json);
    if (*paths_cmd) return run_paths(paths_args, render, as_json);
    if (*count_cmd) return run_count(count_args, count_mmax, as_json);
    if (*verify_cmd) {
      if (!verify_args.all_triples && verify_args.triple.alpha.empty())
        throw DomainError("verify needs --alpha/--beta/--gamma or --all-triples");
      return run_verify(verify_args, as_json);
    }
    if (*canon_cmd) return run_canonicalize(canon_args, as_json);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
