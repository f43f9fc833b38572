#include "hypercross/commands.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "hypercross/combinatorics.hpp"
#include "hypercross/config_io.hpp"
#include "hypercross/error.hpp"
#include "hypercross/gale.hpp"
#include "hypercross/separations.hpp"

namespace hypercross {
namespace {

constexpr std::size_t kGeometricMaxDim = 5;
constexpr std::size_t kCombinatorialMaxDim = 14;
constexpr long kRestartEvery = 10;

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

PointConfig load_config(const RunSpec& spec) {
  if (!spec.input_path.empty()) return read_config_file(spec.input_path);
  if (spec.dim < 1) throw Error(ErrorKind::kParameter, "--dim or --in is required");
  return moment_config(spec.ts.empty() ? unit_moment_params(spec.dim, spec.n)
                                       : MomentParams{spec.dim, parse_rational_list(spec.ts)});
}

IndexSet parse_one_based(const std::string& text) {
  IndexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    long v = 0;
    try {
      v = std::stol(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "bad vertex index '" + item + "'");
    }
    if (v < 1) throw Error(ErrorKind::kParse, "vertex indices are 1-based");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  return out;
}

CommandResult ok(std::string output) { return {kExitOk, std::move(output), {}}; }

CommandResult cmd_gale(const RunSpec& spec) {
  if (spec.closed_form) {
    if (!spec.input_path.empty())
      throw Error(ErrorKind::kParameter, "--closed-form works on moment parameters only");
    const MomentParams params = spec.ts.empty() ? unit_moment_params(spec.dim, spec.n)
                                                : MomentParams{spec.dim, parse_rational_list(spec.ts)};
    return ok(dump(to_json(gale_moment_closed_form(params))));
  }
  return ok(dump(to_json(gale_transform(load_config(spec)))));
}

CommandResult cmd_separations(const RunSpec& spec) {
  const GaleDiagram g = gale_transform(load_config(spec));
  const auto seps = enumerate_separations(g);
  if (spec.format == Format::kCsv) {
    std::ostringstream out;
    out << "positive,negative,proper\n";
    for (const auto& s : seps) {
      for (std::size_t i = 0; i < s.positive_side.size(); ++i)
        out << (i ? " " : "") << s.positive_side[i] + 1;
      out << ',';
      for (std::size_t i = 0; i < s.negative_side.size(); ++i)
        out << (i ? " " : "") << s.negative_side[i] + 1;
      out << ',' << (s.is_proper() ? 1 : 0) << '\n';
    }
    return ok(out.str());
  }
  return ok(dump({{"m", g.size()},
                  {"proper_count", count_proper_separations(g)},
                  {"separations", to_json(seps)}}));
}

CommandResult cmd_cross(const RunSpec& spec) {
  const PointConfig c = load_config(spec);
  const Bipartition b = make_bipartition(parse_one_based(spec.left), parse_one_based(spec.right));
  return ok(dump({{"pair", to_json(b)}, {"crosses", simplices_cross(c, b)}}));
}

CommandResult cmd_count(const RunSpec& spec) {
  const PointConfig c = load_config(spec);
  const bool csv = spec.format == Format::kCsv;
  const CrossingReport r =
      count_crossing_pairs(c, c.dim, {spec.witnesses || csv, spec.threads});
  return ok(csv ? witnesses_csv(r) : dump(to_json(r)));
}

CommandResult cmd_bounds(const RunSpec& spec) {
  const auto rows = bound_table(spec.d_max);
  return ok(spec.format == Format::kCsv ? bound_table_csv(rows) : dump(to_json(rows)));
}

CommandResult cmd_verify(const RunSpec& spec) {
  VerifyOptions options{spec.d_min, spec.d_max, spec.trials, spec.seed, std::nullopt, spec.threads};
  if (!spec.input_path.empty()) options.input = read_config_file(spec.input_path);
  const VerifyReport report = run_verify(options);
  CommandResult r = ok(dump(report.to_json()));
  if (report.degenerate_input) {
    r.exit_code = kExitDegenerateInput;
  } else if (!report.passed()) {
    r.exit_code = kExitCheckFailed;
  }
  for (const auto& check : report.checks)
    if (!check.passed) r.error += "check failed: " + check.name + "\n";
  return r;
}

CommandResult cmd_search_min(const RunSpec& spec) {
  const SearchResult s = search_min(spec.dim, spec.n, spec.trials, spec.seed, spec.threads);
  return ok(dump({{"dim", spec.dim},
                  {"n", spec.n},
                  {"trials", spec.trials},
                  {"seed", spec.seed},
                  {"evaluations", s.evaluations},
                  {"best_count", s.report.crossing_count},
                  {"config", to_json(s.best)}}));
}

// ---- verification checks -------------------------------------------------

// splitmix64 finalizer over the combined words; gives independent seeds per
// (check, case) from one user seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = seed;
  for (std::uint64_t w : {a, b}) {
    z += 0x9e3779b97f4a7c15ULL + w;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
  }
  return z;
}

VerifyCheck check_cdm_agreement(const VerifyOptions& o, const VerifyHooks& hooks,
                                std::vector<std::string>& cdm_out) {
  VerifyCheck check{"cdm_agreement", true, nlohmann::json::array()};
  for (std::size_t d = o.d_min; d <= std::min(o.d_max, kCombinatorialMaxDim); ++d) {
    const BigCount formula = hooks.cdm(d);
    cdm_out.push_back(formula.get_str());
    const std::uint64_t enumerated = count_moment_crossings_enum(d, o.threads);
    nlohmann::json row{{"d", d}, {"formula", formula.get_str()}, {"enumeration", enumerated}};
    bool good = formula == BigCount(std::to_string(enumerated));
    if (d <= kGeometricMaxDim) {
      const auto report =
          count_crossing_pairs(moment_config(unit_moment_params(d, 2 * d)), d, {false, o.threads});
      row["geometric"] = report.crossing_count;
      good = good && formula == BigCount(std::to_string(report.crossing_count));
    }
    row["agree"] = good;
    check.passed = check.passed && good;
    check.detail.push_back(row);
  }
  return check;
}

VerifyCheck check_alternation_vs_lp(const VerifyOptions& o) {
  VerifyCheck check{"alternation_vs_lp", true, nlohmann::json::array()};
  for (std::size_t d = o.d_min; d <= std::min(o.d_max, kGeometricMaxDim); ++d) {
    const auto report =
        count_crossing_pairs(moment_config(unit_moment_params(d, 2 * d)), d, {true, o.threads});
    std::size_t mismatches = 0;
    for (const auto& b : enumerate_disjoint_pairs(2 * d, d)) {
      const bool lp = std::binary_search(report.witnesses.begin(), report.witnesses.end(), b);
      if (lp != alternation_crosses(ColoredSequence::from_bipartition(b, d))) ++mismatches;
    }
    check.passed = check.passed && mismatches == 0;
    check.detail.push_back({{"d", d}, {"mismatches", mismatches}});
  }
  return check;
}

VerifyCheck check_gale_spans(const VerifyOptions& o) {
  VerifyCheck check{"gale_spans", true, nlohmann::json::array()};
  for (std::size_t d = std::max<std::size_t>(o.d_min, 2); d <= std::min<std::size_t>(o.d_max, 4); ++d) {
    long failures = 0;
    long cases = 0;
    for (std::size_t m = d + 2; m <= 2 * d; ++m) {
      for (long t = 0; t < o.trials; ++t) {
        const auto c = random_general_config(d, m, mix_seed(o.seed, d * 100 + m, t));
        ++cases;
        if (!spans_check(gale_transform(c))) ++failures;
      }
    }
    check.passed = check.passed && failures == 0;
    check.detail.push_back({{"d", d}, {"cases", cases}, {"failures", failures}});
  }
  return check;
}

VerifyCheck check_gale_convexity(const VerifyOptions& o) {
  VerifyCheck check{"gale_convexity", true, nlohmann::json::array()};
  for (std::size_t d = std::max<std::size_t>(o.d_min, 2); d <= std::min<std::size_t>(o.d_max, 3); ++d) {
    long convex = 0;
    long mismatches = 0;
    for (long t = 0; t < o.trials; ++t) {
      const std::size_t m = d + 2 + static_cast<std::size_t>(t) % (7 - d);
      const auto c = random_general_config(d, m, mix_seed(o.seed, 200 + d, t));
      const bool geometric = is_convex_position(c);
      convex += geometric ? 1 : 0;
      if (geometric != gale_convexity_check(gale_transform(c))) ++mismatches;
    }
    check.passed = check.passed && mismatches == 0;
    check.detail.push_back(
        {{"d", d}, {"cases", o.trials}, {"convex_cases", convex}, {"mismatches", mismatches}});
  }
  return check;
}

// Per split size a (1 <= a <= m/2): separations with a smaller side of size a
// versus pairs {U, V} covering all points with |U| = a whose relative
// interiors meet.
std::map<std::size_t, std::pair<std::size_t, std::size_t>> split_counts(const PointConfig& c) {
  const std::size_t m = c.size();
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& s : enumerate_separations(gale_transform(c))) ++counts[s.min_side()].first;
  for (std::size_t a = 1; a <= m / 2; ++a) {
    for_each_combination(m, a, [&](const std::vector<std::size_t>& u) {
      IndexSet v;
      for (std::size_t i = 0; i < m; ++i)
        if (!std::binary_search(u.begin(), u.end(), i)) v.push_back(i);
      if (2 * a == m && u.front() != 0) return;  // unordered when sizes tie
      if (relative_interiors_meet(c, make_bipartition(u, v))) ++counts[a].second;
    });
  }
  return counts;
}

VerifyCheck check_separation_bijection(const VerifyOptions& o) {
  VerifyCheck check{"separation_crossing_bijection", true, nlohmann::json::array()};
  for (std::size_t d = std::max<std::size_t>(o.d_min, 2); d <= std::min<std::size_t>(o.d_max, 3); ++d) {
    long mismatches = 0;
    for (long t = 0; t < o.trials; ++t) {
      const auto c = random_general_config(d, d + 3, mix_seed(o.seed, 300 + d, t));
      for (const auto& [a, pair] : split_counts(c))
        if (pair.first != pair.second) ++mismatches;
    }
    check.passed = check.passed && mismatches == 0;
    check.detail.push_back({{"d", d}, {"cases", o.trials}, {"mismatches", mismatches}});
  }
  return check;
}

VerifyCheck check_convex_k63(const VerifyOptions& o) {
  VerifyCheck check{"convex_k63_count", true, nlohmann::json::object()};
  long bad = 0;
  for (long t = 0; t < o.trials; ++t) {
    const auto c = random_convex_config_3d(6, mix_seed(o.seed, 400, t));
    const auto report = count_crossing_pairs(c, 3, {false, o.threads});
    if (report.crossing_count != 3 || count_proper_separations(gale_transform(c)) != 3) ++bad;
  }
  check.passed = bad == 0;
  check.detail = {{"cases", o.trials}, {"failures", bad}};
  return check;
}

// Every crossing sub-pair (2 <= |U|,|V| <= d, |U|+|V| >= d+1) of c extends
// only to crossing pairs of d-sets.
std::pair<long, long> extension_property(const PointConfig& c) {
  const std::size_t d = c.dim;
  const std::size_t n = c.size();
  long checked = 0;
  long failures = 0;
  for (std::size_t p = 2; p <= d; ++p) {
    for_each_combination(n, p, [&](const std::vector<std::size_t>& u) {
      IndexSet rest;
      for (std::size_t i = 0; i < n; ++i)
        if (!std::binary_search(u.begin(), u.end(), i) && i > u.front()) rest.push_back(i);
      for (std::size_t q = std::max<std::size_t>(2, d + 1 - p); q <= d; ++q) {
        for_each_combination(rest.size(), q, [&](const std::vector<std::size_t>& pick) {
          IndexSet v;
          for (auto k : pick) v.push_back(rest[k]);
          const Bipartition b{u, v};
          if (!relative_interiors_meet(c, b)) return;
          for (const auto& ext : extension_crossings(c, b)) {
            ++checked;
            if (!relative_interiors_meet(c, ext)) ++failures;
          }
        });
      }
    });
  }
  return {checked, failures};
}

VerifyCheck check_extension(const VerifyOptions& o) {
  VerifyCheck check{"extension_property", true, nlohmann::json::array()};
  for (std::size_t d = std::max<std::size_t>(o.d_min, 2); d <= std::min<std::size_t>(o.d_max, 4); ++d) {
    for (const auto& [label, c] :
         {std::pair{"moment", moment_config(unit_moment_params(d, 2 * d))},
          std::pair{"random", random_general_config(d, 2 * d, mix_seed(o.seed, 500 + d))}}) {
      const auto [checked, failures] = extension_property(c);
      check.passed = check.passed && failures == 0;
      check.detail.push_back(
          {{"d", d}, {"config", label}, {"extensions", checked}, {"failures", failures}});
    }
  }
  return check;
}

VerifyCheck check_bound_chain(const VerifyHooks& hooks) {
  VerifyCheck check{"bound_chain", true, nlohmann::json::array()};
  for (std::size_t d = 4; d <= 10; ++d) {
    const BigCount cdm = hooks.cdm(d);
    const bool good = thm1_lower_bound(d).value <= cdm && lemma8_lower_bound(d).value <= cdm &&
                      cdm <= binomial(static_cast<long>(2 * d), static_cast<long>(d));
    check.passed = check.passed && good;
    check.detail.push_back({{"d", d}, {"ok", good}});
  }
  return check;
}

VerifyCheck check_random_lower_bound(const VerifyOptions& o) {
  VerifyCheck check{"random_config_lower_bound", true, nlohmann::json::array()};
  for (std::size_t d = std::max<std::size_t>(o.d_min, 4); d <= std::min(o.d_max, kGeometricMaxDim); ++d) {
    const BigCount bound = thm1_lower_bound(d).value;
    std::uint64_t minimum = UINT64_MAX;
    for (long t = 0; t < o.trials; ++t) {
      const auto c = random_general_config(d, 2 * d, mix_seed(o.seed, 600 + d, t));
      minimum = std::min(minimum, count_crossing_pairs(c, d, {false, o.threads}).crossing_count);
    }
    const bool good = o.trials <= 0 || BigCount(std::to_string(minimum)) >= bound;
    check.passed = check.passed && good;
    check.detail.push_back({{"d", d}, {"bound", bound.get_str()}, {"min_count", minimum}});
  }
  return check;
}

}  // namespace

bool VerifyReport::passed() const {
  return !degenerate_input &&
         std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", passed()}, {"cdm", cdm}, {"checks", cs}};
}

VerifyReport run_verify(const VerifyOptions& o, const VerifyHooks& hooks) {
  if (o.d_min < 2 || o.d_min > o.d_max)
    throw Error(ErrorKind::kParameter, "verify needs 2 <= d_min <= d_max");
  if (o.d_max > kCombinatorialMaxDim)
    throw Error(ErrorKind::kParameter, "verify supports d <= 14");
  VerifyReport report;
  if (o.input) {
    const GeneralPosition gp = general_position(*o.input);
    const bool good = gp == GeneralPosition::kGeneral;
    report.checks.push_back({"input_general_position", good,
                             {{"status", gp == GeneralPosition::kTrivial ? "trivial"
                                         : good                          ? "general"
                                                                         : "degenerate"}}});
    if (!good) {
      report.degenerate_input = true;
      return report;
    }
  }
  report.checks.push_back(check_cdm_agreement(o, hooks, report.cdm));
  report.checks.push_back(check_alternation_vs_lp(o));
  report.checks.push_back(check_gale_spans(o));
  report.checks.push_back(check_gale_convexity(o));
  report.checks.push_back(check_separation_bijection(o));
  report.checks.push_back(check_convex_k63(o));
  report.checks.push_back(check_extension(o));
  report.checks.push_back(check_bound_chain(hooks));
  report.checks.push_back(check_random_lower_bound(o));
  return report;
}

SearchResult search_min(std::size_t d, std::size_t n, long trials, std::uint64_t seed, int threads) {
  if (trials <= 0) throw Error(ErrorKind::kParameter, "search budget must be positive");
  if (d < 1 || n < 2 * d) throw Error(ErrorKind::kParameter, "search needs n >= 2d");
  const long bound = static_cast<long>(4 * n * d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_point(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_coord(0, d - 1);
  std::uniform_int_distribution<long> delta(-bound / 4, bound / 4);

  SearchResult best;
  PointConfig current;
  std::uint64_t current_count = 0;
  for (long t = 0; t < trials; ++t) {
    PointConfig candidate;
    if (t % kRestartEvery == 0) {
      candidate = random_general_config(d, n, rng());
    } else {
      candidate = current;
      candidate.points[pick_point(rng)][pick_coord(rng)] += delta(rng);
      if (general_position(candidate) != GeneralPosition::kGeneral) continue;
    }
    const CrossingReport r = count_crossing_pairs(candidate, d, {false, threads});
    ++best.evaluations;
    if (t % kRestartEvery == 0 || r.crossing_count <= current_count) {
      current = candidate;
      current_count = r.crossing_count;
    }
    if (best.evaluations == 1 || r.crossing_count < best.report.crossing_count) {
      best.best = std::move(candidate);
      best.report = r;
    }
    if (best.report.crossing_count == 0) break;
  }
  best.report = count_crossing_pairs(best.best, d, {true, threads});
  return best;
}

CommandResult execute(const RunSpec& spec) {
  try {
    switch (spec.command) {
      case Command::kGenMoment: return ok(dump(to_json(load_config(spec))));
      case Command::kGale: return cmd_gale(spec);
      case Command::kSeparations: return cmd_separations(spec);
      case Command::kCross: return cmd_cross(spec);
      case Command::kCount: return cmd_count(spec);
      case Command::kBounds: return cmd_bounds(spec);
      case Command::kVerify: return cmd_verify(spec);
      case Command::kSearchMin: return cmd_search_min(spec);
    }
  } catch (const Error& e) {
    const bool degenerate = e.kind() == ErrorKind::kDegenerate || e.kind() == ErrorKind::kPrecondition;
    return {degenerate ? kExitDegenerateInput : kExitUsage, {},
            std::string(to_string(e.kind())) + " error: " + e.what() + "\n"};
  }
  return {kExitUsage, {}, "unknown command\n"};
}

}  // namespace hypercross
