// One line per acceptance criterion; exit status is non-zero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "hypercross/combinatorics.hpp"
#include "hypercross/commands.hpp"
#include "hypercross/crossing.hpp"
#include "hypercross/gale.hpp"
#include "hypercross/moment.hpp"
#include "hypercross/separations.hpp"

using namespace hypercross;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome exact_values() {
  const auto start = Clock::now();
  bool ok = closed_form_cdm(2) == 1 && closed_form_cdm(3) == 3 && closed_form_cdm(4) == 13 &&
            closed_form_cdm(5) == 45;
  for (std::size_t d = 2; d <= 8; ++d) ok = ok && BigCount(count_moment_crossings_enum(d)) == closed_form_cdm(d);
  const double t = seconds_since(start);
  return {ok && t < 1.0, "cdm(2..5) = 1,3,13,45; enumeration agrees for d=2..8; " + std::to_string(t) + " s (< 1 s)"};
}

Outcome geometric_agreement() {
  bool ok = true;
  std::string detail;
  double t5 = 0;
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto start = Clock::now();
    const auto r = count_crossing_pairs(moment_config(unit_moment_params(d, 2 * d)), d);
    const double t = seconds_since(start);
    if (d == 5) t5 = t;
    ok = ok && BigCount(r.crossing_count) == closed_form_cdm(d);
    detail += "d=" + std::to_string(d) + ":" + std::to_string(r.crossing_count) + "/" +
              std::to_string(r.total_pairs) + " ";
  }
  return {ok && t5 < 120.0, detail + "(LP predicate only); d=5 took " + std::to_string(t5) + " s (< 120 s)"};
}

Outcome convex_k63() {
  const int trials = 100;
  int bad = 0;
  for (int s = 0; s < trials; ++s) {
    const auto c = random_convex_config_3d(6, 1000 + static_cast<std::uint64_t>(s));
    const bool convex = is_convex_position(c);
    const auto count = count_crossing_pairs(c, 3).crossing_count;
    const auto proper = count_proper_separations(gale_transform(c));
    if (!convex || count != 3 || proper != 3) ++bad;
  }
  return {bad == 0, std::to_string(trials) + " convex general-position K_6^3 configs, " + std::to_string(bad) +
                        " with crossing count or proper separations != 3"};
}

Outcome separation_bijection() {
  int configs = 0;
  int mismatches = 0;
  for (std::size_t d = 2; d <= 3; ++d)
    for (std::uint64_t s = 0; s < 30; ++s, ++configs) {
      const auto c = random_general_config(d, d + 3, 2000 + 100 * d + s);
      const std::size_t m = c.size();
      std::map<std::size_t, std::size_t> separations;
      std::map<std::size_t, std::size_t> crossings;
      for (const auto& sep : enumerate_separations(gale_transform(c))) ++separations[sep.min_side()];
      for (std::size_t a = 1; a <= m / 2; ++a)
        for_each_combination(m, a, [&](const std::vector<std::size_t>& u) {
          if (2 * a == m && u.front() != 0) return;
          IndexSet v;
          for (std::size_t i = 0; i < m; ++i)
            if (!std::binary_search(u.begin(), u.end(), i)) v.push_back(i);
          if (relative_interiors_meet(c, make_bipartition(u, v))) ++crossings[a];
        });
      for (std::size_t a = 1; a <= m / 2; ++a)
        if (separations[a] != crossings[a]) ++mismatches;
    }
  return {configs >= 50 && mismatches == 0,
          std::to_string(configs) + " configs (d in {2,3}, m = d+3), " + std::to_string(mismatches) +
              " split mismatches"};
}

Outcome gale_bridges() {
  int span_cases = 0;
  int span_failures = 0;
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t m = d + 2; m <= 2 * d + 1; ++m)
      for (std::uint64_t s = 0; s < 5; ++s, ++span_cases)
        if (!spans_check(gale_transform(random_general_config(d, m, 3000 + 97 * d + 13 * m + s)))) ++span_failures;
  int convexity_cases = 0;
  int convex = 0;
  int mismatches = 0;
  for (std::size_t d = 2; d <= 3; ++d)
    for (std::size_t m = d + 2; m <= d + 5; ++m)
      for (std::uint64_t s = 0; s < 8; ++s, ++convexity_cases) {
        const auto c = random_general_config(d, m, 4000 + 97 * d + 13 * m + s);
        const bool hull = is_convex_position(c);
        convex += hull;
        if (gale_convexity_check(gale_transform(c)) != hull) ++mismatches;
      }
  return {span_failures == 0 && convexity_cases >= 50 && mismatches == 0,
          "spans: " + std::to_string(span_failures) + "/" + std::to_string(span_cases) +
              " failures; convexity: " + std::to_string(mismatches) + "/" + std::to_string(convexity_cases) +
              " mismatches (" + std::to_string(convex) + " convex)"};
}

Outcome extension_property() {
  long extensions = 0;
  long failures = 0;
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& c : {moment_config(unit_moment_params(d, 2 * d)), random_general_config(d, 2 * d, 5000 + d)}) {
      const std::size_t n = c.size();
      for (std::size_t p = 2; p <= d; ++p)
        for_each_combination(n, p, [&](const std::vector<std::size_t>& u) {
          IndexSet rest;
          for (std::size_t i = 0; i < n; ++i)
            if (!std::binary_search(u.begin(), u.end(), i)) rest.push_back(i);
          for (std::size_t q = std::max<std::size_t>(2, d + 1 - p); q <= d; ++q)
            for_each_combination(rest.size(), q, [&](const std::vector<std::size_t>& pick) {
              IndexSet v;
              for (auto k : pick) v.push_back(rest[k]);
              const auto b = make_bipartition(u, v);
              if (!simplices_cross(c, b)) return;
              for (const auto& e : extension_crossings(c, b)) {
                ++extensions;
                if (!simplices_cross(c, e)) ++failures;
              }
            });
        });
    }
  return {extensions > 0 && failures == 0,
          std::to_string(extensions) + " extensions checked, " + std::to_string(failures) + " non-crossing"};
}

Outcome bound_chain() {
  bool chain = true;
  for (std::size_t d = 4; d <= 10; ++d) {
    const auto l = static_cast<long>(d);
    const BigCount cdm = closed_form_cdm(d);
    chain = chain && thm1_lower_bound(d).value <= cdm && cdm <= binomial(2 * l, l) &&
            lemma8_lower_bound(d).value <= cdm;
  }
  int configs = 0;
  int below = 0;
  std::string minima;
  for (std::size_t d = 4; d <= 5; ++d) {
    std::uint64_t minimum = ~std::uint64_t{0};
    for (std::uint64_t s = 0; s < 20; ++s, ++configs) {
      const auto count = count_crossing_pairs(random_general_config(d, 2 * d, 6000 + 100 * d + s), d).crossing_count;
      minimum = std::min(minimum, count);
      if (BigCount(count) < thm1_lower_bound(d).value) ++below;
    }
    minima += " d=" + std::to_string(d) + " min " + std::to_string(minimum) + " vs bound " +
              thm1_lower_bound(d).value.get_str() + ";";
  }
  return {chain && below == 0,
          std::string("chain d=4..10 ") + (chain ? "holds" : "VIOLATED") + "; " + std::to_string(configs) +
              " random configs," + minima};
}

Outcome search_sanity() {
  const auto planar = search_min(2, 4, 500, 42);
  const auto spatial = search_min(3, 6, 500, 42);
  return {planar.report.crossing_count == 0 && spatial.report.crossing_count == 1,
          "(d=2,n=4) -> " + std::to_string(planar.report.crossing_count) + ", (d=3,n=6) -> " +
              std::to_string(spatial.report.crossing_count) + " within 500 trials, seed 42"};
}

Outcome determinism() {
  std::vector<RunSpec> specs;
  auto add = [&](Command c, std::size_t dim, std::size_t n) {
    RunSpec s;
    s.command = c;
    s.dim = dim;
    s.n = n;
    s.witnesses = true;
    s.trials = 40;
    specs.push_back(s);
    return &specs.back();
  };
  add(Command::kGenMoment, 3, 6);
  add(Command::kGale, 3, 6);
  add(Command::kGale, 4, 8)->closed_form = true;
  add(Command::kSeparations, 3, 6);
  {
    auto* s = add(Command::kCross, 3, 6);
    s->left = "1,3,5";
    s->right = "2,4,6";
  }
  add(Command::kCount, 4, 9);
  add(Command::kCount, 3, 6)->format = Format::kCsv;
  add(Command::kBounds, 0, 0)->d_max = 12;
  add(Command::kSearchMin, 3, 6);
  {
    auto* s = add(Command::kVerify, 0, 0);
    s->d_max = 4;
    s->trials = 5;
  }
  int differing = 0;
  for (auto s : specs) {
    s.threads = 1;
    const auto a = execute(s);
    const auto b = execute(s);
    s.threads = 4;
    const auto c = execute(s);
    if (a.exit_code != 0 || a.output != b.output || a.output != c.output || a.exit_code != c.exit_code) ++differing;
  }
  bool enum_ok = true;
  for (std::size_t d = 2; d <= 12; ++d)
    enum_ok = enum_ok && count_moment_crossings_enum(d, 1) == count_moment_crossings_enum(d, 4);
  return {differing == 0 && enum_ok, std::to_string(specs.size()) + " commands re-run at 1 and 4 threads, " +
                                         std::to_string(differing) + " differing outputs"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact-value regression", exact_values},
      {"geometric oracle agreement", geometric_agreement},
      {"convex K_6^3 count", convex_k63},
      {"separation/crossing bijection", separation_bijection},
      {"Gale span and convexity bridges", gale_bridges},
      {"extension property", extension_property},
      {"bound chain", bound_chain},
      {"search sanity", search_sanity},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.passed ? 0 : 1;
    std::printf("%s criterion %zu (%s): %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
