#include "hypercross/crossing.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "hypercross/combinatorics.hpp"
#include "hypercross/error.hpp"

namespace hypercross {
namespace {

IndexSet concat(const IndexSet& a, const IndexSet& b) {
  IndexSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

void check_indices(const PointConfig& c, const Bipartition& b) {
  for (const IndexSet* side : {&b.left, &b.right}) {
    if (side->empty()) throw Error(ErrorKind::kPrecondition, "empty side in bipartition");
    for (auto i : *side)
      if (i >= c.size()) throw Error(ErrorKind::kPrecondition, "vertex index out of range");
  }
  const IndexSet all = concat(b.left, b.right);
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorKind::kPrecondition, "bipartition sides are not disjoint");
}

bool crosses_unchecked(const PointConfig& c, const Bipartition& b) {
  const LpResult r = lp_max_slack(build_crossing_lp(c, b));
  return r.status == LpStatus::kOptimal && r.optimum.sign() > 0;
}

void validate_for_count(const PointConfig& c, std::size_t size) {
  validate_shape(c);
  if (size < 1 || c.size() < 2 * size)
    throw Error(ErrorKind::kParameter, "need at least 2 * hyperedge_size points");
  if (general_position(c) == GeneralPosition::kDegenerate)
    throw Error(ErrorKind::kDegenerate, "configuration is not in general position");
}

CrossingReport empty_report(const PointConfig& c, std::size_t size, std::size_t pairs) {
  CrossingReport r;
  r.dim = c.dim;
  r.n = c.size();
  r.hyperedge_size = size;
  r.total_pairs = pairs;
  return r;
}

}  // namespace

Bipartition make_bipartition(IndexSet a, IndexSet b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::kPrecondition, "empty side in bipartition");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const IndexSet all = concat(a, b);
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorKind::kPrecondition, "bipartition sides are not disjoint");
  if (b.front() < a.front()) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

LpProblem build_crossing_lp(const PointConfig& c, const Bipartition& b) {
  const std::size_t d = c.dim;
  const std::size_t nu = b.left.size();
  const std::size_t nv = b.right.size();
  LpProblem lp;
  lp.constraints = Matrix(d + 2, 1 + nu + nv);
  lp.rhs.assign(d + 2, Rational(0));
  for (std::size_t k = 0; k < nu; ++k) {
    const Point& p = c.points[b.left[k]];
    for (std::size_t r = 0; r < d; ++r) {
      lp.constraints(r, 1 + k) = p[r];
      lp.constraints(r, 0) += p[r];
    }
    lp.constraints(d, 1 + k) = 1;
  }
  for (std::size_t k = 0; k < nv; ++k) {
    const Point& p = c.points[b.right[k]];
    for (std::size_t r = 0; r < d; ++r) {
      lp.constraints(r, 1 + nu + k) = -p[r];
      lp.constraints(r, 0) -= p[r];
    }
    lp.constraints(d + 1, 1 + nu + k) = 1;
  }
  lp.constraints(d, 0) = static_cast<long>(nu);
  lp.constraints(d + 1, 0) = static_cast<long>(nv);
  lp.rhs[d] = 1;
  lp.rhs[d + 1] = 1;
  lp.objective = 0;
  return lp;
}

bool relative_interiors_meet(const PointConfig& c, const Bipartition& b) {
  validate_shape(c);
  check_indices(c, b);
  return crosses_unchecked(c, b);
}

bool simplices_cross(const PointConfig& c, const Bipartition& b) {
  validate_shape(c);
  check_indices(c, b);
  if (b.left.size() > c.dim || b.right.size() > c.dim)
    throw Error(ErrorKind::kPrecondition, "a simplex side has more than dim vertices");
  const IndexSet support = concat(b.left, b.right);
  const bool general = support.size() <= c.dim
                           ? affinely_independent(c, support)
                           : general_position(c, support) == GeneralPosition::kGeneral;
  if (!general) throw Error(ErrorKind::kDegenerate, "simplex vertices are not in general position");
  return crosses_unchecked(c, b);
}

std::vector<Bipartition> enumerate_disjoint_pairs(std::size_t n, std::size_t size) {
  std::vector<Bipartition> out;
  if (size == 0 || n < 2 * size) return out;
  for_each_combination(n, size, [&](const std::vector<std::size_t>& left) {
    std::vector<bool> used(n, false);
    for (auto i : left) used[i] = true;
    IndexSet rest;
    for (std::size_t i = left.front() + 1; i < n; ++i)
      if (!used[i]) rest.push_back(i);
    for_each_combination(rest.size(), size, [&](const std::vector<std::size_t>& pick) {
      IndexSet right;
      for (auto p : pick) right.push_back(rest[p]);
      out.push_back({left, std::move(right)});
    });
  });
  return out;
}

CrossingReport count_crossing_pairs_serial(const PointConfig& c, std::size_t hyperedge_size,
                                           bool collect_witnesses) {
  validate_for_count(c, hyperedge_size);
  const auto pairs = enumerate_disjoint_pairs(c.size(), hyperedge_size);
  CrossingReport r = empty_report(c, hyperedge_size, pairs.size());
  for (const auto& b : pairs) {
    if (!crosses_unchecked(c, b)) continue;
    ++r.crossing_count;
    if (collect_witnesses) r.witnesses.push_back(b);
  }
  return r;
}

CrossingReport count_crossing_pairs(const PointConfig& c, std::size_t hyperedge_size,
                                    const CountOptions& options) {
  validate_for_count(c, hyperedge_size);
  const auto pairs = enumerate_disjoint_pairs(c.size(), hyperedge_size);
  const auto total = static_cast<long>(pairs.size());
  std::vector<char> crosses(pairs.size(), 0);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (long i = 0; i < total; ++i) {
    crosses[static_cast<std::size_t>(i)] = crosses_unchecked(c, pairs[static_cast<std::size_t>(i)]);
  }

  CrossingReport r = empty_report(c, hyperedge_size, pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!crosses[i]) continue;
    ++r.crossing_count;
    if (options.collect_witnesses) r.witnesses.push_back(pairs[i]);
  }
  return r;
}

std::vector<Bipartition> extension_crossings(const PointConfig& c, const Bipartition& b) {
  validate_shape(c);
  check_indices(c, b);
  const std::size_t d = c.dim;
  const std::size_t p = b.left.size();
  const std::size_t q = b.right.size();
  if (p < 2 || q < 2 || p > d || q > d)
    throw Error(ErrorKind::kPrecondition, "extension needs 2 <= |U|, |V| <= d");
  if (p + q < d + 1) throw Error(ErrorKind::kPrecondition, "extension needs |U| + |V| >= d + 1");
  if (c.size() < 2 * d) throw Error(ErrorKind::kPrecondition, "extension needs at least 2d points");
  if (!simplices_cross(c, b)) throw Error(ErrorKind::kPrecondition, "sub-pair does not cross");

  const IndexSet used = concat(b.left, b.right);
  IndexSet rest;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!std::binary_search(used.begin(), used.end(), i)) rest.push_back(i);

  std::vector<Bipartition> out;
  for_each_combination(rest.size(), d - p, [&](const std::vector<std::size_t>& add_left) {
    std::vector<bool> taken(rest.size(), false);
    IndexSet left = b.left;
    for (auto a : add_left) {
      taken[a] = true;
      left.push_back(rest[a]);
    }
    IndexSet remaining;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (!taken[i]) remaining.push_back(rest[i]);
    for_each_combination(remaining.size(), d - q, [&](const std::vector<std::size_t>& add_right) {
      IndexSet right = b.right;
      for (auto a : add_right) right.push_back(remaining[a]);
      out.push_back(make_bipartition(left, std::move(right)));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const Bipartition& b) {
  auto one_based = [](const IndexSet& v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto i : v) a.push_back(i + 1);
    return a;
  };
  return {{"left", one_based(b.left)}, {"right", one_based(b.right)}};
}

nlohmann::json to_json(const CrossingReport& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& b : r.witnesses) w.push_back(to_json(b));
  return {{"dim", r.dim},
          {"n", r.n},
          {"hyperedge_size", r.hyperedge_size},
          {"total_pairs", r.total_pairs},
          {"crossing_count", r.crossing_count},
          {"witnesses", w}};
}

std::string witnesses_csv(const CrossingReport& r) {
  std::ostringstream out;
  out << "left,right\n";
  auto side = [&](const IndexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i] + 1;
  };
  for (const auto& b : r.witnesses) {
    side(b.left);
    out << ',';
    side(b.right);
    out << '\n';
  }
  return out.str();
}

}  // namespace hypercross
