#include "hypercross/separations.hpp"

#include <algorithm>
#include <numeric>

#include "hypercross/config_io.hpp"
#include "hypercross/error.hpp"
#include "hypercross/gale.hpp"
#include "hypercross/lp.hpp"

namespace hypercross {
namespace {

Rational cross(const RationalVector& a, const RationalVector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

// Upper half-plane including the positive x axis.
bool in_upper_half(const RationalVector& v) {
  return v[1].sign() > 0 || (v[1].is_zero() && v[0].sign() > 0);
}

RationalVector line_representative(const RationalVector& v) {
  return in_upper_half(v) ? v : RationalVector{-v[0], -v[1]};
}

void check_planar(const GaleDiagram& g) {
  if (g.k != 2) throw Error(ErrorKind::kDimension, "separations need a planar (k = 2) diagram");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.vectors[i].size() != 2) throw Error(ErrorKind::kDimension, "vector is not planar");
    if (g.vectors[i][0].is_zero() && g.vectors[i][1].is_zero())
      throw Error(ErrorKind::kDegenerate, "zero vector in diagram");
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (cross(g.vectors[i], g.vectors[j]).is_zero())
        throw Error(ErrorKind::kDegenerate, "collinear vectors " + std::to_string(i + 1) +
                                                " and " + std::to_string(j + 1));
}

Separation split_by(const GaleDiagram& g, RationalVector direction) {
  Separation s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (cross(direction, g.vectors[i]).sign() > 0) {
      s.positive_side.push_back(i);
    } else {
      s.negative_side.push_back(i);
    }
  }
  s.direction = std::move(direction);
  return s;
}

}  // namespace

bool Separation::is_proper() const {
  const std::size_t m = positive_side.size() + negative_side.size();
  return min_side() == m / 2;
}

std::vector<SweepStep> sweep_partition_sequence(const GaleDiagram& g) {
  check_planar(g);
  const std::size_t m = g.size();
  if (m == 0) return {};

  // Critical line directions, one per vector, sorted by angle in [0, pi).
  std::vector<RationalVector> reps;
  for (const auto& v : g.vectors) reps.push_back(line_representative(v));
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cross(reps[a], reps[b]).sign() > 0;
  });

  // One interior direction per open arc between consecutive critical lines;
  // the last arc wraps to the first line turned by pi.
  std::vector<SweepStep> steps;
  for (std::size_t a = 0; a < m; ++a) {
    RationalVector dir;
    if (m == 1) {
      dir = {-reps[order[0]][1], reps[order[0]][0]};
    } else if (a + 1 < m) {
      dir = {reps[order[a]][0] + reps[order[a + 1]][0], reps[order[a]][1] + reps[order[a + 1]][1]};
    } else {
      dir = {reps[order[a]][0] - reps[order[0]][0], reps[order[a]][1] - reps[order[0]][1]};
    }
    Separation s = split_by(g, std::move(dir));
    if (s.positive_side.empty() || s.negative_side.empty()) continue;
    const std::size_t min_side = s.min_side();
    steps.push_back({std::move(s), min_side});
  }
  return steps;
}

std::vector<Separation> enumerate_separations(const GaleDiagram& g) {
  std::vector<Separation> out;
  for (auto& step : sweep_partition_sequence(g)) out.push_back(std::move(step.separation));
  return out;
}

std::size_t count_proper_separations(const GaleDiagram& g) {
  const auto seps = enumerate_separations(g);
  return static_cast<std::size_t>(
      std::count_if(seps.begin(), seps.end(), [](const Separation& s) { return s.is_proper(); }));
}

bool linearly_separable(const std::vector<RationalVector>& vectors,
                        const std::vector<bool>& positive) {
  if (vectors.size() != positive.size())
    throw Error(ErrorKind::kDimension, "separability: mask length mismatch");
  if (vectors.empty()) return false;
  const std::size_t k = vectors.front().size();
  const std::size_t m = vectors.size();
  // Variables: alpha+ (k), alpha- (k), t, surplus s_j (m), w.
  //   +-(alpha . v_j) - t - s_j = 0,   sum alpha+ + sum alpha- + w = 1.
  const std::size_t t_col = 2 * k;
  const std::size_t w_col = 2 * k + 1 + m;
  LpProblem lp;
  lp.constraints = Matrix(m + 1, w_col + 1);
  lp.rhs.assign(m + 1, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    if (vectors[j].size() != k) throw Error(ErrorKind::kDimension, "ragged vectors");
    const int s = positive[j] ? 1 : -1;
    for (std::size_t c = 0; c < k; ++c) {
      lp.constraints(j, c) = vectors[j][c] * s;
      lp.constraints(j, k + c) = -(vectors[j][c] * s);
    }
    lp.constraints(j, t_col) = -1;
    lp.constraints(j, t_col + 1 + j) = -1;
  }
  for (std::size_t c = 0; c < 2 * k; ++c) lp.constraints(m, c) = 1;
  lp.constraints(m, w_col) = 1;
  lp.rhs[m] = 1;
  lp.objective = t_col;
  const LpResult r = lp_max_slack(lp);
  return r.status == LpStatus::kOptimal && r.optimum.sign() > 0;
}

nlohmann::json to_json(const std::vector<Separation>& separations) {
  auto one_based = [](const std::vector<std::size_t>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto i : v) a.push_back(i + 1);
    return a;
  };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : separations) {
    out.push_back({{"positive", one_based(s.positive_side)},
                   {"negative", one_based(s.negative_side)},
                   {"direction", rationals_to_json(s.direction)}});
  }
  return out;
}

}  // namespace hypercross
