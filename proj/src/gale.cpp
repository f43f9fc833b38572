#include "hypercross/gale.hpp"

#include "hypercross/combinatorics.hpp"
#include "hypercross/config_io.hpp"
#include "hypercross/error.hpp"
#include "hypercross/lp.hpp"
#include "hypercross/separations.hpp"

namespace hypercross {

GaleDiagram gale_transform(const PointConfig& c) {
  validate_shape(c);
  const std::size_t m = c.size();
  if (m < c.dim + 2)
    throw Error(ErrorKind::kPrecondition, "Gale transform needs at least dim + 2 points");
  const Matrix lifted = lifted_matrix(c);
  const auto basis = null_space_basis(lifted);
  if (basis.size() != m - c.dim - 1)
    throw Error(ErrorKind::kDegenerate, "points do not affinely span R^" + std::to_string(c.dim));

  GaleDiagram g{c.dim, basis.size(), std::vector<RationalVector>(m, RationalVector(basis.size()))};
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < m; ++i) g.vectors[i][b] = basis[b][i];
  return g;
}

GaleDiagram gale_moment_closed_form(const MomentParams& params) {
  const std::size_t d = params.dim;
  const std::size_t m = params.ts.size();
  if (d < 1 || m < d + 2) throw Error(ErrorKind::kDimension, "closed form needs m >= d + 2");
  moment_config(params);  // ordering check
  const std::size_t k = m - d - 1;
  const auto& t = params.ts;
  const Rational sign = (d + 1) % 2 == 0 ? Rational(1) : Rational(-1);

  GaleDiagram g{d, k, std::vector<RationalVector>(m, RationalVector(k))};
  for (std::size_t i = 0; i <= d; ++i) {
    Rational denom = 1;
    for (std::size_t j = 0; j <= d; ++j)
      if (j != i) denom *= t[j] - t[i];
    for (std::size_t r = 0; r < k; ++r) {
      Rational numer = sign;
      for (std::size_t j = 0; j <= d; ++j)
        if (j != i) numer *= t[d + 1 + r] - t[j];
      g.vectors[i][r] = numer / denom;
    }
  }
  for (std::size_t r = 0; r < k; ++r) g.vectors[d + 1 + r][r] = 1;
  return g;
}

GaleDiagram gale_moment_d3(const MomentParams& params) {
  if (params.ts.size() != params.dim + 3)
    throw Error(ErrorKind::kDimension, "gale_moment_d3 needs exactly d + 3 parameters");
  return gale_moment_closed_form(params);
}

GaleDiagram gale_moment_2d(const MomentParams& params) {
  if (params.dim < 2 || params.ts.size() != 2 * params.dim)
    throw Error(ErrorKind::kDimension, "gale_moment_2d needs exactly 2d parameters, d >= 2");
  return gale_moment_closed_form(params);
}

bool spans_check(const GaleDiagram& g) {
  if (g.k == 0 || g.size() < g.k) return false;
  bool ok = true;
  for_each_combination(g.size(), g.k, [&](const std::vector<std::size_t>& pick) {
    std::vector<RationalVector> cols;
    for (auto i : pick) cols.push_back(g.vectors[i]);
    ok = !det(Matrix::from_columns(cols)).is_zero();
    return ok;
  });
  return ok;
}

bool is_isolatable(const GaleDiagram& g, std::size_t index) {
  std::vector<bool> positive(g.size(), false);
  positive.at(index) = true;
  return linearly_separable(g.vectors, positive);
}

bool gale_convexity_check(const GaleDiagram& g) {
  if (!spans_check(g)) throw Error(ErrorKind::kPrecondition, "Gale diagram is degenerate");
  if (g.k == 2) {
    for (const Separation& s : enumerate_separations(g)) {
      if (s.positive_side.size() == 1 || s.negative_side.size() == 1) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (is_isolatable(g, i)) return false;
  }
  return true;
}

nlohmann::json to_json(const GaleDiagram& g) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : g.vectors) vs.push_back(rationals_to_json(v));
  return {{"dim", g.source_dim}, {"k", g.k}, {"vectors", vs}};
}

}  // namespace hypercross
