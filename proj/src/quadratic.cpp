#include "ybx/quadratic.hpp"

#include "ybx/tensor_ops.hpp"

namespace ybx {

QuadraticPresentation QuadraticPresentation::from_subspace(const Subspace& j) {
  return {tensor_square_root(j.ambient_dim()), j, j.basis()};
}

QuadraticPresentation QuadraticPresentation::from_generators(std::size_t n,
                                                             const Matrix& generators) {
  if (generators.cols() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "relations must live in V ⊗ V");
  }
  return {n, Subspace::span(generators), generators};
}

namespace {

void guard_tensor_power(std::size_t n, std::size_t k, std::size_t bound) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= n;
    if (total > bound) {
      throw ResourceGuardError("n^K (n=" + std::to_string(n) + ", K=" + std::to_string(k) + ")",
                               total, bound);
    }
  }
}

void require_max_degree(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::Precondition, "max degree must be at least 2");
}

}  // namespace

HilbertTable hilbert_dims(const Subspace& relations, std::size_t max_degree,
                          const HilbertOptions& options) {
  require_max_degree(max_degree);
  const std::size_t n = tensor_square_root(relations.ambient_dim());
  guard_tensor_power(n, max_degree, options.max_ambient);
  HilbertTable table;
  table.max_degree = max_degree;
  table.dims = {1, n};
  Subspace acc = relations;
  std::size_t ambient = n * n;
  for (std::size_t k = 2; k <= max_degree; ++k) {
    if (k > 2) {
      acc = extend_iterated_sum(acc, relations);
      ambient *= n;
    }
    table.dims.push_back(ambient - acc.dim());
  }
  return table;
}

HilbertTable hilbert_dims(const QuadraticPresentation& p, std::size_t max_degree,
                          const HilbertOptions& options) {
  return hilbert_dims(p.relations, max_degree, options);
}

std::vector<DegreeSituation> check_well_situated(const Subspace& i, const Subspace& j,
                                                 std::size_t max_degree,
                                                 const HilbertOptions& options) {
  require_max_degree(max_degree);
  if (i.ambient_dim() != j.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "well-situated check: ambient dimensions differ");
  }
  const std::size_t n = tensor_square_root(i.ambient_dim());
  const Subspace pair[] = {i, j};
  if (!is_direct_sum(pair)) {
    throw Error(ErrorCode::NotComplementary, "I and J are not complementary in V ⊗ V");
  }
  guard_tensor_power(n, max_degree, options.max_ambient);

  std::vector<DegreeSituation> out;
  Subspace meet = i;
  Subspace sum = j;
  std::size_t ambient = n * n;
  for (std::size_t k = 2; k <= max_degree; ++k) {
    if (k > 2) {
      meet = extend_iterated_intersection(meet, i);
      sum = extend_iterated_sum(sum, j);
      ambient *= n;
    }
    DegreeSituation d{k, meet.dim(), sum.dim(), false};
    d.well_situated = d.intersection_dim + d.sum_dim == ambient &&
                      subspace_intersect(meet, sum).is_zero();
    out.push_back(d);
  }
  return out;
}

namespace {

using PolyRow = std::vector<QPoly>;

// Scales a nonzero row by a unit of Q(q) so that its entries are coprime
// polynomials. In particular the result does not vanish at any point.
PolyRow primitive(PolyRow row) {
  QPoly g;
  for (const auto& p : row) {
    if (!p.is_zero()) g = g.is_zero() ? p.monic() : gcd(g, p);
  }
  if (!g.is_one()) {
    for (auto& p : row) p = exact_quotient(p, g);
  }
  return row;
}

PolyRow clear_denominators(std::span<const RatFun> row) {
  QPoly l(Rational(1));
  for (const auto& x : row) {
    const QPoly& d = x.denominator();
    if (!d.is_one()) l = exact_quotient(l * d, gcd(l, d));
  }
  PolyRow out;
  for (const auto& x : row) out.push_back(x.numerator() * exact_quotient(l, x.denominator()));
  return out;
}

bool is_zero_row(const PolyRow& row) {
  for (const auto& p : row) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Matrix values_at(const std::vector<PolyRow>& rows, std::size_t cols, const Rational& at) {
  Matrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = RatFun(rows[r][c](at));
  }
  return out;
}

}  // namespace

LimitResult limit_subspace(const Matrix& generators, const Rational& at) {
  const std::size_t cols = generators.cols();
  LimitResult result;
  result.generic_dim = rank(generators);

  // A generator with a pole or a zero at `at` is first rescaled by a power of
  // (q - at), so the naive rank is defined for every family.
  std::vector<PolyRow> rows;
  for (std::size_t r = 0; r < generators.rows(); ++r) {
    PolyRow row = clear_denominators(generators.row(r));
    if (!is_zero_row(row)) rows.push_back(primitive(std::move(row)));
  }
  result.naive_dim = rows.empty() ? 0 : rank(values_at(rows, cols, at));
  result.dropped = result.naive_dim < result.generic_dim;

  // Each pass either removes a row that is a constant combination of the
  // others or replaces one by (combination)/(q - at)^v, enlarging the
  // lattice the rows span locally at `at`.
  const std::size_t max_passes = kSaturationIterations + rows.size();
  for (std::size_t pass = 0;; ++pass) {
    const Matrix values = values_at(rows, cols, at);
    const Subspace relation = kernel(values.transpose());
    if (relation.is_zero()) break;
    if (pass >= max_passes || result.iterations >= kSaturationIterations) {
      throw Error(ErrorCode::SaturationFailed,
                  "saturation did not reach a fixpoint within " +
                      std::to_string(kSaturationIterations) + " iterations");
    }
    const auto c = relation.basis().row(0);
    std::size_t target = c.size();
    PolyRow combo(cols);
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (c[r].is_zero()) continue;
      target = r;
      const Rational factor = c[r].constant_value();
      for (std::size_t k = 0; k < cols; ++k) combo[k] = combo[k] + rows[r][k].scaled(factor);
    }
    if (is_zero_row(combo)) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(target));
      continue;
    }
    ++result.iterations;
    rows[target] = primitive(std::move(combo));
  }

  if (rows.size() != result.generic_dim) {
    throw Error(ErrorCode::SaturationFailed, "saturated rank " + std::to_string(rows.size()) +
                                                 " differs from generic rank " +
                                                 std::to_string(result.generic_dim));
  }
  result.saturated = Matrix(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < cols; ++k) result.saturated(r, k) = RatFun(rows[r][k]);
  }
  result.limit = rows.empty() ? Subspace(cols) : Subspace::span(values_at(rows, cols, at));
  return result;
}

LimitResult limit_subspace(const Subspace& j, const Rational& at) {
  return limit_subspace(j.basis(), at);
}

QuadraticPresentation eigen_presentation(const Symmetry& sym, std::size_t m, const Rational& at) {
  if (m >= sym.eigenspaces.size()) throw Error(ErrorCode::Bounds, "eigenvalue index out of range");
  const std::size_t ambient = sym.n * sym.n;
  Matrix generators(0, ambient);
  for (std::size_t i = 0; i < sym.eigenspaces.size(); ++i) {
    if (i == m) continue;
    generators = Matrix::stack(generators, limit_subspace(sym.eigenspaces[i], at).saturated);
  }
  return {sym.n, sym.complement(m), generators};
}

const char* to_string(FlatnessVerdict verdict) {
  switch (verdict) {
    case FlatnessVerdict::Flat: return "FLAT";
    case FlatnessVerdict::NotFlat: return "NOT-FLAT";
    case FlatnessVerdict::NotADeformation: return "NOT-A-DEFORMATION";
  }
  return "NOT-FLAT";
}

FlatnessReport flatness_report(const QuadraticPresentation& p, std::size_t max_degree,
                               const FlatnessOptions& options) {
  FlatnessReport report;
  report.max_degree = max_degree;
  report.at = options.at;
  report.generic = hilbert_dims(p.relations, max_degree, options.hilbert);
  report.limit = limit_subspace(p.generators, options.at);
  if (report.limit.dropped) {
    report.verdict = FlatnessVerdict::NotADeformation;
    return report;
  }
  report.classical = hilbert_dims(report.limit.limit, max_degree, options.hilbert);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (report.generic.dims[k] != report.classical->dims[k]) report.differing_degrees.push_back(k);
  }
  report.verdict =
      report.differing_degrees.empty() ? FlatnessVerdict::Flat : FlatnessVerdict::NotFlat;
  if (options.koszul_claimed) {
    if (max_degree < 3) {
      report.advisory = "special fibre declared Koszul; degree 3 was not computed";
    } else if (report.generic.dims[3] == report.classical->dims[3]) {
      report.advisory =
          "special fibre declared Koszul and degree 3 agrees: by Drinfeld's criterion the "
          "family is flat in every degree";
    } else {
      report.advisory = "special fibre declared Koszul but degree 3 already differs";
    }
  }
  return report;
}

}  // namespace ybx
