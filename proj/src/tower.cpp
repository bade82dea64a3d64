#include "ybx/tower.hpp"

#include <random>

#include "ybx/quadratic.hpp"
#include "ybx/tensor_ops.hpp"

namespace ybx {

namespace {

std::vector<RatFun> flatten(const Matrix& m) {
  const auto e = m.entries();
  return {e.begin(), e.end()};
}

Matrix unflatten(std::span<const RatFun> row, std::size_t side) {
  Matrix m(side, side);
  for (std::size_t i = 0; i < row.size(); ++i) m(i / side, i % side) = row[i];
  return m;
}

Matrix as_row(const std::vector<RatFun>& v) { return Matrix::from_rows({v}); }

class Closure {
 public:
  Closure(std::size_t side, const ClosureOptions& options)
      : side_(side), options_(options), span_(side * side) {}

  // Adds m when it is new; returns whether it was.
  bool offer(const Matrix& m) {
    auto v = flatten(m);
    if (span_.contains(v)) return false;
    const std::size_t work = side_ * side_ * (span_.dim() + 1);
    if (work > options_.max_work) {
      throw ResourceGuardError("closure work side^2*dim (side=" + std::to_string(side_) + ")",
                               work, options_.max_work);
    }
    span_ = Subspace::span(Matrix::stack(span_.basis(), as_row(v)));
    return true;
  }

  const Subspace& span() const { return span_; }

 private:
  std::size_t side_;
  ClosureOptions options_;
  Subspace span_;
};

}  // namespace

AlgebraBasis generate_algebra(const std::vector<Matrix>& generators, std::size_t side,
                              const ClosureOptions& options) {
  for (const auto& g : generators) {
    if (g.rows() != side || g.cols() != side) {
      throw Error(ErrorCode::DimensionMismatch, "generators must be " + std::to_string(side) +
                                                    "x" + std::to_string(side));
    }
  }
  Closure closure(side, options);
  AlgebraBasis out;
  out.side = side;

  std::vector<Matrix> frontier;
  const Matrix one = Matrix::identity(side);
  if (closure.offer(one)) frontier.push_back(one);
  for (const auto& g : generators) {
    if (closure.offer(g)) frontier.push_back(g);
  }
  out.dimension_history.push_back(closure.span().dim());

  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& b : frontier) {
      for (const auto& g : generators) {
        Matrix c = g * b;
        if (closure.offer(c)) next.push_back(std::move(c));
      }
      for (const auto& g : generators) {
        Matrix c = b * g;
        if (closure.offer(c)) next.push_back(std::move(c));
      }
    }
    out.dimension_history.push_back(closure.span().dim());
    frontier = std::move(next);
  }

  const Matrix& rows = closure.span().basis();
  for (std::size_t r = 0; r < rows.rows(); ++r) out.basis.push_back(unflatten(rows.row(r), side));
  return out;
}

std::vector<Matrix> tower_generators(const Matrix& s, std::size_t k) {
  if (k < 2) throw Error(ErrorCode::Bounds, "tower degree must be at least 2");
  const std::size_t n = tensor_square_root(s.rows());
  std::vector<Matrix> gens;
  for (std::size_t i = 1; i < k; ++i) gens.push_back(place(s, {n, k, i}));
  return gens;
}

AlgebraBasis tower_algebra(const Matrix& s, std::size_t k, const ClosureOptions& options) {
  const std::size_t n = tensor_square_root(s.rows());
  return generate_algebra(tower_generators(s, k), checked_pow(n, k), options);
}

std::size_t tower_dim(const Symmetry& s, std::size_t k, const ClosureOptions& options) {
  return tower_algebra(s.matrix, k, options).dim();
}

std::string SemisimplicityStrategy::to_string() const {
  if (kind == Kind::GenericSymbolic) return "generic-symbolic";
  return "specialized-at " + ybx::to_string(at);
}

SemisimplicityCertificate semisimplicity(const std::vector<Matrix>& basis,
                                         const SemisimplicityStrategy& strategy) {
  std::vector<Matrix> local;
  const std::vector<Matrix>* use = &basis;
  if (strategy.kind == SemisimplicityStrategy::Kind::SpecializedAt) {
    for (const auto& b : basis) local.push_back(b.specialized(strategy.at));
    use = &local;
  }
  const std::size_t d = use->size();
  SemisimplicityCertificate cert;
  cert.strategy = strategy;
  cert.gram = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      cert.gram(i, j) = trace_of_product((*use)[i], (*use)[j]);
      cert.gram(j, i) = cert.gram(i, j);
    }
  }
  cert.nondegenerate = rank(cert.gram) == d;
  return cert;
}

namespace {

bool specializes(const Matrix& m, const Rational& at) {
  for (const auto& x : m.entries()) {
    if (x.denominator()(at) == 0) return false;
  }
  return true;
}

// A small rational avoiding 0, +-1, the classical point, poles of the
// supplied matrices and collisions among the specialized eigenvalues.
Rational draw_point(std::uint64_t seed, const Rational& classical, const Symmetry& s,
                    const std::vector<AlgebraBasis>& bases) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const long num = static_cast<long>(rng() % 97 + 1);
    const long den = static_cast<long>(rng() % 97 + 1);
    Rational x(num, den);
    x.canonicalize();
    if (rng() & 1) x = -x;
    if (x == 1 || x == -1 || x == classical) continue;
    bool ok = specializes(s.matrix, x);
    std::vector<Rational> values;
    for (const auto& lambda : s.eigenvalues) {
      if (!ok) break;
      if (lambda.denominator()(x) == 0) {
        ok = false;
        break;
      }
      const Rational v = specialize(lambda, x);
      for (const auto& w : values) ok = ok && v != w;
      ok = ok && v != 0;
      values.push_back(v);
    }
    for (const auto& b : bases) {
      for (const auto& m : b.basis) ok = ok && specializes(m, x);
    }
    if (ok) return x;
  }
  throw Error(ErrorCode::Precondition, "no admissible random specialization point found");
}

AlgebraBasis placed_algebra(const std::vector<Matrix>& ops, std::size_t n, std::size_t k,
                            const ClosureOptions& options) {
  std::vector<Matrix> gens;
  for (const auto& op : ops) {
    const auto placed = tower_generators(op, k);
    gens.insert(gens.end(), placed.begin(), placed.end());
  }
  return generate_algebra(gens, checked_pow(n, k), options);
}

}  // namespace

std::optional<std::vector<Matrix>> limit_projectors(const Symmetry& s, const Rational& at) {
  std::vector<Subspace> limits;
  for (const auto& e : s.eigenspaces) limits.push_back(limit_subspace(e, at).limit);
  if (!is_direct_sum(limits)) return std::nullopt;
  // Columns of `change` are the limit bases in order; P_i = B E_i B^{-1}.
  const std::size_t pair = s.n * s.n;
  Matrix stacked(0, pair);
  for (const auto& l : limits) stacked = Matrix::stack(stacked, l.basis());
  const Matrix change = stacked.transpose();
  const Matrix back = inverse(change);
  std::vector<Matrix> out;
  std::size_t offset = 0;
  for (const auto& l : limits) {
    std::vector<RatFun> diag(pair);
    for (std::size_t i = 0; i < l.dim(); ++i) diag[offset + i] = RatFun(1L);
    offset += l.dim();
    out.push_back(change * Matrix::diagonal(diag) * back);
  }
  return out;
}

TowerReport tower_flatness(const Symmetry& s, std::size_t k_max, const TowerOptions& options) {
  if (k_max < 2) throw Error(ErrorCode::Precondition, "k_max must be at least 2");
  const Matrix classical_matrix = s.matrix.specialized(options.classical_at);
  const auto projectors = limit_projectors(s, options.classical_at);
  const std::vector<Matrix> classical_ops =
      projectors ? *projectors : std::vector<Matrix>{classical_matrix};

  std::vector<AlgebraBasis> generic;
  for (std::size_t k = 2; k <= k_max; ++k) {
    generic.push_back(tower_algebra(s.matrix, k, options.closure));
  }
  TowerReport report;
  report.classical_at = options.classical_at;
  report.random_point = draw_point(options.seed, options.classical_at, s, generic);
  report.limits_complementary = projectors.has_value();
  if (!projectors) {
    report.first_failure = "eigenspace limits at q=" + to_string(options.classical_at) +
                           " are not complementary";
  }

  for (std::size_t k = 2; k <= k_max; ++k) {
    const AlgebraBasis& g = generic[k - 2];
    const AlgebraBasis c = placed_algebra(classical_ops, s.n, k, options.closure);
    TowerDegree d;
    d.k = k;
    d.generic_dim = g.dim();
    d.classical_dim = c.dim();
    d.classical = semisimplicity(c.basis, SemisimplicityStrategy::specialized(options.classical_at));
    d.random = semisimplicity(g.basis, SemisimplicityStrategy::specialized(report.random_point));
    std::vector<std::vector<RatFun>> rows;
    for (const auto& b : g.basis) rows.push_back(flatten(b.specialized(report.random_point)));
    d.specialized_rank = rows.empty() ? 0 : rank(Matrix::from_rows(rows));

    if (!report.first_failure) {
      const std::string at = "k=" + std::to_string(k) + ": ";
      if (d.generic_dim != d.classical_dim) {
        report.first_failure = at + "dimension jump (generic " + std::to_string(d.generic_dim) +
                               ", at q=" + to_string(options.classical_at) + " " +
                               std::to_string(d.classical_dim) + ")";
      } else if (!d.classical.nondegenerate) {
        report.first_failure =
            at + "trace form degenerate at q=" + to_string(options.classical_at);
      } else if (!d.random.nondegenerate) {
        report.first_failure = at + "trace form degenerate at q=" + to_string(report.random_point);
      }
    }
    report.degrees.push_back(std::move(d));
  }
  return report;
}

}  // namespace ybx
