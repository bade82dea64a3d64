#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybx/symmetry.hpp"

namespace ybx {

struct ClosureOptions {
  // Bound on side^2 * dim, checked before each new basis element is admitted.
  std::size_t max_work = std::size_t{1} << 24;
};

// Unital algebra generated by a family of side x side matrices.
struct AlgebraBasis {
  std::size_t side = 0;
  std::vector<Matrix> basis;  // RREF of the row-major flattenings
  // Dimension after the seed step and after each multiplication round;
  // strictly increasing except for the final entry.
  std::vector<std::size_t> dimension_history;

  std::size_t dim() const noexcept { return basis.size(); }
};

AlgebraBasis generate_algebra(const std::vector<Matrix>& generators, std::size_t side,
                              const ClosureOptions& options = {});

// The placed operators S_1..S_{k-1} on V^{⊗k}.
std::vector<Matrix> tower_generators(const Matrix& s, std::size_t k);
AlgebraBasis tower_algebra(const Matrix& s, std::size_t k, const ClosureOptions& options = {});
std::size_t tower_dim(const Symmetry& s, std::size_t k, const ClosureOptions& options = {});

struct SemisimplicityStrategy {
  enum class Kind { GenericSymbolic, SpecializedAt };
  Kind kind = Kind::GenericSymbolic;
  Rational at;

  static SemisimplicityStrategy generic() { return {}; }
  static SemisimplicityStrategy specialized(Rational at) { return {Kind::SpecializedAt, at}; }
  std::string to_string() const;
};

struct SemisimplicityCertificate {
  Matrix gram;  // trace(b_i b_j)
  bool nondegenerate = false;
  SemisimplicityStrategy strategy;
};

SemisimplicityCertificate semisimplicity(const std::vector<Matrix>& basis,
                                         const SemisimplicityStrategy& strategy);

struct TowerOptions {
  std::uint64_t seed = 0x5EED;
  Rational classical_at = 1;
  ClosureOptions closure;
};

struct TowerDegree {
  std::size_t k = 0;
  std::size_t generic_dim = 0;
  std::size_t classical_dim = 0;
  // Rank of the generic basis specialized at the random point.
  std::size_t specialized_rank = 0;
  SemisimplicityCertificate classical;
  SemisimplicityCertificate random;

  bool passes() const {
    return generic_dim == classical_dim && classical.nondegenerate && random.nondegenerate;
  }
};

// Projectors onto the limits at `at` of the eigenspaces, each along the sum
// of the others; nullopt when those limits are not complementary.
std::optional<std::vector<Matrix>> limit_projectors(const Symmetry& s, const Rational& at);

struct TowerReport {
  Rational classical_at;
  Rational random_point;
  // The special fibre is generated by the placed limit projectors; when the
  // limits are not complementary the specialized operator is used instead.
  bool limits_complementary = false;
  std::vector<TowerDegree> degrees;
  std::optional<std::string> first_failure;

  bool satisfied() const { return !first_failure.has_value(); }
};

// Dimension constancy and trace-form certificates for 2 <= k <= k_max. The
// generic algebra is generated by S itself, which is the same algebra as the
// one generated by its eigenprojectors.
TowerReport tower_flatness(const Symmetry& s, std::size_t k_max, const TowerOptions& options = {});

}  // namespace ybx
