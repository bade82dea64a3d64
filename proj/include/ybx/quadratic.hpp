#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ybx/symmetry.hpp"

namespace ybx {

inline constexpr std::size_t kDefaultTensorBound = 10000;
inline constexpr std::size_t kSaturationIterations = 64;

// (V, J) with dim V = n. `generators` is the spanning family the relations
// were given by; the limit at a special point depends on it, not only on the
// span (see limit_subspace).
struct QuadraticPresentation {
  std::size_t n = 0;
  Subspace relations;
  Matrix generators;

  static QuadraticPresentation from_subspace(const Subspace& j);
  static QuadraticPresentation from_generators(std::size_t n, const Matrix& generators);
};

struct HilbertOptions {
  std::size_t max_ambient = kDefaultTensorBound;  // bound on n^K
};

struct HilbertTable {
  std::size_t max_degree = 0;
  std::vector<std::size_t> dims;  // k = 0..max_degree
  // Entry k (k >= 2) when a complement was checked; entries 0 and 1 are true.
  std::optional<std::vector<bool>> well_situated;
};

HilbertTable hilbert_dims(const Subspace& relations, std::size_t max_degree,
                          const HilbertOptions& options = {});
HilbertTable hilbert_dims(const QuadraticPresentation& p, std::size_t max_degree,
                          const HilbertOptions& options = {});

struct DegreeSituation {
  std::size_t degree = 0;
  std::size_t intersection_dim = 0;  // dim I^(k)
  std::size_t sum_dim = 0;           // dim J^k
  bool well_situated = false;
};

// Throws NotComplementary unless V ⊗ V = i ⊕ j.
std::vector<DegreeSituation> check_well_situated(const Subspace& i, const Subspace& j,
                                                 std::size_t max_degree,
                                                 const HilbertOptions& options = {});

struct LimitResult {
  Subspace limit;           // constant entries
  Matrix saturated;         // polynomial rows whose values at `at` are independent
  std::size_t generic_dim = 0;
  std::size_t naive_dim = 0;  // rank of the generators specialized entrywise
  bool dropped = false;
  std::size_t iterations = 0;
};

// Limit at q = at of the Q(q)-span of the rows of `generators`.
LimitResult limit_subspace(const Matrix& generators, const Rational& at);
LimitResult limit_subspace(const Subspace& j, const Rational& at);

// (V, J_m) for J_m = sum of the eigenspaces other than m (0-based), with
// generators taken from the saturated eigenspace bases at `at`.
QuadraticPresentation eigen_presentation(const Symmetry& sym, std::size_t m, const Rational& at);

enum class FlatnessVerdict { Flat, NotFlat, NotADeformation };
const char* to_string(FlatnessVerdict verdict);

struct FlatnessOptions {
  Rational at = 1;
  bool koszul_claimed = false;
  HilbertOptions hilbert;
};

struct FlatnessReport {
  FlatnessVerdict verdict = FlatnessVerdict::NotFlat;
  std::size_t max_degree = 0;
  Rational at;
  LimitResult limit;
  HilbertTable generic;
  std::optional<HilbertTable> classical;  // absent when the family drops
  std::vector<std::size_t> differing_degrees;
  std::optional<std::string> advisory;
};

FlatnessReport flatness_report(const QuadraticPresentation& p, std::size_t max_degree,
                               const FlatnessOptions& options = {});

}  // namespace ybx
