#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybx/linalg.hpp"

namespace ybx {

enum class SymmetryKind { GenericYB, Hecke, BirmanWenzl };

const char* to_string(SymmetryKind kind);
SymmetryKind parse_symmetry_kind(const std::string& text);

// A candidate operator on V ⊗ V together with its declared spectrum and the
// verified eigenspace decomposition. Only eigen_decompose builds one.
struct Symmetry {
  std::size_t n = 0;
  Matrix matrix;
  std::vector<RatFun> eigenvalues;
  std::vector<Subspace> eigenspaces;  // eigenspaces[i] = ker(matrix - eigenvalues[i])
  SymmetryKind kind = SymmetryKind::GenericYB;

  std::vector<std::size_t> eigenspace_dims() const;
  // J_m: the sum of all eigenspaces except the m-th (0-based).
  Subspace complement(std::size_t m) const;
};

enum class SpectrumFailure {
  Empty,
  Duplicate,
  NotInvertible,
  Incomplete,
  Annihilation,
};

const char* to_string(SpectrumFailure failure);

class SpectrumError : public Error {
 public:
  SpectrumError(SpectrumFailure failure, const std::string& detail)
      : Error(ErrorCode::Spectrum, std::string(to_string(failure)) + ": " + detail),
        failure_(failure) {}
  SpectrumFailure failure() const noexcept { return failure_; }

 private:
  SpectrumFailure failure_;
};

Symmetry eigen_decompose(const Matrix& s, const std::vector<RatFun>& eigenvalues,
                         SymmetryKind kind = SymmetryKind::GenericYB);

// S_1 S_2 S_1 == S_2 S_1 S_2 on V^{⊗3}.
bool check_braid(const Matrix& s);

// braid and (S - lambda)(S - mu) == 0. Requires lambda != mu.
bool check_hecke(const Matrix& s, const RatFun& lambda, const RatFun& mu);

struct BWReport {
  RatFun lambda, mu, nu;
  std::optional<RatFun> a;  // P_1 S_2 P_1 = a P_1, when proportional
  std::optional<RatFun> b;  // P_1 P_2 P_1 = b P_1, when proportional
  bool braid = false;
  bool cubic = false;
  bool contraction_a = false;  // relation c)
  bool contraction_b = false;  // relation d)
  bool formula_consistent = false;

  bool all_pass() const { return braid && cubic && contraction_a && contraction_b; }
  RatFun expected_a() const { return lambda * mu * (lambda + mu); }
  RatFun expected_b() const { return (lambda + mu) * (lambda + mu) * nu * nu; }
};

// Birman-Wenzl axioms with P = (S - lambda)(S - mu). Requires nonzero,
// pairwise distinct lambda, mu, nu.
BWReport check_bw(const Matrix& s, const RatFun& lambda, const RatFun& mu, const RatFun& nu);

}  // namespace ybx
