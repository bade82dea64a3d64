#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ybx/symmetry.hpp"

namespace ybx {

// {"dim", "kind", "eigenvalues": [scalar...], "matrix": [[scalar...]...]}
struct SymmetryFile {
  std::size_t n = 0;
  SymmetryKind kind = SymmetryKind::GenericYB;
  std::vector<RatFun> eigenvalues;
  Matrix matrix;

  static SymmetryFile from_symmetry(const Symmetry& s);
  // eigen_decompose with the declared spectrum; throws SpectrumError.
  Symmetry to_symmetry() const;
};

// {"dim", "relations": [[scalar...]...]}: rows spanning J inside V ⊗ V.
struct RelationsFile {
  std::size_t n = 0;
  Matrix generators;
};

using InputFile = std::variant<SymmetryFile, RelationsFile>;

// Throws Error(Input) for structural problems and ParseError for scalars;
// messages name the offending JSON path.
InputFile parse_input(std::string_view text);
InputFile load_input(const std::string& path);

// Canonical text: one matrix row per line, scalars in canonical form, so
// emit -> parse -> emit is byte-identical.
std::string format_file(const SymmetryFile& file);
std::string format_file(const RelationsFile& file);
std::string format_file(const InputFile& file);

}  // namespace ybx
