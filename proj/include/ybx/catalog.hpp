#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybx/symmetry.hpp"

namespace ybx {

enum class CatalogKind { Permutation, Hecke, BirmanWenzl, Negative };
const char* to_string(CatalogKind kind);

// Built-in examples. Symmetry entries carry a verified Symmetry; the
// negative entry carries a q-family of relation generators instead.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::size_t n = 0;
  CatalogKind kind = CatalogKind::Permutation;
  std::optional<Symmetry> symmetry;
  std::optional<Matrix> relation_generators;
};

std::vector<std::string> catalog_names();

// Builds the entry and re-verifies it (braid, declared spectrum, and the
// Hecke or Birman-Wenzl axioms). Throws UnknownName.
CatalogEntry catalog_get(const std::string& name);

// Raw constructions, unverified.
Matrix glq_matrix(std::size_t n);
Matrix so3_matrix();
Matrix nonflat_generators();

}  // namespace ybx
