#include "ybx/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ybx {

using nlohmann::json;

SymmetryFile SymmetryFile::from_symmetry(const Symmetry& s) {
  return {s.n, s.kind, s.eigenvalues, s.matrix};
}

Symmetry SymmetryFile::to_symmetry() const { return eigen_decompose(matrix, eigenvalues, kind); }

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Input, path + ": " + what);
}

RatFun scalar_at(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a scalar string");
  const auto& text = value.get_ref<const std::string&>();
  try {
    return parse_scalar(text);
  } catch (const ParseError& e) {
    throw ParseError(e.code(), e.offset(), path + " \"" + text + "\": " + e.what());
  }
}

std::size_t dim_of(const json& doc) {
  if (!doc.contains("dim")) fail("dim", "missing");
  const json& d = doc["dim"];
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) fail("dim", "expected a positive integer");
  const std::size_t n = d.get<std::size_t>();
  if (n > 16) fail("dim", "at most 16 supported");
  return n;
}

Matrix matrix_at(const json& rows, const std::string& key, std::size_t expect_rows,
                 std::size_t cols) {
  if (!rows.is_array()) fail(key, "expected an array of rows");
  if (expect_rows != 0 && rows.size() != expect_rows) {
    fail(key, "expected " + std::to_string(expect_rows) + " rows, found " +
                  std::to_string(rows.size()));
  }
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string row_path = key + "[" + std::to_string(r) + "]";
    const json& row = rows[r];
    if (!row.is_array() || row.size() != cols) {
      fail(row_path, "expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = scalar_at(row[c], row_path + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

}  // namespace

InputFile parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ErrorCode::Syntax, e.byte == 0 ? 0 : e.byte - 1, "malformed JSON document");
  }
  if (!doc.is_object()) fail("$", "expected an object");
  const std::size_t n = dim_of(doc);
  const std::size_t pair = n * n;

  if (doc.contains("relations")) {
    if (doc.contains("matrix")) fail("$", "both \"matrix\" and \"relations\" present");
    return RelationsFile{n, matrix_at(doc["relations"], "relations", 0, pair)};
  }
  if (!doc.contains("matrix")) fail("$", "expected \"matrix\" or \"relations\"");
  SymmetryFile file;
  file.n = n;
  file.matrix = matrix_at(doc["matrix"], "matrix", pair, pair);
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) fail("kind", "expected a string");
    file.kind = parse_symmetry_kind(doc["kind"].get<std::string>());
  }
  if (!doc.contains("eigenvalues") || !doc["eigenvalues"].is_array()) {
    fail("eigenvalues", "expected an array of scalar strings");
  }
  const json& eig = doc["eigenvalues"];
  for (std::size_t i = 0; i < eig.size(); ++i) {
    file.eigenvalues.push_back(scalar_at(eig[i], "eigenvalues[" + std::to_string(i) + "]"));
  }
  return file;
}

InputFile load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Input, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input(buffer.str());
}

namespace {

std::string quoted(const RatFun& x) { return json(x.to_string()).dump(); }

void write_rows(std::ostringstream& out, const Matrix& m) {
  out << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r == 0 ? "\n" : ",\n") << "    [";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << quoted(m(r, c));
    out << "]";
  }
  out << (m.rows() ? "\n  ]" : "]");
}

}  // namespace

std::string format_file(const SymmetryFile& file) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << file.n << ",\n  \"kind\": " << json(to_string(file.kind)).dump()
      << ",\n  \"eigenvalues\": [";
  for (std::size_t i = 0; i < file.eigenvalues.size(); ++i) {
    out << (i ? ", " : "") << quoted(file.eigenvalues[i]);
  }
  out << "],\n  \"matrix\": ";
  write_rows(out, file.matrix);
  out << "\n}\n";
  return out.str();
}

std::string format_file(const RelationsFile& file) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << file.n << ",\n  \"relations\": ";
  write_rows(out, file.generators);
  out << "\n}\n";
  return out.str();
}

std::string format_file(const InputFile& file) {
  return std::visit([](const auto& f) { return format_file(f); }, file);
}

}  // namespace ybx
