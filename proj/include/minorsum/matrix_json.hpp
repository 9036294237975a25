#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "minorsum/matrix.hpp"
#include "minorsum/rational.hpp"

namespace minorsum {

/// Matrix wire format: {"rows": n, "cols": k, "entries": [[...], ...]} with
/// each entry a rational literal string ("p/q") or an integer number.
inline DenseMatrix<Rational> read_matrix_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs rows, cols and entries");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw std::invalid_argument("rows and cols must be nonnegative integers");
  std::size_t rows = j["rows"].get<std::size_t>();
  std::size_t cols = j["cols"].get<std::size_t>();
  const nlohmann::json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows)
    throw std::invalid_argument("entries must be an array of `rows` rows");
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("each row must hold `cols` entries");
    for (const auto& cell : row) {
      if (cell.is_string()) {
        data.push_back(parse_rational(cell.get<std::string>()));
      } else if (cell.is_number_integer() || cell.is_number_unsigned()) {
        data.push_back(Rational(cell.get<std::int64_t>()));
      } else {
        throw std::invalid_argument("entries must be rational strings or integers");
      }
    }
  }
  return DenseMatrix<Rational>(rows, cols, std::move(data));
}

inline nlohmann::json write_matrix_json(const DenseMatrix<Rational>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    entries.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

}  // namespace minorsum
