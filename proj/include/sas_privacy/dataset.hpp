// Copyright 2026 The SaS Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SAS_PRIVACY_DATASET_HPP_
#define SAS_PRIVACY_DATASET_HPP_

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <variant>
#include <vector>

#include "sas_privacy/error.hpp"

namespace sas_privacy {

using FieldValue = std::variant<double, std::string>;

// Table of records sharing one header. Each row is a flat record whose
// fields line up with the header.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<FieldValue>& row(std::size_t i) const { return rows_.at(i); }

  void add_row(std::vector<FieldValue> row) {
    if (row.size() != columns_.size()) {
      std::ostringstream msg;
      msg << "row has " << row.size() << " fields, header has " << columns_.size();
      throw SchemaError(msg.str());
    }
    rows_.push_back(std::move(row));
  }

  // Copy without row i; used to build add/remove neighbors.
  Dataset without_row(std::size_t i) const {
    Dataset out(columns_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != i) out.rows_.push_back(rows_[r]);
    }
    return out;
  }

  std::size_t column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i] == name) return i;
    }
    throw SchemaError("no column named '" + std::string(name) + "'");
  }

  std::vector<double> numeric_column(std::string_view name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto* value = std::get_if<double>(&rows_[r][idx]);
      if (value == nullptr) {
        std::ostringstream msg;
        msg << "column '" << name << "' is not numeric (row " << r + 1 << ")";
        throw SchemaError(msg.str());
      }
      out.push_back(*value);
    }
    return out;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<FieldValue>> rows_;
};

namespace detail {

inline FieldValue parse_field(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc() && ptr == last && first != last) return value;
  return text;
}

// Splits one logical CSV record; quoted fields may contain commas, doubled
// quotes and line breaks. Returns false at end of input.
inline bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool any = false;
  char c = 0;
  while (in.get(c)) {
    any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      // CRLF line endings.
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) throw SchemaError("unterminated quoted field in CSV input");
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

}  // namespace detail

// Comma-separated UTF-8 text with one header row. Numeric-looking fields are
// stored as doubles, everything else as strings. Blank lines are skipped.
inline Dataset read_csv(std::istream& in) {
  std::vector<std::string> fields;
  if (!detail::read_csv_record(in, fields)) throw SchemaError("CSV input has no header row");
  if (!fields.empty() && fields[0].starts_with("\xEF\xBB\xBF")) fields[0].erase(0, 3);
  Dataset data(fields);
  std::size_t line = 1;
  while (detail::read_csv_record(in, fields)) {
    ++line;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != data.columns().size()) {
      std::ostringstream msg;
      msg << "CSV line " << line << " has " << fields.size() << " fields, expected "
          << data.columns().size();
      throw SchemaError(msg.str());
    }
    std::vector<FieldValue> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(detail::parse_field(f));
    data.add_row(std::move(row));
  }
  return data;
}

inline Dataset read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open dataset file '" + path + "'");
  return read_csv(in);
}

}  // namespace sas_privacy

#endif  // SAS_PRIVACY_DATASET_HPP_
