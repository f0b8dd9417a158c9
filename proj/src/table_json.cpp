#include "table_json.hpp"

#include <sstream>
#include <stdexcept>

namespace symchar::detail {

std::string write_table_document(const std::vector<std::pair<std::string, nlohmann::ordered_json>>& header,
                                 const std::vector<Partition>& labels, const IntMatrix& values) {
  std::ostringstream out;
  out << "{\n";
  for (const auto& [key, value] : header) out << "  " << nlohmann::json(key).dump() << ": " << value.dump() << ",\n";
  out << "  \"labels\": [";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << nlohmann::json(labels[i].str()).dump();
  out << "],\n  \"rows\": [";
  for (std::size_t i = 0; i < values.rows(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < values.cols(); ++j) out << (j ? ", \"" : "\"") << values(i, j).get_str() << '"';
    out << ']';
  }
  out << (values.rows() ? "\n  ]\n}\n" : "]\n}\n");
  return out.str();
}

std::vector<Partition> read_labels(const nlohmann::json& doc) {
  if (!doc.contains("labels") || !doc["labels"].is_array()) throw std::invalid_argument("missing 'labels' array");
  std::vector<Partition> labels;
  for (const auto& item : doc["labels"]) {
    if (!item.is_string()) throw std::invalid_argument("labels must be partition strings");
    labels.push_back(Partition::parse(item.get<std::string>()));
  }
  return labels;
}

std::vector<std::vector<Integer>> read_rows(const nlohmann::json& doc) {
  if (!doc.contains("rows") || !doc["rows"].is_array()) throw std::invalid_argument("missing 'rows' array");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw std::invalid_argument("each row must be an array");
    std::vector<Integer> values;
    for (const auto& entry : row) {
      if (!entry.is_string()) throw std::invalid_argument("matrix entries must be decimal strings");
      values.push_back(parse_integer(entry.get<std::string>()));
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

}  // namespace symchar::detail
