#pragma once

// Shared reading/writing of label-annotated integer matrices as JSON documents.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symchar/matrix.hpp"
#include "symchar/partition.hpp"

namespace symchar::detail {

// Header fields are emitted first, in order, followed by "labels" and "rows".
// Integers are written as decimal strings, one matrix row per line.
std::string write_table_document(const std::vector<std::pair<std::string, nlohmann::ordered_json>>& header,
                                 const std::vector<Partition>& labels, const IntMatrix& values);

// Throws std::invalid_argument on malformed content.
std::vector<Partition> read_labels(const nlohmann::json& doc);
// Rows as given; square-ness is checked by the caller.
std::vector<std::vector<Integer>> read_rows(const nlohmann::json& doc);

}  // namespace symchar::detail
