// Copyright 2026 The gte Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gte/group.hpp"
#include "gte/harness.hpp"
#include "gte/tensor.hpp"
#include "gte/trace_graph.hpp"

namespace gte {

using Json = nlohmann::json;

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

/// Raised for malformed documents; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"class", "p", "N", "entries": [{"idx" (1-based, sorted), "re", "im"?, "eps"?}]}.
/// Every canonical entry is written; missing entries read as zero.
Json tensor_to_json(const CanonicalTensor& t);
CanonicalTensor tensor_from_json(const Json& j);

/// {"p", "dim", "data": [[re, im], ...]} in row-major order.
Json dense_to_json(const DenseTensor& t);
DenseTensor dense_from_json(const Json& j);

/// {"flavor", "N", "rows": [[[re, im], ...], ...]}; real entries may be plain numbers.
Json matrix_to_json(const GroupElement& u);
/// Parses and validates the defining relation.
GroupElement matrix_from_json(const Json& j);

/// {"p", "n", "flavor", "edges": [[[v, k], [w, l]], ...]}, vertices 0-based, positions 1-based.
Json graph_to_json(const TraceGraph& g);
TraceGraph graph_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

/// One JSON document per file; errors name the path.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Tensors from a file holding one JSON document or newline-delimited documents.
std::vector<CanonicalTensor> read_tensors(const std::string& path);

/// Compact single-line serialization with round-trip doubles.
std::string dump(const Json& j);

}  // namespace gte
