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

#include "gte/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gte {

namespace {

using Kind = IndexSpace::Kind;

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw FormatError(where + ": expected a number or [re, im]");
}

}  // namespace

Json tensor_to_json(const CanonicalTensor& t) {
  Json entries = Json::array();
  const int p = t.order();
  auto idx_json = [](std::span<const int> tuple) {
    Json a = Json::array();
    for (int i : tuple) a.push_back(i + 1);
    return a;
  };
  switch (t.symmetry()) {
    case SymmetryClass::Symmetric:
    case SymmetryClass::Antisymmetric: {
      const auto& space = t.space_of(0);
      for (std::size_t k = 0; k < space.size(); ++k) {
        entries.push_back({{"idx", idx_json(space.tuple(k))}, {"re", t.component(0).values[k]}});
      }
      break;
    }
    case SymmetryClass::Hermitian: {
      const auto& sym = t.space(Kind::Symmetric);
      const auto& strict = t.space(Kind::Strict);
      for (std::size_t k = 0; k < sym.size(); ++k) {
        const auto pos = strict.find(sym.tuple(k));
        const double im = pos == IndexSpace::npos ? 0.0 : t.component(1).values[pos];
        entries.push_back({{"idx", idx_json(sym.tuple(k))}, {"re", t.component(0).values[k]}, {"im", im}});
      }
      break;
    }
    case SymmetryClass::SelfDual: {
      for (std::size_t c = 0; c < t.component_count(); ++c) {
        const auto eps = decode_epsilon(c, p / 2);
        const auto& space = t.space_of(c);
        for (std::size_t k = 0; k < space.size(); ++k) {
          entries.push_back(
              {{"idx", idx_json(space.tuple(k))}, {"eps", eps}, {"re", t.component(c).values[k]}});
        }
      }
      break;
    }
  }
  return {{"class", to_string(t.symmetry())}, {"p", p}, {"N", t.dim()}, {"entries", entries}};
}

CanonicalTensor tensor_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("tensor document must be a JSON object");
  SymmetryClass cls;
  try {
    cls = symmetry_class_from_string(field<std::string>(j, "class"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const int p = field<int>(j, "p");
  const int n = field<int>(j, "N");
  std::unique_ptr<CanonicalTensor> holder;
  try {
    holder = std::make_unique<CanonicalTensor>(cls, p, n);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  CanonicalTensor& t = *holder;
  if (!j.contains("entries")) return t;
  const Json& entries = j.at("entries");
  if (!entries.is_array()) throw FormatError("field \"entries\" must be an array");

  std::vector<int> idx(static_cast<std::size_t>(p));
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const Json& entry = entries[e];
    const std::string where = "entries[" + std::to_string(e) + "]";
    const auto raw = [&] {
      try {
        return field<std::vector<int>>(entry, "idx");
      } catch (const FormatError& err) {
        throw FormatError(where + ": " + err.what());
      }
    }();
    if (raw.size() != static_cast<std::size_t>(p)) throw FormatError(where + ": idx must have p entries");
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] < 1 || raw[k] > n) throw FormatError(where + ": index " + std::to_string(raw[k]) + " outside [1, N]");
      idx[k] = raw[k] - 1;
    }
    if (!std::is_sorted(idx.begin(), idx.end())) throw FormatError(where + ": idx must be sorted");
    double re = 0.0, im = 0.0;
    try {
      re = entry.contains("re") ? entry.at("re").get<double>() : 0.0;
      im = entry.contains("im") ? entry.at("im").get<double>() : 0.0;
    } catch (const nlohmann::json::exception&) {
      throw FormatError(where + ": re/im must be numbers");
    }
    const bool strict = std::adjacent_find(idx.begin(), idx.end()) == idx.end();

    auto put = [&](std::size_t c, double v, const char* part) {
      const auto& space = t.space_of(c);
      const auto pos = space.find(idx);
      if (pos == IndexSpace::npos) {
        if (v != 0.0) throw FormatError(where + ": " + part + " must be 0 on a repeated index");
        return;
      }
      t.component(c).values[pos] = v;
    };
    switch (cls) {
      case SymmetryClass::Symmetric:
      case SymmetryClass::Antisymmetric:
        if (im != 0.0) throw FormatError(where + ": real tensors take no imaginary part");
        put(0, re, "value");
        break;
      case SymmetryClass::Hermitian:
        put(0, re, "re");
        if (strict) put(1, im, "im");
        else if (im != 0.0) throw FormatError(where + ": im must be 0 on a repeated index");
        break;
      case SymmetryClass::SelfDual: {
        if (im != 0.0) throw FormatError(where + ": self-dual components are real");
        std::vector<int> eps;
        try {
          eps = field<std::vector<int>>(entry, "eps");
        } catch (const FormatError& err) {
          throw FormatError(where + ": " + err.what());
        }
        if (eps.size() != static_cast<std::size_t>(p / 2)) throw FormatError(where + ": eps must have p/2 entries");
        for (int x : eps) {
          if (x < 0 || x > 3) throw FormatError(where + ": eps values must be in 0..3");
        }
        put(encode_epsilon(eps), re, "re");
        break;
      }
    }
  }
  return t;
}

Json dense_to_json(const DenseTensor& t) {
  Json data = Json::array();
  for (const auto& z : t.data()) data.push_back(complex_pair(z));
  return {{"p", t.order()}, {"dim", t.dim()}, {"data", data}};
}

DenseTensor dense_from_json(const Json& j) {
  const int p = field<int>(j, "p");
  const int d = field<int>(j, "dim");
  if (p < 1 || d < 1) throw FormatError("dense tensor needs positive p and dim");
  const Json& data = member(j, "data");
  if (!data.is_array() || data.size() != dense_size(p, d)) throw FormatError("field \"data\" must hold dim^p entries");
  std::vector<Complex> values;
  for (std::size_t k = 0; k < data.size(); ++k) values.push_back(complex_from(data[k], "data[" + std::to_string(k) + "]"));
  return DenseTensor(p, d, std::move(values));
}

Json matrix_to_json(const GroupElement& u) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < u.matrix().rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < u.matrix().cols(); ++c) row.push_back(complex_pair(u.matrix()(r, c)));
    rows.push_back(row);
  }
  return {{"flavor", to_string(u.flavor())}, {"N", u.n()}, {"rows", rows}};
}

GroupElement matrix_from_json(const Json& j) {
  GroupFlavor flavor;
  try {
    flavor = group_flavor_from_string(field<std::string>(j, "flavor"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const int n = field<int>(j, "N");
  if (n < 1) throw FormatError("field \"N\" must be positive");
  const int size = flavor == GroupFlavor::Symplectic ? 2 * n : n;
  const Json& rows = member(j, "rows");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(size)) {
    throw FormatError("field \"rows\" must hold " + std::to_string(size) + " rows");
  }
  Matrix m(size, size);
  for (int r = 0; r < size; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(size)) {
      throw FormatError("rows[" + std::to_string(r) + "] must hold " + std::to_string(size) + " entries");
    }
    for (int c = 0; c < size; ++c) {
      m(r, c) = complex_from(row[static_cast<std::size_t>(c)], "rows[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  GroupElement u(flavor, n, m);
  try {
    u.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return u;
}

Json graph_to_json(const TraceGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) {
    edges.push_back(Json::array({Json::array({a.vertex, a.position + 1}), Json::array({b.vertex, b.position + 1})}));
  }
  return {{"p", g.order()}, {"n", g.vertex_count()}, {"flavor", to_string(g.flavor())}, {"edges", edges}};
}

TraceGraph graph_from_json(const Json& j) {
  const int p = field<int>(j, "p");
  const int n = field<int>(j, "n");
  GraphFlavor flavor = GraphFlavor::Real;
  if (j.contains("flavor")) {
    try {
      flavor = graph_flavor_from_string(field<std::string>(j, "flavor"));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  const Json& edges = member(j, "edges");
  if (!edges.is_array()) throw FormatError("field \"edges\" must be an array");
  std::vector<Edge> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Json& edge = edges[e];
    const std::string where = "edges[" + std::to_string(e) + "]";
    auto slot = [&](const Json& s) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
        throw FormatError(where + ": slots must be [vertex, position]");
      }
      return Slot{s[0].get<int>(), s[1].get<int>() - 1};
    };
    if (!edge.is_array() || edge.size() != 2) throw FormatError(where + ": an edge joins two slots");
    out.push_back({slot(edge[0]), slot(edge[1])});
  }
  try {
    return TraceGraph(p, n, flavor, out);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json report_to_json(const VerificationReport& r) {
  Json subtests = Json::array();
  for (const auto& s : r.subtests) {
    Json o = {{"name", s.name}, {"statistic", s.statistic}, {"threshold", s.threshold}, {"pass", s.pass}};
    o["p_value"] = s.p_value ? Json(*s.p_value) : Json(nullptr);
    subtests.push_back(o);
  }
  Json o = {{"test", r.test},       {"statistic", r.statistic}, {"threshold", r.threshold},
            {"verdict", r.verdict}, {"samples", r.samples},     {"seed", r.seed},
            {"subtests", subtests}};
  o["p_value"] = r.p_value ? Json(*r.p_value) : Json(nullptr);
  return o;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<CanonicalTensor> read_tensors(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<CanonicalTensor> out;
  try {
    const Json whole = Json::parse(text);
    out.push_back(tensor_from_json(whole));
    return out;
  } catch (const nlohmann::json::parse_error&) {
    // not a single document; try one per line
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(tensor_from_json(Json::parse(line)));
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(path + ":" + std::to_string(number) + ": " + e.what());
    } catch (const FormatError& e) {
      throw FormatError(path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  if (out.empty()) throw FormatError(path + ": no tensors found");
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace gte
