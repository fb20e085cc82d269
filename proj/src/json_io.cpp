// Copyright 2026 The nlgames authors
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

#include "nlgames/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nlgames {

namespace {

using nlohmann::json;

// nlohmann's dump() prints floats with shortest-round-trip heuristics that
// have changed across releases. The emitter below pins the byte format:
// objects keep the library's sorted key order, floats always go through
// %.17g, and zero is normalized to drop the sign of -0.0.
void emit_string(const std::string& s, std::string* out) {
  out->push_back('"');
  for (char ch : s) {
    switch (ch) {
      case '"': *out += "\\\""; break;
      case '\\': *out += "\\\\"; break;
      case '\b': *out += "\\b"; break;
      case '\f': *out += "\\f"; break;
      case '\n': *out += "\\n"; break;
      case '\r': *out += "\\r"; break;
      case '\t': *out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          *out += buf;
        } else {
          out->push_back(ch);
        }
    }
  }
  out->push_back('"');
}

void emit(const json& j, std::string* out) {
  switch (j.type()) {
    case json::value_t::object: {
      out->push_back('{');
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out->push_back(',');
        first = false;
        emit_string(key, out);
        out->push_back(':');
        emit(value, out);
      }
      out->push_back('}');
      break;
    }
    case json::value_t::array: {
      out->push_back('[');
      bool first = true;
      for (const auto& value : j) {
        if (!first) out->push_back(',');
        first = false;
        emit(value, out);
      }
      out->push_back(']');
      break;
    }
    case json::value_t::string:
      emit_string(j.get<std::string>(), out);
      break;
    case json::value_t::boolean:
      *out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      *out += std::to_string(j.get<long long>());
      break;
    case json::value_t::number_unsigned:
      *out += std::to_string(j.get<unsigned long long>());
      break;
    case json::value_t::number_float: {
      double x = j.get<double>();
      if (x == 0.0) x = 0.0;  // normalize -0.0
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      *out += buf;
      break;
    }
    default:
      *out += "null";
  }
}

std::string dump_stable(const json& j) {
  std::string out;
  emit(j, &out);
  out.push_back('\n');
  return out;
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::MalformedInput, "not valid JSON");
  }
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::MalformedInput,
                std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

long long int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw Error(ErrorCode::MalformedInput,
                std::string("field '") + key + "' must be an integer");
  }
  return v.get<long long>();
}

double number_of(const json& v, const char* what) {
  if (!v.is_number()) {
    throw Error(ErrorCode::MalformedInput,
                std::string(what) + " must be a number");
  }
  return v.get<double>();
}

std::vector<std::string> string_list_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) {
    throw Error(ErrorCode::MalformedInput,
                std::string("field '") + key + "' must be an array");
  }
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw Error(ErrorCode::MalformedInput,
                  std::string("field '") + key + "' must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

json matrix_value(const Matrix& m) {
  json entries = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_value_parse(const json& j) {
  long long rows = int_field(j, "rows");
  long long cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::MalformedInput, "negative matrix dimensions");
  }
  const json& entries = field(j, "entries");
  if (!entries.is_array() ||
      static_cast<long long>(entries.size()) != rows * cols) {
    throw Error(ErrorCode::MalformedInput,
                "entries must list rows*cols pairs");
  }
  Matrix m(rows, cols);
  long long k = 0;
  for (const auto& entry : entries) {
    if (!entry.is_array() || entry.size() != 2) {
      throw Error(ErrorCode::MalformedInput,
                  "matrix entry must be a [re,im] pair");
    }
    double re = number_of(entry[0], "matrix entry");
    double im = number_of(entry[1], "matrix entry");
    m(k / cols, k % cols) = Complex(re, im);
    ++k;
  }
  return m;
}

json graph_value(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) {
    edges.push_back({g.vertices[u], g.vertices[v]});
  }
  return json{{"vertices", g.vertices}, {"edges", edges}};
}

Graph graph_value_parse(const json& j) {
  Graph g;
  g.vertices = string_list_field(j, "vertices");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) {
    throw Error(ErrorCode::MalformedInput, "field 'edges' must be an array");
  }
  for (const auto& edge : edges) {
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() ||
        !edge[1].is_string()) {
      throw Error(ErrorCode::MalformedInput,
                  "edge must be a [u,v] label pair");
    }
    g.edges.emplace_back(g.vertex_index(edge[0].get<std::string>()),
                         g.vertex_index(edge[1].get<std::string>()));
  }
  for (auto& [u, v] : g.edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.validate();
  return g;
}

json game_value(const NonlocalGame& g) {
  json pi = json::array();
  json v = json::array();
  for (size_t s = 0; s < g.S.size(); ++s) {
    for (size_t t = 0; t < g.T.size(); ++t) {
      double p = g.pi_at(static_cast<int>(s), static_cast<int>(t));
      if (p != 0.0) pi.push_back({g.S[s], g.T[t], p});
      for (size_t a = 0; a < g.A.size(); ++a) {
        for (size_t b = 0; b < g.B.size(); ++b) {
          if (g.accepts(static_cast<int>(s), static_cast<int>(t),
                        static_cast<int>(a), static_cast<int>(b))) {
            v.push_back({g.S[s], g.T[t], g.A[a], g.B[b]});
          }
        }
      }
    }
  }
  return json{{"S", g.S}, {"T", g.T}, {"A", g.A}, {"B", g.B},
              {"pi", pi}, {"V", v}};
}

NonlocalGame game_value_parse(const json& j) {
  NonlocalGame g;
  g.S = string_list_field(j, "S");
  g.T = string_list_field(j, "T");
  g.A = string_list_field(j, "A");
  g.B = string_list_field(j, "B");
  g.init_tables();
  const json& pi = field(j, "pi");
  if (!pi.is_array()) {
    throw Error(ErrorCode::MalformedInput, "field 'pi' must be an array");
  }
  for (const auto& entry : pi) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
        !entry[1].is_string()) {
      throw Error(ErrorCode::MalformedInput,
                  "pi entry must be [s,t,weight]");
    }
    g.pi_at(g.s_index(entry[0].get<std::string>()),
            g.t_index(entry[1].get<std::string>())) =
        number_of(entry[2], "pi weight");
  }
  const json& v = field(j, "V");
  if (!v.is_array()) {
    throw Error(ErrorCode::MalformedInput, "field 'V' must be an array");
  }
  for (const auto& entry : v) {
    if (!entry.is_array() || entry.size() != 4 || !entry[0].is_string() ||
        !entry[1].is_string() || !entry[2].is_string() ||
        !entry[3].is_string()) {
      throw Error(ErrorCode::MalformedInput, "V entry must be [s,t,a,b]");
    }
    g.set_accepts(g.s_index(entry[0].get<std::string>()),
                  g.t_index(entry[1].get<std::string>()),
                  g.a_index(entry[2].get<std::string>()),
                  g.b_index(entry[3].get<std::string>()), true);
  }
  g.validate();
  return g;
}

json strategy_value(const QuantumStrategy& st) {
  Matrix psi(st.psi.size(), 1);
  psi.col(0) = st.psi;
  json alice = json::object();
  for (const auto& [q, povm] : st.alice) {
    json list = json::array();
    for (const auto& m : povm) list.push_back(matrix_value(m));
    alice[q] = list;
  }
  json bob = json::object();
  for (const auto& [q, povm] : st.bob) {
    json list = json::array();
    for (const auto& m : povm) list.push_back(matrix_value(m));
    bob[q] = list;
  }
  return json{{"dA", st.d_a}, {"dB", st.d_b}, {"psi", matrix_value(psi)},
              {"alice", alice}, {"bob", bob}};
}

QuantumStrategy strategy_value_parse(const json& j) {
  QuantumStrategy st;
  st.d_a = int_field(j, "dA");
  st.d_b = int_field(j, "dB");
  Matrix psi = matrix_value_parse(field(j, "psi"));
  if (psi.cols() != 1) {
    throw Error(ErrorCode::MalformedInput, "psi must be a column matrix");
  }
  st.psi = psi.col(0);
  for (const char* side : {"alice", "bob"}) {
    const json& map = field(j, side);
    if (!map.is_object()) {
      throw Error(ErrorCode::MalformedInput,
                  std::string("field '") + side + "' must be an object");
    }
    auto& dst = side == std::string("alice") ? st.alice : st.bob;
    for (const auto& [q, list] : map.items()) {
      if (!list.is_array()) {
        throw Error(ErrorCode::MalformedInput,
                    "measurement must be an array of matrices");
      }
      auto& povm = dst[q];
      for (const auto& m : list) povm.push_back(matrix_value_parse(m));
    }
  }
  return st;
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return dump_stable(matrix_value(m)); }
Matrix matrix_from_json(const std::string& text) {
  return matrix_value_parse(parse_or_throw(text));
}

std::string graph_to_json(const Graph& g) { return dump_stable(graph_value(g)); }
Graph graph_from_json(const std::string& text) {
  return graph_value_parse(parse_or_throw(text));
}

std::string game_to_json(const NonlocalGame& g) {
  return dump_stable(game_value(g));
}
NonlocalGame game_from_json(const std::string& text) {
  return game_value_parse(parse_or_throw(text));
}

std::string strategy_to_json(const QuantumStrategy& st) {
  return dump_stable(strategy_value(st));
}
QuantumStrategy strategy_from_json(const std::string& text) {
  return strategy_value_parse(parse_or_throw(text));
}

std::string protocol_to_json(const Protocol& p) {
  json j{{"graph", graph_value(p.graph)},
         {"game", game_value(p.game)},
         {"strategy", strategy_value(p.strategy)},
         {"colors", p.colors},
         {"classical_bits", p.classical_bits},
         {"qubits", p.qubits}};
  return dump_stable(j);
}

Protocol protocol_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  Protocol p;
  p.graph = graph_value_parse(field(j, "graph"));
  p.game = game_value_parse(field(j, "game"));
  p.strategy = strategy_value_parse(field(j, "strategy"));
  p.colors = static_cast<int>(int_field(j, "colors"));
  p.classical_bits = static_cast<int>(int_field(j, "classical_bits"));
  p.qubits = static_cast<int>(int_field(j, "qubits"));
  return p;
}

std::string classical_value_to_json(const NonlocalGame& g,
                                    const ClassicalValueResult& r) {
  json alice = json::array();
  for (size_t s = 0; s < g.S.size(); ++s) {
    alice.push_back({g.S[s], g.A[r.alice_answers[s]]});
  }
  json bob = json::array();
  for (size_t t = 0; t < g.T.size(); ++t) {
    bob.push_back({g.T[t], g.B[r.bob_answers[t]]});
  }
  return dump_stable(json{{"value", r.value}, {"alice", alice}, {"bob", bob}});
}

std::string detection_to_json(const NonlocalGame& g,
                              const WeakProjectionReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    bool bob_side = w.party == Party::Bob;
    const auto& own = bob_side ? g.T : g.S;
    const auto& partner_set = bob_side ? g.S : g.T;
    const auto& answers = bob_side ? g.A : g.B;
    const auto& images = bob_side ? g.B : g.A;
    json partner = json::array();
    json f = json::array();
    for (size_t q = 0; q < own.size(); ++q) {
      partner.push_back({own[q], partner_set[w.partner[q]]});
      for (size_t a = 0; a < answers.size(); ++a) {
        if (w.f[q][a] >= 0) {
          f.push_back({own[q], answers[a], images[w.f[q][a]]});
        }
      }
    }
    witnesses.push_back(json{{"party", party_name(w.party)},
                             {"partner", partner},
                             {"f", f}});
  }
  return dump_stable(
      json{{"projection_game", r.projection_game}, {"witnesses", witnesses}});
}

std::string perfection_to_json(const NonlocalGame& g,
                               const PerfectionLedger& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        {g.S[v.s], g.T[v.t], g.A[v.a], g.B[v.b], v.magnitude});
  }
  return dump_stable(json{{"perfect", r.perfect},
                          {"winning_probability", r.winning_probability},
                          {"total_loss", r.total_loss},
                          {"max_violation", r.max_violation},
                          {"violations", violations}});
}

namespace {
json residual_table(const std::vector<ResidualEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({e.label, e.value});
  return out;
}
}  // namespace

std::string structure_to_json(const StructureReport& r) {
  return dump_stable(json{{"perfect", r.perfect},
                          {"total_loss", r.total_loss},
                          {"schmidt_coefficients", r.schmidt_coefficients},
                          {"schmidt_classes", r.schmidt_classes},
                          {"projectivity", residual_table(r.projectivity)},
                          {"commutator", residual_table(r.commutator)},
                          {"off_block_mass", residual_table(r.off_block_mass)},
                          {"max_projectivity", r.max_projectivity()},
                          {"max_commutator", r.max_commutator()},
                          {"max_off_block", r.max_off_block()}});
}

std::string simulation_summary_to_json(const SimulationSummary& r) {
  return dump_stable(json{{"pairs_checked", r.pairs_checked},
                          {"correct", r.correct},
                          {"max_deviation", r.max_deviation},
                          {"classical_bits", r.classical_bits},
                          {"qubits", r.qubits}});
}

std::string chromatic_to_json(const Graph& g, const ChromaticResult& r) {
  json coloring = json::array();
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    coloring.push_back({g.vertices[v], r.coloring[v]});
  }
  return dump_stable(json{{"chi", r.chi}, {"coloring", coloring}});
}

std::string cost_report_to_json(const CostReport& r) {
  return dump_stable(json{{"classical_bits", r.classical_bits},
                          {"qubits", r.qubits},
                          {"deterministic_bits", r.deterministic_bits}});
}

std::string cost_bounds_to_json(const CostBoundReport& r) {
  return dump_stable(
      json{{"per_part_chromatic_bound", r.per_part_chromatic_bound},
           {"printed_bound", r.printed_bound},
           {"exceeds_printed", r.exceeds_printed},
           {"composed_deterministic_bits", r.composed_deterministic_bits},
           {"quantum_floor_bits", r.quantum_floor_bits}});
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::MalformedInput, "cannot write '" + path + "'");
  }
  out << text;
}

}  // namespace nlgames
