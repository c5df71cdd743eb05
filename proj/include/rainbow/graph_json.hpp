#pragma once

// JSON form of a clustered graph:
//   {"k": 3, "x": 0, "a": [0, 0, "1/4"],
//    "b": [{"i": 1, "j": 2, "w": "1/2"}, {"i": 1, "j": 3, "w": 0.25}]}
// Colors are 1-based, i < j, only nonzero pair weights are listed. Weights
// may be JSON numbers or exact "p/q" strings.

#include "rainbow/clustered_graph.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace rainbow {

using nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline json weight_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

inline json weight_to_json(double v) { return v; }

inline Rational weight_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(mpz_class(v.dump(), 10));
    if (v.is_number_float()) return rational_from_shortest_decimal(v.get<double>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
  throw FormatError(where + ": weight must be a number or a \"p/q\" string");
}

template <class T>
json graph_to_json(const ClusteredGraph<T>& g) {
  json out;
  out["k"] = g.k();
  out["x"] = weight_to_json(g.hub_weight());
  json a = json::array();
  for (int i = 0; i < g.k(); ++i) a.push_back(weight_to_json(g.single_weight(i)));
  out["a"] = std::move(a);
  json b = json::array();
  for (int i = 0; i < g.k(); ++i)
    for (int j = i + 1; j < g.k(); ++j)
      if (g.pair_weight(i, j) != 0) b.push_back({{"i", i + 1}, {"j", j + 1}, {"w", weight_to_json(g.pair_weight(i, j))}});
  out["b"] = std::move(b);
  return out;
}

/// Parses the JSON form exactly. Does not check the simplex constraints;
/// see validate().
inline ExactGraph graph_from_json(const json& in) {
  if (!in.is_object()) throw FormatError("graph must be a JSON object");
  if (!in.contains("k") || !in["k"].is_number_integer()) throw FormatError("\"k\" must be an integer");
  const long k = in["k"].get<long>();
  if (k < 1 || k > 1000) throw FormatError("\"k\" must lie in [1, 1000]");
  ExactGraph g(static_cast<int>(k));

  if (in.contains("x")) g.set_hub(weight_from_json(in["x"], "x"));
  if (in.contains("a")) {
    const json& a = in["a"];
    if (!a.is_array() || static_cast<long>(a.size()) != k) throw FormatError("\"a\" must be an array of k weights");
    for (long i = 0; i < k; ++i) g.set_single(static_cast<int>(i), weight_from_json(a[i], "a[" + std::to_string(i + 1) + "]"));
  }
  if (in.contains("b")) {
    const json& b = in["b"];
    if (!b.is_array()) throw FormatError("\"b\" must be an array");
    std::set<std::pair<long, long>> seen;
    for (const json& e : b) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("w") || !e["i"].is_number_integer() ||
          !e["j"].is_number_integer())
        throw FormatError("each \"b\" entry needs integer \"i\", \"j\" and a weight \"w\"");
      const long i = e["i"].get<long>();
      const long j = e["j"].get<long>();
      const std::string where = "b{" + std::to_string(i) + "," + std::to_string(j) + "}";
      if (i < 1 || j > k) throw FormatError(where + ": color out of range");
      if (!(i < j)) throw FormatError(where + ": requires i < j");
      if (!seen.emplace(i, j).second) throw FormatError(where + ": duplicate pair");
      g.set_pair(static_cast<int>(i - 1), static_cast<int>(j - 1), weight_from_json(e["w"], where));
    }
  }
  return g;
}

inline ExactGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return graph_from_json(doc);
}

template <class T>
void write_graph(const ClusteredGraph<T>& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << graph_to_json(g).dump(2) << '\n';
}

}  // namespace rainbow
