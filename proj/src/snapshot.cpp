#include "dicut/snapshot.hpp"

#include <string>

#include "dicut/error.hpp"

namespace dicut {

Matrix compute_snapshot(const Multigraph& g, const ThresholdVector& t) {
  if (!(g.total_weight() > 0.0)) throw UndefinedValue("snapshot of a graph with no edge weight");
  const auto stats = all_vertex_stats(g);
  Matrix m(t.length());
  const double inv = 1.0 / g.total_weight();
  for (const auto& e : g.edges()) {
    if (e.weight == 0.0) continue;
    m.at(t.index_of(*stats[e.from - 1].bias), t.index_of(*stats[e.to - 1].bias)) += e.weight * inv;
  }
  return m;
}

Array4 compute_refined_snapshot(const Multigraph& g, const ThresholdVector& d, const ThresholdVector& t) {
  if (!(g.total_weight() > 0.0)) throw UndefinedValue("refined snapshot of a graph with no edge weight");
  const auto stats = all_vertex_stats(g);
  std::vector<ClassIndex> deg_class(stats.size(), 0);
  std::vector<ClassIndex> bias_class(stats.size(), 0);
  for (std::size_t v = 0; v < stats.size(); ++v) {
    if (stats[v].isolated()) continue;
    if (stats[v].deg < d.front() || stats[v].deg > d.back())
      throw PreconditionViolation("vertex " + std::to_string(v + 1) + " has degree " +
                                  std::to_string(stats[v].deg) + " outside [" + std::to_string(d.front()) +
                                  ", " + std::to_string(d.back()) + "]");
    deg_class[v] = d.index_of(stats[v].deg);
    bias_class[v] = t.index_of(*stats[v].bias);
  }
  Array4 a(d.length(), t.length());
  const double inv = 1.0 / g.total_weight();
  for (const auto& e : g.edges()) {
    if (e.weight == 0.0) continue;
    const auto u = e.from - 1;
    const auto v = e.to - 1;
    a.at(deg_class[u], deg_class[v], bias_class[u], bias_class[v]) += e.weight * inv;
  }
  return a;
}

Matrix project(const Array4& a) {
  Matrix m(a.l());
  for (int x = 1; x <= a.k(); ++x)
    for (int y = 1; y <= a.k(); ++y)
      for (int i = 1; i <= a.l(); ++i)
        for (int j = 1; j <= a.l(); ++j) m.at(i, j) += a.at(x, y, i, j);
  return m;
}

nlohmann::json to_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (int i = 1; i <= m.side(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 1; j <= m.side(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const Array4& a) {
  auto out = nlohmann::json::array();
  for (int x = 1; x <= a.k(); ++x) {
    auto l1 = nlohmann::json::array();
    for (int y = 1; y <= a.k(); ++y) {
      auto l2 = nlohmann::json::array();
      for (int i = 1; i <= a.l(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 1; j <= a.l(); ++j) row.push_back(a.at(x, y, i, j));
        l2.push_back(std::move(row));
      }
      l1.push_back(std::move(l2));
    }
    out.push_back(std::move(l1));
  }
  return out;
}

namespace {

std::size_t square_side(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("expected a non-empty square nested array");
  for (const auto& row : j)
    if (!row.is_array() || row.size() != j.size()) throw InvalidArgument("nested array is not square");
  return j.size();
}

}  // namespace

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto l = static_cast<int>(square_side(j));
  Matrix m(l);
  for (int i = 1; i <= l; ++i)
    for (int c = 1; c <= l; ++c) m.at(i, c) = j.at(i - 1).at(c - 1).get<double>();
  return m;
}

Array4 array_from_json(const nlohmann::json& j) {
  const auto k = static_cast<int>(square_side(j));
  const auto l = static_cast<int>(square_side(j.at(0).at(0)));
  Array4 a(k, l);
  for (int x = 1; x <= k; ++x)
    for (int y = 1; y <= k; ++y) {
      const auto& block = j.at(x - 1).at(y - 1);
      if (static_cast<int>(square_side(block)) != l) throw InvalidArgument("ragged 4D array");
      for (int i = 1; i <= l; ++i)
        for (int c = 1; c <= l; ++c) a.at(x, y, i, c) = block.at(i - 1).at(c - 1).get<double>();
    }
  return a;
}

}  // namespace dicut
