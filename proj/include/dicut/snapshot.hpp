#pragma once

#include <json.hpp>

#include "dicut/multigraph.hpp"
#include "dicut/partition.hpp"
#include "dicut/tensor.hpp"

namespace dicut {

/// Weight fraction of edges from bias class i to bias class j. Edges with an
/// isolated endpoint cannot exist, so every edge lands in some entry.
/// Throws UndefinedValue when m_G = 0.
Matrix compute_snapshot(const Multigraph& g, const ThresholdVector& t);

/// Weight fraction of edges by (degree class, degree class, bias class, bias
/// class). Throws PreconditionViolation, naming the vertex, if a nonisolated
/// degree lies outside [d_0, d_k].
Array4 compute_refined_snapshot(const Multigraph& g, const ThresholdVector& d,
                                const ThresholdVector& t);

/// (Proj A)(i, j) = sum over a, b of A(a, b, i, j).
Matrix project(const Array4& a);

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Array4& a);
Matrix matrix_from_json(const nlohmann::json& j);
Array4 array_from_json(const nlohmann::json& j);

}  // namespace dicut
