#pragma once

#include <filesystem>

#include "pancake/cayley_graph.hpp"

namespace pancake {

/// Writes `%%MatrixMarket matrix coordinate pattern symmetric`, 1-based
/// indices, lower-triangle entries only, LF line endings.
void export_matrix_market(const SparseAdjacency& a, const std::filesystem::path& destination);

/// Reads a pattern-symmetric coordinate file back into a full symmetric CSR.
SparseAdjacency import_matrix_market(const std::filesystem::path& source);

}  // namespace pancake
