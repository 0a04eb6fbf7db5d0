#pragma once

#include <array>
#include <vector>

#include "mwr/array/subarray.hpp"
#include "mwr/graph/graph.hpp"
#include "mwr/reductions/certificate.hpp"

namespace mwr::reductions {

/// B = [[A, -Aᵀ], [-Aᵀ, D]] with D = M'' off the diagonal and M' + M'' on it.
/// kTight puts the non-edge penalty -(5W+1) on the diagonal of A so that
/// degenerate quadruples (repeated vertex) lose; kPaper keeps it at 0.
/// Certificate: a = 1, b = M' + M'' against the maximum triangle.
Reduction<DenseArray<Int>> triangle_to_4comb(const graph::EdgeWeightedGraph& g, Mode mode = Mode::kTight);

/// Triangle (sorted, 0-based) read off an optimal quadruple: i, j and i' - n.
std::vector<std::size_t> triangle_from_4comb(const ReductionCertificate& cert, const array::FourCombination<Int>& q);

enum class Pad {
  kSentinel,  // ramp border A'[r,1] = L·r, A'[1,c] = L·c with L = 4·Σ|B| + 1
  kZero,      // zero border
};

std::string_view to_string(Pad p);
Pad pad_from_string(std::string_view s);

/// Pads B to A' ((m+1)×(m+1), B in rows/columns 2..m+1) and returns
/// C[i,j] = A'[i,j] + A'[i+1,j+1] - A'[i,j+1] - A'[i+1,j].
/// Certificate: a = 1, b = 0 against the strict 4-combination of B
/// (sentinel mode, m >= 2).
Reduction<DenseArray<Int>> fourcomb_to_subarray(const DenseArray<Int>& b, Pad pad = Pad::kSentinel);

/// The padded matrix A' on its own.
DenseArray<Int> padded_matrix(const DenseArray<Int>& b, Pad pad);

/// Quadruple on B selected by a subarray of C: rows p..q, columns r..s map to
/// (p-1, r-1, q, s). Unmapped (border) rows or columns come back as 0.
array::FourCombination<Int> fourcomb_from_subarray(const array::SubarraySolution<Int>& s, const DenseArray<Int>& b);

}  // namespace mwr::reductions
