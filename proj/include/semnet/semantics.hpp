/*
 *   Copyright 2026 The semnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMNET_SEMANTICS_HPP
#define SEMNET_SEMANTICS_HPP

#include <span>
#include <vector>

#include "semnet/affinity.hpp"
#include "semnet/frequency.hpp"
#include "semnet/graph.hpp"

namespace semnet {

/// Intrinsic, extrinsic and semantic value per node id; semantic = I + E.
struct SemanticScores {
	std::vector< double > intrinsic;
	std::vector< double > extrinsic;
	std::vector< double > semantic;

	std::size_t size() const noexcept { return semantic.size(); }
};

/// Intrinsic values aligned with the node ids of `g` (raw frequency counts).
std::vector< double > intrinsic_values( const Graph & g, const FrequencyTable & freq );

/**
 * Extrinsic value of every node.
 *
 * For x with in-neighbours X_1..X_a (nodes with F(X_i, x) > 0):
 *
 *   E(x) = sum_i max( F(X_i,x) I(X_i) - sum_{j != i} F(X_i,X_j) I(X_i) F(X_j,x), 0 )
 *
 * The subtracted term discounts what X_i already reaches x through another
 * in-neighbour X_j.
 */
std::vector< double > extrinsic( const Graph & g, const AffinityMatrix & f, std::span< const double > intrinsic );
std::vector< double > extrinsic( const Graph & g, const AffinityMatrix & f, const FrequencyTable & freq );

SemanticScores semantic_value( const Graph & g, const AffinityMatrix & f, std::span< const double > intrinsic );
SemanticScores semantic_value( const Graph & g, const AffinityMatrix & f, const FrequencyTable & freq );

} // namespace semnet

#endif
