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

/**
 * @file
 *
 * The Pipe algorithm. The semantic value of a source node is treated as a
 * liquid that is pushed towards a destination node along high-affinity
 * paths. Every hop attenuates the flow by the edge affinity and every node
 * can absorb at most its own semantic value. The affinities of the edges
 * that carried liquid feed the semantic affinity A(x,y).
 */

#ifndef SEMNET_PIPE_HPP
#define SEMNET_PIPE_HPP

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "semnet/affinity.hpp"
#include "semnet/graph.hpp"
#include "semnet/semantics.hpp"

namespace semnet {

using Path = std::vector< NodeId >;

struct PipeOptions {
	/// Capacities and liquid at or below this are treated as empty/full.
	double epsilon = 1e-9;
};

/// Mutable routing state of one source/destination run.
struct CapacityState {
	/// Remaining capacity per node, starts at S(v).
	std::vector< double > capacity;
	/// Liquid still waiting at the source, starts at S(x).
	double liquid = 0.0;
	double epsilon = 1e-9;
	/// Edges that were filled without saturating any node. Never routed again.
	std::set< std::pair< NodeId, NodeId > > exhausted;

	static CapacityState fresh( std::span< const double > semantic, NodeId source, double epsilon = 1e-9 );
};

/**
 * Most efficient route from `x` to `y`: minimum sum of -ln F(e) over edges
 * with F(e) > 0 whose target still has capacity above epsilon and that are
 * not exhausted. Equivalent to the path with the largest affinity product.
 * Ties resolve towards lower node ids.
 */
std::optional< Path > efficient_path( const Graph & g, const AffinityMatrix & f, const CapacityState & state,
	NodeId x, NodeId y );

struct FillSummary {
	/// Liquid carried over each hop.
	std::vector< double > carried;
	/// Liquid that reached the last node of the path.
	double delivered = 0.0;
	/// True when some hop was limited by the capacity of its target node.
	bool saturated_node = false;
};

/**
 * Pushes the source liquid along `path`. On hop h with affinity f_h the flow
 * becomes min(M(next), f_h * flow); M(next) is reduced by that amount and
 * f_h is appended to `used` when it is positive. The source loses only what
 * crossed the first hop. When no node saturated, every edge of the path is
 * marked exhausted.
 */
FillSummary fill_path( const AffinityMatrix & f, CapacityState & state, std::span< const NodeId > path,
	std::vector< double > & used );

struct PipeResult {
	double delivered = 0.0;
	/// Affinities of every hop that carried liquid, in routing order.
	std::vector< double > used_affinities;
	std::vector< Path > paths;
	/// Mean hop affinity of each path in `paths`.
	std::vector< double > path_mean_affinity;
	/// The semantic affinity A(x,y); not clamped to 1.
	double affinity = 0.0;
	std::size_t iterations = 0;
	bool hit_iteration_cap = false;
	/// Capacities after the run.
	std::vector< double > final_capacity;
	double final_liquid = 0.0;
};

/**
 * Runs the Pipe algorithm from `x` to `y` on fresh capacities and returns
 *
 *   A = (1 - |S(x) - S(y)| / max(S(x), S(y))) * mean(P) / max_z F(x,z)
 *
 * with A = 0 when nothing was carried, both semantic values are 0 or x has
 * no positive outgoing affinity. At most 10 |V| paths are filled.
 */
PipeResult pipe_comparison( const Graph & g, const AffinityMatrix & f, const SemanticScores & s, NodeId x,
	NodeId y, const PipeOptions & opts = {} );

/// Relative semantic difference factor 1 - |a - b| / max(a, b) (0 when both are 0).
double semantic_similarity_factor( double a, double b ) noexcept;

/// Square table of semantic affinities; (i,j) holds A(nodes[i], nodes[j]).
struct SemanticAffinityTable {
	std::vector< NodeId > nodes;
	std::vector< double > values;

	std::size_t size() const noexcept { return nodes.size(); }
	double operator()( std::size_t i, std::size_t j ) const { return values[ i * nodes.size() + j ]; }
};

/// Every ordered pair from fresh capacities; the diagonal is 1.
SemanticAffinityTable semantic_affinity_matrix( const Graph & g, const AffinityMatrix & f,
	const SemanticScores & s, std::span< const NodeId > nodes, const PipeOptions & opts = {} );

} // namespace semnet

#endif
