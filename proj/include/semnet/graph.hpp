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
 * Weighted directed graph with unique string labels, classical centrality
 * measures and network fusion.
 */

#ifndef SEMNET_GRAPH_HPP
#define SEMNET_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semnet/frequency.hpp"

namespace semnet {

using NodeId = std::size_t;

/// Outgoing or incoming adjacency of one node, ordered by neighbour id.
using Adjacency = std::map< NodeId, double >;

/**
 * Directed graph with strictly positive edge weights and no self-loops.
 *
 * Node ids are dense indices in insertion order. Labels are unique, so a
 * label identifies exactly one node. Parallel edges collapse: re-adding an
 * edge replaces its weight.
 */
class Graph {
public:
	Graph() = default;

	/// Returns the id of `label`, creating the node if it does not exist.
	NodeId add_node( std::string_view label );

	/// Creates or replaces the edge `source -> target`.
	/// Throws InvalidArgument for self-loops or non-positive weights.
	void add_edge( NodeId source, NodeId target, double weight );
	void add_edge( std::string_view source, std::string_view target, double weight );

	/// Adds `weight` to the edge, creating it when absent.
	void accumulate_edge( NodeId source, NodeId target, double weight );

	std::optional< NodeId > find( std::string_view label ) const;
	/// Like find() but throws NotFound.
	NodeId id( std::string_view label ) const;
	const std::string & label( NodeId id ) const;

	std::size_t node_count() const noexcept { return labels_.size(); }
	std::size_t edge_count() const noexcept { return edge_count_; }
	bool empty() const noexcept { return labels_.empty(); }

	/// Weight of `source -> target`, 0 when absent.
	double weight( NodeId source, NodeId target ) const;
	bool has_edge( NodeId source, NodeId target ) const;

	const Adjacency & out_edges( NodeId id ) const;
	const Adjacency & in_edges( NodeId id ) const;

	/// Sum of outgoing weights.
	double out_weight( NodeId id ) const;

	const std::vector< std::string > & labels() const noexcept { return labels_; }

	/// Label-level equality: same label set and same labelled edges with
	/// identical weights, regardless of node id assignment.
	bool operator==( const Graph & other ) const;

private:
	void check_node( NodeId id ) const;

	std::vector< std::string > labels_;
	std::unordered_map< std::string, NodeId > index_;
	std::vector< Adjacency > out_;
	std::vector< Adjacency > in_;
	std::size_t edge_count_ = 0;
};

struct Degree {
	std::size_t in = 0;
	std::size_t out = 0;
	std::size_t total = 0;

	bool operator==( const Degree & ) const = default;
};

/// Unweighted edge counts around `node`.
Degree degree( const Graph & g, NodeId node );

enum class Measure {
	Degree,
	InDegree,
	OutDegree,
	Betweenness,
	Closeness,
	Eigenvector,
};

const char * to_string( Measure m ) noexcept;

struct CentralityScores {
	Measure measure;
	std::vector< double > values;
};

/// Total, in- or out-degree counts as reals (not normalized).
CentralityScores degree_centrality( const Graph & g, Measure which = Measure::Degree );

/// Brandes betweenness over directed hop-count shortest paths, normalized by
/// (n-1)(n-2). Graphs with fewer than three nodes score 0 everywhere.
CentralityScores betweenness( const Graph & g );

/// Wasserman-Faust closeness over outgoing hop distances:
/// ((r-1)/(n-1)) * ((r-1)/sum of distances), with r-1 reachable nodes.
CentralityScores closeness( const Graph & g );

struct EigenvectorOptions {
	double tolerance = 1e-10;
	std::size_t max_iterations = 10000;
};

/**
 * Eigenvector centrality of the symmetrized weighted adjacency
 * (w(u,v) = max(C(u,v), C(v,u))), unit Euclidean norm.
 *
 * Iterates v <- (A + I) v, which has the same dominant eigenvector as A but
 * does not oscillate on bipartite graphs. Converged when the max-abs change
 * between successive normalized iterates drops below the tolerance.
 *
 * Throws InvalidArgument on a graph without edges and NoConvergence when the
 * iteration budget is exhausted.
 */
CentralityScores eigenvector( const Graph & g, const EigenvectorOptions & opts = {} );

/// Symmetrized weighted adjacency used by eigenvector(), row-major n x n.
std::vector< double > symmetrized_adjacency( const Graph & g );

enum class FuseRule {
	Max,  ///< duplicated edges keep the highest weight
	Sum,  ///< duplicated edges add up (sensitivity option)
};

/// Union of node and edge sets by label. Nodes of the result are created in
/// lexicographic label order, so the result does not depend on input order.
Graph fuse( std::span< const Graph > graphs, FuseRule rule = FuseRule::Max );

/**
 * Induced subgraph on the `n` labels with the highest frequency. Ties are
 * broken by lexicographic label order. Nodes keep their relative id order.
 */
Graph top_n_subgraph( const Graph & g, const FrequencyTable & freq, std::size_t n );

/// Labels of `g` ranked by frequency (descending), ties by label.
std::vector< std::string > rank_by_frequency( const Graph & g, const FrequencyTable & freq );

} // namespace semnet

#endif
