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

#include "semnet/pipe.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "semnet/error.hpp"

namespace semnet {

CapacityState CapacityState::fresh( std::span< const double > semantic, NodeId source, double epsilon ) {
	if( source >= semantic.size() ) {
		throw Error( ErrorCode::NotFound, "unknown source node id " + std::to_string( source ) );
	}
	if( !( epsilon > 0.0 ) ) {
		throw Error( ErrorCode::InvalidArgument, "pipe epsilon must be positive" );
	}
	CapacityState state;
	state.capacity.assign( semantic.begin(), semantic.end() );
	state.liquid = semantic[ source ];
	state.epsilon = epsilon;
	return state;
}

std::optional< Path > efficient_path( const Graph & g, const AffinityMatrix & f, const CapacityState & state,
	NodeId x, NodeId y ) {
	const std::size_t n = g.node_count();
	if( f.size() != n || state.capacity.size() != n ) {
		throw Error( ErrorCode::Misaligned, "pipe routing inputs are not aligned with the graph" );
	}
	if( x >= n || y >= n ) {
		throw Error( ErrorCode::NotFound, "pipe endpoint out of range" );
	}
	if( x == y ) {
		throw Error( ErrorCode::InvalidArgument, "pipe routing needs distinct endpoints" );
	}

	constexpr double inf = std::numeric_limits< double >::infinity();
	constexpr NodeId none = std::numeric_limits< NodeId >::max();
	std::vector< double > dist( n, inf );
	std::vector< NodeId > parent( n, none );
	std::vector< bool > settled( n, false );

	using Entry = std::pair< double, NodeId >;
	std::priority_queue< Entry, std::vector< Entry >, std::greater< Entry > > queue;
	dist[ x ] = 0.0;
	queue.emplace( 0.0, x );
	while( !queue.empty() ) {
		const auto [ d, u ] = queue.top();
		queue.pop();
		if( settled[ u ] ) {
			continue;
		}
		settled[ u ] = true;
		if( u == y ) {
			break;
		}
		const auto row = f.row( u );
		for( NodeId v = 0; v < n; ++v ) {
			const double a = row[ v ];
			if( v == u || settled[ v ] || !( a > 0.0 ) ) {
				continue;
			}
			if( state.capacity[ v ] <= state.epsilon || state.exhausted.count( { u, v } ) != 0 ) {
				continue;
			}
			const double candidate = d - std::log( a );
			if( candidate < dist[ v ] ) {
				dist[ v ] = candidate;
				parent[ v ] = u;
				queue.emplace( candidate, v );
			}
		}
	}
	if( !settled[ y ] ) {
		return std::nullopt;
	}
	Path path;
	for( NodeId v = y; v != none; v = parent[ v ] ) {
		path.push_back( v );
	}
	std::reverse( path.begin(), path.end() );
	return path;
}

FillSummary fill_path( const AffinityMatrix & f, CapacityState & state, std::span< const NodeId > path,
	std::vector< double > & used ) {
	const std::size_t n = f.size();
	if( state.capacity.size() != n ) {
		throw Error( ErrorCode::Misaligned, "capacity state is not aligned with the affinity matrix" );
	}
	if( path.size() < 2 ) {
		throw Error( ErrorCode::InvalidArgument, "a pipe path needs at least two nodes" );
	}
	for( std::size_t i = 0; i < path.size(); ++i ) {
		if( path[ i ] >= n ) {
			throw Error( ErrorCode::InvalidArgument, "pipe path visits an unknown node" );
		}
		if( std::find( path.begin(), path.begin() + static_cast< std::ptrdiff_t >( i ), path[ i ] ) !=
			path.begin() + static_cast< std::ptrdiff_t >( i ) ) {
			throw Error( ErrorCode::InvalidArgument, "pipe path revisits a node" );
		}
		if( i > 0 && !( f( path[ i - 1 ], path[ i ] ) > 0.0 ) ) {
			throw Error( ErrorCode::InvalidArgument, "pipe path uses an edge without affinity" );
		}
	}
	if( state.liquid <= state.epsilon ) {
		throw Error( ErrorCode::InvalidArgument, "no liquid left at the pipe source" );
	}

	FillSummary summary;
	summary.carried.reserve( path.size() - 1 );
	double flow = state.liquid;
	for( std::size_t h = 0; h + 1 < path.size(); ++h ) {
		const double a = f( path[ h ], path[ h + 1 ] );
		double & room = state.capacity[ path[ h + 1 ] ];
		const double offered = a * flow;
		double carried = offered;
		if( room <= offered ) {
			carried = room;
			summary.saturated_node = true;
		}
		room -= carried;
		flow = carried;
		summary.carried.push_back( carried );
		if( carried > 0.0 ) {
			used.push_back( a );
		}
	}
	state.liquid -= summary.carried.front();
	summary.delivered = summary.carried.back();

	if( !summary.saturated_node ) {
		for( std::size_t h = 0; h + 1 < path.size(); ++h ) {
			state.exhausted.emplace( path[ h ], path[ h + 1 ] );
		}
	}
	return summary;
}

double semantic_similarity_factor( double a, double b ) noexcept {
	const double hi = std::max( a, b );
	if( !( hi > 0.0 ) ) {
		return 0.0;
	}
	return 1.0 - std::abs( a - b ) / hi;
}

PipeResult pipe_comparison( const Graph & g, const AffinityMatrix & f, const SemanticScores & s, NodeId x,
	NodeId y, const PipeOptions & opts ) {
	const std::size_t n = g.node_count();
	if( x >= n || y >= n ) {
		throw Error( ErrorCode::NotFound, "pipe endpoint out of range" );
	}
	if( x == y ) {
		throw Error( ErrorCode::InvalidArgument, "pipe comparison needs distinct nodes" );
	}
	if( f.size() != n || s.size() != n ) {
		throw Error( ErrorCode::Misaligned, "pipe inputs are not aligned with the graph" );
	}

	CapacityState state = CapacityState::fresh( s.semantic, x, opts.epsilon );
	PipeResult result;
	const std::size_t cap = 10 * n;
	while( true ) {
		if( state.liquid <= state.epsilon || state.capacity[ y ] <= state.epsilon ) {
			break;
		}
		if( result.iterations >= cap ) {
			result.hit_iteration_cap = true;
			break;
		}
		auto path = efficient_path( g, f, state, x, y );
		if( !path ) {
			break;
		}
		const FillSummary fill = fill_path( f, state, *path, result.used_affinities );
		++result.iterations;
		result.delivered += fill.delivered;

		double hop_sum = 0.0;
		for( std::size_t h = 0; h + 1 < path->size(); ++h ) {
			hop_sum += f( ( *path )[ h ], ( *path )[ h + 1 ] );
		}
		result.path_mean_affinity.push_back( hop_sum / static_cast< double >( path->size() - 1 ) );
		result.paths.push_back( std::move( *path ) );
	}
	result.final_capacity = state.capacity;
	result.final_liquid = state.liquid;

	const double strongest = f.row_max( x );
	const double factor = semantic_similarity_factor( s.semantic[ x ], s.semantic[ y ] );
	if( result.used_affinities.empty() || !( strongest > 0.0 ) ) {
		result.affinity = 0.0;
		return result;
	}
	const double mean = std::accumulate( result.used_affinities.begin(), result.used_affinities.end(), 0.0 ) /
		static_cast< double >( result.used_affinities.size() );
	result.affinity = factor * mean / strongest;
	return result;
}

SemanticAffinityTable semantic_affinity_matrix( const Graph & g, const AffinityMatrix & f,
	const SemanticScores & s, std::span< const NodeId > nodes, const PipeOptions & opts ) {
	const std::size_t k = nodes.size();
	for( std::size_t i = 0; i < k; ++i ) {
		if( nodes[ i ] >= g.node_count() ) {
			throw Error( ErrorCode::NotFound, "unknown node id " + std::to_string( nodes[ i ] ) );
		}
		for( std::size_t j = 0; j < i; ++j ) {
			if( nodes[ i ] == nodes[ j ] ) {
				throw Error( ErrorCode::InvalidArgument, "duplicate node '" + g.label( nodes[ i ] ) + "'" );
			}
		}
	}
	SemanticAffinityTable table;
	table.nodes.assign( nodes.begin(), nodes.end() );
	table.values.assign( k * k, 0.0 );
	for( std::size_t i = 0; i < k; ++i ) {
		for( std::size_t j = 0; j < k; ++j ) {
			table.values[ i * k + j ] =
				i == j ? 1.0 : pipe_comparison( g, f, s, nodes[ i ], nodes[ j ], opts ).affinity;
		}
	}
	return table;
}

} // namespace semnet
