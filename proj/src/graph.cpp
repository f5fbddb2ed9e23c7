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

#include "semnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

#include "semnet/error.hpp"

namespace semnet {

NodeId Graph::add_node( std::string_view label ) {
	std::string key( label );
	auto it = index_.find( key );
	if( it != index_.end() ) {
		return it->second;
	}
	const NodeId id = labels_.size();
	labels_.push_back( key );
	index_.emplace( std::move( key ), id );
	out_.emplace_back();
	in_.emplace_back();
	return id;
}

void Graph::check_node( NodeId id ) const {
	if( id >= labels_.size() ) {
		throw Error( ErrorCode::NotFound, "unknown node id " + std::to_string( id ) );
	}
}

void Graph::add_edge( NodeId source, NodeId target, double weight ) {
	check_node( source );
	check_node( target );
	if( source == target ) {
		throw Error( ErrorCode::InvalidArgument, "self-loop on '" + labels_[ source ] + "' rejected" );
	}
	if( !( weight > 0.0 ) || !std::isfinite( weight ) ) {
		throw Error( ErrorCode::InvalidArgument,
			"edge '" + labels_[ source ] + "' -> '" + labels_[ target ] + "' needs a positive finite weight" );
	}
	auto [ it, inserted ] = out_[ source ].insert_or_assign( target, weight );
	in_[ target ][ source ] = weight;
	if( inserted ) {
		++edge_count_;
	}
}

void Graph::add_edge( std::string_view source, std::string_view target, double weight ) {
	if( source == target ) {
		throw Error( ErrorCode::InvalidArgument, "self-loop on '" + std::string( source ) + "' rejected" );
	}
	const NodeId s = add_node( source );
	const NodeId t = add_node( target );
	add_edge( s, t, weight );
}

void Graph::accumulate_edge( NodeId source, NodeId target, double weight ) {
	add_edge( source, target, this->weight( source, target ) + weight );
}

std::optional< NodeId > Graph::find( std::string_view label ) const {
	auto it = index_.find( std::string( label ) );
	if( it == index_.end() ) {
		return std::nullopt;
	}
	return it->second;
}

NodeId Graph::id( std::string_view label ) const {
	if( auto found = find( label ) ) {
		return *found;
	}
	throw Error( ErrorCode::NotFound, "unknown node '" + std::string( label ) + "'" );
}

const std::string & Graph::label( NodeId id ) const {
	check_node( id );
	return labels_[ id ];
}

double Graph::weight( NodeId source, NodeId target ) const {
	check_node( source );
	check_node( target );
	const auto & row = out_[ source ];
	auto it = row.find( target );
	return it == row.end() ? 0.0 : it->second;
}

bool Graph::has_edge( NodeId source, NodeId target ) const {
	return weight( source, target ) > 0.0;
}

const Adjacency & Graph::out_edges( NodeId id ) const {
	check_node( id );
	return out_[ id ];
}

const Adjacency & Graph::in_edges( NodeId id ) const {
	check_node( id );
	return in_[ id ];
}

double Graph::out_weight( NodeId id ) const {
	double sum = 0.0;
	for( const auto & [ target, w ] : out_edges( id ) ) {
		sum += w;
	}
	return sum;
}

bool Graph::operator==( const Graph & other ) const {
	if( node_count() != other.node_count() || edge_count() != other.edge_count() ) {
		return false;
	}
	for( NodeId u = 0; u < node_count(); ++u ) {
		auto mapped = other.find( labels_[ u ] );
		if( !mapped ) {
			return false;
		}
		const auto & mine = out_[ u ];
		const auto & theirs = other.out_[ *mapped ];
		if( mine.size() != theirs.size() ) {
			return false;
		}
		for( const auto & [ v, w ] : mine ) {
			auto tv = other.find( labels_[ v ] );
			if( !tv ) {
				return false;
			}
			auto it = theirs.find( *tv );
			if( it == theirs.end() || it->second != w ) {
				return false;
			}
		}
	}
	return true;
}

Degree degree( const Graph & g, NodeId node ) {
	Degree d;
	d.in = g.in_edges( node ).size();
	d.out = g.out_edges( node ).size();
	d.total = d.in + d.out;
	return d;
}

const char * to_string( Measure m ) noexcept {
	switch( m ) {
		case Measure::Degree: return "degree";
		case Measure::InDegree: return "in-degree";
		case Measure::OutDegree: return "out-degree";
		case Measure::Betweenness: return "betweenness";
		case Measure::Closeness: return "closeness";
		case Measure::Eigenvector: return "eigenvector";
	}
	return "unknown";
}

CentralityScores degree_centrality( const Graph & g, Measure which ) {
	CentralityScores scores{ which, std::vector< double >( g.node_count(), 0.0 ) };
	for( NodeId v = 0; v < g.node_count(); ++v ) {
		const Degree d = degree( g, v );
		switch( which ) {
			case Measure::InDegree: scores.values[ v ] = static_cast< double >( d.in ); break;
			case Measure::OutDegree: scores.values[ v ] = static_cast< double >( d.out ); break;
			case Measure::Degree: scores.values[ v ] = static_cast< double >( d.total ); break;
			default:
				throw Error( ErrorCode::InvalidArgument, "degree_centrality called with a non-degree measure" );
		}
	}
	return scores;
}

namespace {

/// Hop distances from `source` along out-edges, -1 when unreachable.
std::vector< long > bfs_distances( const Graph & g, NodeId source ) {
	std::vector< long > dist( g.node_count(), -1 );
	std::queue< NodeId > frontier;
	dist[ source ] = 0;
	frontier.push( source );
	while( !frontier.empty() ) {
		const NodeId u = frontier.front();
		frontier.pop();
		for( const auto & [ v, w ] : g.out_edges( u ) ) {
			if( dist[ v ] < 0 ) {
				dist[ v ] = dist[ u ] + 1;
				frontier.push( v );
			}
		}
	}
	return dist;
}

} // namespace

CentralityScores betweenness( const Graph & g ) {
	const std::size_t n = g.node_count();
	CentralityScores scores{ Measure::Betweenness, std::vector< double >( n, 0.0 ) };
	if( n < 3 ) {
		return scores;
	}

	// Brandes: one BFS per source, dependencies accumulated in reverse order.
	std::vector< std::vector< NodeId > > preds( n );
	std::vector< double > sigma( n );
	std::vector< long > dist( n );
	std::vector< double > delta( n );
	std::vector< NodeId > order;
	order.reserve( n );

	for( NodeId s = 0; s < n; ++s ) {
		for( auto & p : preds ) {
			p.clear();
		}
		std::fill( sigma.begin(), sigma.end(), 0.0 );
		std::fill( dist.begin(), dist.end(), -1 );
		std::fill( delta.begin(), delta.end(), 0.0 );
		order.clear();

		sigma[ s ] = 1.0;
		dist[ s ] = 0;
		std::queue< NodeId > frontier;
		frontier.push( s );
		while( !frontier.empty() ) {
			const NodeId u = frontier.front();
			frontier.pop();
			order.push_back( u );
			for( const auto & [ v, w ] : g.out_edges( u ) ) {
				if( dist[ v ] < 0 ) {
					dist[ v ] = dist[ u ] + 1;
					frontier.push( v );
				}
				if( dist[ v ] == dist[ u ] + 1 ) {
					sigma[ v ] += sigma[ u ];
					preds[ v ].push_back( u );
				}
			}
		}
		for( auto it = order.rbegin(); it != order.rend(); ++it ) {
			const NodeId w = *it;
			for( NodeId v : preds[ w ] ) {
				delta[ v ] += sigma[ v ] / sigma[ w ] * ( 1.0 + delta[ w ] );
			}
			if( w != s ) {
				scores.values[ w ] += delta[ w ];
			}
		}
	}

	const double norm = static_cast< double >( ( n - 1 ) * ( n - 2 ) );
	for( double & v : scores.values ) {
		v /= norm;
	}
	return scores;
}

CentralityScores closeness( const Graph & g ) {
	const std::size_t n = g.node_count();
	CentralityScores scores{ Measure::Closeness, std::vector< double >( n, 0.0 ) };
	if( n < 2 ) {
		return scores;
	}
	for( NodeId x = 0; x < n; ++x ) {
		const auto dist = bfs_distances( g, x );
		double reachable = 0.0;
		double total = 0.0;
		for( NodeId v = 0; v < n; ++v ) {
			if( v != x && dist[ v ] > 0 ) {
				reachable += 1.0;
				total += static_cast< double >( dist[ v ] );
			}
		}
		if( total > 0.0 ) {
			scores.values[ x ] = ( reachable / static_cast< double >( n - 1 ) ) * ( reachable / total );
		}
	}
	return scores;
}

std::vector< double > symmetrized_adjacency( const Graph & g ) {
	const std::size_t n = g.node_count();
	std::vector< double > a( n * n, 0.0 );
	for( NodeId u = 0; u < n; ++u ) {
		for( const auto & [ v, w ] : g.out_edges( u ) ) {
			a[ u * n + v ] = std::max( a[ u * n + v ], w );
			a[ v * n + u ] = std::max( a[ v * n + u ], w );
		}
	}
	return a;
}

CentralityScores eigenvector( const Graph & g, const EigenvectorOptions & opts ) {
	const std::size_t n = g.node_count();
	if( g.edge_count() == 0 ) {
		throw Error( ErrorCode::InvalidArgument, "eigenvector centrality needs at least one edge" );
	}

	// Sparse symmetric neighbourhoods: max weight of either direction.
	std::vector< std::map< NodeId, double > > sym( n );
	for( NodeId u = 0; u < n; ++u ) {
		for( const auto & [ v, w ] : g.out_edges( u ) ) {
			double & uv = sym[ u ][ v ];
			uv = std::max( uv, w );
			double & vu = sym[ v ][ u ];
			vu = std::max( vu, w );
		}
	}

	std::vector< double > x( n, 1.0 / std::sqrt( static_cast< double >( n ) ) );
	std::vector< double > next( n );
	for( std::size_t iter = 0; iter < opts.max_iterations; ++iter ) {
		for( NodeId u = 0; u < n; ++u ) {
			double acc = x[ u ];
			for( const auto & [ v, w ] : sym[ u ] ) {
				acc += w * x[ v ];
			}
			next[ u ] = acc;
		}
		double norm = 0.0;
		for( double v : next ) {
			norm += v * v;
		}
		norm = std::sqrt( norm );
		double change = 0.0;
		for( NodeId u = 0; u < n; ++u ) {
			next[ u ] /= norm;
			change = std::max( change, std::abs( next[ u ] - x[ u ] ) );
		}
		x.swap( next );
		if( change < opts.tolerance ) {
			return CentralityScores{ Measure::Eigenvector, std::move( x ) };
		}
	}
	throw Error( ErrorCode::NoConvergence,
		"eigenvector centrality did not converge in " + std::to_string( opts.max_iterations ) + " iterations" );
}

Graph fuse( std::span< const Graph > graphs, FuseRule rule ) {
	std::set< std::string > all_labels;
	for( const Graph & g : graphs ) {
		all_labels.insert( g.labels().begin(), g.labels().end() );
	}
	Graph fused;
	for( const auto & l : all_labels ) {
		fused.add_node( l );
	}
	for( const Graph & g : graphs ) {
		for( NodeId u = 0; u < g.node_count(); ++u ) {
			const NodeId fu = fused.id( g.label( u ) );
			for( const auto & [ v, w ] : g.out_edges( u ) ) {
				const NodeId fv = fused.id( g.label( v ) );
				const double existing = fused.weight( fu, fv );
				const double merged = rule == FuseRule::Max ? std::max( existing, w ) : existing + w;
				fused.add_edge( fu, fv, merged );
			}
		}
	}
	return fused;
}

std::vector< std::string > rank_by_frequency( const Graph & g, const FrequencyTable & freq ) {
	std::vector< std::string > ranked( g.labels() );
	std::sort( ranked.begin(), ranked.end(), [ & ]( const std::string & a, const std::string & b ) {
		const auto fa = freq.get( a );
		const auto fb = freq.get( b );
		if( fa != fb ) {
			return fa > fb;
		}
		return a < b;
	} );
	return ranked;
}

Graph top_n_subgraph( const Graph & g, const FrequencyTable & freq, std::size_t n ) {
	if( n == 0 ) {
		throw Error( ErrorCode::InvalidArgument, "top-n subgraph needs n >= 1" );
	}
	auto ranked = rank_by_frequency( g, freq );
	if( ranked.size() > n ) {
		ranked.resize( n );
	}
	std::vector< bool > keep( g.node_count(), false );
	for( const auto & l : ranked ) {
		keep[ g.id( l ) ] = true;
	}

	Graph sub;
	for( NodeId u = 0; u < g.node_count(); ++u ) {
		if( keep[ u ] ) {
			sub.add_node( g.label( u ) );
		}
	}
	for( NodeId u = 0; u < g.node_count(); ++u ) {
		if( !keep[ u ] ) {
			continue;
		}
		for( const auto & [ v, w ] : g.out_edges( u ) ) {
			if( keep[ v ] ) {
				sub.add_edge( sub.id( g.label( u ) ), sub.id( g.label( v ) ), w );
			}
		}
	}
	return sub;
}

} // namespace semnet
