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

#include "semnet/semantics.hpp"

#include <algorithm>
#include <string>

#include "semnet/error.hpp"

namespace semnet {

std::vector< double > intrinsic_values( const Graph & g, const FrequencyTable & freq ) {
	std::vector< double > values( g.node_count() );
	for( NodeId v = 0; v < g.node_count(); ++v ) {
		values[ v ] = static_cast< double >( freq.get( g.label( v ) ) );
	}
	return values;
}

std::vector< double > extrinsic( const Graph & g, const AffinityMatrix & f, std::span< const double > intrinsic ) {
	const std::size_t n = g.node_count();
	if( f.size() != n || intrinsic.size() != n ) {
		throw Error( ErrorCode::Misaligned, "extrinsic value inputs are not aligned with a graph of " +
			std::to_string( n ) + " nodes" );
	}

	std::vector< double > result( n, 0.0 );
	std::vector< NodeId > senders;
	for( NodeId x = 0; x < n; ++x ) {
		senders.clear();
		for( NodeId v = 0; v < n; ++v ) {
			if( v != x && f( v, x ) > 0.0 ) {
				senders.push_back( v );
			}
		}
		double total = 0.0;
		for( NodeId xi : senders ) {
			double redundant = 0.0;
			for( NodeId xj : senders ) {
				if( xj != xi ) {
					redundant += f( xi, xj ) * intrinsic[ xi ] * f( xj, x );
				}
			}
			total += std::max( f( xi, x ) * intrinsic[ xi ] - redundant, 0.0 );
		}
		result[ x ] = total;
	}
	return result;
}

std::vector< double > extrinsic( const Graph & g, const AffinityMatrix & f, const FrequencyTable & freq ) {
	return extrinsic( g, f, intrinsic_values( g, freq ) );
}

SemanticScores semantic_value( const Graph & g, const AffinityMatrix & f, std::span< const double > intrinsic ) {
	SemanticScores scores;
	scores.extrinsic = extrinsic( g, f, intrinsic );
	scores.intrinsic.assign( intrinsic.begin(), intrinsic.end() );
	scores.semantic.resize( scores.intrinsic.size() );
	for( std::size_t v = 0; v < scores.semantic.size(); ++v ) {
		scores.semantic[ v ] = scores.intrinsic[ v ] + scores.extrinsic[ v ];
	}
	return scores;
}

SemanticScores semantic_value( const Graph & g, const AffinityMatrix & f, const FrequencyTable & freq ) {
	return semantic_value( g, f, intrinsic_values( g, freq ) );
}

} // namespace semnet
