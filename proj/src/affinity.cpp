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

#include "semnet/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semnet/error.hpp"

namespace semnet {

double AffinityMatrix::row_max( NodeId source ) const {
	double best = 0.0;
	for( double v : row( source ) ) {
		best = std::max( best, v );
	}
	return best;
}

AffinityKind parse_affinity_kind( std::string_view name ) {
	if( name == "bf" ) return AffinityKind::BestFriend;
	if( name == "bcf" ) return AffinityKind::BestCommonFriend;
	if( name == "mach" ) return AffinityKind::Machiavelli;
	if( name == "mix" ) return AffinityKind::Mixed;
	throw Error( ErrorCode::InvalidArgument, "unknown affinity kind '" + std::string( name ) + "'" );
}

const char * to_string( AffinityKind kind ) noexcept {
	switch( kind ) {
		case AffinityKind::BestFriend: return "bf";
		case AffinityKind::BestCommonFriend: return "bcf";
		case AffinityKind::Machiavelli: return "mach";
		case AffinityKind::Mixed: return "mix";
	}
	return "unknown";
}

AffinityMatrix best_friend( const Graph & g ) {
	AffinityMatrix f( g.node_count() );
	for( NodeId x = 0; x < g.node_count(); ++x ) {
		const double total = g.out_weight( x );
		if( total <= 0.0 ) {
			continue;
		}
		for( const auto & [ y, w ] : g.out_edges( x ) ) {
			f( x, y ) = w / total;
		}
	}
	return f;
}

AffinityMatrix best_common_friend( const Graph & g ) {
	const std::size_t n = g.node_count();
	AffinityMatrix f( n );
	for( NodeId x = 0; x < n; ++x ) {
		const double total = g.out_weight( x );
		if( total <= 0.0 ) {
			continue;
		}
		// Only y with an edge into one of x's out-neighbours can score.
		std::vector< double > best( n, 0.0 );
		for( const auto & [ a, wxa ] : g.out_edges( x ) ) {
			for( const auto & [ y, wya ] : g.in_edges( a ) ) {
				best[ y ] = std::max( best[ y ], std::min( wxa, wya ) );
			}
		}
		for( NodeId y = 0; y < n; ++y ) {
			if( y != x && best[ y ] > 0.0 ) {
				f( x, y ) = best[ y ] / total;
			}
		}
	}
	return f;
}

std::vector< double > neighbourhood_degree_mass( const Graph & g ) {
	std::vector< double > mass( g.node_count(), 0.0 );
	for( NodeId a = 0; a < g.node_count(); ++a ) {
		for( const auto & [ z, w ] : g.out_edges( a ) ) {
			mass[ a ] += static_cast< double >( degree( g, z ).total );
		}
	}
	return mass;
}

AffinityMatrix machiavelli( const Graph & g ) {
	const std::size_t n = g.node_count();
	const auto mass = neighbourhood_degree_mass( g );
	AffinityMatrix f( n );
	for( NodeId x = 0; x < n; ++x ) {
		for( NodeId y = 0; y < n; ++y ) {
			if( x == y ) {
				continue;
			}
			const double hi = std::max( mass[ x ], mass[ y ] );
			f( x, y ) = hi > 0.0 ? 1.0 - std::abs( mass[ x ] - mass[ y ] ) / hi : 1.0;
		}
	}
	return f;
}

namespace {

void check_aligned( const AffinityMatrix & a, const AffinityMatrix & b ) {
	if( a.size() != b.size() ) {
		throw Error( ErrorCode::Misaligned, "affinity matrices of size " + std::to_string( a.size() ) + " and " +
			std::to_string( b.size() ) + " are not aligned" );
	}
}

} // namespace

AffinityMatrix convex_combine( const AffinityMatrix & a, const AffinityMatrix & b, double alpha ) {
	check_aligned( a, b );
	if( !( alpha >= 0.0 && alpha <= 1.0 ) ) {
		throw Error( ErrorCode::InvalidArgument, "convex combination weight must lie in [0,1]" );
	}
	const std::size_t n = a.size();
	AffinityMatrix out( n );
	for( NodeId x = 0; x < n; ++x ) {
		for( NodeId y = 0; y < n; ++y ) {
			out( x, y ) = alpha * a( x, y ) + ( 1.0 - alpha ) * b( x, y );
		}
	}
	return out;
}

double apply_tnorm( TNorm norm, double a, double b ) noexcept {
	switch( norm ) {
		case TNorm::Minimum: return std::min( a, b );
		case TNorm::Product: return a * b;
		case TNorm::Lukasiewicz: return std::max( a + b - 1.0, 0.0 );
	}
	return 0.0;
}

AffinityMatrix tnorm_combine( std::span< const AffinityMatrix > matrices, TNorm norm ) {
	if( matrices.size() < 2 ) {
		throw Error( ErrorCode::InvalidArgument, "t-norm combination needs at least two matrices" );
	}
	for( const auto & m : matrices.subspan( 1 ) ) {
		check_aligned( matrices.front(), m );
	}
	AffinityMatrix out = matrices.front();
	const std::size_t n = out.size();
	for( const auto & m : matrices.subspan( 1 ) ) {
		for( NodeId x = 0; x < n; ++x ) {
			for( NodeId y = 0; y < n; ++y ) {
				out( x, y ) = apply_tnorm( norm, out( x, y ), m( x, y ) );
			}
		}
	}
	return out;
}

AffinityMatrix mixed_affinity( const Graph & g, double alpha ) {
	const AffinityMatrix bf = best_friend( g );
	AffinityMatrix mixed = convex_combine( bf, machiavelli( g ), alpha );
	const std::size_t n = mixed.size();
	for( NodeId x = 0; x < n; ++x ) {
		for( NodeId y = 0; y < n; ++y ) {
			if( bf( x, y ) == 0.0 ) {
				mixed( x, y ) = 0.0;
			}
		}
	}
	return mixed;
}

AffinityMatrix compute_affinity( const Graph & g, AffinityKind kind, double alpha ) {
	switch( kind ) {
		case AffinityKind::BestFriend: return best_friend( g );
		case AffinityKind::BestCommonFriend: return best_common_friend( g );
		case AffinityKind::Machiavelli: return machiavelli( g );
		case AffinityKind::Mixed: return mixed_affinity( g, alpha );
	}
	throw Error( ErrorCode::InvalidArgument, "unknown affinity kind" );
}

} // namespace semnet
