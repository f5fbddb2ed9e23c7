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

#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "semnet/affinity.hpp"
#include "semnet/error.hpp"

using namespace semnet;

TEST_CASE( "best friend" ) {
	Graph g;
	g.add_edge( "x", "y", 1.0 );
	g.add_edge( "x", "z", 3.0 );
	g.add_edge( "y", "z", 2.0 );
	g.add_node( "sink" );
	const auto f = best_friend( g );
	const NodeId x = g.id( "x" ), y = g.id( "y" ), z = g.id( "z" ), sink = g.id( "sink" );
	CHECK( f( x, y ) == doctest::Approx( 0.25 ) );
	CHECK( f( x, z ) == doctest::Approx( 0.75 ) );
	// y has a single out-edge
	CHECK( f( y, z ) == 1.0 );
	for( NodeId v = 0; v < g.node_count(); ++v ) {
		CHECK( f( sink, v ) == 0.0 );
		CHECK( f( v, v ) == 0.0 );
	}
}

TEST_CASE( "best common friend" ) {
	SUBCASE( "shared neighbour" ) {
		Graph g;
		g.add_edge( "x", "a", 1.0 );
		g.add_edge( "x", "b", 3.0 );
		g.add_edge( "y", "a", 2.0 );
		const auto f = best_common_friend( g );
		CHECK( f( g.id( "x" ), g.id( "y" ) ) == doctest::Approx( 0.25 ) );
	}
	SUBCASE( "no shared neighbour" ) {
		Graph g;
		g.add_edge( "x", "a", 1.0 );
		g.add_edge( "y", "b", 1.0 );
		const auto f = best_common_friend( g );
		CHECK( f( g.id( "x" ), g.id( "y" ) ) == 0.0 );
	}
	SUBCASE( "identical neighbourhoods" ) {
		Graph g;
		g.add_edge( "x", "a", 2.0 );
		g.add_edge( "x", "b", 5.0 );
		g.add_edge( "y", "a", 2.0 );
		g.add_edge( "y", "b", 5.0 );
		const auto f = best_common_friend( g );
		CHECK( f( g.id( "x" ), g.id( "y" ) ) == doctest::Approx( 5.0 / 7.0 ) );
	}
	SUBCASE( "dominating neighbourhood gives max over row sum" ) {
		std::mt19937_64 rng( 11 );
		std::uniform_real_distribution< double > w( 0.1, 1.0 );
		for( int trial = 0; trial < 20; ++trial ) {
			Graph g;
			double total = 0.0, best = 0.0;
			for( int k = 0; k < 4; ++k ) {
				const std::string a = "a" + std::to_string( k );
				const double wx = w( rng );
				g.add_edge( "x", a, wx );
				g.add_edge( "y", a, wx + w( rng ) );
				total += wx;
				best = std::max( best, wx );
			}
			g.add_edge( "y", "extra", 1.0 );
			const auto f = best_common_friend( g );
			CHECK( f( g.id( "x" ), g.id( "y" ) ) == doctest::Approx( best / total ).epsilon( 1e-12 ) );
		}
	}
}

TEST_CASE( "machiavelli" ) {
	SUBCASE( "directed path" ) {
		Graph g;
		g.add_edge( "a", "b", 1.0 );
		g.add_edge( "b", "c", 1.0 );
		const auto mass = neighbourhood_degree_mass( g );
		CHECK( mass[ g.id( "a" ) ] == 2.0 );
		CHECK( mass[ g.id( "b" ) ] == 1.0 );
		const auto f = machiavelli( g );
		CHECK( f( g.id( "a" ), g.id( "b" ) ) == doctest::Approx( 0.5 ) );
	}
	SUBCASE( "isolated nodes are fully similar" ) {
		Graph g;
		g.add_node( "p" );
		g.add_node( "q" );
		const auto f = machiavelli( g );
		CHECK( f( 0, 1 ) == 1.0 );
		CHECK( f( 0, 0 ) == 0.0 );
	}
	SUBCASE( "equal masses" ) {
		Graph g;
		g.add_edge( "a", "c", 1.0 );
		g.add_edge( "b", "c", 4.0 );
		const auto f = machiavelli( g );
		CHECK( f( g.id( "a" ), g.id( "b" ) ) == 1.0 );
	}
}

TEST_CASE( "convex combination" ) {
	AffinityMatrix a( 2 ), b( 2 );
	a( 0, 1 ) = 0.5;
	b( 0, 1 ) = 0.1;
	CHECK( convex_combine( a, b, 1.0 ) == a );
	CHECK( convex_combine( a, b, 0.0 ) == b );
	CHECK( convex_combine( a, b, 0.9 )( 0, 1 ) == doctest::Approx( 0.46 ) );
	CHECK_THROWS_AS( convex_combine( a, AffinityMatrix( 3 ), 0.5 ), Error );
	CHECK_THROWS_AS( convex_combine( a, b, 1.5 ), Error );
}

TEST_CASE( "t-norms" ) {
	CHECK( apply_tnorm( TNorm::Minimum, 0.7, 0.3 ) == 0.3 );
	CHECK( apply_tnorm( TNorm::Product, 0.7, 0.3 ) == doctest::Approx( 0.21 ) );
	CHECK( apply_tnorm( TNorm::Lukasiewicz, 0.7, 0.3 ) == doctest::Approx( 0.0 ) );
	CHECK( apply_tnorm( TNorm::Lukasiewicz, 0.9, 0.8 ) == doctest::Approx( 0.7 ) );

	std::mt19937_64 rng( 3 );
	const std::vector< AffinityMatrix > ms{ oracle::random_affinity( rng, 6, 0.6 ), oracle::random_affinity( rng, 6, 0.6 ),
		oracle::random_affinity( rng, 6, 0.6 ) };
	for( TNorm norm : { TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz } ) {
		const auto out = tnorm_combine( ms, norm );
		for( NodeId x = 0; x < 6; ++x ) {
			for( NodeId y = 0; y < 6; ++y ) {
				const double lo = std::min( { ms[ 0 ]( x, y ), ms[ 1 ]( x, y ), ms[ 2 ]( x, y ) } );
				CHECK( out( x, y ) <= lo + 1e-15 );
				CHECK( out( x, y ) >= 0.0 );
				if( lo == 0.0 ) {
					CHECK( out( x, y ) == 0.0 );
				}
			}
		}
	}
	CHECK_THROWS_AS( tnorm_combine( std::vector< AffinityMatrix >{ ms[ 0 ] }, TNorm::Minimum ), Error );
	CHECK_THROWS_AS( tnorm_combine( std::vector< AffinityMatrix >{ ms[ 0 ], AffinityMatrix( 2 ) }, TNorm::Minimum ),
		Error );
}

TEST_CASE( "mixed affinity" ) {
	SUBCASE( "two nodes, one edge" ) {
		Graph g;
		g.add_edge( "x", "y", 1.0 );
		const auto f = mixed_affinity( g );
		// BF = 1, Mach = 0
		CHECK( f( g.id( "x" ), g.id( "y" ) ) == doctest::Approx( 0.9 ) );
		CHECK( f( g.id( "y" ), g.id( "x" ) ) == 0.0 );
	}
	SUBCASE( "symmetric pair" ) {
		Graph g;
		g.add_edge( "x", "y", 1.0 );
		g.add_edge( "y", "x", 1.0 );
		const auto f = mixed_affinity( g );
		CHECK( f( 0, 1 ) == doctest::Approx( 1.0 ) );
		CHECK( f( 1, 0 ) == doctest::Approx( 1.0 ) );
	}
	SUBCASE( "support equals best friend support" ) {
		std::mt19937_64 rng( 17 );
		for( int trial = 0; trial < 20; ++trial ) {
			const Graph g = oracle::random_graph( rng, 10, 0.25 );
			const auto bf = best_friend( g );
			const auto mix = mixed_affinity( g );
			for( NodeId x = 0; x < 10; ++x ) {
				for( NodeId y = 0; y < 10; ++y ) {
					CHECK( ( bf( x, y ) > 0.0 ) == ( mix( x, y ) > 0.0 ) );
				}
			}
		}
	}
}

TEST_CASE( "affinity kind names" ) {
	for( AffinityKind k : { AffinityKind::BestFriend, AffinityKind::BestCommonFriend, AffinityKind::Machiavelli,
			 AffinityKind::Mixed } ) {
		CHECK( parse_affinity_kind( to_string( k ) ) == k );
	}
	CHECK_THROWS_AS( parse_affinity_kind( "nope" ), Error );
}
