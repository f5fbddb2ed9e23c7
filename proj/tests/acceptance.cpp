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

// Acceptance gate. One line per criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semnet/affinity.hpp"
#include "semnet/corpus.hpp"
#include "semnet/graph.hpp"
#include "semnet/pipe.hpp"
#include "semnet/semantics.hpp"

#ifndef SEMNET_CLI_PATH
#  error "SEMNET_CLI_PATH must name the semnet executable"
#endif
#ifndef SEMNET_FIXTURE_DIR
#  error "SEMNET_FIXTURE_DIR must name the fixture corpus directory"
#endif

using namespace semnet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
	bool pass = true;
	std::string detail;

	void fail( const std::string & why ) {
		if( pass ) {
			detail = why;
		}
		pass = false;
	}
};

FrequencyTable random_frequencies( std::mt19937_64 & rng, const Graph & g ) {
	std::uniform_int_distribution< FrequencyTable::Count > count( 0, 60 );
	FrequencyTable t;
	for( const auto & label : g.labels() ) {
		t.set( label, count( rng ) );
	}
	return t;
}

Outcome extrinsic_oracle() {
	Outcome out;
	std::mt19937_64 rng( 20260101 );
	std::uniform_int_distribution< std::size_t > size( 1, 12 );
	std::uniform_real_distribution< double > density( 0.1, 0.8 );
	const AffinityKind kinds[] = { AffinityKind::BestFriend, AffinityKind::BestCommonFriend, AffinityKind::Machiavelli,
		AffinityKind::Mixed };
	double worst = 0.0;
	for( int trial = 0; trial < 200; ++trial ) {
		const Graph g = oracle::random_graph( rng, size( rng ), density( rng ) );
		const auto f = compute_affinity( g, kinds[ trial % 4 ] );
		const auto i = intrinsic_values( g, random_frequencies( rng, g ) );
		const auto got = extrinsic( g, f, i );
		const auto want = oracle::extrinsic_brute_force( f, i );
		for( std::size_t v = 0; v < got.size(); ++v ) {
			worst = std::max( worst, std::abs( got[ v ] - want[ v ] ) );
		}
	}
	std::ostringstream s;
	s << "200 graphs, max deviation " << worst;
	if( worst > 1e-9 ) {
		out.fail( s.str() );
	}
	out.detail = s.str();
	return out;
}

Outcome affinity_properties() {
	Outcome out;
	std::mt19937_64 rng( 777 );
	std::uniform_int_distribution< std::size_t > size( 2, 25 );
	std::uniform_real_distribution< double > density( 0.05, 0.7 );
	for( int trial = 0; trial < 100; ++trial ) {
		const Graph g = oracle::random_graph( rng, size( rng ), density( rng ) );
		const std::size_t n = g.node_count();
		const auto bf = best_friend( g );
		for( NodeId x = 0; x < n; ++x ) {
			if( g.out_weight( x ) <= 0.0 ) {
				continue;
			}
			double sum = 0.0;
			for( double v : bf.row( x ) ) {
				sum += v;
			}
			if( std::abs( sum - 1.0 ) > 1e-9 ) {
				out.fail( "best-friend row sum " + std::to_string( sum ) );
			}
		}
		const auto mach = machiavelli( g );
		for( NodeId x = 0; x < n; ++x ) {
			for( NodeId y = 0; y < n; ++y ) {
				if( mach( x, y ) != mach( y, x ) && x != y ) {
					out.fail( "machiavelli not symmetric" );
				}
			}
		}
		for( AffinityKind k : { AffinityKind::BestFriend, AffinityKind::BestCommonFriend, AffinityKind::Machiavelli,
				 AffinityKind::Mixed } ) {
			const auto f = compute_affinity( g, k );
			for( double v : f.data() ) {
				if( !( v >= 0.0 && v <= 1.0 ) ) {
					out.fail( std::string( to_string( k ) ) + " entry out of [0,1]" );
				}
			}
		}
	}
	if( out.pass ) {
		out.detail = "100 graphs";
	}
	return out;
}

Outcome pipe_fixture() {
	Outcome out;
	auto run = []( bool symmetric ) {
		Graph g;
		g.add_edge( "x", "y", 1.0 );
		if( symmetric ) {
			g.add_edge( "y", "x", 1.0 );
		}
		FrequencyTable freq;
		freq.set( "x", 10 );
		freq.set( "y", 10 );
		const auto f = mixed_affinity( g );
		const auto s = semantic_value( g, f, freq );
		return std::make_pair( s, pipe_comparison( g, f, s, g.id( "x" ), g.id( "y" ) ) );
	};
	const auto [ s, r ] = run( false );
	if( std::abs( s.semantic[ 0 ] - 10.0 ) > 1e-9 || std::abs( s.semantic[ 1 ] - 19.0 ) > 1e-9 ) {
		out.fail( "S = (" + std::to_string( s.semantic[ 0 ] ) + ", " + std::to_string( s.semantic[ 1 ] ) + ")" );
	}
	if( std::abs( r.delivered - 9.0 ) > 1e-9 ) {
		out.fail( "delivered " + std::to_string( r.delivered ) );
	}
	if( std::abs( r.affinity - 10.0 / 19.0 ) > 1e-9 ) {
		out.fail( "A(x,y) " + std::to_string( r.affinity ) );
	}
	const auto sym = run( true ).second;
	if( std::abs( sym.affinity - 1.0 ) > 1e-9 ) {
		out.fail( "symmetric A " + std::to_string( sym.affinity ) );
	}
	if( out.pass ) {
		out.detail = "delivered 9, A = 10/19, symmetric A = 1";
	}
	return out;
}

Outcome pipe_safety() {
	Outcome out;
	std::mt19937_64 rng( 4242 );
	std::uniform_int_distribution< std::size_t > size( 2, 30 );
	std::uniform_real_distribution< double > density( 0.05, 0.5 );
	std::size_t runs = 0;
	for( int trial = 0; trial < 100; ++trial ) {
		const Graph g = oracle::random_graph( rng, size( rng ), density( rng ) );
		const std::size_t n = g.node_count();
		const auto f = trial % 3 == 0 ? machiavelli( g ) : mixed_affinity( g );
		const auto s = semantic_value( g, f, random_frequencies( rng, g ) );
		std::uniform_int_distribution< NodeId > node( 0, n - 1 );
		for( int pair = 0; pair < 5; ++pair ) {
			const NodeId x = node( rng );
			NodeId y = node( rng );
			if( x == y ) {
				y = ( y + 1 ) % n;
			}
			const auto r = pipe_comparison( g, f, s, x, y );
			++runs;
			for( double c : r.final_capacity ) {
				if( c < 0.0 ) {
					out.fail( "negative capacity " + std::to_string( c ) );
				}
			}
			if( r.final_liquid < 0.0 ) {
				out.fail( "negative liquid" );
			}
			if( r.delivered > std::min( s.semantic[ x ], s.semantic[ y ] ) + 1e-9 ) {
				out.fail( "delivered " + std::to_string( r.delivered ) + " exceeds min(S(x),S(y))" );
			}
			if( r.hit_iteration_cap || r.iterations > 10 * n ) {
				out.fail( "iteration cap reached" );
			}
		}
	}
	if( out.pass ) {
		out.detail = std::to_string( runs ) + " runs on 100 graphs";
	}
	return out;
}

Outcome centrality_oracles() {
	Outcome out;
	std::mt19937_64 rng( 1010 );
	std::uniform_int_distribution< std::size_t > size( 1, 10 );
	std::uniform_real_distribution< double > density( 0.1, 0.6 );
	double worst_b = 0.0, worst_r = 0.0;
	for( int trial = 0; trial < 50; ++trial ) {
		const Graph g = oracle::random_graph( rng, size( rng ), density( rng ) );
		const auto got = betweenness( g ).values;
		const auto want = oracle::betweenness_by_enumeration( g );
		for( std::size_t v = 0; v < got.size(); ++v ) {
			worst_b = std::max( worst_b, std::abs( got[ v ] - want[ v ] ) );
		}
		if( g.edge_count() == 0 ) {
			continue;
		}
		const std::size_t n = g.node_count();
		const auto a = symmetrized_adjacency( g );
		const auto x = eigenvector( g ).values;
		std::vector< double > ax( n, 0.0 );
		double lambda = 0.0;
		for( std::size_t i = 0; i < n; ++i ) {
			for( std::size_t j = 0; j < n; ++j ) {
				ax[ i ] += a[ i * n + j ] * x[ j ];
			}
			lambda += x[ i ] * ax[ i ];
		}
		for( std::size_t i = 0; i < n; ++i ) {
			worst_r = std::max( worst_r, std::abs( ax[ i ] - lambda * x[ i ] ) );
		}
	}
	// Both sides accumulate the same rationals in different orders; allow last-bit rounding only.
	if( worst_b > 1e-12 ) {
		out.fail( "betweenness deviation " + std::to_string( worst_b ) );
	}
	if( worst_r >= 1e-8 ) {
		out.fail( "eigen residual " + std::to_string( worst_r ) );
	}
	Graph path;
	path.add_edge( "a", "b", 1.0 );
	path.add_edge( "b", "c", 1.0 );
	const auto e = eigenvector( path ).values;
	const double ratio = e[ path.id( "b" ) ] / e[ path.id( "a" ) ];
	if( std::abs( ratio - std::sqrt( 2.0 ) ) > 1e-6 ) {
		out.fail( "path ratio " + std::to_string( ratio ) );
	}
	if( out.pass ) {
		std::ostringstream s;
		s << "betweenness dev " << worst_b << ", eigen residual " << worst_r << ", path ratio " << ratio;
		out.detail = s.str();
	}
	return out;
}

Outcome cooccurrence_oracle() {
	Outcome out;
	std::mt19937_64 rng( 5150 );
	std::uniform_int_distribution< std::size_t > length( 0, 200 );
	std::uniform_int_distribution< std::size_t > window( 1, 15 );
	std::uniform_int_distribution< std::size_t > vocabulary( 1, 25 );
	for( int trial = 0; trial < 50; ++trial ) {
		const auto doc = filter_nouns( oracle::random_document( rng, length( rng ), vocabulary( rng ) ) );
		const std::size_t k = window( rng );
		if( oracle::labelled_edges( cooccurrence_network( doc, k ) ) != oracle::cooccurrence_pair_scan( doc, k ) ) {
			out.fail( "stream " + std::to_string( trial ) + " differs from the pair scan" );
		}
	}
	DocumentStream abac;
	std::size_t pos = 0;
	for( const char * l : { "A", "B", "A", "C" } ) {
		abac.tokens.push_back( TaggedToken{ l, "NN", l, pos++ } );
	}
	const std::map< std::pair< std::string, std::string >, double > expected{
		{ { "A", "B" }, 1.0 }, { { "B", "A" }, 1.0 }, { { "B", "C" }, 1.0 }, { { "A", "C" }, 1.0 } };
	if( oracle::labelled_edges( cooccurrence_network( abac, 2 ) ) != expected ) {
		out.fail( "A,B,A,C fixture" );
	}
	if( out.pass ) {
		out.detail = "50 streams and the A,B,A,C fixture";
	}
	return out;
}

Outcome fusion_laws() {
	Outcome out;
	std::mt19937_64 rng( 60606 );
	std::uniform_int_distribution< std::size_t > size( 1, 12 );
	for( int trial = 0; trial < 50; ++trial ) {
		std::vector< Graph > gs;
		for( int k = 0; k < 3; ++k ) {
			gs.push_back( oracle::random_graph( rng, size( rng ), 0.3 ) );
		}
		for( const Graph & g : gs ) {
			if( fuse( std::vector< Graph >{ g, g } ) != g ) {
				out.fail( "not idempotent" );
			}
		}
		const Graph base = fuse( gs );
		std::vector< std::size_t > order{ 0, 1, 2 };
		while( std::next_permutation( order.begin(), order.end() ) ) {
			const std::vector< Graph > perm{ gs[ order[ 0 ] ], gs[ order[ 1 ] ], gs[ order[ 2 ] ] };
			const Graph other = fuse( perm );
			if( other != base || other.labels() != base.labels() ) {
				out.fail( "depends on input order" );
			}
		}
		for( const auto & [ key, w ] : oracle::labelled_edges( base ) ) {
			double best = 0.0;
			for( const Graph & g : gs ) {
				const auto s = g.find( key.first );
				const auto t = g.find( key.second );
				if( s && t ) {
					best = std::max( best, g.weight( *s, *t ) );
				}
			}
			if( w != best ) {
				out.fail( "duplicate edge did not keep the maximum" );
			}
		}
	}
	if( out.pass ) {
		out.detail = "50 triples";
	}
	return out;
}

std::string slurp( const fs::path & p ) {
	std::ifstream in( p, std::ios::binary );
	return std::string( std::istreambuf_iterator< char >( in ), {} );
}

int run( const std::string & command ) {
	return std::system( ( command + " > /dev/null 2>&1" ).c_str() );
}

Outcome cli_determinism() {
	Outcome out;
	const std::string cli = SEMNET_CLI_PATH;
	const fs::path fixtures = SEMNET_FIXTURE_DIR;
	const fs::path root = fs::temp_directory_path() / "semnet_acceptance";
	fs::remove_all( root );
	std::vector< std::string > outputs[ 2 ];
	for( int pass = 0; pass < 2; ++pass ) {
		const fs::path dir = root / ( "run" + std::to_string( pass ) );
		fs::create_directories( dir );
		const std::string od = " --out-dir '" + dir.string() + "'";
		std::string tokens;
		for( const char * book : { "theogony", "odyssey" } ) {
			tokens += " '" + ( fixtures / ( std::string( book ) + ".tok.tsv" ) ).string() + "'";
		}
		const std::string edges = "'" + ( dir / "myths.edges.tsv" ).string() + "'";
		const std::string steps[] = {
			cli + od + " build" + tokens,
			cli + od + " fuse --name myths '" + ( dir / "theogony.edges.tsv" ).string() + "' '" +
				( dir / "odyssey.edges.tsv" ).string() + "'",
			cli + od + " --top 12 scores " + edges + " -o '" + ( dir / "scores.csv" ).string() + "'",
			cli + od + " --top 12 semaffinity " + edges + " --count 8 -o '" + ( dir / "semaff.csv" ).string() + "'",
		};
		for( const auto & step : steps ) {
			if( run( step ) != 0 ) {
				out.fail( "command failed: " + step );
				return out;
			}
		}
		outputs[ pass ] = { slurp( dir / "scores.csv" ), slurp( dir / "semaff.csv" ) };
	}
	if( outputs[ 0 ][ 0 ].empty() || outputs[ 0 ][ 1 ].empty() ) {
		out.fail( "empty output" );
	} else if( outputs[ 0 ] != outputs[ 1 ] ) {
		out.fail( "outputs differ between runs" );
	}
	fs::remove_all( root );
	if( out.pass ) {
		out.detail = "scores and semaffinity byte-identical";
	}
	return out;
}

struct Criterion {
	const char * name;
	std::function< Outcome() > check;
	double time_limit_s;
};

} // namespace

int main() {
	const Criterion criteria[] = {
		{ "extrinsic value matches brute-force oracle", extrinsic_oracle, 5.0 },
		{ "affinity row sums, symmetry and range", affinity_properties, 0.0 },
		{ "pipe hand-trace fixture", pipe_fixture, 0.0 },
		{ "pipe safety properties", pipe_safety, 30.0 },
		{ "centrality oracles", centrality_oracles, 0.0 },
		{ "co-occurrence matches pair scan", cooccurrence_oracle, 0.0 },
		{ "fusion laws", fusion_laws, 0.0 },
		{ "cli determinism", cli_determinism, 0.0 },
	};
	int failures = 0;
	for( const auto & c : criteria ) {
		const auto start = std::chrono::steady_clock::now();
		Outcome o = c.check();
		const double secs = std::chrono::duration< double >( std::chrono::steady_clock::now() - start ).count();
		if( c.time_limit_s > 0.0 && secs >= c.time_limit_s ) {
			o.fail( "took " + std::to_string( secs ) + " s, limit " + std::to_string( c.time_limit_s ) + " s" );
		}
		std::printf( "[%s] %-45s %.3fs  %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str() );
		failures += o.pass ? 0 : 1;
	}
	std::printf( "%d/%zu criteria passed\n", static_cast< int >( std::size( criteria ) ) - failures,
		std::size( criteria ) );
	return failures;
}
