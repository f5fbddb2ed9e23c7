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

// semnet command-line front end. Everything goes through the C API.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semnet/semnet.h"

namespace fs = std::filesystem;

namespace {

struct GraphDeleter {
	void operator()( semnet_graph * g ) const { semnet_graph_destroy( g ); }
};
struct FreqDeleter {
	void operator()( semnet_freq * f ) const { semnet_freq_destroy( f ); }
};
struct AffinityDeleter {
	void operator()( semnet_affinity * a ) const { semnet_affinity_destroy( a ); }
};
using GraphPtr = std::unique_ptr< semnet_graph, GraphDeleter >;
using FreqPtr = std::unique_ptr< semnet_freq, FreqDeleter >;
using AffinityPtr = std::unique_ptr< semnet_affinity, AffinityDeleter >;

class CommandError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

void check( semnet_status status, const std::string & context = {} ) {
	if( status != SEMNET_OK ) {
		std::string msg = semnet_last_error();
		if( !context.empty() ) {
			msg = context + ": " + msg;
		}
		throw CommandError( msg );
	}
}

struct RunConfig {
	std::size_t window = 10;
	std::size_t top = 300;
	double alpha = 0.9;
	std::string affinity = "mix";
	double epsilon = 1e-9;
	double eig_tol = 1e-10;
	std::size_t eig_max_iter = 10000;
	std::string out_dir = ".";
	std::uint64_t seed = 0; // reserved
};

void validate( const RunConfig & cfg ) {
	if( cfg.window < 1 ) {
		throw CommandError( "--window must be at least 1" );
	}
	if( cfg.top < 1 ) {
		throw CommandError( "--top must be at least 1" );
	}
	if( !( cfg.alpha >= 0.0 && cfg.alpha <= 1.0 ) ) {
		throw CommandError( "--alpha must lie in [0,1]" );
	}
	if( !( cfg.epsilon > 0.0 ) ) {
		throw CommandError( "--epsilon must be positive" );
	}
}

semnet_affinity_kind affinity_kind( const std::string & name ) {
	if( name == "bf" ) return SEMNET_AFFINITY_BEST_FRIEND;
	if( name == "bcf" ) return SEMNET_AFFINITY_BEST_COMMON_FRIEND;
	if( name == "mach" ) return SEMNET_AFFINITY_MACHIAVELLI;
	if( name == "mix" ) return SEMNET_AFFINITY_MIXED;
	throw CommandError( "unknown affinity kind '" + name + "' (expected bf, bcf, mach or mix)" );
}

std::string strip_suffix( std::string name, const std::string & suffix ) {
	if( name.size() > suffix.size() && name.compare( name.size() - suffix.size(), suffix.size(), suffix ) == 0 ) {
		name.resize( name.size() - suffix.size() );
	}
	return name;
}

/// book.tok.tsv -> book, book.edges.tsv -> book
std::string stem_of( const std::string & path ) {
	std::string name = fs::path( path ).filename().string();
	for( const char * suffix : { ".tok.tsv", ".edges.tsv" } ) {
		const std::string stripped = strip_suffix( name, suffix );
		if( stripped != name ) {
			return stripped;
		}
	}
	return fs::path( name ).stem().string();
}

std::string freq_path_for( const std::string & edges_path ) {
	const std::string stripped = strip_suffix( edges_path, ".edges.tsv" );
	if( stripped == edges_path ) {
		throw CommandError( "cannot infer the frequency table of '" + edges_path + "' (expected *.edges.tsv)" );
	}
	return stripped + ".freq.csv";
}

std::string fixed( double value, int decimals ) {
	if( value == 0.0 ) {
		value = 0.0;
	}
	char buf[ 64 ];
	std::snprintf( buf, sizeof( buf ), "%.*f", decimals, value );
	return buf;
}

std::string csv_field( const std::string & s ) {
	if( s.find_first_of( ",\"\r\n" ) == std::string::npos ) {
		return s;
	}
	std::string out = "\"";
	for( char c : s ) {
		if( c == '"' ) {
			out += '"';
		}
		out += c;
	}
	return out + "\"";
}

/// Temp file + rename, so a failing command leaves no partial output.
void write_atomic( const fs::path & path, const std::string & contents ) {
	fs::path tmp = path;
	tmp += ".tmp";
	{
		std::ofstream out( tmp, std::ios::binary | std::ios::trunc );
		if( !out ) {
			throw CommandError( "cannot open '" + tmp.string() + "' for writing" );
		}
		out << contents;
		out.flush();
		if( !out ) {
			std::error_code ignored;
			fs::remove( tmp, ignored );
			throw CommandError( "failed writing '" + tmp.string() + "'" );
		}
	}
	std::error_code ec;
	fs::rename( tmp, path, ec );
	if( ec ) {
		std::error_code ignored;
		fs::remove( tmp, ignored );
		throw CommandError( "cannot create '" + path.string() + "': " + ec.message() );
	}
}

fs::path output_dir( const RunConfig & cfg ) {
	fs::path dir( cfg.out_dir );
	std::error_code ec;
	fs::create_directories( dir, ec );
	if( ec ) {
		throw CommandError( "cannot create output directory '" + dir.string() + "': " + ec.message() );
	}
	return dir;
}

GraphPtr read_graph( const std::string & path ) {
	semnet_graph * g = nullptr;
	check( semnet_graph_read( path.c_str(), &g ) );
	return GraphPtr( g );
}

FreqPtr read_freq( const std::string & path ) {
	semnet_freq * f = nullptr;
	check( semnet_freq_read( path.c_str(), &f ) );
	return FreqPtr( f );
}

std::string label_of( const semnet_graph * g, std::size_t id ) {
	return semnet_graph_label( g, id );
}

/// The analysed network: top-n subgraph plus its affinity matrix and
/// semantic values.
struct Analysis {
	GraphPtr graph;
	FreqPtr freq;
	AffinityPtr affinity;
	std::vector< double > intrinsic;
	std::vector< double > extrinsic;
	std::vector< double > semantic;

	std::size_t size() const { return semnet_graph_node_count( graph.get() ); }
};

Analysis analyse( const RunConfig & cfg, const std::string & edges_path, const std::string & freq_path ) {
	Analysis a;
	auto full = read_graph( edges_path );
	a.freq = read_freq( freq_path );
	semnet_graph * sub = nullptr;
	check( semnet_graph_top_n( full.get(), a.freq.get(), cfg.top, &sub ) );
	a.graph.reset( sub );

	semnet_affinity * f = nullptr;
	check( semnet_affinity_compute( a.graph.get(), affinity_kind( cfg.affinity ), cfg.alpha, &f ) );
	a.affinity.reset( f );

	const std::size_t n = a.size();
	a.intrinsic.resize( n );
	a.extrinsic.resize( n );
	a.semantic.resize( n );
	check( semnet_semantic_values( a.graph.get(), a.affinity.get(), a.freq.get(), a.intrinsic.data(),
		a.extrinsic.data(), a.semantic.data() ) );
	return a;
}

std::size_t node_id( const semnet_graph * g, const std::string & label ) {
	std::size_t id = 0;
	if( semnet_graph_find( g, label.c_str(), &id ) != SEMNET_OK ) {
		throw CommandError( "unknown node '" + label + "' (not among the analysed top-n nodes)" );
	}
	return id;
}

// ---- commands ----------------------------------------------------------

int cmd_build( const RunConfig & cfg, const std::vector< std::string > & inputs, const std::string & rule ) {
	const auto dir = output_dir( cfg );
	const semnet_fuse_rule fuse_rule = rule == "sum" ? SEMNET_FUSE_SUM : SEMNET_FUSE_MAX;
	for( const auto & input : inputs ) {
		semnet_graph * g = nullptr;
		semnet_freq * f = nullptr;
		check( semnet_corpus_build( input.c_str(), cfg.window, fuse_rule, &g, &f ) );
		GraphPtr graph( g );
		FreqPtr freq( f );
		const std::string stem = stem_of( input );
		const auto edges_out = dir / ( stem + ".edges.tsv" );
		const auto freq_out = dir / ( stem + ".freq.csv" );
		check( semnet_graph_write( graph.get(), edges_out.string().c_str() ) );
		check( semnet_freq_write( freq.get(), freq_out.string().c_str() ) );
		std::cerr << input << ": " << semnet_graph_node_count( graph.get() ) << " nodes, "
				  << semnet_graph_edge_count( graph.get() ) << " edges -> " << edges_out.string() << "\n";
	}
	return 0;
}

int cmd_fuse( const RunConfig & cfg, const std::vector< std::string > & inputs, const std::string & name,
	const std::string & rule ) {
	std::vector< GraphPtr > graphs;
	FreqPtr total;
	{
		semnet_freq * f = nullptr;
		check( semnet_freq_create( &f ) );
		total.reset( f );
	}
	for( const auto & input : inputs ) {
		graphs.push_back( read_graph( input ) );
		auto freq = read_freq( freq_path_for( input ) );
		check( semnet_freq_merge_sum( total.get(), freq.get() ) );
	}
	std::vector< const semnet_graph * > raw;
	for( const auto & g : graphs ) {
		raw.push_back( g.get() );
	}
	semnet_graph * fused = nullptr;
	check( semnet_graph_fuse( raw.data(), raw.size(), rule == "sum" ? SEMNET_FUSE_SUM : SEMNET_FUSE_MAX, &fused ) );
	GraphPtr result( fused );

	const auto dir = output_dir( cfg );
	check( semnet_graph_write( result.get(), ( dir / ( name + ".edges.tsv" ) ).string().c_str() ) );
	check( semnet_freq_write( total.get(), ( dir / ( name + ".freq.csv" ) ).string().c_str() ) );
	return 0;
}

int cmd_scores( const RunConfig & cfg, const std::string & edges, std::string freq, std::string output ) {
	if( freq.empty() ) {
		freq = freq_path_for( edges );
	}
	auto a = analyse( cfg, edges, freq );
	const std::size_t n = a.size();
	const semnet_graph * g = a.graph.get();

	std::vector< double > deg( n ), btw( n ), clo( n ), eig( n, 0.0 );
	if( n > 0 ) {
		check( semnet_centrality( g, SEMNET_DEGREE, 0.0, 0, deg.data() ) );
		check( semnet_centrality( g, SEMNET_BETWEENNESS, 0.0, 0, btw.data() ) );
		check( semnet_centrality( g, SEMNET_CLOSENESS, 0.0, 0, clo.data() ) );
		if( semnet_graph_edge_count( g ) > 0 ) {
			check( semnet_centrality( g, SEMNET_EIGENVECTOR, cfg.eig_tol, cfg.eig_max_iter, eig.data() ),
				"eigenvector centrality" );
		}
	}

	std::vector< std::size_t > order( n );
	std::iota( order.begin(), order.end(), std::size_t{ 0 } );
	std::sort( order.begin(), order.end(), [ & ]( std::size_t l, std::size_t r ) {
		if( a.semantic[ l ] != a.semantic[ r ] ) {
			return a.semantic[ l ] > a.semantic[ r ];
		}
		return label_of( g, l ) < label_of( g, r );
	} );

	std::ostringstream out;
	out << "node,I,E,S,degree,betweenness,closeness,eigenvector\n";
	for( std::size_t v : order ) {
		out << csv_field( label_of( g, v ) ) << ',' << fixed( a.intrinsic[ v ], 2 ) << ','
			<< fixed( a.extrinsic[ v ], 2 ) << ',' << fixed( a.semantic[ v ], 2 ) << ',' << fixed( deg[ v ], 2 )
			<< ',' << fixed( btw[ v ], 2 ) << ',' << fixed( clo[ v ], 2 ) << ',' << fixed( eig[ v ], 2 ) << '\n';
	}
	if( output.empty() ) {
		output = ( output_dir( cfg ) / ( stem_of( edges ) + ".scores.csv" ) ).string();
	}
	write_atomic( output, out.str() );
	return 0;
}

int cmd_semaffinity( const RunConfig & cfg, const std::string & edges, std::string freq,
	const std::vector< std::string > & labels, std::size_t count, std::string output ) {
	if( freq.empty() ) {
		freq = freq_path_for( edges );
	}
	auto a = analyse( cfg, edges, freq );
	const semnet_graph * g = a.graph.get();

	std::vector< std::size_t > nodes;
	if( labels.empty() ) {
		std::vector< std::size_t > ranked( a.size() );
		if( !ranked.empty() ) {
			check( semnet_graph_rank_by_frequency( g, a.freq.get(), ranked.data() ) );
		}
		ranked.resize( std::min( count, ranked.size() ) );
		nodes = ranked;
	} else {
		for( const auto & l : labels ) {
			nodes.push_back( node_id( g, l ) );
		}
	}

	const std::size_t k = nodes.size();
	std::vector< double > table( k * k );
	if( k > 0 ) {
		check( semnet_semantic_affinity_matrix( g, a.affinity.get(), a.semantic.data(), nodes.data(), k,
			cfg.epsilon, table.data() ) );
	}

	std::ostringstream out;
	out << "node";
	for( std::size_t v : nodes ) {
		out << ',' << csv_field( label_of( g, v ) );
	}
	out << '\n';
	for( std::size_t i = 0; i < k; ++i ) {
		out << csv_field( label_of( g, nodes[ i ] ) );
		for( std::size_t j = 0; j < k; ++j ) {
			out << ',' << fixed( table[ i * k + j ], 6 );
		}
		out << '\n';
	}
	if( output.empty() ) {
		output = ( output_dir( cfg ) / ( stem_of( edges ) + ".semaffinity.csv" ) ).string();
	}
	write_atomic( output, out.str() );
	return 0;
}

std::vector< std::string > split_list( const std::string & text ) {
	std::vector< std::string > items;
	std::stringstream ss( text );
	std::string item;
	while( std::getline( ss, item, ',' ) ) {
		if( !item.empty() ) {
			items.push_back( item );
		}
	}
	return items;
}

int cmd_affinity( const RunConfig & cfg, const std::string & edges, std::string freq, const std::string & node,
	const std::string & kinds, std::size_t k, std::string output ) {
	if( freq.empty() ) {
		freq = freq_path_for( edges );
	}
	auto a = analyse( cfg, edges, freq );
	const semnet_graph * g = a.graph.get();
	const std::size_t n = a.size();
	const std::size_t x = node_id( g, node );

	std::ostringstream out;
	out << "kind,rank,node,value\n";
	for( const auto & kind : split_list( kinds ) ) {
		std::vector< std::pair< double, std::size_t > > row;
		if( kind == "sem" ) {
			for( std::size_t y = 0; y < n; ++y ) {
				if( y == x ) {
					continue;
				}
				semnet_pipe_result r{};
				check( semnet_pipe_compare( g, a.affinity.get(), a.semantic.data(), x, y, cfg.epsilon, &r ) );
				row.emplace_back( r.affinity, y );
			}
		} else {
			semnet_affinity * f = nullptr;
			check( semnet_affinity_compute( g, affinity_kind( kind ), cfg.alpha, &f ) );
			AffinityPtr matrix( f );
			for( std::size_t y = 0; y < n; ++y ) {
				double v = 0.0;
				check( semnet_affinity_get( matrix.get(), x, y, &v ) );
				row.emplace_back( v, y );
			}
		}
		std::erase_if( row, []( const auto & e ) { return !( e.first > 0.0 ); } );
		std::sort( row.begin(), row.end(), [ & ]( const auto & l, const auto & r ) {
			if( l.first != r.first ) {
				return l.first > r.first;
			}
			return label_of( g, l.second ) < label_of( g, r.second );
		} );
		row.resize( std::min( k, row.size() ) );
		for( std::size_t i = 0; i < row.size(); ++i ) {
			out << kind << ',' << ( i + 1 ) << ',' << csv_field( label_of( g, row[ i ].second ) ) << ','
				<< fixed( row[ i ].first, 6 ) << '\n';
		}
	}
	if( output == "-" ) {
		std::cout << out.str();
		return 0;
	}
	if( output.empty() ) {
		output = ( output_dir( cfg ) / ( stem_of( edges ) + "." + node + ".affinity.csv" ) ).string();
	}
	write_atomic( output, out.str() );
	return 0;
}

} // namespace

int main( int argc, char ** argv ) {
	CLI::App app{ "semnet: semantic value and semantic affinity analysis of co-occurrence networks" };
	app.require_subcommand( 1 );
	app.set_version_flag( "--version", std::string( semnet_version() ) );

	RunConfig cfg;
	app.add_option( "--window", cfg.window, "Co-occurrence window k" )->capture_default_str();
	app.add_option( "--top", cfg.top, "Analyse the n most frequent nodes" )->capture_default_str();
	app.add_option( "--alpha", cfg.alpha, "Best-friend weight of the mixed affinity" )->capture_default_str();
	app.add_option( "--affinity", cfg.affinity, "Affinity used for semantic values and Pipe: bf, bcf, mach, mix" )
		->capture_default_str();
	app.add_option( "--epsilon", cfg.epsilon, "Pipe saturation threshold" )->capture_default_str();
	app.add_option( "--eig-tol", cfg.eig_tol, "Eigenvector convergence tolerance" )->capture_default_str();
	app.add_option( "--eig-max-iter", cfg.eig_max_iter, "Eigenvector iteration budget" )->capture_default_str();
	app.add_option( "--out-dir", cfg.out_dir, "Output directory" )->capture_default_str();
	app.add_option( "--seed", cfg.seed, "Reserved; all computations are deterministic" );

	std::vector< std::string > inputs;
	std::string rule = "max";
	std::string name = "fused";
	std::string edges;
	std::string freq;
	std::string output;
	std::string nodes;
	std::size_t count = 10;
	std::string node;
	std::string kinds = "bf,mach,sem";
	std::size_t k = 10;

	auto * build = app.add_subcommand( "build", "Build per-book co-occurrence networks from .tok.tsv files" );
	build->fallthrough();
	build->add_option( "inputs", inputs, "Tagged-token files" )->required();
	build->add_option( "--fuse-rule", rule, "Duplicate edges across documents: max or sum" )
		->check( CLI::IsMember( { "max", "sum" } ) )
		->capture_default_str();

	auto * fuse = app.add_subcommand( "fuse", "Fuse book networks and sum their frequency tables" );
	fuse->fallthrough();
	fuse->add_option( "inputs", inputs, "Edge lists (*.edges.tsv, next to *.freq.csv)" )->required();
	fuse->add_option( "--name", name, "Output stem" )->capture_default_str();
	fuse->add_option( "--fuse-rule", rule, "Duplicate edges: max or sum" )
		->check( CLI::IsMember( { "max", "sum" } ) )
		->capture_default_str();

	auto * scores = app.add_subcommand( "scores", "Semantic values and centralities of the top-n nodes" );
	scores->fallthrough();
	scores->add_option( "edges", edges, "Edge list" )->required();
	scores->add_option( "freq", freq, "Frequency table (default: inferred from the edge list)" );
	scores->add_option( "-o,--output", output, "Output CSV" );

	auto * semaff = app.add_subcommand( "semaffinity", "Pairwise semantic affinity matrix" );
	semaff->fallthrough();
	semaff->add_option( "edges", edges, "Edge list" )->required();
	semaff->add_option( "freq", freq, "Frequency table (default: inferred from the edge list)" );
	semaff->add_option( "--nodes", nodes, "Comma-separated labels (default: most frequent)" );
	semaff->add_option( "--count", count, "Number of most frequent nodes when --nodes is absent" )
		->capture_default_str();
	semaff->add_option( "-o,--output", output, "Output CSV" );

	auto * aff = app.add_subcommand( "affinity", "Top affinity targets of one node" );
	aff->fallthrough();
	aff->add_option( "edges", edges, "Edge list" )->required();
	aff->add_option( "freq", freq, "Frequency table (default: inferred from the edge list)" );
	aff->add_option( "--node", node, "Source label" )->required();
	aff->add_option( "--kinds", kinds, "Comma-separated kinds: bf, bcf, mach, mix, sem" )->capture_default_str();
	aff->add_option( "-k,--top-k", k, "Targets per kind" )->capture_default_str();
	aff->add_option( "-o,--output", output, "Output CSV, '-' for stdout" );

	try {
		app.parse( argc, argv );
	} catch( const CLI::ParseError & e ) {
		return app.exit( e );
	}

	try {
		validate( cfg );
		if( *build ) return cmd_build( cfg, inputs, rule );
		if( *fuse ) return cmd_fuse( cfg, inputs, name, rule );
		if( *scores ) return cmd_scores( cfg, edges, freq, output );
		if( *semaff ) return cmd_semaffinity( cfg, edges, freq, split_list( nodes ), count, output );
		if( *aff ) return cmd_affinity( cfg, edges, freq, node, kinds, k, output );
	} catch( const std::exception & e ) {
		std::cerr << "semnet: error: " << e.what() << "\n";
		return 1;
	}
	return 1;
}
