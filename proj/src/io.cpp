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

#include "semnet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <tuple>

#include "semnet/error.hpp"

namespace semnet {

namespace fs = std::filesystem;

void write_file_atomic( const fs::path & path, std::string_view contents ) {
	fs::path tmp = path;
	tmp += ".tmp";
	{
		std::ofstream out( tmp, std::ios::binary | std::ios::trunc );
		if( !out ) {
			throw Error( ErrorCode::Io, "cannot open '" + tmp.string() + "' for writing" );
		}
		out.write( contents.data(), static_cast< std::streamsize >( contents.size() ) );
		out.flush();
		if( !out ) {
			out.close();
			std::error_code ignored;
			fs::remove( tmp, ignored );
			throw Error( ErrorCode::Io, "failed writing '" + tmp.string() + "'" );
		}
	}
	std::error_code ec;
	fs::rename( tmp, path, ec );
	if( ec ) {
		std::error_code ignored;
		fs::remove( tmp, ignored );
		throw Error( ErrorCode::Io, "cannot move output into '" + path.string() + "': " + ec.message() );
	}
}

std::string format_roundtrip( double value ) {
	char buf[ 64 ];
	auto [ end, ec ] = std::to_chars( buf, buf + sizeof( buf ), value );
	if( ec != std::errc() ) {
		throw Error( ErrorCode::InvalidArgument, "cannot format number" );
	}
	return std::string( buf, end );
}

std::string format_fixed( double value, int decimals ) {
	if( value == 0.0 ) {
		value = 0.0; // drop the sign of -0
	}
	char buf[ 64 ];
	auto [ end, ec ] = std::to_chars( buf, buf + sizeof( buf ), value, std::chars_format::fixed, decimals );
	if( ec != std::errc() ) {
		throw Error( ErrorCode::InvalidArgument, "cannot format number" );
	}
	return std::string( buf, end );
}

std::string csv_escape( std::string_view field ) {
	if( field.find_first_of( ",\"\r\n" ) == std::string_view::npos ) {
		return std::string( field );
	}
	std::string out = "\"";
	for( char c : field ) {
		if( c == '"' ) {
			out += '"';
		}
		out += c;
	}
	out += '"';
	return out;
}

std::vector< std::string > csv_split( std::string_view line ) {
	std::vector< std::string > fields( 1 );
	bool quoted = false;
	for( std::size_t i = 0; i < line.size(); ++i ) {
		const char c = line[ i ];
		if( quoted ) {
			if( c == '"' ) {
				if( i + 1 < line.size() && line[ i + 1 ] == '"' ) {
					fields.back() += '"';
					++i;
				} else {
					quoted = false;
				}
			} else {
				fields.back() += c;
			}
		} else if( c == '"' ) {
			quoted = true;
		} else if( c == ',' ) {
			fields.emplace_back();
		} else {
			fields.back() += c;
		}
	}
	return fields;
}

namespace {

std::ifstream open_input( const fs::path & path ) {
	std::ifstream in( path, std::ios::binary );
	if( !in ) {
		throw Error( ErrorCode::Io, "cannot open '" + path.string() + "'" );
	}
	return in;
}

std::string where( const std::string & source, std::size_t line_no ) {
	return source + ":" + std::to_string( line_no ) + ": ";
}

double parse_real( std::string_view text, const std::string & context ) {
	double value = 0.0;
	const char * first = text.data();
	const char * last = text.data() + text.size();
	auto [ ptr, ec ] = std::from_chars( first, last, value );
	if( ec != std::errc() || ptr != last ) {
		throw Error( ErrorCode::Parse, context + "invalid number '" + std::string( text ) + "'" );
	}
	return value;
}

void strip_cr( std::string & line ) {
	if( !line.empty() && line.back() == '\r' ) {
		line.pop_back();
	}
}

} // namespace

Graph read_edge_list( std::istream & in, const std::string & source ) {
	Graph g;
	std::string line;
	std::size_t line_no = 0;
	while( std::getline( in, line ) ) {
		++line_no;
		strip_cr( line );
		if( line.empty() || line.front() == '#' ) {
			continue;
		}
		const auto t1 = line.find( '\t' );
		const auto t2 = t1 == std::string::npos ? std::string::npos : line.find( '\t', t1 + 1 );
		if( t2 == std::string::npos || line.find( '\t', t2 + 1 ) != std::string::npos ) {
			throw Error( ErrorCode::Parse, where( source, line_no ) + "expected source<TAB>target<TAB>weight" );
		}
		const std::string_view view( line );
		const double w = parse_real( view.substr( t2 + 1 ), where( source, line_no ) );
		try {
			g.add_edge( view.substr( 0, t1 ), view.substr( t1 + 1, t2 - t1 - 1 ), w );
		} catch( const Error & e ) {
			throw Error( ErrorCode::Parse, where( source, line_no ) + e.what() );
		}
	}
	if( in.bad() ) {
		throw Error( ErrorCode::Io, source + ": read error" );
	}
	return g;
}

Graph read_edge_list( const fs::path & path ) {
	auto in = open_input( path );
	return read_edge_list( in, path.string() );
}

void write_edge_list( std::ostream & out, const Graph & g ) {
	std::vector< std::tuple< const std::string *, const std::string *, double > > rows;
	rows.reserve( g.edge_count() );
	for( NodeId u = 0; u < g.node_count(); ++u ) {
		for( const auto & [ v, w ] : g.out_edges( u ) ) {
			rows.emplace_back( &g.label( u ), &g.label( v ), w );
		}
	}
	std::sort( rows.begin(), rows.end(), []( const auto & a, const auto & b ) {
		if( *std::get< 0 >( a ) != *std::get< 0 >( b ) ) {
			return *std::get< 0 >( a ) < *std::get< 0 >( b );
		}
		return *std::get< 1 >( a ) < *std::get< 1 >( b );
	} );
	for( const auto & [ s, t, w ] : rows ) {
		out << *s << '\t' << *t << '\t' << format_roundtrip( w ) << '\n';
	}
}

void write_edge_list( const fs::path & path, const Graph & g ) {
	std::ostringstream buf;
	write_edge_list( buf, g );
	write_file_atomic( path, buf.str() );
}

FrequencyTable read_frequency_csv( std::istream & in, const std::string & source ) {
	FrequencyTable freq;
	std::string line;
	std::size_t line_no = 0;
	bool header_seen = false;
	while( std::getline( in, line ) ) {
		++line_no;
		strip_cr( line );
		if( line.empty() ) {
			continue;
		}
		const auto fields = csv_split( line );
		if( fields.size() != 2 ) {
			throw Error( ErrorCode::Parse, where( source, line_no ) + "expected node,frequency" );
		}
		if( !header_seen ) {
			header_seen = true;
			if( fields[ 0 ] == "node" && fields[ 1 ] == "frequency" ) {
				continue;
			}
			throw Error( ErrorCode::Parse, where( source, line_no ) + "missing 'node,frequency' header" );
		}
		FrequencyTable::Count count = 0;
		const auto & text = fields[ 1 ];
		auto [ ptr, ec ] = std::from_chars( text.data(), text.data() + text.size(), count );
		if( ec != std::errc() || ptr != text.data() + text.size() ) {
			throw Error( ErrorCode::Parse, where( source, line_no ) + "invalid count '" + text + "'" );
		}
		freq.add( fields[ 0 ], count );
	}
	if( in.bad() ) {
		throw Error( ErrorCode::Io, source + ": read error" );
	}
	return freq;
}

FrequencyTable read_frequency_csv( const fs::path & path ) {
	auto in = open_input( path );
	return read_frequency_csv( in, path.string() );
}

void write_frequency_csv( std::ostream & out, const FrequencyTable & freq ) {
	out << "node,frequency\n";
	for( const auto & [ label, n ] : freq.entries() ) {
		out << csv_escape( label ) << ',' << n << '\n';
	}
}

void write_frequency_csv( const fs::path & path, const FrequencyTable & freq ) {
	std::ostringstream buf;
	write_frequency_csv( buf, freq );
	write_file_atomic( path, buf.str() );
}

void write_scores_csv( std::ostream & out, const Graph & g, const SemanticScores & scores ) {
	if( scores.size() != g.node_count() ) {
		throw Error( ErrorCode::Misaligned, "semantic scores are not aligned with the graph" );
	}
	std::vector< NodeId > order( g.node_count() );
	for( NodeId v = 0; v < order.size(); ++v ) {
		order[ v ] = v;
	}
	std::sort( order.begin(), order.end(), [ & ]( NodeId a, NodeId b ) { return g.label( a ) < g.label( b ); } );
	out << "node,I,E,S\n";
	for( NodeId v : order ) {
		out << csv_escape( g.label( v ) ) << ',' << format_roundtrip( scores.intrinsic[ v ] ) << ','
			<< format_roundtrip( scores.extrinsic[ v ] ) << ',' << format_roundtrip( scores.semantic[ v ] ) << '\n';
	}
}

void write_affinity_tsv( std::ostream & out, const Graph & g, const AffinityMatrix & f ) {
	if( f.size() != g.node_count() ) {
		throw Error( ErrorCode::Misaligned, "affinity matrix is not aligned with the graph" );
	}
	Graph nonzero;
	for( const auto & l : g.labels() ) {
		nonzero.add_node( l );
	}
	for( NodeId x = 0; x < f.size(); ++x ) {
		for( NodeId y = 0; y < f.size(); ++y ) {
			if( f( x, y ) > 0.0 ) {
				nonzero.add_edge( x, y, f( x, y ) );
			}
		}
	}
	write_edge_list( out, nonzero );
}

void write_semantic_affinity_csv( std::ostream & out, const Graph & g, const SemanticAffinityTable & table ) {
	const std::size_t k = table.size();
	out << "node";
	for( NodeId v : table.nodes ) {
		out << ',' << csv_escape( g.label( v ) );
	}
	out << '\n';
	for( std::size_t i = 0; i < k; ++i ) {
		out << csv_escape( g.label( table.nodes[ i ] ) );
		for( std::size_t j = 0; j < k; ++j ) {
			out << ',' << format_fixed( table( i, j ), 6 );
		}
		out << '\n';
	}
}

} // namespace semnet
