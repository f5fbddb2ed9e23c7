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

#include "semnet/corpus.hpp"

#include <fstream>
#include <string_view>

#include "semnet/error.hpp"

namespace semnet {

namespace {

std::vector< std::string_view > split_tabs( std::string_view line ) {
	std::vector< std::string_view > fields;
	std::size_t start = 0;
	while( true ) {
		const auto tab = line.find( '\t', start );
		if( tab == std::string_view::npos ) {
			fields.push_back( line.substr( start ) );
			return fields;
		}
		fields.push_back( line.substr( start, tab - start ) );
		start = tab + 1;
	}
}

} // namespace

std::vector< DocumentStream > read_tokens( std::istream & in, const std::string & source ) {
	std::vector< DocumentStream > docs;
	DocumentStream current;
	auto close = [ & ] {
		if( !current.tokens.empty() ) {
			current.id = source + "#" + std::to_string( docs.size() );
			docs.push_back( std::move( current ) );
		}
		current = DocumentStream{};
	};

	std::string line;
	std::size_t line_no = 0;
	while( std::getline( in, line ) ) {
		++line_no;
		if( !line.empty() && line.back() == '\r' ) {
			line.pop_back();
		}
		if( line.empty() ) {
			close();
			continue;
		}
		if( line.front() == '#' ) {
			continue;
		}
		const auto fields = split_tabs( line );
		if( fields.size() != 3 ) {
			throw Error( ErrorCode::Parse, source + ":" + std::to_string( line_no ) + ": expected 3 tab-separated fields, got " +
				std::to_string( fields.size() ) );
		}
		if( fields[ 2 ].empty() ) {
			throw Error( ErrorCode::Parse, source + ":" + std::to_string( line_no ) + ": empty lemma" );
		}
		TaggedToken token;
		token.surface = fields[ 0 ];
		token.pos = fields[ 1 ];
		token.lemma = fields[ 2 ];
		token.position = current.tokens.size();
		current.tokens.push_back( std::move( token ) );
	}
	if( in.bad() ) {
		throw Error( ErrorCode::Io, source + ": read error" );
	}
	close();
	return docs;
}

std::vector< DocumentStream > read_token_file( const std::filesystem::path & path ) {
	std::ifstream in( path, std::ios::binary );
	if( !in ) {
		throw Error( ErrorCode::Io, "cannot open '" + path.string() + "'" );
	}
	return read_tokens( in, path.string() );
}

bool is_noun_tag( std::string_view pos ) noexcept {
	return pos.starts_with( "NN" );
}

DocumentStream filter_nouns( const DocumentStream & doc ) {
	DocumentStream out;
	out.id = doc.id;
	for( const auto & token : doc.tokens ) {
		if( is_noun_tag( token.pos ) ) {
			out.tokens.push_back( token );
		}
	}
	return out;
}

Graph cooccurrence_network( const DocumentStream & doc, std::size_t window ) {
	if( window == 0 ) {
		throw Error( ErrorCode::InvalidArgument, "co-occurrence window must be at least 1" );
	}
	Graph g;
	std::vector< NodeId > ids;
	ids.reserve( doc.tokens.size() );
	for( const auto & token : doc.tokens ) {
		ids.push_back( g.add_node( token.lemma ) );
	}
	const auto & tokens = doc.tokens;
	for( std::size_t i = 0; i < tokens.size(); ++i ) {
		for( std::size_t j = i + 1; j < tokens.size(); ++j ) {
			if( tokens[ j ].position - tokens[ i ].position > window ) {
				break;
			}
			if( ids[ i ] != ids[ j ] ) {
				g.accumulate_edge( ids[ i ], ids[ j ], 1.0 );
			}
		}
	}
	return g;
}

FrequencyTable frequency_table( std::span< const DocumentStream > docs ) {
	FrequencyTable table;
	for( const auto & doc : docs ) {
		for( const auto & token : doc.tokens ) {
			table.add( token.lemma );
		}
	}
	return table;
}

Graph build_book_network( std::span< const DocumentStream > docs, std::size_t window, FuseRule rule ) {
	std::vector< Graph > parts;
	parts.reserve( docs.size() );
	for( const auto & doc : docs ) {
		parts.push_back( cooccurrence_network( doc, window ) );
	}
	return fuse( parts, rule );
}

} // namespace semnet
