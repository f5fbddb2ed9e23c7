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
 * Tagged-token corpora and word co-occurrence networks.
 *
 * Token files (`.tok.tsv`) hold one token per line as
 * `surface<TAB>pos<TAB>lemma`. A blank line closes a document and lines that
 * start with `#` are ignored without consuming a position.
 */

#ifndef SEMNET_CORPUS_HPP
#define SEMNET_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "semnet/frequency.hpp"
#include "semnet/graph.hpp"

namespace semnet {

struct TaggedToken {
	std::string surface;
	std::string pos;
	std::string lemma;
	/// Index in the unfiltered token sequence of the document.
	std::size_t position = 0;

	bool operator==( const TaggedToken & ) const = default;
};

struct DocumentStream {
	std::string id;
	std::vector< TaggedToken > tokens;
};

/// Parses a token stream. `source` names the input in diagnostics and
/// prefixes the document ids (`source#0`, `source#1`, ...).
std::vector< DocumentStream > read_tokens( std::istream & in, const std::string & source );
std::vector< DocumentStream > read_token_file( const std::filesystem::path & path );

/// Penn Treebank noun tags (NN, NNS, NNP, NNPS and anything else starting with "NN").
bool is_noun_tag( std::string_view pos ) noexcept;

/// Keeps nouns only; survivors keep their original positions.
DocumentStream filter_nouns( const DocumentStream & doc );

/**
 * Directed co-occurrence graph of one noun-filtered document. Every ordered
 * token pair whose original positions differ by 1..window adds 1 to the edge
 * lemma(earlier) -> lemma(later). Pairs with equal lemmas are skipped.
 */
Graph cooccurrence_network( const DocumentStream & doc, std::size_t window );

FrequencyTable frequency_table( std::span< const DocumentStream > docs );

/// Per-document networks fused into one book network.
Graph build_book_network( std::span< const DocumentStream > docs, std::size_t window,
	FuseRule rule = FuseRule::Max );

} // namespace semnet

#endif
