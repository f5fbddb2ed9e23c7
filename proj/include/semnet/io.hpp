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
 * On-disk formats.
 *
 *  - edge list: `source<TAB>target<TAB>weight`, `#` comment lines, weights
 *    written in shortest round-trip form
 *  - frequency table: CSV `node,frequency`
 *  - semantic scores: CSV `node,I,E,S` in lexicographic node order
 *  - affinity export: edge-list format, nonzero entries only
 *  - semantic affinity table: CSV with a label header row and column,
 *    6 decimals
 *
 * All writers go through write_file_atomic(), so a failed write never leaves
 * a partial file behind.
 */

#ifndef SEMNET_IO_HPP
#define SEMNET_IO_HPP

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "semnet/affinity.hpp"
#include "semnet/frequency.hpp"
#include "semnet/graph.hpp"
#include "semnet/pipe.hpp"
#include "semnet/semantics.hpp"

namespace semnet {

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomic( const std::filesystem::path & path, std::string_view contents );

/// Shortest decimal representation that parses back to the same double.
std::string format_roundtrip( double value );
/// Fixed notation with `decimals` digits after the point.
std::string format_fixed( double value, int decimals );

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_escape( std::string_view field );
/// Splits one CSV record, honouring double-quoted fields.
std::vector< std::string > csv_split( std::string_view line );

Graph read_edge_list( std::istream & in, const std::string & source );
Graph read_edge_list( const std::filesystem::path & path );
/// Edges sorted by (source label, target label).
void write_edge_list( std::ostream & out, const Graph & g );
void write_edge_list( const std::filesystem::path & path, const Graph & g );

FrequencyTable read_frequency_csv( std::istream & in, const std::string & source );
FrequencyTable read_frequency_csv( const std::filesystem::path & path );
void write_frequency_csv( std::ostream & out, const FrequencyTable & freq );
void write_frequency_csv( const std::filesystem::path & path, const FrequencyTable & freq );

void write_scores_csv( std::ostream & out, const Graph & g, const SemanticScores & scores );
void write_affinity_tsv( std::ostream & out, const Graph & g, const AffinityMatrix & f );
void write_semantic_affinity_csv( std::ostream & out, const Graph & g, const SemanticAffinityTable & table );

} // namespace semnet

#endif
