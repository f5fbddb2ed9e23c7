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

#include "semnet/semnet.h"

#include <algorithm>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "semnet/affinity.hpp"
#include "semnet/corpus.hpp"
#include "semnet/error.hpp"
#include "semnet/graph.hpp"
#include "semnet/io.hpp"
#include "semnet/pipe.hpp"
#include "semnet/semantics.hpp"

struct semnet_graph {
	semnet::Graph impl;
};

struct semnet_freq {
	semnet::FrequencyTable impl;
};

struct semnet_affinity {
	semnet::AffinityMatrix impl;
};

namespace {

thread_local std::string last_error;

semnet_status to_status( semnet::ErrorCode code ) {
	using semnet::ErrorCode;
	switch( code ) {
		case ErrorCode::InvalidArgument: return SEMNET_ERR_INVALID_ARGUMENT;
		case ErrorCode::NotFound: return SEMNET_ERR_NOT_FOUND;
		case ErrorCode::Io: return SEMNET_ERR_IO;
		case ErrorCode::Parse: return SEMNET_ERR_PARSE;
		case ErrorCode::NoConvergence: return SEMNET_ERR_NO_CONVERGENCE;
		case ErrorCode::Misaligned: return SEMNET_ERR_MISALIGNED;
	}
	return SEMNET_ERR_INTERNAL;
}

semnet_status fail( semnet_status status, std::string message ) {
	last_error = std::move( message );
	return status;
}

/// Runs `body`, translating exceptions into status codes.
template< typename F >
semnet_status guarded( F && body ) noexcept {
	try {
		body();
		return SEMNET_OK;
	} catch( const semnet::Error & e ) {
		return fail( to_status( e.code() ), e.what() );
	} catch( const std::bad_alloc & ) {
		return fail( SEMNET_ERR_INTERNAL, "out of memory" );
	} catch( const std::exception & e ) {
		return fail( SEMNET_ERR_INTERNAL, e.what() );
	} catch( ... ) {
		return fail( SEMNET_ERR_INTERNAL, "unknown error" );
	}
}

void require( bool condition, const char * what ) {
	if( !condition ) {
		throw semnet::Error( semnet::ErrorCode::InvalidArgument, what );
	}
}

semnet::SemanticScores scores_from( const semnet::Graph & g, const double * semantic ) {
	semnet::SemanticScores s;
	s.semantic.assign( semantic, semantic + g.node_count() );
	s.intrinsic.assign( g.node_count(), 0.0 );
	s.extrinsic.assign( g.node_count(), 0.0 );
	return s;
}

semnet::AffinityKind to_kind( semnet_affinity_kind kind ) {
	switch( kind ) {
		case SEMNET_AFFINITY_BEST_FRIEND: return semnet::AffinityKind::BestFriend;
		case SEMNET_AFFINITY_BEST_COMMON_FRIEND: return semnet::AffinityKind::BestCommonFriend;
		case SEMNET_AFFINITY_MACHIAVELLI: return semnet::AffinityKind::Machiavelli;
		case SEMNET_AFFINITY_MIXED: return semnet::AffinityKind::Mixed;
	}
	throw semnet::Error( semnet::ErrorCode::InvalidArgument, "unknown affinity kind" );
}

semnet::FuseRule to_rule( semnet_fuse_rule rule ) {
	switch( rule ) {
		case SEMNET_FUSE_MAX: return semnet::FuseRule::Max;
		case SEMNET_FUSE_SUM: return semnet::FuseRule::Sum;
	}
	throw semnet::Error( semnet::ErrorCode::InvalidArgument, "unknown fuse rule" );
}

} // namespace

extern "C" {

const char * semnet_version( void ) {
	return "1.0.0";
}

const char * semnet_last_error( void ) {
	return last_error.c_str();
}

const char * semnet_status_string( semnet_status status ) {
	switch( status ) {
		case SEMNET_OK: return "ok";
		case SEMNET_ERR_INVALID_ARGUMENT: return "invalid argument";
		case SEMNET_ERR_NOT_FOUND: return "not found";
		case SEMNET_ERR_IO: return "i/o error";
		case SEMNET_ERR_PARSE: return "parse error";
		case SEMNET_ERR_NO_CONVERGENCE: return "no convergence";
		case SEMNET_ERR_MISALIGNED: return "misaligned inputs";
		case SEMNET_ERR_INTERNAL: return "internal error";
	}
	return "unknown status";
}

semnet_status semnet_graph_create( semnet_graph ** out ) {
	return guarded( [ & ] {
		require( out != nullptr, "null output handle" );
		*out = new semnet_graph{};
	} );
}

void semnet_graph_destroy( semnet_graph * g ) {
	delete g;
}

semnet_status semnet_graph_add_node( semnet_graph * g, const char * label, size_t * out_id ) {
	return guarded( [ & ] {
		require( g != nullptr && label != nullptr, "null argument" );
		const auto id = g->impl.add_node( label );
		if( out_id ) {
			*out_id = id;
		}
	} );
}

semnet_status semnet_graph_add_edge( semnet_graph * g, const char * source, const char * target, double weight ) {
	return guarded( [ & ] {
		require( g != nullptr && source != nullptr && target != nullptr, "null argument" );
		g->impl.add_edge( source, target, weight );
	} );
}

semnet_status semnet_graph_find( const semnet_graph * g, const char * label, size_t * out_id ) {
	return guarded( [ & ] {
		require( g != nullptr && label != nullptr && out_id != nullptr, "null argument" );
		*out_id = g->impl.id( label );
	} );
}

size_t semnet_graph_node_count( const semnet_graph * g ) {
	return g ? g->impl.node_count() : 0;
}

size_t semnet_graph_edge_count( const semnet_graph * g ) {
	return g ? g->impl.edge_count() : 0;
}

const char * semnet_graph_label( const semnet_graph * g, size_t id ) {
	if( !g || id >= g->impl.node_count() ) {
		return nullptr;
	}
	return g->impl.label( id ).c_str();
}

semnet_status semnet_graph_weight( const semnet_graph * g, size_t source, size_t target, double * out ) {
	return guarded( [ & ] {
		require( g != nullptr && out != nullptr, "null argument" );
		*out = g->impl.weight( source, target );
	} );
}

semnet_status semnet_graph_degree( const semnet_graph * g, size_t id, size_t * in, size_t * out, size_t * total ) {
	return guarded( [ & ] {
		require( g != nullptr, "null graph" );
		const auto d = semnet::degree( g->impl, id );
		if( in ) *in = d.in;
		if( out ) *out = d.out;
		if( total ) *total = d.total;
	} );
}

semnet_status semnet_graph_read( const char * path, semnet_graph ** out ) {
	return guarded( [ & ] {
		require( path != nullptr && out != nullptr, "null argument" );
		auto g = std::make_unique< semnet_graph >();
		g->impl = semnet::read_edge_list( std::filesystem::path( path ) );
		*out = g.release();
	} );
}

semnet_status semnet_graph_write( const semnet_graph * g, const char * path ) {
	return guarded( [ & ] {
		require( g != nullptr && path != nullptr, "null argument" );
		semnet::write_edge_list( std::filesystem::path( path ), g->impl );
	} );
}

semnet_status semnet_graph_fuse( const semnet_graph * const * graphs, size_t count, semnet_fuse_rule rule,
	semnet_graph ** out ) {
	return guarded( [ & ] {
		require( graphs != nullptr && out != nullptr, "null argument" );
		require( count > 0, "fusion needs at least one graph" );
		std::vector< semnet::Graph > inputs;
		inputs.reserve( count );
		for( size_t i = 0; i < count; ++i ) {
			require( graphs[ i ] != nullptr, "null graph in fusion input" );
			inputs.push_back( graphs[ i ]->impl );
		}
		auto g = std::make_unique< semnet_graph >();
		g->impl = semnet::fuse( inputs, to_rule( rule ) );
		*out = g.release();
	} );
}

semnet_status semnet_graph_top_n( const semnet_graph * g, const semnet_freq * freq, size_t n, semnet_graph ** out ) {
	return guarded( [ & ] {
		require( g != nullptr && freq != nullptr && out != nullptr, "null argument" );
		auto sub = std::make_unique< semnet_graph >();
		sub->impl = semnet::top_n_subgraph( g->impl, freq->impl, n );
		*out = sub.release();
	} );
}

semnet_status semnet_graph_rank_by_frequency( const semnet_graph * g, const semnet_freq * freq, size_t * out_ids ) {
	return guarded( [ & ] {
		require( g != nullptr && freq != nullptr && out_ids != nullptr, "null argument" );
		const auto ranked = semnet::rank_by_frequency( g->impl, freq->impl );
		for( size_t i = 0; i < ranked.size(); ++i ) {
			out_ids[ i ] = g->impl.id( ranked[ i ] );
		}
	} );
}

semnet_status semnet_centrality( const semnet_graph * g, semnet_measure measure, double tolerance,
	size_t max_iterations, double * out_values ) {
	return guarded( [ & ] {
		require( g != nullptr && out_values != nullptr, "null argument" );
		semnet::CentralityScores scores;
		switch( measure ) {
			case SEMNET_DEGREE: scores = semnet::degree_centrality( g->impl, semnet::Measure::Degree ); break;
			case SEMNET_IN_DEGREE: scores = semnet::degree_centrality( g->impl, semnet::Measure::InDegree ); break;
			case SEMNET_OUT_DEGREE: scores = semnet::degree_centrality( g->impl, semnet::Measure::OutDegree ); break;
			case SEMNET_BETWEENNESS: scores = semnet::betweenness( g->impl ); break;
			case SEMNET_CLOSENESS: scores = semnet::closeness( g->impl ); break;
			case SEMNET_EIGENVECTOR: {
				semnet::EigenvectorOptions opts;
				if( tolerance > 0.0 ) {
					opts.tolerance = tolerance;
				}
				if( max_iterations > 0 ) {
					opts.max_iterations = max_iterations;
				}
				scores = semnet::eigenvector( g->impl, opts );
				break;
			}
			default:
				throw semnet::Error( semnet::ErrorCode::InvalidArgument, "unknown centrality measure" );
		}
		std::copy( scores.values.begin(), scores.values.end(), out_values );
	} );
}

semnet_status semnet_freq_create( semnet_freq ** out ) {
	return guarded( [ & ] {
		require( out != nullptr, "null output handle" );
		*out = new semnet_freq{};
	} );
}

void semnet_freq_destroy( semnet_freq * f ) {
	delete f;
}

semnet_status semnet_freq_add( semnet_freq * f, const char * label, uint64_t count ) {
	return guarded( [ & ] {
		require( f != nullptr && label != nullptr, "null argument" );
		f->impl.add( label, count );
	} );
}

uint64_t semnet_freq_get( const semnet_freq * f, const char * label ) {
	if( !f || !label ) {
		return 0;
	}
	return f->impl.get( label );
}

size_t semnet_freq_size( const semnet_freq * f ) {
	return f ? f->impl.size() : 0;
}

semnet_status semnet_freq_merge_sum( semnet_freq * dst, const semnet_freq * src ) {
	return guarded( [ & ] {
		require( dst != nullptr && src != nullptr, "null argument" );
		dst->impl.merge_sum( src->impl );
	} );
}

semnet_status semnet_freq_read( const char * path, semnet_freq ** out ) {
	return guarded( [ & ] {
		require( path != nullptr && out != nullptr, "null argument" );
		auto f = std::make_unique< semnet_freq >();
		f->impl = semnet::read_frequency_csv( std::filesystem::path( path ) );
		*out = f.release();
	} );
}

semnet_status semnet_freq_write( const semnet_freq * f, const char * path ) {
	return guarded( [ & ] {
		require( f != nullptr && path != nullptr, "null argument" );
		semnet::write_frequency_csv( std::filesystem::path( path ), f->impl );
	} );
}

semnet_status semnet_corpus_build( const char * token_path, size_t window, semnet_fuse_rule rule,
	semnet_graph ** out_graph, semnet_freq ** out_freq ) {
	return guarded( [ & ] {
		require( token_path != nullptr && out_graph != nullptr && out_freq != nullptr, "null argument" );
		require( window >= 1, "co-occurrence window must be at least 1" );
		const auto docs = semnet::read_token_file( token_path );
		std::vector< semnet::DocumentStream > nouns;
		nouns.reserve( docs.size() );
		for( const auto & d : docs ) {
			nouns.push_back( semnet::filter_nouns( d ) );
		}
		auto g = std::make_unique< semnet_graph >();
		auto f = std::make_unique< semnet_freq >();
		g->impl = semnet::build_book_network( nouns, window, to_rule( rule ) );
		f->impl = semnet::frequency_table( nouns );
		*out_graph = g.release();
		*out_freq = f.release();
	} );
}

semnet_status semnet_affinity_compute( const semnet_graph * g, semnet_affinity_kind kind, double alpha,
	semnet_affinity ** out ) {
	return guarded( [ & ] {
		require( g != nullptr && out != nullptr, "null argument" );
		auto a = std::make_unique< semnet_affinity >();
		a->impl = semnet::compute_affinity( g->impl, to_kind( kind ), alpha );
		*out = a.release();
	} );
}

void semnet_affinity_destroy( semnet_affinity * a ) {
	delete a;
}

size_t semnet_affinity_size( const semnet_affinity * a ) {
	return a ? a->impl.size() : 0;
}

semnet_status semnet_affinity_get( const semnet_affinity * a, size_t source, size_t target, double * out ) {
	return guarded( [ & ] {
		require( a != nullptr && out != nullptr, "null argument" );
		if( source >= a->impl.size() || target >= a->impl.size() ) {
			throw semnet::Error( semnet::ErrorCode::NotFound, "affinity index out of range" );
		}
		*out = a->impl( source, target );
	} );
}

semnet_status semnet_affinity_convex( const semnet_affinity * a, const semnet_affinity * b, double alpha,
	semnet_affinity ** out ) {
	return guarded( [ & ] {
		require( a != nullptr && b != nullptr && out != nullptr, "null argument" );
		auto r = std::make_unique< semnet_affinity >();
		r->impl = semnet::convex_combine( a->impl, b->impl, alpha );
		*out = r.release();
	} );
}

semnet_status semnet_affinity_tnorm( const semnet_affinity * const * matrices, size_t count, semnet_tnorm norm,
	semnet_affinity ** out ) {
	return guarded( [ & ] {
		require( matrices != nullptr && out != nullptr, "null argument" );
		std::vector< semnet::AffinityMatrix > inputs;
		inputs.reserve( count );
		for( size_t i = 0; i < count; ++i ) {
			require( matrices[ i ] != nullptr, "null matrix in t-norm input" );
			inputs.push_back( matrices[ i ]->impl );
		}
		semnet::TNorm t;
		switch( norm ) {
			case SEMNET_TNORM_MINIMUM: t = semnet::TNorm::Minimum; break;
			case SEMNET_TNORM_PRODUCT: t = semnet::TNorm::Product; break;
			case SEMNET_TNORM_LUKASIEWICZ: t = semnet::TNorm::Lukasiewicz; break;
			default: throw semnet::Error( semnet::ErrorCode::InvalidArgument, "unknown t-norm" );
		}
		auto r = std::make_unique< semnet_affinity >();
		r->impl = semnet::tnorm_combine( inputs, t );
		*out = r.release();
	} );
}

semnet_status semnet_affinity_write( const semnet_graph * g, const semnet_affinity * a, const char * path ) {
	return guarded( [ & ] {
		require( g != nullptr && a != nullptr && path != nullptr, "null argument" );
		std::ostringstream buf;
		semnet::write_affinity_tsv( buf, g->impl, a->impl );
		semnet::write_file_atomic( path, buf.str() );
	} );
}

semnet_status semnet_semantic_values( const semnet_graph * g, const semnet_affinity * a, const semnet_freq * freq,
	double * out_intrinsic, double * out_extrinsic, double * out_semantic ) {
	return guarded( [ & ] {
		require( g != nullptr && a != nullptr && freq != nullptr, "null argument" );
		const auto s = semnet::semantic_value( g->impl, a->impl, freq->impl );
		if( out_intrinsic ) std::copy( s.intrinsic.begin(), s.intrinsic.end(), out_intrinsic );
		if( out_extrinsic ) std::copy( s.extrinsic.begin(), s.extrinsic.end(), out_extrinsic );
		if( out_semantic ) std::copy( s.semantic.begin(), s.semantic.end(), out_semantic );
	} );
}

semnet_status semnet_semantic_write( const semnet_graph * g, const semnet_affinity * a, const semnet_freq * freq,
	const char * path ) {
	return guarded( [ & ] {
		require( g != nullptr && a != nullptr && freq != nullptr && path != nullptr, "null argument" );
		const auto s = semnet::semantic_value( g->impl, a->impl, freq->impl );
		std::ostringstream buf;
		semnet::write_scores_csv( buf, g->impl, s );
		semnet::write_file_atomic( path, buf.str() );
	} );
}

semnet_status semnet_pipe_compare( const semnet_graph * g, const semnet_affinity * a, const double * semantic,
	size_t x, size_t y, double epsilon, semnet_pipe_result * out ) {
	return guarded( [ & ] {
		require( g != nullptr && a != nullptr && semantic != nullptr && out != nullptr, "null argument" );
		semnet::PipeOptions opts;
		if( epsilon > 0.0 ) {
			opts.epsilon = epsilon;
		}
		const auto r = semnet::pipe_comparison( g->impl, a->impl, scores_from( g->impl, semantic ), x, y, opts );
		semnet_pipe_result res{};
		res.delivered = r.delivered;
		res.affinity = r.affinity;
		res.used_count = r.used_affinities.size();
		double sum = 0.0;
		for( double v : r.used_affinities ) {
			sum += v;
		}
		res.used_mean = r.used_affinities.empty() ? 0.0 : sum / static_cast< double >( r.used_affinities.size() );
		res.path_count = r.paths.size();
		res.iterations = r.iterations;
		res.hit_iteration_cap = r.hit_iteration_cap ? 1 : 0;
		res.final_liquid = r.final_liquid;
		res.min_capacity = r.final_capacity.empty() ? 0.0 :
			*std::min_element( r.final_capacity.begin(), r.final_capacity.end() );
		*out = res;
	} );
}

semnet_status semnet_semantic_affinity_matrix( const semnet_graph * g, const semnet_affinity * a,
	const double * semantic, const size_t * nodes, size_t count, double epsilon, double * out ) {
	return guarded( [ & ] {
		require( g != nullptr && a != nullptr && semantic != nullptr && out != nullptr, "null argument" );
		require( count == 0 || nodes != nullptr, "null node list" );
		semnet::PipeOptions opts;
		if( epsilon > 0.0 ) {
			opts.epsilon = epsilon;
		}
		const std::vector< semnet::NodeId > ids( nodes, nodes + count );
		const auto table =
			semnet::semantic_affinity_matrix( g->impl, a->impl, scores_from( g->impl, semantic ), ids, opts );
		std::copy( table.values.begin(), table.values.end(), out );
	} );
}

} // extern "C"
