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

/*
 * C interface of the semnet shared library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns a semnet_status;
 * on failure semnet_last_error() describes the problem. The message is
 * thread-local and stays valid until the next failing call on that thread.
 *
 * Node ids are dense 0-based indices into a graph. Arrays passed as outputs
 * must hold semnet_graph_node_count() elements unless stated otherwise.
 */

#ifndef SEMNET_H
#define SEMNET_H

#include <stddef.h>
#include <stdint.h>

#if defined( _WIN32 )
#  if defined( SEMNET_BUILDING_LIBRARY )
#    define SEMNET_API __declspec( dllexport )
#  else
#    define SEMNET_API __declspec( dllimport )
#  endif
#else
#  define SEMNET_API __attribute__( ( visibility( "default" ) ) )
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum semnet_status {
	SEMNET_OK = 0,
	SEMNET_ERR_INVALID_ARGUMENT = 1,
	SEMNET_ERR_NOT_FOUND = 2,
	SEMNET_ERR_IO = 3,
	SEMNET_ERR_PARSE = 4,
	SEMNET_ERR_NO_CONVERGENCE = 5,
	SEMNET_ERR_MISALIGNED = 6,
	SEMNET_ERR_INTERNAL = 7
} semnet_status;

typedef enum semnet_measure {
	SEMNET_DEGREE = 0,
	SEMNET_IN_DEGREE = 1,
	SEMNET_OUT_DEGREE = 2,
	SEMNET_BETWEENNESS = 3,
	SEMNET_CLOSENESS = 4,
	SEMNET_EIGENVECTOR = 5
} semnet_measure;

typedef enum semnet_affinity_kind {
	SEMNET_AFFINITY_BEST_FRIEND = 0,
	SEMNET_AFFINITY_BEST_COMMON_FRIEND = 1,
	SEMNET_AFFINITY_MACHIAVELLI = 2,
	SEMNET_AFFINITY_MIXED = 3
} semnet_affinity_kind;

typedef enum semnet_tnorm {
	SEMNET_TNORM_MINIMUM = 0,
	SEMNET_TNORM_PRODUCT = 1,
	SEMNET_TNORM_LUKASIEWICZ = 2
} semnet_tnorm;

typedef enum semnet_fuse_rule {
	SEMNET_FUSE_MAX = 0,
	SEMNET_FUSE_SUM = 1
} semnet_fuse_rule;

typedef struct semnet_graph semnet_graph;
typedef struct semnet_freq semnet_freq;
typedef struct semnet_affinity semnet_affinity;

SEMNET_API const char * semnet_version( void );
SEMNET_API const char * semnet_last_error( void );
SEMNET_API const char * semnet_status_string( semnet_status status );

/* ---- graphs ---------------------------------------------------------- */

SEMNET_API semnet_status semnet_graph_create( semnet_graph ** out );
SEMNET_API void semnet_graph_destroy( semnet_graph * g );

SEMNET_API semnet_status semnet_graph_add_node( semnet_graph * g, const char * label, size_t * out_id );
/* Creates missing nodes; replaces the weight of an existing edge. */
SEMNET_API semnet_status semnet_graph_add_edge( semnet_graph * g, const char * source, const char * target,
	double weight );
SEMNET_API semnet_status semnet_graph_find( const semnet_graph * g, const char * label, size_t * out_id );
SEMNET_API size_t semnet_graph_node_count( const semnet_graph * g );
SEMNET_API size_t semnet_graph_edge_count( const semnet_graph * g );
/* NULL when the id is out of range. Owned by the graph. */
SEMNET_API const char * semnet_graph_label( const semnet_graph * g, size_t id );
SEMNET_API semnet_status semnet_graph_weight( const semnet_graph * g, size_t source, size_t target, double * out );
SEMNET_API semnet_status semnet_graph_degree( const semnet_graph * g, size_t id, size_t * in, size_t * out,
	size_t * total );

SEMNET_API semnet_status semnet_graph_read( const char * path, semnet_graph ** out );
SEMNET_API semnet_status semnet_graph_write( const semnet_graph * g, const char * path );

SEMNET_API semnet_status semnet_graph_fuse( const semnet_graph * const * graphs, size_t count, semnet_fuse_rule rule,
	semnet_graph ** out );
SEMNET_API semnet_status semnet_graph_top_n( const semnet_graph * g, const semnet_freq * freq, size_t n,
	semnet_graph ** out );
/* Writes node ids ranked by frequency (descending, ties by label). */
SEMNET_API semnet_status semnet_graph_rank_by_frequency( const semnet_graph * g, const semnet_freq * freq,
	size_t * out_ids );

/* tolerance <= 0 or max_iterations == 0 select the defaults (1e-10, 10000). */
SEMNET_API semnet_status semnet_centrality( const semnet_graph * g, semnet_measure measure, double tolerance,
	size_t max_iterations, double * out_values );

/* ---- frequency tables ------------------------------------------------ */

SEMNET_API semnet_status semnet_freq_create( semnet_freq ** out );
SEMNET_API void semnet_freq_destroy( semnet_freq * f );
SEMNET_API semnet_status semnet_freq_add( semnet_freq * f, const char * label, uint64_t count );
SEMNET_API uint64_t semnet_freq_get( const semnet_freq * f, const char * label );
SEMNET_API size_t semnet_freq_size( const semnet_freq * f );
/* Adds every count of src into dst. */
SEMNET_API semnet_status semnet_freq_merge_sum( semnet_freq * dst, const semnet_freq * src );
SEMNET_API semnet_status semnet_freq_read( const char * path, semnet_freq ** out );
SEMNET_API semnet_status semnet_freq_write( const semnet_freq * f, const char * path );

/* ---- corpus ---------------------------------------------------------- */

/* Reads a .tok.tsv file, keeps nouns and builds the fused book network and
 * its frequency table. */
SEMNET_API semnet_status semnet_corpus_build( const char * token_path, size_t window, semnet_fuse_rule rule,
	semnet_graph ** out_graph, semnet_freq ** out_freq );

/* ---- affinities ------------------------------------------------------ */

/* alpha is the best-friend weight of the mixed affinity; ignored otherwise. */
SEMNET_API semnet_status semnet_affinity_compute( const semnet_graph * g, semnet_affinity_kind kind, double alpha,
	semnet_affinity ** out );
SEMNET_API void semnet_affinity_destroy( semnet_affinity * a );
SEMNET_API size_t semnet_affinity_size( const semnet_affinity * a );
SEMNET_API semnet_status semnet_affinity_get( const semnet_affinity * a, size_t source, size_t target,
	double * out );
SEMNET_API semnet_status semnet_affinity_convex( const semnet_affinity * a, const semnet_affinity * b,
	double alpha, semnet_affinity ** out );
SEMNET_API semnet_status semnet_affinity_tnorm( const semnet_affinity * const * matrices, size_t count,
	semnet_tnorm norm, semnet_affinity ** out );
/* Nonzero entries in edge-list format. */
SEMNET_API semnet_status semnet_affinity_write( const semnet_graph * g, const semnet_affinity * a,
	const char * path );

/* ---- semantic values ------------------------------------------------- */

/* Any of the three output arrays may be NULL. */
SEMNET_API semnet_status semnet_semantic_values( const semnet_graph * g, const semnet_affinity * a,
	const semnet_freq * freq, double * out_intrinsic, double * out_extrinsic, double * out_semantic );
/* CSV node,I,E,S in lexicographic node order. */
SEMNET_API semnet_status semnet_semantic_write( const semnet_graph * g, const semnet_affinity * a,
	const semnet_freq * freq, const char * path );

/* ---- Pipe ------------------------------------------------------------ */

typedef struct semnet_pipe_result {
	double delivered;
	double affinity;
	/* Number and mean of the affinities of hops that carried liquid. */
	size_t used_count;
	double used_mean;
	size_t path_count;
	size_t iterations;
	int hit_iteration_cap;
	double final_liquid;
	/* Smallest remaining node capacity after the run. */
	double min_capacity;
} semnet_pipe_result;

/* semantic holds S per node id. epsilon <= 0 selects 1e-9. */
SEMNET_API semnet_status semnet_pipe_compare( const semnet_graph * g, const semnet_affinity * a,
	const double * semantic, size_t x, size_t y, double epsilon, semnet_pipe_result * out );
/* out holds count * count values, row-major, diagonal 1. */
SEMNET_API semnet_status semnet_semantic_affinity_matrix( const semnet_graph * g, const semnet_affinity * a,
	const double * semantic, const size_t * nodes, size_t count, double epsilon, double * out );

#ifdef __cplusplus
}
#endif

#endif
