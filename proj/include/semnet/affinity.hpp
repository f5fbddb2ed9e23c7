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
 * Pairwise affinity functions over a weighted directed graph and the fuzzy
 * operators used to combine them.
 */

#ifndef SEMNET_AFFINITY_HPP
#define SEMNET_AFFINITY_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "semnet/graph.hpp"

namespace semnet {

/**
 * Dense square matrix of affinities in [0,1], indexed by the node ids of the
 * graph it was computed from. Row = source, column = target. The diagonal is
 * always 0.
 */
class AffinityMatrix {
public:
	AffinityMatrix() = default;
	explicit AffinityMatrix( std::size_t n ) : n_( n ), values_( n * n, 0.0 ) {}

	std::size_t size() const noexcept { return n_; }

	double operator()( NodeId source, NodeId target ) const { return values_[ source * n_ + target ]; }
	double & operator()( NodeId source, NodeId target ) { return values_[ source * n_ + target ]; }

	std::span< const double > row( NodeId source ) const {
		return std::span< const double >( values_ ).subspan( source * n_, n_ );
	}

	/// Largest entry of a row, 0 for an all-zero row.
	double row_max( NodeId source ) const;

	std::span< const double > data() const noexcept { return values_; }

	bool operator==( const AffinityMatrix & ) const = default;

private:
	std::size_t n_ = 0;
	std::vector< double > values_;
};

enum class AffinityKind {
	BestFriend,
	BestCommonFriend,
	Machiavelli,
	Mixed,
};

/// Parses "bf", "bcf", "mach" or "mix".
AffinityKind parse_affinity_kind( std::string_view name );
const char * to_string( AffinityKind kind ) noexcept;

/// F(x,y) = C(x,y) / sum_a C(x,a). Rows without out-weight are zero.
AffinityMatrix best_friend( const Graph & g );

/// F(x,y) = max_a min(C(x,a), C(y,a)) / sum_a C(x,a).
AffinityMatrix best_common_friend( const Graph & g );

/// Aggregate degree mass of the out-neighbourhood: sum of total degree D(z)
/// over every z with C(a,z) > 0.
std::vector< double > neighbourhood_degree_mass( const Graph & g );

/// F(x,y) = 1 - |I_x - I_y| / max(I_x, I_y), with 0/0 read as 1.
AffinityMatrix machiavelli( const Graph & g );

/// Entry-wise alpha * a + (1 - alpha) * b.
AffinityMatrix convex_combine( const AffinityMatrix & a, const AffinityMatrix & b, double alpha );

enum class TNorm {
	Minimum,
	Product,
	Lukasiewicz,
};

double apply_tnorm( TNorm norm, double a, double b ) noexcept;

/// Entry-wise left fold of `norm` over at least two matrices.
AffinityMatrix tnorm_combine( std::span< const AffinityMatrix > matrices, TNorm norm );

/**
 * alpha * best friend + (1 - alpha) * Machiavelli, with every entry forced to
 * 0 where the best friend affinity is 0. The default alpha of 0.9 is the
 * configuration used for semantic values and Pipe routing.
 */
AffinityMatrix mixed_affinity( const Graph & g, double alpha = 0.9 );

/// Dispatch on kind; `alpha` only affects AffinityKind::Mixed.
AffinityMatrix compute_affinity( const Graph & g, AffinityKind kind, double alpha = 0.9 );

} // namespace semnet

#endif
