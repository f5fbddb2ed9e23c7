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

#include "semnet/frequency.hpp"

namespace semnet {

void FrequencyTable::add( std::string_view label, Count n ) {
	auto it = counts_.find( label );
	if( it == counts_.end() ) {
		counts_.emplace( std::string( label ), n );
	} else {
		it->second += n;
	}
}

void FrequencyTable::set( std::string_view label, Count n ) {
	auto it = counts_.find( label );
	if( it == counts_.end() ) {
		counts_.emplace( std::string( label ), n );
	} else {
		it->second = n;
	}
}

FrequencyTable::Count FrequencyTable::get( std::string_view label ) const {
	auto it = counts_.find( label );
	return it == counts_.end() ? 0 : it->second;
}

FrequencyTable::Count FrequencyTable::total() const {
	Count sum = 0;
	for( const auto & [ label, n ] : counts_ ) {
		sum += n;
	}
	return sum;
}

void FrequencyTable::merge_sum( const FrequencyTable & other ) {
	for( const auto & [ label, n ] : other.counts_ ) {
		add( label, n );
	}
}

} // namespace semnet
