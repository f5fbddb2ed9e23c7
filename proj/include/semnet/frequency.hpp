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

#ifndef SEMNET_FREQUENCY_HPP
#define SEMNET_FREQUENCY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace semnet {

/// Occurrence count per label. Labels that were never counted read as 0.
class FrequencyTable {
public:
	using Count = std::uint64_t;
	using Storage = std::map< std::string, Count, std::less<> >;

	void add( std::string_view label, Count n = 1 );
	void set( std::string_view label, Count n );
	Count get( std::string_view label ) const;

	std::size_t size() const noexcept { return counts_.size(); }
	bool empty() const noexcept { return counts_.empty(); }
	Count total() const;

	/// Entries in lexicographic label order.
	const Storage & entries() const noexcept { return counts_; }

	/// Adds every count of `other` into this table.
	void merge_sum( const FrequencyTable & other );

	bool operator==( const FrequencyTable & ) const = default;

private:
	Storage counts_;
};

} // namespace semnet

#endif
