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

#ifndef SEMNET_ERROR_HPP
#define SEMNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace semnet {

enum class ErrorCode {
	InvalidArgument,
	NotFound,
	Io,
	Parse,
	NoConvergence,
	Misaligned,
};

/// Single exception type thrown by the core; the C API maps `code()` onto
/// its status enum.
class Error : public std::runtime_error {
public:
	Error( ErrorCode code, const std::string & what ) :
		std::runtime_error( what ), code_( code ) {}

	ErrorCode code() const noexcept { return code_; }

private:
	ErrorCode code_;
};

} // namespace semnet

#endif
