// Copyright 2026 The Unano Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNANO_IO_HPP
#define UNANO_IO_HPP

#include <filesystem>
#include <string>

namespace unano {

/// Reads a whole file; throws Error(IoError) on failure.
std::string readFile(const std::filesystem::path& path);

/// Writes via a temp file in the same directory and renames it over the
/// target, so readers never observe a half-written file.
void atomicWriteFile(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace unano

#endif  // UNANO_IO_HPP
