// Copyright 2026 The ppr Authors. All Rights Reserved.
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

#ifndef PPR_MANIFEST_HPP
#define PPR_MANIFEST_HPP

#include <filesystem>
#include <map>
#include <string>

namespace ppr {

// Flat key=value record of a fully resolved run; re-running from a manifest
// plus the same inputs reproduces the outputs byte for byte. Keys are kept
// sorted so the serialization is deterministic.
using Manifest = std::map<std::string, std::string>;

void write_manifest(const Manifest& manifest, const std::filesystem::path& path);
Manifest read_manifest(const std::filesystem::path& path);

}  // namespace ppr

#endif  // PPR_MANIFEST_HPP
