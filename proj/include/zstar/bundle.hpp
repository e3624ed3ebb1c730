// Copyright 2026 The zstar Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zstar/structures.hpp"

namespace zstar {

// A named collection of morphisms: Monoid(mu, eta), Comonoid(delta, epsilon),
// Frobenius, CompactStructure(cup, cap) or ZStarAlgebra.
struct StructureBundle {
  std::string kind;
  std::string name;
  std::vector<std::pair<std::string, Morphism>> parts;

  const Morphism& part(std::string_view key) const;
  friend bool operator==(const StructureBundle&, const StructureBundle&) = default;
};

StructureBundle to_bundle(std::string name, const Monoid& m);
StructureBundle to_bundle(std::string name, const Comonoid& c);
StructureBundle to_bundle(std::string name, const Frobenius& f);
StructureBundle to_bundle(std::string name, const CompactStructure& c);
StructureBundle to_bundle(std::string name, const ZStarAlgebra& z);

Monoid monoid_from_bundle(const StructureBundle& b);
Comonoid comonoid_from_bundle(const StructureBundle& b);
Frobenius frobenius_from_bundle(const StructureBundle& b);
CompactStructure compact_from_bundle(const StructureBundle& b);
ZStarAlgebra zstar_from_bundle(const StructureBundle& b);

// Manifest text: "bundle <kind> <name>" followed by "part <key> <file>" lines.
std::string manifest_text(const StructureBundle& b);

// Writes <dir>/<name>.manifest and one matrix file per part; returns the manifest path.
std::filesystem::path write_bundle(const std::filesystem::path& dir, const StructureBundle& b);
// Matrix file names in the manifest are resolved relative to the manifest's directory.
StructureBundle read_bundle(const std::filesystem::path& manifest);

}  // namespace zstar
