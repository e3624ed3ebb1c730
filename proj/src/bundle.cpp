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

#include "zstar/bundle.hpp"

#include <fstream>
#include <sstream>

#include "zstar/errors.hpp"

namespace zstar {

const Morphism& StructureBundle::part(std::string_view key) const {
  for (const auto& [k, m] : parts) {
    if (k == key) return m;
  }
  throw DomainError("bundle '" + name + "' has no part '" + std::string(key) + "'");
}

namespace {

void expect_kind(const StructureBundle& b, std::string_view kind) {
  if (b.kind != kind) {
    throw DomainError("bundle '" + b.name + "' is a " + b.kind + ", expected " + std::string(kind));
  }
}

void append(StructureBundle& b, const std::string& prefix, const Frobenius& f) {
  b.parts.emplace_back(prefix + "product", f.monoid.mu);
  b.parts.emplace_back(prefix + "unit", f.monoid.eta);
  b.parts.emplace_back(prefix + "coproduct", f.comonoid.delta);
  b.parts.emplace_back(prefix + "counit", f.comonoid.epsilon);
}

Frobenius frobenius_parts(const StructureBundle& b, const std::string& prefix) {
  return Frobenius{Monoid(b.part(prefix + "product"), b.part(prefix + "unit")),
                   Comonoid(b.part(prefix + "coproduct"), b.part(prefix + "counit"))};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw DomainError("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

StructureBundle to_bundle(std::string name, const Monoid& m) {
  return {"monoid", std::move(name), {{"product", m.mu}, {"unit", m.eta}}};
}

StructureBundle to_bundle(std::string name, const Comonoid& c) {
  return {"comonoid", std::move(name), {{"coproduct", c.delta}, {"counit", c.epsilon}}};
}

StructureBundle to_bundle(std::string name, const Frobenius& f) {
  StructureBundle b{"frobenius", std::move(name), {}};
  append(b, "", f);
  return b;
}

StructureBundle to_bundle(std::string name, const CompactStructure& c) {
  return {"compact", std::move(name), {{"cup", c.cup}, {"cap", c.cap}}};
}

StructureBundle to_bundle(std::string name, const ZStarAlgebra& z) {
  StructureBundle b{"zstar", std::move(name), {}};
  append(b, "white.", z.white());
  append(b, "black.", z.black());
  b.parts.emplace_back("dualizer", z.dualizer());
  return b;
}

Monoid monoid_from_bundle(const StructureBundle& b) {
  expect_kind(b, "monoid");
  return Monoid(b.part("product"), b.part("unit"));
}

Comonoid comonoid_from_bundle(const StructureBundle& b) {
  expect_kind(b, "comonoid");
  return Comonoid(b.part("coproduct"), b.part("counit"));
}

Frobenius frobenius_from_bundle(const StructureBundle& b) {
  expect_kind(b, "frobenius");
  return frobenius_parts(b, "");
}

CompactStructure compact_from_bundle(const StructureBundle& b) {
  expect_kind(b, "compact");
  return CompactStructure(b.part("cup"), b.part("cap"));
}

ZStarAlgebra zstar_from_bundle(const StructureBundle& b) {
  expect_kind(b, "zstar");
  return ZStarAlgebra(frobenius_parts(b, "white."), frobenius_parts(b, "black."));
}

std::string manifest_text(const StructureBundle& b) {
  std::ostringstream out;
  out << "bundle " << b.kind << " " << b.name << "\n";
  for (const auto& [key, m] : b.parts) out << "part " << key << " " << b.name << "." << key << ".mat\n";
  return out.str();
}

std::filesystem::path write_bundle(const std::filesystem::path& dir, const StructureBundle& b) {
  std::filesystem::create_directories(dir);
  for (const auto& [key, m] : b.parts) {
    std::ofstream f(dir / (b.name + "." + key + ".mat"));
    f << m.to_text();
    if (!f) throw DomainError("cannot write matrix file for part " + key);
  }
  auto manifest = dir / (b.name + ".manifest");
  std::ofstream f(manifest);
  f << manifest_text(b);
  if (!f) throw DomainError("cannot write " + manifest.string());
  return manifest;
}

StructureBundle read_bundle(const std::filesystem::path& manifest) {
  std::istringstream in(read_file(manifest));
  StructureBundle b;
  std::string line;
  std::size_t n = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++n;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "bundle") {
      if (header || !(ls >> b.kind >> b.name)) throw ParseError(n, "malformed bundle header");
      header = true;
    } else if (word == "part") {
      std::string key, file;
      if (!header) throw ParseError(n, "part before bundle header");
      if (!(ls >> key >> file)) throw ParseError(n, "expected 'part <key> <file>'");
      auto path = manifest.parent_path() / file;
      try {
        b.parts.emplace_back(key, Morphism::parse(read_file(path)));
      } catch (const ParseError& e) {
        throw ParseError(n, file + ": " + e.what());
      }
    } else {
      throw ParseError(n, "unknown directive '" + word + "'");
    }
  }
  if (!header) throw ParseError(0, "missing bundle header");
  return b;
}

}  // namespace zstar
