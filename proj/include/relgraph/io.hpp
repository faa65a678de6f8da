#pragma once

// Text formats.
//
//   .rel    line 1: n; then one "u v" arc per line (0-indexed). '#' starts a
//           comment, blank lines are ignored, duplicate arcs collapse. The
//           writer emits sorted arcs.
//   .grp    line 1: n; then n rows of n entries, row g listing g*h for
//           h = 0..n-1. Element 0 must be the identity.
//   subset  one element index per line.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "relgraph/groups.hpp"
#include "relgraph/relation.hpp"

namespace relgraph::io {

// Parse failures throw ParseError with the offending line.
Relation read_relation(std::istream& in);
Relation read_relation_file(const std::filesystem::path& path);
void write_relation(std::ostream& out, const Relation& rel);
std::string format_relation(const Relation& rel);
void write_relation_file(const std::filesystem::path& path, const Relation& rel);

FiniteGroup read_group(std::istream& in);
FiniteGroup read_group_file(const std::filesystem::path& path);
void write_group(std::ostream& out, const FiniteGroup& group);
void write_group_file(const std::filesystem::path& path, const FiniteGroup& group);

std::vector<Element> read_subset(std::istream& in);
std::vector<Element> read_subset_file(const std::filesystem::path& path);
void write_subset(std::ostream& out, const std::vector<Element>& subset);

}  // namespace relgraph::io
