#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "alignrepair/alignment.hpp"
#include "alignrepair/ontology.hpp"

namespace alignrepair {

/// Line format: `CLASS <id>`, `SUBCLASS <child> <parent>`, `DISJOINT <a> <b>`.
/// `#` starts a comment, blank lines are skipped. Syntax errors report the
/// line number; semantic errors come from build_ontology.
Ontology parse_ontology_file(std::string_view text, Side side);

/// Canonical text: classes, then subclass edges, then disjoint pairs, each
/// sorted.
std::string write_ontology_file(const Ontology& ontology);

/// Tab-separated `source target relation [confidence]` with relation one of
/// `=`, `<`, `>`. Missing confidence means 1.0.
Alignment parse_alignment_tsv(std::string_view text);

/// Canonical order, confidence printed with at most six decimals and at least
/// one.
std::string write_alignment_tsv(const Alignment& alignment);

std::string format_confidence(double confidence);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace alignrepair
