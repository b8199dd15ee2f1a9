#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fuzzyrel/dataset.hpp"
#include "fuzzyrel/partition.hpp"
#include "fuzzyrel/relation.hpp"
#include "fuzzyrel/text_ingest.hpp"

namespace fuzzyrel {

/// Shortest representation that parses back to exactly the same double.
std::string format_double(double value);

/// Display rounding for human-readable text output: two decimals.
std::string display_double(double value);

// Matrices. JSON ({"labels": [...], "values": [[...]]}) and CSV carry full
// precision; the text table rounds to 2 decimals for display.
std::string matrix_to_json(const FuzzyRelation& m);
std::string matrix_to_csv(const FuzzyRelation& m);
std::string matrix_to_text(const FuzzyRelation& m);
FuzzyRelation matrix_from_json(const std::string& text);

// Keyword table.
std::string keywords_to_json(const KeywordTable& t);
std::string keywords_to_csv(const KeywordTable& t);
std::string keywords_to_text(const KeywordTable& t);

// Occurrence table. CSV header is exactly "label,keyword_id,doc_id".
std::string occurrences_to_csv(const OccurrenceTable& t);
std::string occurrences_to_json(const OccurrenceTable& t);
std::string occurrences_to_text(const OccurrenceTable& t);

// Alpha-cut schedule.
std::string schedule_to_json(const AlphaCutSchedule& s);
std::string schedule_to_text(const AlphaCutSchedule& s);

// Single partition.
std::string partition_to_json(const Partition& p);
std::string partition_to_text(const Partition& p);

// Dendrogram: indented text tree, DOT digraph, nested JSON
// ({"height": h, "children": [...]} with {"leaf": label} at the leaves).
std::string dendrogram_to_text(const Dendrogram& d);
std::string dendrogram_to_dot(const Dendrogram& d);
std::string dendrogram_to_json(const Dendrogram& d);

/// Point-mode input: CSV with a mandatory header row; an optional first
/// column named "label" carries point labels, every other column is a real
/// coordinate. Unlabelled files get labels x1..xn.
Dataset parse_points_csv(std::istream& in, const std::string& source_name);
Dataset load_points_csv(const std::filesystem::path& path);

}  // namespace fuzzyrel
