#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fuzzyrel/dataset.hpp"

namespace fuzzyrel {

/// A text unit after tokenization: 0-based id (assigned in ingest order),
/// source file name, and the lowercase tokens with stop words removed.
struct Document {
    int doc_id = 0;
    std::string name;
    std::vector<std::string> tokens;
};

/// Case-insensitive stop-word lookup over a set of lowercase words.
class StopWordSet {
public:
    StopWordSet() = default;
    explicit StopWordSet(const std::vector<std::string>& words);

    /// Embedded default list (common English function words).
    static StopWordSet default_set();

    /// One word per line; blank lines and '#' comments are skipped.
    static StopWordSet from_file(const std::filesystem::path& path);

    bool contains(std::string_view word) const;
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

/// Corpus vocabulary: keyword ids are contiguous from 0, assigned in order of
/// first occurrence across documents scanned in doc_id order. Only tokens
/// appearing in at least min_df distinct documents become keywords.
class KeywordTable {
public:
    KeywordTable() = default;
    KeywordTable(std::vector<std::string> keywords, int min_df);

    const std::vector<std::string>& keywords() const { return keywords_; }
    int min_df() const { return min_df_; }
    std::size_t size() const { return keywords_.size(); }
    std::optional<int> id_of(std::string_view keyword) const;

private:
    std::vector<std::string> keywords_;
    std::unordered_map<std::string, int> ids_;
    int min_df_ = 1;
};

struct OccurrenceEntry {
    std::string label;  // "x1".."xn" in listed order
    int keyword_id = 0;
    int doc_id = 0;
};

/// One row per distinct (keyword, document) co-occurrence; no duplicates.
struct OccurrenceTable {
    std::vector<OccurrenceEntry> pairs;
};

struct OccurrencePoints {
    OccurrenceTable table;
    Dataset dataset;  // 2-D points (doc_id, keyword_id), labels x1..xn
};

/// Maximal runs of ASCII alphanumeric characters, lowercased, in document
/// order, with stop words removed. Input must be valid UTF-8; bytes outside
/// ASCII separate tokens. Throws data_error naming the byte offset on
/// undecodable input.
std::vector<std::string> tokenize(std::string_view raw_text, const StopWordSet& stops);

/// Reads every regular file in the directory as UTF-8 text, sorted
/// lexicographically by file name to fix doc_id assignment. Throws
/// data_error("no input documents") on an empty directory.
std::vector<Document> load_documents(const std::filesystem::path& dir, const StopWordSet& stops);

/// Vocabulary of tokens with document frequency >= min_df. Throws
/// data_error("empty vocabulary") when no token qualifies.
KeywordTable build_keyword_table(const std::vector<Document>& docs, int min_df);

/// Emits one 2-D point per distinct (keyword, document) co-occurrence,
/// ordered by doc_id and then by the keyword's first-occurrence position
/// within the document. Point coordinates are (doc_id, keyword_id).
OccurrencePoints occurrence_points(const std::vector<Document>& docs, const KeywordTable& table);

/// One point per document; coordinate j is the raw count of keyword j.
Dataset tf_vectors(const std::vector<Document>& docs, const KeywordTable& table);

}  // namespace fuzzyrel
