#include "fuzzyrel/text_ingest.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

namespace {

// Common English function words; always contains at least
// {a, the, in, on, and}. Overridable with a stop-word file.
constexpr const char* kDefaultStopWords[] = {
    "a",    "an",   "and",  "are",  "as",   "at",    "be",   "but",  "by",
    "for",  "from", "had",  "has",  "have", "he",    "her",  "his",  "if",
    "in",   "is",   "it",   "its",  "no",   "not",   "of",   "on",   "or",
    "she",  "so",   "that", "the",  "their", "they", "this", "to",   "was",
    "were", "will", "with",
};

bool is_token_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char to_lower_ascii(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

std::string lowercased(std::string_view word) {
    std::string out;
    out.reserve(word.size());
    for (unsigned char c : word) {
        out.push_back(to_lower_ascii(c));
    }
    return out;
}

// Offset of the first invalid UTF-8 byte, or nullopt for well-formed input.
std::optional<std::size_t> first_invalid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        std::size_t len = 0;
        if (b0 < 0x80) {
            i += 1;
            continue;
        } else if ((b0 & 0xE0) == 0xC0) {
            if (b0 < 0xC2) return i;  // overlong two-byte form
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            if (b0 > 0xF4) return i;  // beyond U+10FFFF
            len = 4;
        } else {
            return i;
        }
        if (i + len > s.size()) {
            return i;
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
                return i;
            }
        }
        const auto b1 = static_cast<unsigned char>(s[i + 1]);
        if (len == 3) {
            if (b0 == 0xE0 && b1 < 0xA0) return i;  // overlong
            if (b0 == 0xED && b1 > 0x9F) return i;  // surrogate range
        }
        if (len == 4) {
            if (b0 == 0xF0 && b1 < 0x90) return i;  // overlong
            if (b0 == 0xF4 && b1 > 0x8F) return i;  // beyond U+10FFFF
        }
        i += len;
    }
    return std::nullopt;
}

}  // namespace

StopWordSet::StopWordSet(const std::vector<std::string>& words) {
    for (const auto& word : words) {
        words_.insert(lowercased(word));
    }
}

StopWordSet StopWordSet::default_set() {
    StopWordSet set;
    for (const char* word : kDefaultStopWords) {
        set.words_.insert(word);
    }
    return set;
}

StopWordSet StopWordSet::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open stop-word file: " + path.string());
    }
    StopWordSet set;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            continue;
        }
        const auto end = line.find_last_not_of(" \t\r");
        set.words_.insert(lowercased(std::string_view(line).substr(begin, end - begin + 1)));
    }
    return set;
}

bool StopWordSet::contains(std::string_view word) const {
    return words_.contains(lowercased(word));
}

KeywordTable::KeywordTable(std::vector<std::string> keywords, int min_df)
    : keywords_(std::move(keywords)), min_df_(min_df) {
    for (std::size_t i = 0; i < keywords_.size(); ++i) {
        ids_.emplace(keywords_[i], static_cast<int>(i));
    }
}

std::optional<int> KeywordTable::id_of(std::string_view keyword) const {
    const auto it = ids_.find(std::string(keyword));
    return it == ids_.end() ? std::nullopt : std::optional<int>(it->second);
}

std::vector<std::string> tokenize(std::string_view raw_text, const StopWordSet& stops) {
    if (const auto bad = first_invalid_utf8(raw_text)) {
        throw data_error("undecodable input at byte " + std::to_string(*bad));
    }
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            if (!stops.contains(current)) {
                tokens.push_back(current);
            }
            current.clear();
        }
    };
    for (unsigned char c : raw_text) {
        if (is_token_char(c)) {
            current.push_back(to_lower_ascii(c));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::vector<Document> load_documents(const std::filesystem::path& dir, const StopWordSet& stops) {
    if (!std::filesystem::is_directory(dir)) {
        throw config_error("input path is not a directory: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw data_error("no input documents");
    }
    // doc_id assignment is fixed by sorting on file name.
    std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
        return a.filename().string() < b.filename().string();
    });

    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            throw data_error("cannot read document: " + file.string());
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        Document doc;
        doc.doc_id = static_cast<int>(docs.size());
        doc.name = file.filename().string();
        try {
            doc.tokens = tokenize(buffer.str(), stops);
        } catch (const data_error& e) {
            throw data_error(doc.name + ": " + e.what());
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

KeywordTable build_keyword_table(const std::vector<Document>& docs, int min_df) {
    if (min_df < 1) {
        throw config_error("min-df must be >= 1");
    }
    if (docs.empty()) {
        throw data_error("no input documents");
    }
    // Document frequency of every distinct token.
    std::unordered_map<std::string, int> df;
    for (const auto& doc : docs) {
        std::unordered_set<std::string_view> seen;
        for (const auto& token : doc.tokens) {
            if (seen.insert(token).second) {
                ++df[token];
            }
        }
    }
    // Ids in order of first occurrence across documents in doc_id order.
    std::vector<std::string> keywords;
    std::unordered_set<std::string> added;
    for (const auto& doc : docs) {
        for (const auto& token : doc.tokens) {
            if (!added.contains(token) && df.at(token) >= min_df) {
                keywords.push_back(token);
                added.insert(token);
            }
        }
    }
    if (keywords.empty()) {
        throw data_error("empty vocabulary");
    }
    return KeywordTable(std::move(keywords), min_df);
}

OccurrencePoints occurrence_points(const std::vector<Document>& docs, const KeywordTable& table) {
    OccurrencePoints out;
    for (const auto& doc : docs) {
        std::unordered_set<int> seen;
        for (const auto& token : doc.tokens) {
            const auto id = table.id_of(token);
            if (!id || !seen.insert(*id).second) {
                continue;
            }
            const auto label = "x" + std::to_string(out.table.pairs.size() + 1);
            out.table.pairs.push_back({label, *id, doc.doc_id});
            out.dataset.labels.push_back(label);
            out.dataset.points.push_back({static_cast<double>(doc.doc_id),
                                          static_cast<double>(*id)});
        }
    }
    if (out.table.pairs.empty()) {
        throw data_error("empty occurrence set");
    }
    return out;
}

Dataset tf_vectors(const std::vector<Document>& docs, const KeywordTable& table) {
    Dataset data;
    data.labels = default_labels(docs.size());
    data.points.reserve(docs.size());
    for (const auto& doc : docs) {
        std::vector<double> counts(table.size(), 0.0);
        for (const auto& token : doc.tokens) {
            if (const auto id = table.id_of(token)) {
                counts[static_cast<std::size_t>(*id)] += 1.0;
            }
        }
        data.points.push_back(std::move(counts));
    }
    return data;
}

}  // namespace fuzzyrel
