#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace fuzzyrel {

enum class InputMode { docs, points };
enum class VectorMode { occurrence, tf };
enum class OutputFormat { text, json, dot, csv };
enum class DumpKind { keywords, occurrences, relation, closure, schedule, dendrogram };

struct PipelineConfig {
    std::filesystem::path input_path;
    InputMode input_mode = InputMode::docs;
    VectorMode vector_mode = VectorMode::occurrence;
    double q = 2.0;
    int min_df = 1;
    std::optional<std::filesystem::path> stopwords_path;
    std::optional<double> alpha;  // single-cut query: print just that partition
    OutputFormat output_format = OutputFormat::text;
    std::vector<DumpKind> dump = {DumpKind::schedule, DumpKind::dendrogram};
    std::optional<std::filesystem::path> out_path;
};

/// Runs ingest -> compatibility relation -> transitive closure -> alpha-cut
/// schedule -> dendrogram and writes the requested dumps. Output is
/// byte-for-byte deterministic for identical inputs and config. Returns 0 on
/// success, 2 on configuration errors, 3 on data errors; error text names the
/// failing stage on `err`.
int run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fuzzyrel
