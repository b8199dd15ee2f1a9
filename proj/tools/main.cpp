#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzyrel/pipeline.hpp"

namespace {

using fuzzyrel::DumpKind;
using fuzzyrel::InputMode;
using fuzzyrel::OutputFormat;
using fuzzyrel::PipelineConfig;
using fuzzyrel::VectorMode;

const std::map<std::string, DumpKind> kDumpNames = {
    {"keywords", DumpKind::keywords},       {"occurrences", DumpKind::occurrences},
    {"relation", DumpKind::relation},       {"closure", DumpKind::closure},
    {"schedule", DumpKind::schedule},       {"dendrogram", DumpKind::dendrogram},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzyrel: hierarchical clustering of documents and points via "
                 "fuzzy equivalence relations"};

    std::string input;
    std::string mode = "docs";
    std::string vector_mode = "occurrence";
    std::string format = "text";
    std::vector<std::string> dump = {"schedule", "dendrogram"};
    std::string stopwords;
    std::string out_path;
    double q = 2.0;
    int min_df = 1;
    double alpha = 0.0;

    app.add_option("--input", input, "Directory of text files (docs mode) or points CSV")
        ->required();
    app.add_option("--mode", mode, "Input mode")
        ->check(CLI::IsMember({"docs", "points"}))
        ->capture_default_str();
    app.add_option("--vector", vector_mode,
                   "Point construction in docs mode: one 2-D point per keyword/document "
                   "co-occurrence, or one term-frequency vector per document")
        ->check(CLI::IsMember({"occurrence", "tf"}))
        ->capture_default_str();
    app.add_option("--q", q, "Minkowski distance exponent (1 = Hamming, 2 = Euclidean)")
        ->capture_default_str();
    app.add_option("--min-df", min_df,
                   "Minimum number of distinct documents a token must appear in "
                   "to become a keyword")
        ->capture_default_str();
    app.add_option("--stopwords", stopwords,
                   "Stop-word file (one lowercase word per line, '#' comments); "
                   "replaces the embedded default list");
    auto* alpha_opt =
        app.add_option("--alpha", alpha, "Print only the partition at this threshold");
    app.add_option("--dump", dump,
                   "Artifacts to print: keywords, occurrences, relation, closure, "
                   "schedule, dendrogram")
        ->delimiter(',')
        ->check(CLI::IsMember({"keywords", "occurrences", "relation", "closure", "schedule",
                               "dendrogram"}))
        ->capture_default_str();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    if (!(q > 0.0)) {
        std::cerr << "error: q must be > 0\n";
        return 2;
    }
    if (min_df < 1) {
        std::cerr << "error: min-df must be >= 1\n";
        return 2;
    }
    if (alpha_opt->count() > 0 && !(alpha >= 0.0 && alpha <= 1.0)) {
        std::cerr << "error: alpha must be in [0, 1]\n";
        return 2;
    }
    if (mode == "points") {
        for (const auto* name : {"--vector", "--min-df", "--stopwords"}) {
            if (app.count(name) > 0) {
                std::cerr << "error: " << name << " applies to docs mode only\n";
                return 2;
            }
        }
    }

    PipelineConfig cfg;
    cfg.input_path = input;
    cfg.input_mode = mode == "docs" ? InputMode::docs : InputMode::points;
    cfg.vector_mode = vector_mode == "tf" ? VectorMode::tf : VectorMode::occurrence;
    cfg.q = q;
    cfg.min_df = min_df;
    if (!stopwords.empty()) {
        cfg.stopwords_path = stopwords;
    }
    if (alpha_opt->count() > 0) {
        cfg.alpha = alpha;
    }
    if (format == "json") {
        cfg.output_format = OutputFormat::json;
    } else if (format == "dot") {
        cfg.output_format = OutputFormat::dot;
    } else if (format == "csv") {
        cfg.output_format = OutputFormat::csv;
    } else {
        cfg.output_format = OutputFormat::text;
    }
    cfg.dump.clear();
    for (const auto& name : dump) {
        cfg.dump.push_back(kDumpNames.at(name));
    }
    if (!out_path.empty()) {
        cfg.out_path = out_path;
    }

    return fuzzyrel::run_pipeline(cfg, std::cout, std::cerr);
}
