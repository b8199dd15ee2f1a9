#include "fuzzyrel/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fuzzyrel/closure.hpp"
#include "fuzzyrel/error.hpp"
#include "fuzzyrel/io.hpp"
#include "fuzzyrel/partition.hpp"
#include "fuzzyrel/relation.hpp"
#include "fuzzyrel/text_ingest.hpp"

namespace fuzzyrel {

namespace {

const char* dump_name(DumpKind kind) {
    switch (kind) {
        case DumpKind::keywords: return "keywords";
        case DumpKind::occurrences: return "occurrences";
        case DumpKind::relation: return "relation";
        case DumpKind::closure: return "closure";
        case DumpKind::schedule: return "schedule";
        case DumpKind::dendrogram: return "dendrogram";
    }
    return "?";
}

// Re-raise with the pipeline stage prepended, keeping the error class.
template <typename F>
auto stage(const char* name, F&& body) {
    try {
        return body();
    } catch (const config_error& e) {
        throw config_error(std::string(name) + ": " + e.what());
    } catch (const data_error& e) {
        throw data_error(std::string(name) + ": " + e.what());
    }
}

void validate_config(const PipelineConfig& cfg) {
    if (!(cfg.q > 0.0)) {
        throw config_error("q must be > 0");
    }
    if (cfg.min_df < 1) {
        throw config_error("min-df must be >= 1");
    }
    if (cfg.alpha && !(*cfg.alpha >= 0.0 && *cfg.alpha <= 1.0)) {
        throw config_error("alpha must be in [0, 1]");
    }
    if (cfg.dump.empty() && !cfg.alpha) {
        throw config_error("nothing to output: empty dump list");
    }
    if (!std::filesystem::exists(cfg.input_path)) {
        throw config_error("input path does not exist: " + cfg.input_path.string());
    }
    if (cfg.input_mode == InputMode::docs && !std::filesystem::is_directory(cfg.input_path)) {
        throw config_error("docs mode expects a directory: " + cfg.input_path.string());
    }
    if (cfg.input_mode == InputMode::points && std::filesystem::is_directory(cfg.input_path)) {
        throw config_error("points mode expects a CSV file: " + cfg.input_path.string());
    }
    if (cfg.input_mode == InputMode::points) {
        for (const auto kind : cfg.dump) {
            if (kind == DumpKind::keywords || kind == DumpKind::occurrences) {
                throw config_error(std::string("dump '") + dump_name(kind) +
                                   "' requires --mode docs");
            }
        }
    }
}

// Dump kinds in pipeline order, deduplicated; flag order does not matter.
std::vector<DumpKind> normalized_dumps(const std::vector<DumpKind>& requested) {
    static constexpr DumpKind kOrder[] = {DumpKind::keywords, DumpKind::occurrences,
                                          DumpKind::relation, DumpKind::closure,
                                          DumpKind::schedule, DumpKind::dendrogram};
    std::vector<DumpKind> out;
    for (const auto kind : kOrder) {
        if (std::find(requested.begin(), requested.end(), kind) != requested.end()) {
            out.push_back(kind);
        }
    }
    return out;
}

struct PipelineArtifacts {
    KeywordTable keywords;
    OccurrenceTable occurrences;
    RelationResult relation;
    ClosureResult closure;
    AlphaCutSchedule schedule;
    Dendrogram dendrogram;
};

std::string render_dump(const PipelineArtifacts& art, DumpKind kind, OutputFormat format) {
    const auto unsupported = [&]() -> std::string {
        throw config_error(std::string("dump '") + dump_name(kind) +
                           "' has no such output format");
    };
    switch (kind) {
        case DumpKind::keywords:
            switch (format) {
                case OutputFormat::text: return keywords_to_text(art.keywords);
                case OutputFormat::json: return keywords_to_json(art.keywords);
                case OutputFormat::csv: return keywords_to_csv(art.keywords);
                default: return unsupported();
            }
        case DumpKind::occurrences:
            switch (format) {
                case OutputFormat::text: return occurrences_to_text(art.occurrences);
                case OutputFormat::json: return occurrences_to_json(art.occurrences);
                case OutputFormat::csv: return occurrences_to_csv(art.occurrences);
                default: return unsupported();
            }
        case DumpKind::relation:
            switch (format) {
                case OutputFormat::text:
                    return matrix_to_text(art.relation.relation) + "q = " +
                           format_double(art.relation.params.q) + "\ndelta = " +
                           display_double(art.relation.params.delta) + "\n";
                case OutputFormat::json: return matrix_to_json(art.relation.relation);
                case OutputFormat::csv: return matrix_to_csv(art.relation.relation);
                default: return unsupported();
            }
        case DumpKind::closure:
            switch (format) {
                case OutputFormat::text:
                    return matrix_to_text(art.closure.relation) + "iterations = " +
                           std::to_string(art.closure.iterations) + "\n";
                case OutputFormat::json: return matrix_to_json(art.closure.relation);
                case OutputFormat::csv: return matrix_to_csv(art.closure.relation);
                default: return unsupported();
            }
        case DumpKind::schedule:
            switch (format) {
                case OutputFormat::text: return schedule_to_text(art.schedule);
                case OutputFormat::json: return schedule_to_json(art.schedule);
                default: return unsupported();
            }
        case DumpKind::dendrogram:
            switch (format) {
                case OutputFormat::text: return dendrogram_to_text(art.dendrogram);
                case OutputFormat::json: return dendrogram_to_json(art.dendrogram);
                case OutputFormat::dot: return dendrogram_to_dot(art.dendrogram);
                default: return unsupported();
            }
    }
    return {};
}

void run_pipeline_impl(const PipelineConfig& cfg, std::ostream& out) {
    validate_config(cfg);

    PipelineArtifacts art;
    Dataset dataset;
    if (cfg.input_mode == InputMode::docs) {
        dataset = stage("ingest", [&] {
            const StopWordSet stops = cfg.stopwords_path
                                          ? StopWordSet::from_file(*cfg.stopwords_path)
                                          : StopWordSet::default_set();
            const auto docs = load_documents(cfg.input_path, stops);
            art.keywords = build_keyword_table(docs, cfg.min_df);
            auto occ = occurrence_points(docs, art.keywords);
            art.occurrences = std::move(occ.table);
            return cfg.vector_mode == VectorMode::tf ? tf_vectors(docs, art.keywords)
                                                     : std::move(occ.dataset);
        });
    } else {
        dataset = stage("ingest", [&] { return load_points_csv(cfg.input_path); });
    }

    art.relation = stage("relation", [&] { return compatibility_relation(dataset, cfg.q); });
    art.closure = stage("closure", [&] { return transitive_closure(art.relation.relation); });
    art.schedule = stage("partition", [&] { return partition_schedule(art.closure.relation); });
    art.dendrogram = stage("partition", [&] { return build_dendrogram(art.schedule); });

    std::string rendered;
    if (cfg.alpha) {
        const auto cut = alpha_cut(art.closure.relation, *cfg.alpha);
        switch (cfg.output_format) {
            case OutputFormat::text: rendered = partition_to_text(cut); break;
            case OutputFormat::json: rendered = partition_to_json(cut); break;
            default: throw config_error("alpha query supports text or json output");
        }
    } else {
        const auto dumps = normalized_dumps(cfg.dump);
        if (cfg.output_format == OutputFormat::csv && dumps.size() > 1) {
            throw config_error("csv output supports a single dump");
        }
        if (cfg.output_format == OutputFormat::dot && dumps.size() > 1) {
            throw config_error("dot output supports a single dump");
        }
        if (dumps.size() == 1) {
            rendered = render_dump(art, dumps.front(), cfg.output_format);
        } else if (cfg.output_format == OutputFormat::json) {
            // One object keyed by dump name; nested documents re-parse to the
            // same values, so aggregation loses no precision.
            nlohmann::json object;
            for (const auto kind : dumps) {
                object[dump_name(kind)] =
                    nlohmann::json::parse(render_dump(art, kind, cfg.output_format));
            }
            rendered = object.dump(2) + "\n";
        } else {
            for (std::size_t i = 0; i < dumps.size(); ++i) {
                if (i > 0) {
                    rendered += "\n";
                }
                rendered += std::string("== ") + dump_name(dumps[i]) + " ==\n";
                rendered += render_dump(art, dumps[i], cfg.output_format);
            }
        }
    }

    if (cfg.out_path) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        if (!file) {
            throw config_error("cannot open output file: " + cfg.out_path->string());
        }
        file << rendered;
    } else {
        out << rendered;
    }
}

}  // namespace

int run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
    try {
        run_pipeline_impl(config, out);
        return 0;
    } catch (const config_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const data_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace fuzzyrel
