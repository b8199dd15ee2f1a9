#include "fuzzyrel/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

namespace {

using nlohmann::json;

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string interval_text(const ScheduleRow& row) {
    return std::string(row.lower_open ? "(" : "[") + display_double(row.lower) + ", " +
           display_double(row.upper) + "]";
}

std::string block_text(const std::vector<std::string>& block) {
    std::string out = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += block[i];
    }
    return out + "}";
}

json partition_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& block : p.blocks) {
        blocks.push_back(block);
    }
    return blocks;
}

json dendrogram_json(const DendrogramNode& node) {
    if (node.is_leaf()) {
        return json{{"leaf", node.label}};
    }
    json children = json::array();
    for (const auto& child : node.children) {
        children.push_back(dendrogram_json(child));
    }
    return json{{"height", node.height}, {"children", std::move(children)}};
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        const auto begin = field.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            fields.emplace_back();
        } else {
            const auto end = field.find_last_not_of(" \t\r");
            fields.push_back(field.substr(begin, end - begin + 1));
        }
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

}  // namespace

std::string display_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

std::string matrix_to_json(const FuzzyRelation& m) {
    const std::size_t n = m.size();
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < n; ++k) {
            row.push_back(m.at(i, k));
        }
        rows.push_back(std::move(row));
    }
    return json{{"labels", m.labels}, {"values", std::move(rows)}}.dump(2) + "\n";
}

FuzzyRelation matrix_from_json(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception& e) {
        throw data_error(std::string("invalid matrix JSON: ") + e.what());
    }
    if (!parsed.is_object() || !parsed.contains("labels") || !parsed.contains("values")) {
        throw data_error("invalid matrix JSON: expected {labels, values}");
    }
    FuzzyRelation m;
    m.labels = parsed["labels"].get<std::vector<std::string>>();
    const auto& rows = parsed["values"];
    if (!rows.is_array() || rows.size() != m.labels.size()) {
        throw data_error("invalid matrix JSON: row count does not match labels");
    }
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != m.labels.size()) {
            throw data_error("invalid matrix JSON: matrix is not square");
        }
        for (const auto& v : row) {
            m.values.push_back(v.get<double>());
        }
    }
    return m;
}

std::string matrix_to_csv(const FuzzyRelation& m) {
    const std::size_t n = m.size();
    std::string out = "label";
    for (const auto& label : m.labels) {
        out += "," + label;
    }
    out += "\n";
    for (std::size_t i = 0; i < n; ++i) {
        out += m.labels[i];
        for (std::size_t k = 0; k < n; ++k) {
            out += "," + format_double(m.at(i, k));
        }
        out += "\n";
    }
    return out;
}

std::string matrix_to_text(const FuzzyRelation& m) {
    const std::size_t n = m.size();
    std::size_t width = 4;  // "0.00"
    for (const auto& label : m.labels) {
        width = std::max(width, label.size());
    }
    std::string out(width, ' ');
    for (const auto& label : m.labels) {
        out += "  " + pad_left(label, width);
    }
    out += "\n";
    for (std::size_t i = 0; i < n; ++i) {
        out += pad_left(m.labels[i], width);
        for (std::size_t k = 0; k < n; ++k) {
            out += "  " + pad_left(display_double(m.at(i, k)), width);
        }
        out += "\n";
    }
    return out;
}

std::string keywords_to_json(const KeywordTable& t) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        entries.push_back(json{{"id", static_cast<int>(i)}, {"keyword", t.keywords()[i]}});
    }
    return entries.dump(2) + "\n";
}

std::string keywords_to_csv(const KeywordTable& t) {
    std::string out = "id,keyword\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += std::to_string(i) + "," + t.keywords()[i] + "\n";
    }
    return out;
}

std::string keywords_to_text(const KeywordTable& t) {
    std::size_t width = 2;
    for (std::size_t i = 0; i < t.size(); ++i) {
        width = std::max(width, std::to_string(i).size());
    }
    std::string out = pad_right("id", width) + "  keyword\n";
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += pad_right(std::to_string(i), width) + "  " + t.keywords()[i] + "\n";
    }
    return out;
}

std::string occurrences_to_csv(const OccurrenceTable& t) {
    std::string out = "label,keyword_id,doc_id\n";
    for (const auto& entry : t.pairs) {
        out += entry.label + "," + std::to_string(entry.keyword_id) + "," +
               std::to_string(entry.doc_id) + "\n";
    }
    return out;
}

std::string occurrences_to_json(const OccurrenceTable& t) {
    json entries = json::array();
    for (const auto& entry : t.pairs) {
        entries.push_back(json{{"label", entry.label},
                               {"keyword_id", entry.keyword_id},
                               {"doc_id", entry.doc_id}});
    }
    return entries.dump(2) + "\n";
}

std::string occurrences_to_text(const OccurrenceTable& t) {
    std::size_t width = 5;
    for (const auto& entry : t.pairs) {
        width = std::max(width, entry.label.size());
    }
    std::string out = pad_right("label", width) + "  keyword_id  doc_id\n";
    for (const auto& entry : t.pairs) {
        out += pad_right(entry.label, width) + "  " +
               pad_left(std::to_string(entry.keyword_id), 10) + "  " +
               pad_left(std::to_string(entry.doc_id), 6) + "\n";
    }
    return out;
}

std::string schedule_to_json(const AlphaCutSchedule& s) {
    json rows = json::array();
    for (const auto& row : s.rows) {
        rows.push_back(json{{"lower", row.lower},
                            {"upper", row.upper},
                            {"lower_open", row.lower_open},
                            {"blocks", partition_json(row.partition)}});
    }
    return rows.dump(2) + "\n";
}

std::string schedule_to_text(const AlphaCutSchedule& s) {
    std::size_t width = std::string("Alpha cuts").size();
    for (const auto& row : s.rows) {
        width = std::max(width, interval_text(row).size());
    }
    std::string out = pad_right("Alpha cuts", width) + " | Members\n";
    for (const auto& row : s.rows) {
        out += pad_right(interval_text(row), width) + " | ";
        for (std::size_t b = 0; b < row.partition.blocks.size(); ++b) {
            if (b > 0) {
                out += ", ";
            }
            out += block_text(row.partition.blocks[b]);
        }
        out += "\n";
    }
    return out;
}

std::string partition_to_json(const Partition& p) {
    return json{{"blocks", partition_json(p)}}.dump(2) + "\n";
}

std::string partition_to_text(const Partition& p) {
    std::string out;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (b > 0) {
            out += ", ";
        }
        out += block_text(p.blocks[b]);
    }
    return out + "\n";
}

std::string dendrogram_to_text(const Dendrogram& d) {
    std::string out;
    auto walk = [&](auto&& self, const DendrogramNode& node, std::size_t depth) -> void {
        out += std::string(depth * 2, ' ');
        if (node.is_leaf()) {
            out += "- " + node.label + "\n";
            return;
        }
        out += "+ " + display_double(node.height) + "\n";
        for (const auto& child : node.children) {
            self(self, child, depth + 1);
        }
    };
    walk(walk, d.root, 0);
    return out;
}

std::string dendrogram_to_dot(const Dendrogram& d) {
    std::string out = "digraph dendrogram {\n";
    std::size_t next_id = 0;
    auto walk = [&](auto&& self, const DendrogramNode& node) -> std::size_t {
        const std::size_t id = next_id++;
        if (node.is_leaf()) {
            out += "  n" + std::to_string(id) + " [label=\"" + node.label + "\", shape=box];\n";
            return id;
        }
        out += "  n" + std::to_string(id) + " [label=\"" + display_double(node.height) + "\"];\n";
        for (const auto& child : node.children) {
            const std::size_t child_id = self(self, child);
            out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) + ";\n";
        }
        return id;
    };
    walk(walk, d.root);
    out += "}\n";
    return out;
}

std::string dendrogram_to_json(const Dendrogram& d) {
    return dendrogram_json(d.root).dump(2) + "\n";
}

Dataset parse_points_csv(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw data_error(source_name + ": missing CSV header row");
    }
    const auto header = split_csv_line(line);
    if (header.empty()) {
        throw data_error(source_name + ": missing CSV header row");
    }
    const bool labelled = header.front() == "label";
    const std::size_t dim = header.size() - (labelled ? 1 : 0);
    if (dim == 0) {
        throw data_error(source_name + ": no coordinate columns");
    }

    Dataset data;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw data_error(source_name + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        }
        std::size_t first = 0;
        if (labelled) {
            data.labels.push_back(fields[0]);
            first = 1;
        }
        std::vector<double> point;
        point.reserve(dim);
        for (std::size_t f = first; f < fields.size(); ++f) {
            double v = 0.0;
            const auto& text = fields[f];
            const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
                throw data_error(source_name + ":" + std::to_string(line_no) +
                                 ": bad coordinate '" + text + "'");
            }
            point.push_back(v);
        }
        data.points.push_back(std::move(point));
    }
    if (data.points.empty()) {
        throw data_error(source_name + ": no points");
    }
    if (!labelled) {
        data.labels = default_labels(data.points.size());
    }
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
        for (std::size_t k = i + 1; k < data.labels.size(); ++k) {
            if (data.labels[i] == data.labels[k]) {
                throw data_error(source_name + ": duplicate label '" + data.labels[i] + "'");
            }
        }
    }
    validate_dataset(data);
    return data;
}

Dataset load_points_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw data_error("cannot read points file: " + path.string());
    }
    return parse_points_csv(in, path.filename().string());
}

}  // namespace fuzzyrel
