#include "taxograph/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "taxograph/errors.hpp"

namespace taxograph {

namespace {

using nlohmann::json;

constexpr int document_version = 1;
constexpr std::string_view edge_list_magic = "taxograph-edges";

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(), text.begin() + std::min(offset, text.size()), '\n'));
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& failure) {
        throw parse_error(failure.what(), line_of_offset(text, failure.byte));
    }
}

void require_version(const json& doc, std::string_view what) {
    if (!doc.is_object() || !doc.contains("format_version")) {
        throw parse_error(std::string(what) + ": missing format_version");
    }
    if (doc["format_version"] != document_version) {
        throw error(errc::unknown_format_version,
                    std::string(what) + ": unsupported format_version " +
                        doc["format_version"].dump());
    }
}

std::string_view tag_name(label_kind kind) {
    switch (kind) {
        case label_kind::object: return "object";
        case label_kind::action: return "action";
        case label_kind::untagged: return "untagged";
    }
    return "?";
}

label_kind tag_from(std::string_view name, std::size_t line = 0) {
    if (name == "object") return label_kind::object;
    if (name == "action") return label_kind::action;
    if (name == "untagged") return label_kind::untagged;
    throw parse_error("unknown label tag \"" + std::string(name) + "\"", line);
}

subset_kind kind_from(std::string_view name, std::size_t line = 0) {
    auto kind = subset_kind_from(name);
    if (!kind.has_value()) {
        throw parse_error("unknown subset kind \"" + std::string(name) + "\"", line);
    }
    return *kind;
}

std::string format_weight(double weight) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, weight);
    return std::string(buffer, end);
}

double parse_weight(std::string_view text, std::size_t line) {
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw parse_error("bad edge weight \"" + std::string(text) + "\"", line);
    }
    return value;
}

std::vector<std::string> split_on(std::string_view text, char separator) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(separator, start);
        if (end == std::string_view::npos) {
            parts.emplace_back(text.substr(start));
            return parts;
        }
        parts.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
}

std::string trimmed(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string_view::npos) {
        return {};
    }
    std::size_t end = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(begin, end - begin + 1));
}

}  // namespace

std::string export_taxonomy_document(const taxonomy_graph& graph) {
    json doc;
    doc["format_version"] = document_version;

    json labels = json::array();
    for (const auto& [text, entry] : graph.labels()) {
        json item;
        item["text"] = text;
        if (entry.kind != label_kind::untagged) {
            item["tag"] = tag_name(entry.kind);
        }
        json kinds = json::array();
        auto membership = graph.memberships().find(text);
        if (membership != graph.memberships().end()) {
            for (subset_kind kind : membership->second) {
                kinds.push_back(std::string(to_string(kind)));
            }
        }
        item["kinds"] = std::move(kinds);
        labels.push_back(std::move(item));
    }
    doc["labels"] = std::move(labels);

    json clusters = json::array();
    for (const auto& [name, members] : graph.clusters()) {
        json item;
        item["name"] = name;
        item["members"] = members;
        clusters.push_back(std::move(item));
    }
    doc["clusters"] = std::move(clusters);

    json edges = json::array();
    for (const cross_edge& edge : graph.cross_edges()) {
        json item;
        item["a"] = edge.a;
        item["b"] = edge.b;
        if (edge.weight.has_value()) {
            item["weight"] = *edge.weight;
        }
        edges.push_back(std::move(item));
    }
    doc["cross_edges"] = std::move(edges);

    if (graph.origin().has_value()) {
        doc["provenance"] = {{"parent", graph.origin()->parent},
                             {"selector", graph.origin()->selector}};
    }
    return doc.dump(2) + "\n";
}

taxonomy_graph import_taxonomy_document(std::string_view text) {
    json doc = parse_json(text);
    require_version(doc, "taxonomy document");

    std::map<std::string, label> labels;
    std::map<std::string, std::set<subset_kind>> memberships;
    for (const json& item : doc.value("labels", json::array())) {
        if (!item.contains("text")) {
            throw parse_error("label entry without text");
        }
        std::string entry_text = item["text"].get<std::string>();
        label entry{entry_text};
        if (item.contains("tag")) {
            entry.kind = tag_from(item["tag"].get<std::string>());
        }
        if (!labels.emplace(entry_text, entry).second) {
            throw parse_error("duplicate label \"" + entry_text + "\"");
        }
        std::set<subset_kind> kinds;
        for (const json& kind : item.value("kinds", json::array())) {
            kinds.insert(kind_from(kind.get<std::string>()));
        }
        memberships.emplace(entry_text, std::move(kinds));
    }

    std::map<std::string, std::set<std::string>> clusters;
    for (const json& item : doc.value("clusters", json::array())) {
        if (!item.contains("name")) {
            throw parse_error("cluster entry without name");
        }
        std::string name = item["name"].get<std::string>();
        std::set<std::string> members;
        for (const json& member : item.value("members", json::array())) {
            members.insert(member.get<std::string>());
        }
        if (!clusters.emplace(name, std::move(members)).second) {
            throw parse_error("duplicate cluster \"" + name + "\"");
        }
    }

    std::vector<cross_edge> edges;
    for (const json& item : doc.value("cross_edges", json::array())) {
        if (!item.contains("a") || !item.contains("b")) {
            throw parse_error("cross edge without both endpoints");
        }
        cross_edge edge{item["a"].get<std::string>(), item["b"].get<std::string>(),
                        std::nullopt};
        if (item.contains("weight")) {
            edge.weight = item["weight"].get<double>();
        }
        edges.push_back(std::move(edge));
    }

    std::optional<provenance> origin;
    if (doc.contains("provenance")) {
        origin = provenance{doc["provenance"].value("parent", ""),
                            doc["provenance"].value("selector", "")};
    }
    return taxonomy_graph::from_parts(std::move(labels), std::move(clusters),
                                      std::move(memberships), std::move(edges),
                                      std::move(origin));
}

std::string export_edge_list(const taxonomy_graph& graph) {
    std::vector<validation_issue> issues = validate(graph);
    if (!issues.empty()) {
        throw error(errc::invalid_graph,
                    "refusing to export an invalid graph: " + issues.front().code + " " +
                        issues.front().subject);
    }

    std::ostringstream out;
    out << edge_list_magic << " v" << document_version << "\n";
    for (const auto& [name, members] : graph.clusters()) {
        out << "@cluster " << name << "\n";
        for (const std::string& member : members) {
            out << member << "\t";
            const auto& kinds = graph.memberships().at(member);
            bool first = true;
            for (subset_kind kind : kinds) {
                out << (first ? "" : ",") << to_string(kind);
                first = false;
            }
            const label& entry = graph.labels().at(member);
            if (entry.kind != label_kind::untagged) {
                out << "\t" << tag_name(entry.kind);
            }
            out << "\n";
        }
    }
    if (!graph.cross_edges().empty()) {
        out << "@edges\n";
        for (const cross_edge& edge : graph.cross_edges()) {
            out << edge.a << "\t" << edge.b;
            if (edge.weight.has_value()) {
                out << "\t" << format_weight(*edge.weight);
            }
            out << "\n";
        }
    }
    return out.str();
}

taxonomy_graph import_edge_list(std::string_view text) {
    std::map<std::string, label> labels;
    std::map<std::string, std::set<subset_kind>> memberships;
    std::map<std::string, std::set<std::string>> clusters;
    std::vector<cross_edge> edges;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_number = 0;
    bool saw_header = false;
    bool in_edges = false;
    std::string current_cluster;

    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!saw_header) {
            std::string expected = std::string(edge_list_magic) + " v";
            if (line.rfind(expected, 0) != 0) {
                throw parse_error("expected \"" + expected + "<N>\" header", line_number);
            }
            std::string version = line.substr(expected.size());
            if (version != std::to_string(document_version)) {
                throw error(errc::unknown_format_version,
                            "edge list: unsupported format version " + version);
            }
            saw_header = true;
            continue;
        }
        if (line.rfind("@cluster ", 0) == 0) {
            current_cluster = trimmed(line.substr(9));
            if (current_cluster.empty()) {
                throw parse_error("@cluster without a name", line_number);
            }
            in_edges = false;
            clusters.emplace(current_cluster, std::set<std::string>{});
            continue;
        }
        if (line == "@edges") {
            in_edges = true;
            current_cluster.clear();
            continue;
        }
        std::vector<std::string> fields = split_on(line, '\t');
        if (in_edges) {
            if (fields.size() < 2 || fields.size() > 3) {
                throw parse_error("edge lines are a<TAB>b[<TAB>weight]", line_number);
            }
            cross_edge edge{fields[0], fields[1], std::nullopt};
            if (fields.size() == 3) {
                edge.weight = parse_weight(fields[2], line_number);
            }
            edges.push_back(std::move(edge));
            continue;
        }
        if (current_cluster.empty()) {
            throw parse_error("member line outside any @cluster block", line_number);
        }
        if (fields.size() < 2 || fields.size() > 3) {
            throw parse_error("member lines are text<TAB>kind,...[<TAB>tag]", line_number);
        }
        const std::string& member = fields[0];
        std::set<subset_kind> kinds;
        for (const std::string& kind : split_on(fields[1], ',')) {
            kinds.insert(kind_from(kind, line_number));
        }
        label entry{member};
        if (fields.size() == 3) {
            entry.kind = tag_from(fields[2], line_number);
        }
        auto [slot, inserted] = labels.emplace(member, entry);
        if (!inserted) {
            if (slot->second.kind == label_kind::untagged) {
                slot->second.kind = entry.kind;
            } else if (entry.kind != label_kind::untagged &&
                       entry.kind != slot->second.kind) {
                throw parse_error("conflicting tags for \"" + member + "\"", line_number);
            }
        }
        memberships[member].insert(kinds.begin(), kinds.end());
        clusters[current_cluster].insert(member);
    }
    if (!saw_header) {
        throw parse_error("empty input: missing edge-list header");
    }
    return taxonomy_graph::from_parts(std::move(labels), std::move(clusters),
                                      std::move(memberships), std::move(edges));
}

thesaurus parse_thesaurus(std::string_view text) {
    json doc = parse_json(text);
    require_version(doc, "thesaurus");
    std::vector<synset> synsets;
    for (const json& item : doc.value("synsets", json::array())) {
        if (!item.contains("preferred")) {
            throw parse_error("synset without a preferred term");
        }
        synset group;
        group.preferred = item["preferred"].get<std::string>();
        for (const json& variant : item.value("variants", json::array())) {
            group.variants.push_back(variant.get<std::string>());
        }
        group.note = item.value("note", "");
        synsets.push_back(std::move(group));
    }
    return thesaurus{std::move(synsets)};
}

decomposition_rules parse_rules(std::string_view text) {
    json doc = parse_json(text);
    require_version(doc, "curation records");
    decomposition_rules rules;
    for (const json& exception : doc.value("exceptions", json::array())) {
        std::string term = exception.get<std::string>();
        if (!is_normalized(term)) {
            throw parse_error("exception \"" + term + "\" is not normalized text");
        }
        rules.exceptions.insert(std::move(term));
    }
    for (const json& item : doc.value("records", json::array())) {
        if (!item.contains("raw") || !item.contains("action")) {
            throw parse_error("record needs raw and action fields");
        }
        curation_record record;
        record.raw = item["raw"].get<std::string>();
        std::string action = item["action"].get<std::string>();
        if (action == "keep") {
            record.action = curation_action::keep;
        } else if (action == "map_synonym") {
            record.action = curation_action::map_synonym;
        } else if (action == "decompose") {
            record.action = curation_action::decompose;
        } else if (action == "drop") {
            record.action = curation_action::drop;
        } else {
            throw parse_error("unknown record action \"" + action + "\"");
        }
        for (const json& output : item.value("outputs", json::array())) {
            label atom{output.at("text").get<std::string>()};
            if (output.contains("kind")) {
                atom.kind = tag_from(output["kind"].get<std::string>());
            }
            if (!is_normalized(atom.text)) {
                throw parse_error("record output \"" + atom.text +
                                  "\" is not normalized text");
            }
            record.outputs.push_back(std::move(atom));
        }
        record.reason = item.value("reason", "");
        for (const json& cluster : item.value("clusters", json::array())) {
            record.clusters.insert(cluster.get<std::string>());
        }

        if (record.action == curation_action::drop) {
            if (!record.outputs.empty()) {
                throw parse_error("drop record \"" + record.raw + "\" must have no outputs");
            }
        } else if (record.outputs.empty()) {
            throw parse_error("record \"" + record.raw + "\" needs at least one output");
        }
        if (record.action == curation_action::keep) {
            if (record.outputs.size() != 1 ||
                record.outputs.front().text != normalize(raw_label{record.raw}).text) {
                throw parse_error("keep record \"" + record.raw +
                                  "\" must output exactly its normalized form");
            }
        }
        for (const curation_record& existing : rules.records) {
            if (canon_key(existing.raw) == canon_key(record.raw) &&
                existing.clusters == record.clusters) {
                throw parse_error("duplicate record for \"" + record.raw + "\"");
            }
        }
        rules.records.push_back(std::move(record));
    }
    return rules;
}

golden_sets parse_golden_sets(std::string_view text) {
    json doc = parse_json(text);
    require_version(doc, "golden sets");
    auto read_set = [&doc](const std::string& key) {
        std::set<std::string> out;
        if (!doc.contains(key)) {
            throw parse_error("golden sets: missing \"" + key + "\"");
        }
        for (const json& item : doc[key]) {
            out.insert(item.get<std::string>());
        }
        return out;
    };
    golden_sets golden;
    golden.events_after_d16t2 = read_set("events_after_d16t2");
    golden.events_after_d16t3_home = read_set("events_after_d16t3_home");
    golden.events = read_set("events");
    golden.scenes = read_set("scenes");
    golden.context = read_set("context");
    golden.combined = read_set("combined");
    return golden;
}

std::vector<label_set_entry> parse_label_set(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        std::vector<label_set_entry> entries;
        for (const json& item : parse_json(text)) {
            label_set_entry entry;
            entry.raw.text = item.at("raw").get<std::string>();
            if (item.contains("cluster")) {
                entry.cluster = item["cluster"].get<std::string>();
            }
            if (item.contains("kinds")) {
                std::set<subset_kind> kinds;
                for (const json& kind : item["kinds"]) {
                    kinds.insert(kind_from(kind.get<std::string>()));
                }
                entry.kinds = std::move(kinds);
            }
            entries.push_back(std::move(entry));
        }
        return entries;
    }

    std::vector<label_set_entry> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::string cleaned = trimmed(line);
        if (cleaned.empty() || cleaned.front() == '#') {
            continue;
        }
        entries.push_back(label_set_entry{raw_label{std::move(cleaned)}, {}, {}});
    }
    return entries;
}

std::string report_to_json(const curation_report& report) {
    json entries = json::array();
    for (const report_entry& entry : report.entries) {
        json item;
        item["raw"] = entry.raw;
        if (!entry.normalized.empty()) {
            item["normalized"] = entry.normalized;
        }
        if (entry.compound_resolved.has_value()) {
            item["compound_resolved"] = *entry.compound_resolved;
        }
        if (entry.record_raw.has_value()) {
            item["record"] = *entry.record_raw;
        }
        if (entry.dropped) {
            item["dropped"] = true;
        }
        if (entry.error.has_value()) {
            item["error"] = *entry.error;
        }
        json atoms = json::array();
        for (const atom_result& atom : entry.atoms) {
            json a;
            a["token"] = atom.token;
            a["stored"] = atom.stored.text;
            if (atom.stored.kind != label_kind::untagged) {
                a["tag"] = tag_name(atom.stored.kind);
            }
            a["outcome"] = atom.outcome == atom_outcome::added ? "added" : "duplicate";
            atoms.push_back(std::move(a));
        }
        item["atoms"] = std::move(atoms);
        entries.push_back(std::move(item));
    }
    json doc;
    doc["entries"] = std::move(entries);
    doc["summary"] = {{"added", report.added()},
                      {"duplicates", report.duplicates()},
                      {"dropped", report.dropped()},
                      {"errors", report.errors()}};
    return doc.dump(2) + "\n";
}

std::string render_report(const curation_report& report) {
    std::ostringstream out;
    for (const report_entry& entry : report.entries) {
        out << "\"" << entry.raw << "\"";
        if (entry.error.has_value()) {
            out << " -> error: " << *entry.error << "\n";
            continue;
        }
        if (entry.dropped) {
            out << " -> dropped";
            if (entry.record_raw.has_value()) {
                out << " (record \"" << *entry.record_raw << "\")";
            }
            out << "\n";
            continue;
        }
        out << " ->";
        for (const atom_result& atom : entry.atoms) {
            out << " " << atom.stored.text << "("
                << (atom.outcome == atom_outcome::added ? "added" : "duplicate") << ")";
        }
        out << "\n";
    }
    out << "summary: " << report.added() << " added, " << report.duplicates()
        << " duplicates, " << report.dropped() << " dropped, " << report.errors()
        << " errors\n";
    return out.str();
}

std::string render_issues(const std::vector<validation_issue>& issues) {
    std::ostringstream out;
    for (const validation_issue& issue : issues) {
        out << (issue.severity == issue_severity::error ? "error" : "warning") << " "
            << issue.code << " [" << issue.subject << "]: " << issue.detail << "\n";
    }
    return out.str();
}

std::string render_golden_diff(const golden_diff_result& diff) {
    std::ostringstream out;
    for (const golden_diff_entry& entry : diff) {
        out << entry.set_name << ":";
        if (!entry.missing.empty()) {
            out << " missing";
            for (const std::string& text : entry.missing) {
                out << " \"" << text << "\"";
            }
        }
        if (!entry.extra.empty()) {
            out << " extra";
            for (const std::string& text : entry.extra) {
                out << " \"" << text << "\"";
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw error(errc::parse_error, "cannot read \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw error(errc::parse_error, "cannot write \"" + path + "\"");
    }
    out << content;
}

}  // namespace taxograph
