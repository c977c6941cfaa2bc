#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcls/csv.hpp"
#include "mcls/errors.hpp"
#include "mcls/rng.hpp"
#include "mcls/unicode.hpp"

namespace mcls {

// One news item. label: 1 = real, 0 = fake.
struct LabeledDocument {
    std::string id;
    std::string domain;
    std::string date;
    std::string category;
    std::string headline;
    std::string content;
    std::int32_t label = 0;

    // Headline and body are modeled as one flat token stream.
    std::string text() const {
        if (headline.empty()) return content;
        return headline + " " + content;
    }
};

enum class DatasetFormat { csv, jsonl };

inline constexpr std::array<const char*, 7> kDatasetColumns = {
    "id", "domain", "date", "category", "headline", "content", "label"};

namespace detail {

inline std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::int32_t parse_label(const std::string& raw, std::size_t row) {
    std::string t = trim_copy(raw);
    if (t == "0") return 0;
    if (t == "1") return 1;
    throw BadLabel(row, raw);
}

inline std::vector<LabeledDocument> load_csv(const std::string& data, const std::string& path) {
    auto rows = parse_csv(data);
    if (rows.empty()) throw MalformedRecord("empty csv file: " + path);

    const auto& header = rows[0];
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* name : kDatasetColumns) {
        if (std::string(name) != "id" && !col.contains(name)) throw MissingColumn(name);
    }
    bool has_id = col.contains("id");

    std::vector<LabeledDocument> docs;
    docs.reserve(rows.size() - 1);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& fields = rows[r];
        if (fields.size() != header.size())
            throw MalformedRecord("csv row " + std::to_string(r) + ": expected " +
                                  std::to_string(header.size()) + " fields, got " +
                                  std::to_string(fields.size()));
        LabeledDocument d;
        d.id = has_id ? fields[col["id"]] : std::to_string(r - 1);
        d.domain = fields[col["domain"]];
        d.date = fields[col["date"]];
        d.category = fields[col["category"]];
        d.headline = fields[col["headline"]];
        d.content = fields[col["content"]];
        d.label = parse_label(fields[col["label"]], r);
        if (trim_copy(d.content).empty()) throw EmptyContent(r);
        docs.push_back(std::move(d));
    }
    return docs;
}

inline std::vector<LabeledDocument> load_jsonl(const std::string& data, const std::string& path) {
    std::vector<LabeledDocument> docs;
    std::istringstream in(data);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim_copy(line).empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw MalformedRecord(path + " line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!obj.is_object())
            throw MalformedRecord(path + " line " + std::to_string(line_no) +
                                  ": expected a JSON object");
        for (const char* name : kDatasetColumns) {
            if (std::string(name) != "id" && !obj.contains(name)) throw MissingColumn(name);
        }
        LabeledDocument d;
        d.id = obj.contains("id")
                   ? (obj["id"].is_string() ? obj["id"].get<std::string>() : obj["id"].dump())
                   : std::to_string(line_no - 1);
        d.domain = obj["domain"].get<std::string>();
        d.date = obj["date"].get<std::string>();
        d.category = obj["category"].get<std::string>();
        d.headline = obj["headline"].get<std::string>();
        d.content = obj["content"].get<std::string>();
        if (!obj["label"].is_number_integer() ||
            (obj["label"].get<std::int64_t>() != 0 && obj["label"].get<std::int64_t>() != 1))
            throw BadLabel(line_no, obj["label"].dump());
        d.label = static_cast<std::int32_t>(obj["label"].get<std::int64_t>());
        if (trim_copy(d.content).empty()) throw EmptyContent(line_no);
        docs.push_back(std::move(d));
    }
    return docs;
}

}  // namespace detail

// Loads a labeled dataset. CSV needs the canonical header
// `id,domain,date,category,headline,content,label` (id optional, any column
// order); JSONL wants one object per line with the same keys.
inline std::vector<LabeledDocument> load_dataset(const std::string& path, DatasetFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dataset: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string data = buf.str();
    if (!uni::valid_utf8(data)) throw EncodingError("dataset is not valid UTF-8: " + path);
    return format == DatasetFormat::csv ? detail::load_csv(data, path)
                                        : detail::load_jsonl(data, path);
}

// Infers csv/jsonl from the file extension.
inline DatasetFormat dataset_format_for(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "jsonl" || ext == "json") return DatasetFormat::jsonl;
    return DatasetFormat::csv;
}

inline std::map<std::int32_t, std::size_t> class_distribution(
    const std::vector<LabeledDocument>& docs) {
    std::map<std::int32_t, std::size_t> counts{{0, 0}, {1, 0}};
    for (const auto& d : docs) ++counts[d.label];
    return counts;
}

struct DatasetSplit {
    std::vector<LabeledDocument> train;
    std::vector<LabeledDocument> test;
    std::uint64_t seed = 0;
};

// Seeded shuffle, then the first round(ratio * n) documents become the
// training partition. Deterministic for a fixed seed.
inline DatasetSplit split_train_test(const std::vector<LabeledDocument>& docs, double ratio,
                                     std::uint64_t seed) {
    if (docs.size() < 2) throw EmptyDataset("need at least 2 documents to split");
    if (!(ratio > 0.0 && ratio < 1.0)) throw UsageError("split ratio must be in (0, 1)");
    Rng rng(seed);
    std::vector<std::size_t> perm = rng.permutation(docs.size());
    std::size_t n_train = static_cast<std::size_t>(
        std::llround(ratio * static_cast<double>(docs.size())));
    DatasetSplit split;
    split.seed = seed;
    split.train.reserve(n_train);
    split.test.reserve(docs.size() - n_train);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        (i < n_train ? split.train : split.test).push_back(docs[perm[i]]);
    }
    return split;
}

// Writes documents back out in the canonical CSV schema.
inline void save_dataset_csv(const std::vector<LabeledDocument>& docs, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write dataset: " + path);
    out << "id,domain,date,category,headline,content,label\n";
    for (const auto& d : docs) {
        out << csv_row({d.id, d.domain, d.date, d.category, d.headline, d.content,
                        std::to_string(d.label)});
    }
    if (!out) throw IoError("failed writing dataset: " + path);
}

}  // namespace mcls
