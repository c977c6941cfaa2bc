#pragma once

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcls/errors.hpp"
#include "mcls/unicode.hpp"

namespace mcls {

inline constexpr std::int32_t kPadIndex = 0;
inline constexpr std::int32_t kUnkIndex = 1;
inline constexpr std::size_t kSequenceLength = 30;

// Bijective token<->index map. Indices 0 and 1 are reserved for PAD and UNK;
// real tokens occupy 2..size()-1 in descending corpus frequency.
class Vocabulary {
  public:
    Vocabulary() : index_to_token_{"PAD", "UNK"}, frequencies_{0, 0} {}

    std::size_t size() const { return index_to_token_.size(); }

    std::int32_t index_of(const std::string& token) const {
        auto it = token_to_index_.find(token);
        return it == token_to_index_.end() ? kUnkIndex : it->second;
    }

    bool contains(const std::string& token) const { return token_to_index_.contains(token); }

    const std::string& token_at(std::size_t index) const { return index_to_token_.at(index); }

    std::uint64_t frequency_at(std::size_t index) const { return frequencies_.at(index); }

    // Tokens in index order, reserved slots excluded.
    const std::vector<std::string>& tokens() const { return index_to_token_; }

    // Appends a real token; used by the builder and the TSV loader.
    void add_token(std::string token, std::uint64_t frequency) {
        token_to_index_.emplace(token, static_cast<std::int32_t>(index_to_token_.size()));
        index_to_token_.push_back(std::move(token));
        frequencies_.push_back(frequency);
    }

    // Canonical TSV serialization: `index<TAB>token<TAB>frequency`, ascending.
    std::string to_tsv() const {
        std::string out;
        for (std::size_t i = 0; i < index_to_token_.size(); ++i) {
            out += std::to_string(i);
            out += '\t';
            out += index_to_token_[i];
            out += '\t';
            out += std::to_string(frequencies_[i]);
            out += '\n';
        }
        return out;
    }

    // SHA-256 of the canonical TSV bytes; lets checkpoints pin their vocabulary.
    std::array<std::uint8_t, 32> digest() const {
        std::string tsv = to_tsv();
        std::array<std::uint8_t, 32> md{};
        unsigned int len = 0;
        EVP_Digest(tsv.data(), tsv.size(), md.data(), &len, EVP_sha256(), nullptr);
        return md;
    }

  private:
    std::unordered_map<std::string, std::int32_t> token_to_index_;
    std::vector<std::string> index_to_token_;
    std::vector<std::uint64_t> frequencies_;
};

// Keeps tokens with corpus frequency >= min_count, ordered by descending
// frequency, ties by lexicographic token order.
inline Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& corpus,
                                   std::uint64_t min_count = 2) {
    if (min_count < 1) throw UsageError("min_count must be >= 1");
    std::map<std::string, std::uint64_t> counts;
    for (const auto& doc : corpus) {
        for (const auto& tok : doc) ++counts[tok];
    }
    std::vector<std::pair<std::string, std::uint64_t>> kept;
    for (const auto& [tok, n] : counts) {
        if (n >= min_count) kept.emplace_back(tok, n);
    }
    std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    Vocabulary vocab;
    for (auto& [tok, n] : kept) vocab.add_token(std::move(tok), n);
    return vocab;
}

inline void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write vocabulary file: " + path);
    out << vocab.to_tsv();
    if (!out) throw IoError("failed writing vocabulary file: " + path);
}

inline Vocabulary load_vocabulary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open vocabulary file: " + path);
    Vocabulary vocab;
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t line_no = rows + 1;
        if (!uni::valid_utf8(line))
            throw EncodingError("vocabulary file is not valid UTF-8 at line " +
                                std::to_string(line_no));
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos)
            throw MalformedRecord("vocabulary line " + std::to_string(line_no) +
                                  ": expected index<TAB>token<TAB>frequency");
        std::size_t index;
        std::uint64_t freq;
        try {
            index = std::stoull(line.substr(0, t1));
            freq = std::stoull(line.substr(t2 + 1));
        } catch (const std::exception&) {
            throw MalformedRecord("vocabulary line " + std::to_string(line_no) +
                                  ": non-numeric index or frequency");
        }
        std::string token = line.substr(t1 + 1, t2 - t1 - 1);
        if (index != rows)
            throw MalformedRecord("vocabulary line " + std::to_string(line_no) +
                                  ": indices must be ascending from 0");
        if (index == 0 || index == 1) {
            const char* want = index == 0 ? "PAD" : "UNK";
            if (token != want)
                throw MalformedRecord("vocabulary row " + std::to_string(index) + " must be " +
                                      want);
        } else {
            vocab.add_token(std::move(token), freq);
        }
        ++rows;
    }
    if (rows < 2) throw MalformedRecord("vocabulary file missing PAD/UNK rows: " + path);
    return vocab;
}

struct EncodedDocument {
    std::vector<std::int32_t> indices;  // length exactly n (default 30)
    std::int32_t label = 0;
};

// Maps tokens to indices (UNK for misses), truncates to the first n tokens,
// and post-pads with PAD up to length n.
inline std::vector<std::int32_t> encode(const std::vector<std::string>& tokens,
                                        const Vocabulary& vocab,
                                        std::size_t n = kSequenceLength) {
    if (n < 1) throw UsageError("sequence length must be >= 1");
    std::vector<std::int32_t> indices(n, kPadIndex);
    std::size_t take = std::min(tokens.size(), n);
    for (std::size_t i = 0; i < take; ++i) indices[i] = vocab.index_of(tokens[i]);
    return indices;
}

}  // namespace mcls
