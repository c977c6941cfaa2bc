#pragma once

#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mcls/errors.hpp"
#include "mcls/unicode.hpp"

namespace mcls {

// Canonical text cleanup applied before tokenization: NFC, punctuation and
// symbol codepoints (categories P*, S*) to spaces, Latin letters lowercased,
// whitespace runs collapsed, ends trimmed. Idempotent.
inline std::string normalize(std::string_view text) {
    std::u32string cps = uni::nfc(uni::decode_utf8(text));
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    bool at_start = true;
    for (char32_t cp : cps) {
        if (uni::is_space(cp) || uni::is_punct_or_symbol(cp)) {
            pending_space = true;
            continue;
        }
        if (pending_space && !at_start) out.push_back(' ');
        pending_space = false;
        at_start = false;
        uni::append_utf8(out, uni::lower_latin(cp));
    }
    return out;
}

// Splits normalized text on single spaces; never yields empty tokens.
inline std::vector<std::string> tokenize(std::string_view normalized) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start < normalized.size()) {
        std::size_t end = normalized.find(' ', start);
        if (end == std::string_view::npos) end = normalized.size();
        if (end > start) tokens.emplace_back(normalized.substr(start, end - start));
        start = end + 1;
    }
    return tokens;
}

using StopwordSet = std::set<std::string, std::less<>>;

// One token per line, UTF-8, '#' starts a comment line. Tokens are normalized
// so the file matches the pipeline's own spelling of each word.
inline StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open stopword file: " + path);
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!uni::valid_utf8(line)) throw EncodingError("stopword file is not valid UTF-8: " + path);
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        for (const std::string& tok : tokenize(normalize(line))) words.insert(tok);
    }
    return words;
}

// Order-preserving filter.
inline std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                                 const StopwordSet& stoplist) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const std::string& t : tokens) {
        if (!stoplist.contains(t)) kept.push_back(t);
    }
    return kept;
}

// normalize + tokenize + stopword removal in one step.
inline std::vector<std::string> preprocess(std::string_view text, const StopwordSet& stoplist) {
    return remove_stopwords(tokenize(normalize(text)), stoplist);
}

}  // namespace mcls
