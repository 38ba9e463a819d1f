#include "taxograph/label.hpp"

#include <cctype>

#include "taxograph/errors.hpp"

namespace taxograph {

namespace {

bool is_word_char(unsigned char c) {
    // Bytes outside ASCII pass through untouched so UTF-8 survives.
    return std::isalnum(c) || c >= 0x80;
}

std::string collapse_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (unsigned char c : text) {
        if (std::isspace(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(c));
    }
    return out;
}

// Removes matched "(...)" groups with their contents. A stray parenthesis is
// punctuation like any other and becomes a separator downstream.
std::string strip_parentheticals(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '(') {
            std::size_t close = text.find(')', i + 1);
            if (close != std::string_view::npos) {
                out.push_back(' ');
                i = close + 1;
                continue;
            }
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

}  // namespace

std::string canon_key(std::string_view text) {
    std::string folded;
    folded.reserve(text.size());
    for (unsigned char c : text) {
        folded.push_back(static_cast<char>(std::tolower(c)));
    }
    return collapse_spaces(folded);
}

bool is_normalized(std::string_view text) {
    if (text.empty() || text.front() == ' ' || text.back() == ' ') {
        return false;
    }
    bool prev_space = false;
    for (unsigned char c : text) {
        if (c == ' ') {
            if (prev_space) {
                return false;
            }
            prev_space = true;
            continue;
        }
        prev_space = false;
        if (!is_word_char(c) || std::isupper(c)) {
            return false;
        }
    }
    return true;
}

label normalize(const raw_label& raw) {
    std::string text = strip_parentheticals(raw.text);
    for (char& c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (!is_word_char(u)) {
            c = ' ';
        } else {
            c = static_cast<char>(std::tolower(u));
        }
    }
    text = collapse_spaces(text);
    if (text.empty()) {
        throw error(errc::empty_label, "label \"" + raw.text + "\" normalizes to nothing");
    }
    return label{text};
}

const curation_record* decomposition_rules::find(std::string_view key,
                                                 std::string_view cluster) const {
    const curation_record* global = nullptr;
    for (const curation_record& record : records) {
        if (canon_key(record.raw) != key) {
            continue;
        }
        if (record.clusters.empty()) {
            global = &record;
        } else if (record.clusters.count(std::string(cluster)) > 0) {
            return &record;
        }
    }
    return global;
}

std::vector<label> decompose(const label& input, const decomposition_rules& rules) {
    const curation_record* record = rules.find(canon_key(input.text));
    if (record != nullptr && record->action != curation_action::drop) {
        return record->outputs;
    }
    if (rules.exceptions.count(input.text) > 0) {
        return {input};
    }
    std::vector<label> atoms;
    std::size_t start = 0;
    while (start <= input.text.size()) {
        std::size_t end = input.text.find(' ', start);
        if (end == std::string::npos) {
            end = input.text.size();
        }
        if (end > start) {
            atoms.push_back(label{input.text.substr(start, end - start), input.kind});
        }
        start = end + 1;
    }
    if (atoms.empty()) {
        atoms.push_back(input);
    }
    return atoms;
}

}  // namespace taxograph
