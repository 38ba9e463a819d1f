#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "taxograph/label.hpp"

namespace taxograph {

// One synonym group: every variant resolves to the preferred term.
struct synset {
    std::string preferred;
    std::vector<std::string> variants;
    std::string note;

    friend bool operator==(const synset&, const synset&) = default;
};

// Immutable synonym table. Construction validates that every entry is
// normalized text and that no text belongs to more than one synset.
class thesaurus {
public:
    thesaurus() = default;
    explicit thesaurus(std::vector<synset> synsets);

    // Maps a term to its preferred form; unknown terms pass through unchanged.
    // The kind tag is preserved. Idempotent.
    label resolve(const label& term) const;
    std::string resolve_text(std::string_view text) const;

    bool are_synonyms(const label& a, const label& b) const;

    const std::vector<synset>& synsets() const { return synsets_; }
    bool empty() const { return synsets_.empty(); }

private:
    std::vector<synset> synsets_;
    std::map<std::string, std::string, std::less<>> preferred_of_;
};

}  // namespace taxograph
