#include "taxograph/thesaurus.hpp"

#include <utility>

#include "taxograph/errors.hpp"

namespace taxograph {

thesaurus::thesaurus(std::vector<synset> synsets) : synsets_(std::move(synsets)) {
    for (const synset& group : synsets_) {
        auto enroll = [&](const std::string& text) {
            if (!is_normalized(text)) {
                throw error(errc::bad_argument,
                            "thesaurus entry \"" + text + "\" is not normalized text");
            }
            auto [it, inserted] = preferred_of_.emplace(text, group.preferred);
            if (!inserted) {
                throw error(errc::synonym_conflict,
                            "\"" + text + "\" appears in more than one synset");
            }
        };
        enroll(group.preferred);
        for (const std::string& variant : group.variants) {
            enroll(variant);
        }
    }
}

label thesaurus::resolve(const label& term) const {
    return label{resolve_text(term.text), term.kind};
}

std::string thesaurus::resolve_text(std::string_view text) const {
    auto it = preferred_of_.find(text);
    if (it == preferred_of_.end()) {
        return std::string(text);
    }
    return it->second;
}

bool thesaurus::are_synonyms(const label& a, const label& b) const {
    return resolve_text(a.text) == resolve_text(b.text);
}

}  // namespace taxograph
