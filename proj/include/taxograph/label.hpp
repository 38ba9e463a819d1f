#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace taxograph {

// Optional word-role tag. Metadata only: two labels with the same text are the
// same label regardless of tag.
enum class label_kind { untagged, object, action };

// A label as it appears in a published set, before any cleaning.
struct raw_label {
    std::string text;
};

// A normalized atomic or compound label. Identity is the text; containers key
// on it. operator== compares all fields and is what round-trip tests use.
struct label {
    std::string text;
    label_kind kind = label_kind::untagged;

    friend bool operator==(const label&, const label&) = default;
    friend auto operator<=>(const label& a, const label& b) { return a.text <=> b.text; }
};

enum class curation_action { keep, map_synonym, decompose, drop };

// An auditable per-raw override: how one published label is to be handled,
// and why. `clusters` scopes the record to merges targeting those clusters
// (empty = applies everywhere). Records are matched against the raw text
// (case-folded, whitespace-collapsed, punctuation intact) before
// normalization, then against the normalized text.
struct curation_record {
    std::string raw;
    curation_action action = curation_action::keep;
    std::vector<label> outputs;
    std::string reason;
    std::set<std::string> clusters;
};

// Rules consumed by decompose(): explicit records first, then multi-word
// exception terms kept intact, then a generic whitespace split.
struct decomposition_rules {
    std::vector<curation_record> records;
    std::set<std::string> exceptions;

    // Finds a record for `key` (a canon_key'd string) applicable when merging
    // into `cluster`. Cluster-scoped records beat global ones.
    const curation_record* find(std::string_view key, std::string_view cluster = {}) const;
};

// Case-folds and collapses whitespace runs, keeping punctuation. This is the
// key under which curation records are matched.
std::string canon_key(std::string_view text);

// True when `text` is already in normalized form (normalize would be identity).
bool is_normalized(std::string_view text);

// Lowercases, strips matched parenthetical qualifiers entirely, turns any
// other punctuation (hyphens, slashes, commas, ...) into token separators and
// collapses whitespace. Idempotent. Throws error{errc::empty_label} when
// nothing survives.
label normalize(const raw_label& raw);

// Splits a normalized label into atomic labels. Explicit records win, then
// exception terms stay intact, then whitespace tokens in source order.
// Never drops: always returns at least one label (drop-action records are a
// framework-level concern and are ignored here).
std::vector<label> decompose(const label& input, const decomposition_rules& rules);

}  // namespace taxograph
