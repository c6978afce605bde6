#pragma once

// Tokenised documents, span annotations, label spaces with underspecified
// labels, and the BIO tag codecs bridging spans and token sequences.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weaklabel/errors.hpp"

namespace weaklabel {

struct Token {
    std::string text;
    int char_start = 0;  // code point offset into the document text
    int char_end = 0;
    std::optional<std::string> pos;
    std::optional<std::string> lemma;
    // Surface features derived from text; see derive_flags() for the rules.
    bool is_title = false;
    bool is_upper = false;
    bool is_digit = false;
    bool is_currency = false;

    Token() = default;
    Token(std::string text, int char_start, int char_end);
    void derive_flags();
};

struct Span {
    int start = 0;  // token index, inclusive
    int end = 0;    // token index, exclusive
    std::string label;

    Span() = default;
    Span(int start, int end, std::string label)
        : start(start), end(end), label(std::move(label)) {}
    friend bool operator==(const Span&, const Span&) = default;
};

struct Document {
    std::string doc_id;
    std::string text;
    std::vector<Token> tokens;
    std::map<std::string, std::vector<Span>> layers;
    // Gold annotations ride along for evaluation only; aggregation never sees them.
    std::optional<std::vector<Span>> gold_spans;
    std::optional<std::string> gold_class;

    int size() const { return static_cast<int>(tokens.size()); }
};

enum class Mode { Sequence, Classification };

// Observed-symbol index 0 is always VOID (the labelling function abstained).
inline constexpr int kVoidSymbol = 0;

// The label space ties together three alphabets:
//  - user labels: concrete labels plus underspecified labels, each of which
//    names a non-empty subset of the concrete ones;
//  - latent states: O, B-c, I-c per concrete label (sequence mode) or the
//    concrete labels themselves (classification mode);
//  - observed symbols: VOID plus one symbol per (prefix, label) combination,
//    underspecified labels included, so the observed alphabet can be larger
//    than the latent one.
class LabelSpace {
public:
    static LabelSpace sequence(std::vector<std::string> concrete,
                               std::map<std::string, std::vector<std::string>> underspecified = {});
    static LabelSpace classification(std::vector<std::string> concrete,
                                     std::map<std::string, std::vector<std::string>> underspecified = {});

    Mode mode() const { return mode_; }
    const std::vector<std::string>& concrete() const { return concrete_; }
    const std::map<std::string, std::vector<std::string>>& underspecified() const {
        return underspecified_;
    }

    int num_states() const { return static_cast<int>(states_.size()); }
    int num_symbols() const { return static_cast<int>(symbols_.size()); }
    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    int o_state() const { return mode_ == Mode::Sequence ? 0 : -1; }

    int state_index(const std::string& name) const;   // -1 if unknown
    int symbol_index(const std::string& name) const;  // -1 if unknown

    bool is_label(const std::string& label) const;
    bool is_concrete(const std::string& label) const;
    // spec(c) = {c} for concrete c, the declared subset for underspecified.
    const std::vector<std::string>& specialization(const std::string& label) const;

    // Observed symbol for a labelled position: B-/I- prefixed in sequence
    // mode, the bare label in classification mode.
    int observed_symbol(const std::string& label, bool begin = true) const;
    int latent_state(const std::string& concrete_label, bool begin = true) const;

    // VOID is compatible with every state; a prefixed symbol of label x is
    // compatible with the same-prefix state of concrete c iff c is in spec(x).
    // Classification mode drops the prefix condition.
    bool compatible(int symbol, int state) const { return compat_[symbol][state]; }
    const std::vector<int>& compatible_states(int symbol) const {
        return compat_states_[symbol];
    }
    // True when the symbol carries a concrete (fully specified) label.
    bool concrete_symbol(int symbol) const { return concrete_symbol_[symbol]; }
    // Label part of a symbol ("" for VOID), e.g. "B-ENT" -> "ENT".
    const std::string& symbol_label(int symbol) const { return symbol_label_[symbol]; }
    const std::string& state_label(int state) const { return state_label_[state]; }

    // Structural BIO constraints on latent sequences: I-x may only follow
    // B-x or I-x, and cannot start a sequence. Classification mode is
    // unconstrained.
    bool valid_start(int state) const;
    bool valid_transition(int from, int to) const;

private:
    LabelSpace() = default;
    void build(Mode mode, std::vector<std::string> concrete,
               std::map<std::string, std::vector<std::string>> underspecified);

    Mode mode_ = Mode::Sequence;
    std::vector<std::string> concrete_;
    std::map<std::string, std::vector<std::string>> underspecified_;
    std::vector<std::string> states_;
    std::vector<std::string> symbols_;
    std::map<std::string, int> state_idx_;
    std::map<std::string, int> symbol_idx_;
    std::vector<std::vector<bool>> compat_;  // [symbol][state]
    std::vector<std::vector<int>> compat_states_;
    std::vector<bool> concrete_symbol_;
    std::vector<std::string> symbol_label_;
    std::vector<std::string> state_label_;
    std::vector<int> state_kind_;  // 0 = O/class, 1 = B, 2 = I
    std::vector<int> state_concrete_;  // concrete label index per state (-1 for O)
};

// Sorts and validates spans: in-range, non-overlapping. Throws
// SpanOutOfRangeError / OverlappingSpansError.
std::vector<Span> checked_sorted_spans(const std::vector<Span>& spans, int n_tokens,
                                       const std::string& context);

// Latent tag sequence: O everywhere except B-x/I-x under the given spans.
// Labels must be concrete. Sequence mode only.
std::vector<int> encode_bio(const std::vector<Span>& spans, int n_tokens,
                            const LabelSpace& space);

// Observed-symbol sequence: VOID where no span covers the token; labels may
// be underspecified.
std::vector<int> encode_observed(const std::vector<Span>& spans, int n_tokens,
                                 const LabelSpace& space);

struct BioDecode {
    std::vector<Span> spans;
    int repairs = 0;  // I-x with no live B-x/I-x run repaired to B-x
};

// Inverse of encode_bio with a repair policy instead of rejection, so noisy
// externally produced tag sequences stay ingestible.
BioDecode decode_bio(const std::vector<int>& states, const LabelSpace& space);

}  // namespace weaklabel
