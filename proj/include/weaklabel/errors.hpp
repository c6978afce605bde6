#pragma once

#include <stdexcept>
#include <string>

namespace weaklabel {

// Two error families, matching the CLI exit-code contract:
// configuration problems exit with 2, data problems with 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverlappingSpansError : DataError {
    OverlappingSpansError(int a_start, int a_end, int b_start, int b_end,
                          const std::string& context)
        : DataError("overlapping spans [" + std::to_string(a_start) + "," +
                    std::to_string(a_end) + ") and [" + std::to_string(b_start) +
                    "," + std::to_string(b_end) + ") in " + context),
          a_start(a_start), a_end(a_end), b_start(b_start), b_end(b_end) {}
    int a_start, a_end, b_start, b_end;
};

struct UnknownLabelError : DataError {
    explicit UnknownLabelError(const std::string& label)
        : DataError("unknown label: " + label), label(label) {}
    std::string label;
};

struct SpanOutOfRangeError : DataError {
    SpanOutOfRangeError(int start, int end, int n_tokens)
        : DataError("span [" + std::to_string(start) + "," + std::to_string(end) +
                    ") out of range for " + std::to_string(n_tokens) + " tokens") {}
};

struct UnmappedLabelError : DataError {
    explicit UnmappedLabelError(const std::string& label)
        : DataError("no mapping for external label: " + label), label(label) {}
    std::string label;
};

struct EmptyEntryError : DataError {
    EmptyEntryError() : DataError("empty gazetteer entry") {}
};

struct MissingLayerError : DataError {
    explicit MissingLayerError(const std::string& layer)
        : DataError("missing layer: " + layer), layer(layer) {}
    std::string layer;
};

struct CycleError : ConfigError {
    explicit CycleError(const std::string& cycle)
        : ConfigError("labelling function dependency cycle: " + cycle) {}
};

struct NegativeGammaError : ConfigError {
    NegativeGammaError() : ConfigError("gamma must be non-negative") {}
};

struct EmptyCorpusError : DataError {
    EmptyCorpusError() : DataError("empty corpus") {}
};

struct ModeMismatchError : DataError {
    explicit ModeMismatchError(const std::string& what) : DataError(what) {}
};

struct NoGoldError : DataError {
    NoGoldError() : DataError("no gold annotations in scored documents") {}
};

}  // namespace weaklabel
