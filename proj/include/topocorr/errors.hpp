#pragma once

#include <stdexcept>
#include <string>

namespace topocorr {

// A simplex with a repeated vertex, or otherwise unusable simplex input.
class MalformedSimplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A scalar field whose length does not match the complex it is paired with.
class DimensionMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// NaN or infinity where a finite value is required.
class NonFiniteValueError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Bottleneck distance between diagrams with different essential counts is
// infinite; anything that needs a finite number raises this instead of
// propagating a sentinel.
class IncomparableDiagramsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive oracle asked to enumerate an instance above its size bound.
class OracleSizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyCollectionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed bundle/OFF documents.
class BundleParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace topocorr
