#pragma once

#include <stdexcept>
#include <string>

namespace srt {

// Regime where a requested quantity has no defined value (e.g. invariant
// sections in an odd deficit, desingularization data for O(V) quotients).
// Distinct from invalid arguments: the input is well-formed, the theory
// simply does not cover it here.
class UnsupportedRegime : public std::domain_error {
public:
    explicit UnsupportedRegime(const std::string& what)
        : std::domain_error(what) {}
};

// Raised when an exact computation would exceed the hard-coded size caps
// (character expansions, series truncations). Callers can retry with
// smaller bounds; results are never approximated.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what)
        : std::runtime_error(what) {}
};

// A sampled point fell in a degenerate locus (e.g. rank dropped below the
// generic value); callers usually resample with a fresh seed.
class NonGenericPoint : public std::runtime_error {
public:
    explicit NonGenericPoint(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace srt
