#pragma once

#include <stdexcept>
#include <string>

namespace bubblegram {

/// The hypothesized pulse has no support inside the analyzed window
/// (basis identically zero). Distinct from numerical failure.
class HypothesisUnsupported : public std::runtime_error {
public:
    explicit HypothesisUnsupported(const std::string& msg) : std::runtime_error(msg) {}
};

/// Gram matrix of the (d, e) basis is singular or too ill-conditioned to invert.
class DegenerateBasis : public std::runtime_error {
public:
    explicit DegenerateBasis(const std::string& msg) : std::runtime_error(msg) {}
};

/// A bubblegram contained no valid (non-sentinel) cell to report.
class NoDetection : public std::runtime_error {
public:
    explicit NoDetection(const std::string& msg) : std::runtime_error(msg) {}
};

/// File I/O or format failure, with path context in the message.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bubblegram
