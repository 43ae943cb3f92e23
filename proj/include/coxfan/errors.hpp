#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace coxfan {

// All library errors carry a short machine-readable kind; the CLI prints
// them as "ERROR:<kind>: message" and maps kinds to exit codes.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct input_error : error {
    explicit input_error(const std::string& w) : error("input", w) {}
};

struct dimension_error : error {
    explicit dimension_error(const std::string& w) : error("dimension", w) {}
};

// Signature outside the range the source material determines.
struct unsupported_signature_error : error {
    explicit unsupported_signature_error(const std::string& w)
        : error("unsupported-signature", w) {}
};

// Operation not available for this cone shape (v1 restrictions).
struct unsupported_error : error {
    explicit unsupported_error(const std::string& w) : error("unsupported", w) {}
};

struct domain_error : error {
    explicit domain_error(const std::string& w) : error("domain", w) {}
};

// Query point lies on a wall of the decomposition.
struct wall_error : error {
    explicit wall_error(const std::string& w) : error("wall", w) {}
};

// Traversal/witness budget exhausted; message carries partial diagnostics.
struct budget_error : error {
    explicit budget_error(const std::string& w) : error("budget", w) {}
};

// Point configuration fails a generality requirement.
struct degenerate_error : error {
    explicit degenerate_error(const std::string& w) : error("degenerate", w) {}
};

}  // namespace coxfan
