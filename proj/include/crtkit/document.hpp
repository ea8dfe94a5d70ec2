#pragma once

#include "crtkit/crt_module.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace crtkit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wire form of a CRTModule: top-level keys "O", "U", "T" (arrays of 8
// canonical orders lists), "maps" (the 12 families, 8 matrices each, row
// arrays; degenerate shapes encode as []), plus optional "name" and
// "provenance". Unknown fields are rejected by name. Document integers must
// fit in 64 bits; internal arithmetic stays arbitrary-precision.
struct ModuleDocument {
    CRTModule module;
    std::optional<std::string> name;
    std::optional<std::string> provenance;

    bool operator==(const ModuleDocument&) const = default;
};

ModuleDocument parse_module_document(const std::string& text);
std::string render_module_document(const ModuleDocument& doc);

// File variants; IO failures surface as ParseError (load) or
// std::runtime_error (save).
ModuleDocument load_module_document(const std::string& path);
void save_module_document(const ModuleDocument& doc, const std::string& path);

} // namespace crtkit
