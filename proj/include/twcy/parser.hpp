#pragma once

#include <optional>
#include <string>

#include "twcy/presentation.hpp"

namespace twcy {

/**
 * A presentation file is a JSON document:
 *   {"family": "quantum-affine", "generators": ["x1", "x2"],
 *    "q": [["1", "2"], ["1/2", "1"]], "options": {"cutoff": 6, "dim": 1}}
 * with "M" (2 x 2) for the family "dimension-2-M" and "relations" (a list of
 * relations, each a list of [left, right, coefficient] terms) for "quadratic".
 * Errors are InputError with a message "<source>:<location>: <what>".
 */
struct PresentationFile {
    std::string family;
    QuadraticPresentation presentation;
    std::optional<Matrix> q;
    std::optional<Matrix> m;
    std::optional<int> cutoff;
    std::optional<int> dim;
};

PresentationFile parse_presentation(const std::string& text, const std::string& source = "<input>");
PresentationFile parse_presentation_file(const std::string& path);

}  // namespace twcy
