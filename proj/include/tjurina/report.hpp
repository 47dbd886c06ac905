#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tjurina/deformation.hpp"

namespace tjurina {

using Json = nlohmann::ordered_json;

// Line-oriented input document:
//   vars: x,y,z,v,w
//   defparams: e            (optional)
//   matrix: 2 x 3
//   w, y, x
//   z, w, y+v^3-e
//   options: chart=1        (optional; also experimental-t3, no-ade-assumption)
// '#' starts a comment; blank lines are ignored.
struct InputDoc {
    std::string source_name;
    std::vector<std::string> vars;
    std::vector<std::string> defparams;
    int rows = 0, cols = 0;
    std::vector<std::string> entries; // row-major expression strings
    std::map<std::string, std::string> options;

    bool has_option(const std::string& key) const { return options.count(key) > 0; }
};

InputDoc parse_input(const std::string& text, const std::string& name);
InputDoc load_input(const std::string& path);

// The parsed matrix over a neutral global context holding vars + defparams.
PolyMatrix doc_matrix(const InputDoc& doc);
// Base presentation (deformation parameters set to zero).
Presentation doc_presentation(const InputDoc& doc);
DeformedPresentation doc_deformed(const InputDoc& doc);

// One JSON object per CLI command; every command is deterministic given the
// input document (timings aside).
Json cmd_validate(const InputDoc& doc);
Json cmd_jet(const InputDoc& doc);
Json cmd_transform(const InputDoc& doc, int chart /* 0 = all */);
Json cmd_sing(const InputDoc& doc);
Json cmd_tau(const InputDoc& doc, bool upstairs, bool downstairs);
Json cmd_flatness(const InputDoc& doc);
Json cmd_fiber(const InputDoc& doc, const std::vector<Rat>& at);
Json cmd_report(const InputDoc& doc);

// Canonical serialization used everywhere: ordered keys, rationals as "p/q"
// strings, 2-space indentation, trailing newline.
std::string render_json(const Json& j);

// Human-readable rendering of the command objects.
std::string render_text(const std::string& command, const Json& j);

} // namespace tjurina
