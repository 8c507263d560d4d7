#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "binestim/model.hpp"
#include "binestim/referee.hpp"

namespace binestim {

/// Parses the line-oriented `binestim-v1` instance format:
///
///     binestim-v1
///     delta 1/35
///     n 4
///     announce 3/5 49/100 1/5 1/5
///     actual 3/5 1/2 1/5 1/5      # optional
///
/// `#` starts a comment. Throws ParseError on malformed input and
/// BadParameter when the announcement itself is invalid.
Instance parse_instance(std::string_view text);
std::string render_instance(const Instance& instance);

Instance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const Instance& instance);

/// Transcript export with fields delta, announced[], actual[], placements[],
/// bins[][], counters{}; rationals are "p/q" strings.
std::string transcript_to_json(const Transcript& transcript, int indent = 2);
/// Rebuilds a transcript by replaying the recorded placements through the
/// referee's packing state (so infeasible files are rejected).
Transcript transcript_from_json(std::string_view json);

}  // namespace binestim
