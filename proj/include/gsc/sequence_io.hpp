#pragma once

#include <string>
#include <string_view>

#include "gsc/carpet.hpp"

namespace gsc {

/// Parses a sequence file:
///   {"version": 1,
///    "levels": [{"patterns": ["...\n.#.\n...", ...], "assignment": "uniform:0"}, ...],
///    "cycle": [...],                                  (optional)
///    "generator": {"name": "dim2", "params": {}}}     (optional)
/// Assignments are "uniform:i", "cyclic", "explicit:[i, j, ...]" or "seeded:<u64>".
/// A pattern may also be given as an array of row strings.
/// Throws ParseError (malformed_file, or the pattern error) on bad input.
SequenceSpec parse_sequence(std::string_view text);

SequenceSpec load_sequence(const std::string& path);

/// Canonical JSON form; parse_sequence(serialize_sequence(s)) == s.
std::string serialize_sequence(const SequenceSpec& spec);

std::string assignment_string(const Assignment& a);
Assignment parse_assignment(std::string_view text);

}  // namespace gsc
