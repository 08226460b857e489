#pragma once

#include <string>

#include "gsc/sequence_io.hpp"

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline gsc::SequenceSpec load_fixture(const std::string& name) { return gsc::load_sequence(fixture(name)); }
