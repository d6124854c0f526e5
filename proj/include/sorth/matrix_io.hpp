#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sorth/symbolic_matrix.hpp"

namespace sorth {

/// Canonical JSON form: {"n": int, "mode": "semi"|"special", "cells": rows}
/// where cell v encodes index |v|-1 and sign(v); v = 0 is forbidden and semi
/// mode requires every v > 0. Readers reject non-permutation columns.
std::string to_json(const SymbolicMatrix& m);
SymbolicMatrix matrix_from_json(const std::string& text);

/// Plain-text form: row-major "a3" / "-a3" tokens separated by whitespace.
/// A file without any minus sign reads back in semi mode.
std::string to_text(const SymbolicMatrix& m);
SymbolicMatrix matrix_from_text(const std::string& text);

/// Dispatches on the ".json" extension, text otherwise.
SymbolicMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const SymbolicMatrix& m);

}  // namespace sorth
