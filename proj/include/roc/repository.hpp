#pragma once

#include <string>

#include "roc/cbr.hpp"

namespace roc::cbr {

/// Loads a repository from a canonical .roc file of case blocks. Throws on
/// unreadable or invalid files.
Repository load_repository(const std::string& path);

/// Like load_repository, but a missing file yields an empty repository.
Repository load_repository_or_empty(const std::string& path);

/// Retains a learned case: inserts it and rewrites the file in canonical
/// form, so the read-back equals what was written. Throws on a duplicate id
/// or an unsolved case (no to-be fragments or no component map), leaving the
/// repository and file untouched.
void retain(Repository& repo, const Case& learned, const std::string& path);

}  // namespace roc::cbr
