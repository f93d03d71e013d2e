#pragma once

// Strict reader for the matrix input file: a single JSON object with key "A"
// (list of integer rows) and an optional "name".

#include <string>

#include "wm/gcm.hpp"

namespace wm {

Gcm load_gcm_text(const std::string& text);
Gcm load_gcm_file(const std::string& path);

}  // namespace wm
