#pragma once

#include <string>

namespace massgate {

// Porter (1980) suffix-stripping stem of a single lower-case word.
std::string porter_stem(const std::string& word);

// Stems a parameter name: splits on '_', '-' and camelCase boundaries,
// lower-cases and stems each piece, rejoins with '_'. Token must be
// non-empty.
std::string stem_token(const std::string& token);

}  // namespace massgate
