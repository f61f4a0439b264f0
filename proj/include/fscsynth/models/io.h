#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fscsynth/models/errors.h"
#include "fscsynth/models/pmc.h"
#include "fscsynth/models/pomdp.h"

namespace fscsynth {

/// Whitespace-separated token with its 1-based column.
struct Token {
    std::string_view text;
    std::size_t column;
};

/// One non-empty line with comments stripped.
struct SourceLine {
    std::size_t number;
    std::string_view text;
    std::vector<Token> tokens;
};

std::vector<SourceLine> splitLines(std::string_view text);

Pomdp parsePomdp(std::string_view text);
/// `header` lines are emitted as `#` comments before the model.
std::string writePomdp(Pomdp const& m, std::vector<std::string> const& header = {});

Pmc parsePmc(std::string_view text);
std::string writePmc(Pmc const& d, std::vector<std::string> const& header = {});

/// Lines of the form `name = value`; unknown names are errors.
Instantiation parseInstantiation(std::string_view text, ParameterTable const& params);
std::string writeInstantiation(Instantiation const& u, ParameterTable const& params);

std::string readFile(std::filesystem::path const& path);
void writeFile(std::filesystem::path const& path, std::string const& content);

/// 64-bit FNV-1a hash, rendered as 16 hex digits by hashString.
std::uint64_t fnv1a(std::string_view data);
std::string hashString(std::string_view data);

}  // namespace fscsynth
