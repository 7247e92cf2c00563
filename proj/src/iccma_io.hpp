#pragma once

#include <string>
#include <string_view>

#include "framework.hpp"

namespace abaf {

/// Parses the ICCMA ABA format:
///
///     p aba <n>          header, atoms are 1..n
///     a <i>              atom i is an assumption
///     c <i> <j>          atom j is the contrary of assumption i
///     r <h> <b1> .. <bk> rule h <- b1,..,bk (k >= 0)
///
/// Lines starting with '#' are comments, except that `# query <i>` also
/// records a default query atom. Throws ParseError.
Framework parse_iccma(std::string_view text);
Framework parse_iccma_file(const std::string& path);

/// Inverse of parse_iccma; output depends only on the framework.
std::string to_iccma(const Framework& fw);

}  // namespace abaf
