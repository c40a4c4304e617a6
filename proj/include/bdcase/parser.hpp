#ifndef BDCASE_PARSER_HPP
#define BDCASE_PARSER_HPP

#include <string>

#include "bdcase/formula.hpp"

namespace bdcase {

// Concrete syntax, both layers. `#` starts a line comment, whitespace is
// insignificant. Probes, top, bot and =>> are desugared while parsing.
Inner parse_inner(const std::string& text);
Outer parse_outer(const std::string& text);

} // namespace bdcase

#endif
