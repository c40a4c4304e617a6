#ifndef BDCASE_PRINTER_HPP
#define BDCASE_PRINTER_HPP

#include <optional>
#include <string>

#include "bdcase/formula.hpp"

namespace bdcase {

// Concrete syntax output; parse(print(a)) == a structurally. Re-sugars
// probes, top, bot and =>> when the exact defining shape is present.
std::string print_inner(const Inner& phi);
std::string print_outer(const Outer& alpha);

// Shape detectors used by the printer and the quasi-classicality check.
std::optional<std::pair<ProbeKind, Inner>> match_probe(const Inner& phi);
bool is_top_shape(const Inner& phi);
bool is_bot_shape(const Inner& phi);
std::optional<std::pair<Inner, Inner>> match_internal_entailment(const Inner& phi);

} // namespace bdcase

#endif
