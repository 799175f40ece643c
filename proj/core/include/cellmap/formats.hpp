#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cellmap/maps.hpp"
#include "cellmap/rna.hpp"

namespace cellmap {

using AnyMap = std::variant<UnicellularMap, BicellularMap>;

// Cycle-notation text form, e.g. "(L,3,2,1,4)(R)". Whitespace-insensitive;
// labels not mentioned in any cycle are fixed points. `line` seeds the
// line number used in error positions.
Permutation parse_cycles(std::string_view text, const LabelSet& set, int line = 1,
                         int column = 1);

// Canonical emission: cycles sorted by their minimum label, each rotated to
// start at it, fixed points included. Round-trips through parse_cycles.
std::string format_cycles(const Permutation& p);

// One map record:
//   type unicellular|bicellular
//   edges <n>
//   m <m>              (bicellular only)
//   alpha <cycles>     (rainbow cycles may be omitted; they are implied)
//   sigma <cycles>     (optional; computed canonically when absent)
// parse_map_record accepts exactly one record (blank lines around it are
// fine); parse_map_records splits a stream of blank-line separated records.
AnyMap parse_map_record(std::string_view text);
std::vector<AnyMap> parse_map_records(std::string_view text);
std::string write_map_record(const UnicellularMap& u);
std::string write_map_record(const BicellularMap& b);
std::string write_map_record(const AnyMap& m);

// One diagram record:
//   N <int>
//   backbones <a..b>[ <c..d>]
//   arcs (i,j) (k,l) ...
Diagram parse_diagram(std::string_view text);
std::string write_diagram(const Diagram& d);

// True when the first keyword of the text is a diagram's "N" rather than a
// map record's "type".
bool looks_like_diagram(std::string_view text);

}  // namespace cellmap
