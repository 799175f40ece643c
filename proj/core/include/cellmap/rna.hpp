#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellmap/maps.hpp"

namespace cellmap {

// An RNA diagram: positions 1..N on one or two backbones with a partial
// matching of arcs. Backbone 1 is 1..split, backbone 2 is split+1..N.
struct Diagram {
    int positions = 0;      // N
    int backbones = 1;      // 1 or 2
    int split = 0;          // last position of backbone 1 (two-backbone only)
    std::vector<std::pair<int, int>> arcs;  // i<j, sorted by i, disjoint

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Validating constructors; arcs may be given in any order/orientation and
// are normalized.
Diagram make_diagram(int positions, std::vector<std::pair<int, int>> arcs);
Diagram make_interaction(int positions, int split, std::vector<std::pair<int, int>> arcs);

bool has_exterior_arc(const Diagram& d);

// Poincare dual: paired positions become plain half-edges in position order,
// arcs become alpha, the backbone becomes the rainbow. Unpaired positions
// carry no half-edges and are dropped.
UnicellularMap diagram_to_unicellular(const Diagram& d);

// Two-backbone flavor; requires at least one exterior arc.
BicellularMap diagram_to_bicellular(const Diagram& d);

// The inverse layout: one position per plain half-edge in face order.
Diagram map_to_diagram(const UnicellularMap& u);
Diagram map_to_diagram(const BicellularMap& b);

// Genus of the dual map; unpaired positions do not affect it.
int genus_of_diagram(const Diagram& d);

// Position bookkeeping for rewire: original position -> half-edge of the
// bicellular dual -> position in the rewired diagram. Unpaired positions are
// carried with empty half_edge/new_pos.
struct RewireTrace {
    struct Row {
        int orig_pos = 0;
        std::optional<int> half_edge;
        std::optional<int> new_pos;

        friend bool operator==(const Row&, const Row&) = default;
    };
    std::vector<Row> rows;
    int genus_before = 0;
    int genus_after = 0;
    int arcs_before = 0;
    int arcs_after = 0;
};

// The two-backbone-to-one-backbone pipeline: bicellular dual, glue the first
// plant (eta), lay the result back out as a diagram. The output gains one
// arc (the first rainbow becomes a real arc) and one genus.
std::pair<Diagram, RewireTrace> rewire(const Diagram& d);

// Delimited text, header "orig_pos half_edge new_pos", "-" for empty fields.
std::string write_trace(const RewireTrace& trace);

}  // namespace cellmap
