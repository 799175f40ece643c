#include "cellmap/rna.hpp"

#include <algorithm>
#include <sstream>

#include "cellmap/bijections.hpp"

namespace cellmap {

namespace {

std::vector<std::pair<int, int>> normalize_arcs(int positions,
                                                std::vector<std::pair<int, int>> arcs) {
    std::vector<char> used(static_cast<size_t>(positions + 1), 0);
    for (auto& [i, j] : arcs) {
        if (i < 1 || i > positions || j < 1 || j > positions)
            throw ValidationError("arc endpoint out of range 1..N");
        if (i == j) throw ValidationError("arc pairs a position with itself");
        if (i > j) std::swap(i, j);
        if (used[static_cast<size_t>(i)] || used[static_cast<size_t>(j)])
            throw ValidationError("position belongs to more than one arc");
        used[static_cast<size_t>(i)] = used[static_cast<size_t>(j)] = 1;
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

// 1-based half-edge numbers for the paired positions, in position order;
// 0 for unpaired positions.
std::vector<int> half_edge_numbers(const Diagram& d) {
    std::vector<char> paired(static_cast<size_t>(d.positions + 1), 0);
    for (auto [i, j] : d.arcs)
        paired[static_cast<size_t>(i)] = paired[static_cast<size_t>(j)] = 1;
    std::vector<int> number(static_cast<size_t>(d.positions + 1), 0);
    int next = 0;
    for (int p = 1; p <= d.positions; ++p)
        if (paired[static_cast<size_t>(p)]) number[static_cast<size_t>(p)] = ++next;
    return number;
}

Matching arc_matching(const Diagram& d, const std::vector<int>& number) {
    Matching pairs;
    pairs.reserve(d.arcs.size());
    for (auto [i, j] : d.arcs)
        pairs.emplace_back(number[static_cast<size_t>(i)], number[static_cast<size_t>(j)]);
    return pairs;
}

}  // namespace

Diagram make_diagram(int positions, std::vector<std::pair<int, int>> arcs) {
    if (positions < 0) throw ValidationError("position count must be non-negative");
    Diagram d;
    d.positions = positions;
    d.backbones = 1;
    d.arcs = normalize_arcs(positions, std::move(arcs));
    return d;
}

Diagram make_interaction(int positions, int split, std::vector<std::pair<int, int>> arcs) {
    if (positions < 2) throw ValidationError("two backbones need at least two positions");
    if (split < 1 || split >= positions)
        throw ValidationError("backbone split out of range 1..N-1");
    Diagram d;
    d.positions = positions;
    d.backbones = 2;
    d.split = split;
    d.arcs = normalize_arcs(positions, std::move(arcs));
    return d;
}

bool has_exterior_arc(const Diagram& d) {
    if (d.backbones != 2) return false;
    return std::any_of(d.arcs.begin(), d.arcs.end(),
                       [&](auto a) { return a.first <= d.split && a.second > d.split; });
}

UnicellularMap diagram_to_unicellular(const Diagram& d) {
    if (d.backbones != 1)
        throw PreconditionError("unicellular dual needs a one-backbone diagram");
    auto number = half_edge_numbers(d);
    return make_unicellular(static_cast<int>(d.arcs.size()), arc_matching(d, number));
}

BicellularMap diagram_to_bicellular(const Diagram& d) {
    if (d.backbones != 2)
        throw PreconditionError("bicellular dual needs a two-backbone diagram");
    if (!has_exterior_arc(d))
        throw DomainError("not an interaction structure: no arc joins the two backbones");
    auto number = half_edge_numbers(d);
    // paired positions of backbone 1 become 1..m
    int m = 0;
    for (int p = 1; p <= d.split; ++p) m = std::max(m, number[static_cast<size_t>(p)]);
    return make_bicellular(static_cast<int>(d.arcs.size()), m, arc_matching(d, number));
}

Diagram map_to_diagram(const UnicellularMap& u) {
    Diagram d;
    d.positions = 2 * u.edges();
    d.backbones = 1;
    d.arcs = u.pairing();
    return d;
}

Diagram map_to_diagram(const BicellularMap& b) {
    Diagram d;
    d.positions = 2 * b.edges();
    d.backbones = 2;
    d.split = b.split();
    d.arcs = b.pairing();
    return d;
}

int genus_of_diagram(const Diagram& d) {
    if (d.backbones == 1) return genus_unicellular(diagram_to_unicellular(d));
    return genus_bicellular(diagram_to_bicellular(d));
}

std::pair<Diagram, RewireTrace> rewire(const Diagram& d) {
    BicellularMap b = diagram_to_bicellular(d);
    UnicellularMap u = eta(b);
    Diagram out = map_to_diagram(u);

    RewireTrace trace;
    trace.genus_before = genus_bicellular(b);
    trace.genus_after = genus_unicellular(u);
    trace.arcs_before = static_cast<int>(d.arcs.size());
    trace.arcs_after = static_cast<int>(out.arcs.size());
    if (trace.arcs_after != trace.arcs_before + 1)
        throw InternalError("rewire did not add exactly one arc");
    if (trace.genus_after != trace.genus_before + 1)
        throw InternalError("rewire did not raise the genus by one");

    // eta's rename: bicellular half-edge h lands at h+1 below the split and
    // h+2 above it (slots 1 and m+2 are taken by the old first rainbow).
    const int m = b.split();
    auto number = half_edge_numbers(d);
    for (int p = 1; p <= d.positions; ++p) {
        RewireTrace::Row row;
        row.orig_pos = p;
        if (int h = number[static_cast<size_t>(p)]; h != 0) {
            row.half_edge = h;
            row.new_pos = h <= m ? h + 1 : h + 2;
        }
        trace.rows.push_back(row);
    }
    return {std::move(out), std::move(trace)};
}

std::string write_trace(const RewireTrace& trace) {
    std::ostringstream out;
    out << "orig_pos half_edge new_pos\n";
    for (const auto& row : trace.rows) {
        out << row.orig_pos << ' ';
        if (row.half_edge)
            out << *row.half_edge;
        else
            out << '-';
        out << ' ';
        if (row.new_pos)
            out << *row.new_pos;
        else
            out << '-';
        out << '\n';
    }
    return out.str();
}

}  // namespace cellmap
