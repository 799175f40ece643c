#pragma once

#include <utility>
#include <variant>

#include "cellmap/maps.hpp"

namespace cellmap {

// Either a pair of unicellular maps (the class III side) or one bicellular
// map (the class I/II side).
class DecompositionResult {
public:
    using Pair = std::pair<UnicellularMap, UnicellularMap>;

    static DecompositionResult from_pair(UnicellularMap u1, UnicellularMap u2) {
        return DecompositionResult(Pair(std::move(u1), std::move(u2)));
    }
    static DecompositionResult from_bicellular(BicellularMap b) {
        return DecompositionResult(std::move(b));
    }

    bool is_pair() const { return std::holds_alternative<Pair>(value_); }
    const Pair& pair() const { return std::get<Pair>(value_); }
    const BicellularMap& bicellular() const { return std::get<BicellularMap>(value_); }

    friend bool operator==(const DecompositionResult&, const DecompositionResult&) = default;

private:
    explicit DecompositionResult(std::variant<Pair, BicellularMap> v)
        : value_(std::move(v)) {}

    std::variant<Pair, BicellularMap> value_;
};

// Gluing: splices u1's whole face right after u2's L and turns u1's plant
// edge into a real edge. The result has edges(u1)+edges(u2)+1 edges, genus
// g1+g2, and is always class III. u1 and/or u2 may be the plant-only map.
UnicellularMap theta(const UnicellularMap& u1, const UnicellularMap& u2);

// Cutting, the inverse of theta. Requires class III; splits off the face
// interval 1..alpha(1) as u1 and leaves the rest as u2.
std::pair<UnicellularMap, UnicellularMap> psi(const UnicellularMap& u);

// Gluing the first plant of a bicellular map into the vertex of L2: the two
// faces merge into (L2, L1, 1..m, R1, m+1..2n, R2). Raises the genus by one
// and sends BI to class I, BII to class II.
UnicellularMap eta(const BicellularMap& b);

// Cutting, the inverse of eta. Requires class I or II; the edge {1, alpha(1)}
// becomes the first rainbow, with split index alpha(1)-2.
BicellularMap varsigma(const UnicellularMap& u);

UnicellularMap beta_forward(const DecompositionResult& x);

// Dispatches on the map class: III -> psi, I/II -> varsigma. Genus 0 maps
// have no decomposition (DomainError).
DecompositionResult beta_inverse(const UnicellularMap& u);

}  // namespace cellmap
