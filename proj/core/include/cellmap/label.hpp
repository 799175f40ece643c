#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cellmap {

// Half-edge labels. Plain half-edges carry a positive integer; the rainbow
// ends carry one of six tags: L/R on unicellular maps, L1/R1/L2/R2 on
// bicellular maps. Keeping the rainbow ends as distinct symbols (instead of
// overloading integers) avoids collisions between a face's first plain label
// and its rainbow end when the split index is 1.
enum class LabelKind : std::uint8_t { Plain, L, R, L1, R1, L2, R2 };

struct Label {
    LabelKind kind{LabelKind::Plain};
    std::int32_t value{0};  // used only when kind == Plain

    static constexpr Label plain(int v) { return Label{LabelKind::Plain, v}; }
    constexpr bool is_plain() const { return kind == LabelKind::Plain; }

    // Note: this is a container ordering, not the ambient order of a map's
    // label set (which depends on the split index; see LabelSet).
    friend constexpr auto operator<=>(const Label&, const Label&) = default;
};

inline constexpr Label L{LabelKind::L, 0};
inline constexpr Label R{LabelKind::R, 0};
inline constexpr Label L1{LabelKind::L1, 0};
inline constexpr Label R1{LabelKind::R1, 0};
inline constexpr Label L2{LabelKind::L2, 0};
inline constexpr Label R2{LabelKind::R2, 0};

std::string to_string(const Label& label);

// Inverse of to_string: "L", "R1", ... or a decimal integer. Returns nullopt
// for anything else.
std::optional<Label> label_from_token(std::string_view token);

// An ordered finite label universe. Indices 0..size()-1 enumerate the labels
// in the ambient linear order:
//   plain range:  1 < 2 < ... < k
//   unicellular:  L < 1 < ... < 2n < R
//   bicellular:   L1 < 1 < ... < m < R1 < L2 < m+1 < ... < 2n < R2
// The ambient order is exactly the canonical face traversal, so "smaller"
// means "visited earlier by the face".
class LabelSet {
public:
    enum class Shape : std::uint8_t { PlainRange, Unicellular, Bicellular };

    static LabelSet plain_range(int count);
    static LabelSet unicellular(int edges);
    static LabelSet bicellular(int edges, int split);

    Shape shape() const { return shape_; }
    int edges() const { return n_; }  // Unicellular/Bicellular shapes
    int split() const { return m_; }  // Bicellular shape
    int size() const;

    Label at(int index) const;
    std::optional<int> find(const Label& label) const;
    int index_of(const Label& label) const;  // throws ValidationError if absent
    std::vector<Label> labels() const;

    friend bool operator==(const LabelSet&, const LabelSet&) = default;

private:
    LabelSet(Shape shape, int n, int m) : shape_(shape), n_(n), m_(m) {}

    Shape shape_;
    std::int32_t n_;
    std::int32_t m_;
};

}  // namespace cellmap
