#include "cellmap/label.hpp"

#include <charconv>

#include "cellmap/errors.hpp"

namespace cellmap {

std::string to_string(const Label& label) {
    switch (label.kind) {
        case LabelKind::Plain: return std::to_string(label.value);
        case LabelKind::L: return "L";
        case LabelKind::R: return "R";
        case LabelKind::L1: return "L1";
        case LabelKind::R1: return "R1";
        case LabelKind::L2: return "L2";
        case LabelKind::R2: return "R2";
    }
    return "?";
}

std::optional<Label> label_from_token(std::string_view token) {
    if (token.empty()) return std::nullopt;
    if (token == "L") return L;
    if (token == "R") return R;
    if (token == "L1") return L1;
    if (token == "R1") return R1;
    if (token == "L2") return L2;
    if (token == "R2") return R2;
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || v <= 0)
        return std::nullopt;
    return Label::plain(v);
}

LabelSet LabelSet::plain_range(int count) {
    if (count < 0) throw ValidationError("label range size must be non-negative");
    return LabelSet(Shape::PlainRange, count, 0);
}

LabelSet LabelSet::unicellular(int edges) {
    if (edges < 0) throw ValidationError("edge count must be non-negative");
    return LabelSet(Shape::Unicellular, edges, 0);
}

LabelSet LabelSet::bicellular(int edges, int split) {
    if (edges < 1) throw ValidationError("a bicellular map needs at least one edge");
    if (split < 1 || split > 2 * edges - 1)
        throw ValidationError("split index m out of range: need 1 <= m <= 2n-1, got m=" +
                              std::to_string(split) + " with n=" + std::to_string(edges));
    return LabelSet(Shape::Bicellular, edges, split);
}

int LabelSet::size() const {
    switch (shape_) {
        case Shape::PlainRange: return n_;
        case Shape::Unicellular: return 2 * n_ + 2;
        case Shape::Bicellular: return 2 * n_ + 4;
    }
    return 0;
}

Label LabelSet::at(int index) const {
    if (index < 0 || index >= size()) throw ValidationError("label index out of range");
    switch (shape_) {
        case Shape::PlainRange:
            return Label::plain(index + 1);
        case Shape::Unicellular:
            if (index == 0) return L;
            if (index == 2 * n_ + 1) return R;
            return Label::plain(index);
        case Shape::Bicellular:
            if (index == 0) return L1;
            if (index == m_ + 1) return R1;
            if (index == m_ + 2) return L2;
            if (index == 2 * n_ + 3) return R2;
            return index <= m_ ? Label::plain(index) : Label::plain(index - 2);
    }
    throw InternalError("unreachable label shape");
}

std::optional<int> LabelSet::find(const Label& label) const {
    switch (shape_) {
        case Shape::PlainRange:
            if (label.is_plain() && label.value >= 1 && label.value <= n_)
                return label.value - 1;
            return std::nullopt;
        case Shape::Unicellular:
            if (label == L) return 0;
            if (label == R) return 2 * n_ + 1;
            if (label.is_plain() && label.value >= 1 && label.value <= 2 * n_)
                return label.value;
            return std::nullopt;
        case Shape::Bicellular:
            if (label == L1) return 0;
            if (label == R1) return m_ + 1;
            if (label == L2) return m_ + 2;
            if (label == R2) return 2 * n_ + 3;
            if (label.is_plain() && label.value >= 1 && label.value <= 2 * n_)
                return label.value <= m_ ? label.value : label.value + 2;
            return std::nullopt;
    }
    return std::nullopt;
}

int LabelSet::index_of(const Label& label) const {
    if (auto i = find(label)) return *i;
    throw ValidationError("label " + to_string(label) + " is not in the label set");
}

std::vector<Label> LabelSet::labels() const {
    std::vector<Label> out;
    out.reserve(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) out.push_back(at(i));
    return out;
}

}  // namespace cellmap
