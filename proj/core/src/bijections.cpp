#include "cellmap/bijections.hpp"

namespace cellmap {

namespace {

int plain_partner(const UnicellularMap& u, int h) {
    Label p = u.alpha().apply(Label::plain(h));
    if (!p.is_plain()) throw InternalError("plain half-edge paired with a rainbow end");
    return p.value;
}

}  // namespace

UnicellularMap theta(const UnicellularMap& u1, const UnicellularMap& u2) {
    const int j = u1.edges();
    const int g1 = genus_unicellular(u1);
    const int g2 = genus_unicellular(u2);
    // The spliced face is (L_u2, L_u1, 1_u1..2j_u1, R_u1, 1_u2..2k_u2, R_u2),
    // so after the order-preserving rename u1's rainbow becomes the real edge
    // {1, 2j+2}, u1's plains shift by 1 and u2's plains by 2j+2.
    Matching pairs;
    pairs.reserve(static_cast<size_t>(j + u2.edges() + 1));
    pairs.emplace_back(1, 2 * j + 2);
    for (auto [a, b] : u1.pairing()) pairs.emplace_back(a + 1, b + 1);
    for (auto [a, b] : u2.pairing()) pairs.emplace_back(a + 2 * j + 2, b + 2 * j + 2);
    UnicellularMap out = make_unicellular(j + u2.edges() + 1, pairs);
    if (genus_unicellular(out) != g1 + g2)
        throw InternalError("gluing changed the genus budget");
    if (classify_unicellular(out) != MapClass::III)
        throw InternalError("glued map is not class III");
    return out;
}

std::pair<UnicellularMap, UnicellularMap> psi(const UnicellularMap& u) {
    if (classify_unicellular(u) != MapClass::III)
        throw PreconditionError("psi requires a class III map");
    const int n = u.edges();
    const int r = plain_partner(u, 1);
    if (r % 2 != 0)
        throw InternalError("cut partner is odd on a class III map");
    // Class III makes alpha preserve the face interval {1..r}; the pair
    // (1,r) becomes u1's rainbow, everything else restricts and shifts.
    Matching inner, outer;
    for (auto [a, b] : u.pairing()) {
        if (a == 1) continue;  // the cut edge itself
        const bool a_in = a < r, b_in = b < r;
        if (a_in != b_in)
            throw InternalError("cut interval is not closed under alpha");
        if (a_in)
            inner.emplace_back(a - 1, b - 1);
        else
            outer.emplace_back(a - r, b - r);
    }
    UnicellularMap u1 = make_unicellular((r - 2) / 2, inner);
    UnicellularMap u2 = make_unicellular(n - r / 2, outer);
    if (genus_unicellular(u1) + genus_unicellular(u2) != genus_unicellular(u))
        throw InternalError("cutting changed the genus budget");
    return {std::move(u1), std::move(u2)};
}

UnicellularMap eta(const BicellularMap& b) {
    const int n = b.edges();
    const int m = b.split();
    const int g = genus_bicellular(b);
    const MapClass in_class = classify_bicellular(b);
    // Merged face: (L2, L1, 1..m, R1, m+1..2n, R2). The first rainbow
    // (L1,R1) survives as a real edge; (L2,R2) becomes the new plant edge.
    std::vector<Label> face;
    face.reserve(static_cast<size_t>(2 * n + 4));
    face.push_back(L2);
    face.push_back(L1);
    for (int i = 1; i <= m; ++i) face.push_back(Label::plain(i));
    face.push_back(R1);
    for (int i = m + 1; i <= 2 * n; ++i) face.push_back(Label::plain(i));
    face.push_back(R2);
    std::vector<std::pair<Label, Label>> pairs;
    for (const auto& cycle : b.beta().cycles()) pairs.emplace_back(cycle[0], cycle[1]);
    UnicellularMap out = canonical_relabel_unicellular(face, pairs);
    if (genus_unicellular(out) != g + 1)
        throw InternalError("gluing did not raise the genus by one");
    const MapClass out_class = classify_unicellular(out);
    if (out_class != (in_class == MapClass::BI ? MapClass::I : MapClass::II))
        throw InternalError("gluing did not preserve the plant class");
    return out;
}

BicellularMap varsigma(const UnicellularMap& u) {
    const MapClass c = classify_unicellular(u);  // rejects the plant-only map
    if (c == MapClass::III)
        throw PreconditionError("varsigma requires a class I or II map");
    const int n = u.edges();
    const int g = genus_unicellular(u);
    const int r = plain_partner(u, 1);
    // Cutting {1, alpha(1)} splits the face into omega1 = (1..r) and
    // omega2 = (L, r+1..2n, R); the cut edge and the old plant edge become
    // the two rainbows, giving split index r-2.
    std::vector<Label> face1, face2;
    for (int i = 1; i <= r; ++i) face1.push_back(Label::plain(i));
    face2.push_back(L);
    for (int i = r + 1; i <= 2 * n; ++i) face2.push_back(Label::plain(i));
    face2.push_back(R);
    std::vector<std::pair<Label, Label>> pairs;
    for (const auto& cycle : u.alpha().cycles()) pairs.emplace_back(cycle[0], cycle[1]);
    BicellularMap out = canonical_relabel_bicellular(face1, face2, pairs);
    if (out.split() != r - 2)
        throw InternalError("cut produced an unexpected split index");
    if (genus_bicellular(out) != g - 1)
        throw InternalError("cutting did not lower the genus by one");
    if (classify_bicellular(out) != (c == MapClass::I ? MapClass::BI : MapClass::BII))
        throw InternalError("cutting did not preserve the plant class");
    return out;
}

UnicellularMap beta_forward(const DecompositionResult& x) {
    if (x.is_pair()) return theta(x.pair().first, x.pair().second);
    return eta(x.bicellular());
}

DecompositionResult beta_inverse(const UnicellularMap& u) {
    if (u.edges() == 0 || genus_unicellular(u) == 0)
        throw DomainError("no decomposition exists for a genus 0 map");
    if (classify_unicellular(u) == MapClass::III) {
        auto [u1, u2] = psi(u);
        return DecompositionResult::from_pair(std::move(u1), std::move(u2));
    }
    return DecompositionResult::from_bicellular(varsigma(u));
}

}  // namespace cellmap
