#include "cellmap/maps.hpp"

#include <algorithm>

namespace cellmap {

const char* to_string(MapClass c) {
    switch (c) {
        case MapClass::I: return "I";
        case MapClass::II: return "II";
        case MapClass::III: return "III";
        case MapClass::BI: return "BI";
        case MapClass::BII: return "BII";
    }
    return "?";
}

Permutation canonical_face(const LabelSet& set) {
    const int k = set.size();
    std::vector<int> img(static_cast<size_t>(k));
    if (set.shape() == LabelSet::Shape::Bicellular) {
        const int b1 = set.split() + 2;  // block sizes: |omega1| = m+2
        for (int i = 0; i < b1; ++i) img[static_cast<size_t>(i)] = (i + 1) % b1;
        for (int i = b1; i < k; ++i)
            img[static_cast<size_t>(i)] = b1 + (i - b1 + 1) % (k - b1);
    } else {
        for (int i = 0; i < k; ++i) img[static_cast<size_t>(i)] = (i + 1) % k;
    }
    return Permutation::from_images(set, std::move(img));
}

namespace {

// Turns a matching on {1..2n} into alpha's plain images; validates that the
// matching is perfect.
std::vector<std::pair<int, int>> checked_matching(int n, const Matching& pairing) {
    if (static_cast<int>(pairing.size()) != n)
        throw ValidationError("pairing is not a perfect matching: expected " +
                              std::to_string(n) + " pairs, got " +
                              std::to_string(pairing.size()));
    std::vector<char> seen(static_cast<size_t>(2 * n + 1), 0);
    std::vector<std::pair<int, int>> out;
    out.reserve(pairing.size());
    for (auto [a, b] : pairing) {
        if (a < 1 || a > 2 * n || b < 1 || b > 2 * n)
            throw ValidationError("pairing entry out of range 1..2n");
        if (a == b) throw ValidationError("pairing entry pairs a half-edge with itself");
        if (seen[static_cast<size_t>(a)] || seen[static_cast<size_t>(b)])
            throw ValidationError("pairing repeats a half-edge");
        seen[static_cast<size_t>(a)] = seen[static_cast<size_t>(b)] = 1;
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
}

Matching plain_pairs_of(const Permutation& involution) {
    Matching out;
    const LabelSet& set = involution.labels();
    for (int i = 0; i < involution.size(); ++i) {
        Label a = set.at(i);
        if (!a.is_plain()) continue;
        Label b = set.at(involution.image(i));
        if (!b.is_plain()) continue;  // rainbow pairs are not part of the matching
        if (a.value < b.value) out.emplace_back(a.value, b.value);
    }
    return out;
}

}  // namespace

Matching UnicellularMap::pairing() const { return plain_pairs_of(alpha_); }
Matching BicellularMap::pairing() const { return plain_pairs_of(beta_); }

UnicellularMap make_unicellular(int n, const Matching& pairing) {
    auto pairs = checked_matching(n, pairing);
    LabelSet set = LabelSet::unicellular(n);
    std::vector<int> img(static_cast<size_t>(set.size()));
    img[static_cast<size_t>(set.index_of(L))] = set.index_of(R);
    img[static_cast<size_t>(set.index_of(R))] = set.index_of(L);
    for (auto [a, b] : pairs) {
        img[static_cast<size_t>(a)] = b;  // plain value == ambient index here
        img[static_cast<size_t>(b)] = a;
    }
    Permutation alpha = Permutation::from_images(set, std::move(img));
    Permutation sigma = compose(alpha, canonical_face(set));
    return validate_unicellular(alpha, sigma);
}

UnicellularMap validate_unicellular(const Permutation& alpha, const Permutation& sigma) {
    const LabelSet& set = alpha.labels();
    if (set.shape() != LabelSet::Shape::Unicellular)
        throw ValidationError("alpha is not defined on a unicellular label set");
    if (sigma.labels() != set)
        throw ValidationError("alpha and sigma are defined on different label sets");
    for (int i = 0; i < alpha.size(); ++i) {
        if (alpha.image(i) == i)
            throw ValidationError("alpha has a fixed point at " + to_string(set.at(i)));
        if (alpha.image(alpha.image(i)) != i)
            throw ValidationError("alpha is not an involution");
    }
    if (alpha.apply(L) != R)
        throw ValidationError("alpha is missing the plant pair (L,R)");
    Permutation gamma = compose(alpha, sigma);
    if (gamma != canonical_face(set))
        throw ValidationError("compose(alpha, sigma) is not the single canonical face cycle");
    return UnicellularMap(set.edges(), alpha, sigma);
}

BicellularMap make_bicellular(int n, int m, const Matching& pairing) {
    LabelSet set = LabelSet::bicellular(n, m);  // rejects a bad split index
    auto pairs = checked_matching(n, pairing);
    std::vector<int> img(static_cast<size_t>(set.size()));
    auto tie = [&](Label a, Label b) {
        int ia = set.index_of(a), ib = set.index_of(b);
        img[static_cast<size_t>(ia)] = ib;
        img[static_cast<size_t>(ib)] = ia;
    };
    tie(L1, R1);
    tie(L2, R2);
    for (auto [a, b] : pairs) tie(Label::plain(a), Label::plain(b));
    Permutation beta = Permutation::from_images(set, std::move(img));
    Permutation tau = compose(beta, canonical_face(set));
    return validate_bicellular(beta, tau);
}

BicellularMap validate_bicellular(const Permutation& beta, const Permutation& tau) {
    const LabelSet& set = beta.labels();
    if (set.shape() != LabelSet::Shape::Bicellular)
        throw ValidationError("beta is not defined on a bicellular label set");
    if (tau.labels() != set)
        throw ValidationError("beta and tau are defined on different label sets");
    for (int i = 0; i < beta.size(); ++i) {
        if (beta.image(i) == i)
            throw ValidationError("beta has a fixed point at " + to_string(set.at(i)));
        if (beta.image(beta.image(i)) != i)
            throw ValidationError("beta is not an involution");
    }
    if (beta.apply(L1) != R1 || beta.apply(L2) != R2)
        throw ValidationError("beta is missing a rainbow pair");
    if (compose(beta, tau) != canonical_face(set))
        throw ValidationError("compose(beta, tau) is not the pair of canonical face cycles");
    const int n = set.edges(), m = set.split();
    bool crosses = false;
    for (int a = 1; a <= m && !crosses; ++a) {
        Label b = beta.apply(Label::plain(a));
        crosses = b.is_plain() && b.value > m;
    }
    if (!crosses)
        throw ValidationError("disconnected: no edge crosses between the two faces");
    return BicellularMap(n, m, beta, tau);
}

int genus_unicellular(const UnicellularMap& u) {
    const int n = u.edges();
    const int v = u.vertex_count();
    const int twice = n - v + 2;  // 2g, from 2-2g = (V-1) - n + 1
    if (twice < 0 || twice % 2 != 0)
        throw InternalError("Euler count is not a valid genus on a validated map");
    return twice / 2;
}

int genus_bicellular(const BicellularMap& b) {
    const int n = b.edges();
    const int v = b.vertex_count();
    const int twice = n - v;  // 2g, from 2-2g = V - n + 2
    if (twice < 0 || twice % 2 != 0)
        throw InternalError("Euler count is not a valid genus on a validated map");
    return twice / 2;
}

namespace {

// True iff a and b lie on the same cycle of p.
bool same_cycle(const Permutation& p, int a, int b) {
    if (a == b) return true;
    int cur = p.image(a);
    while (cur != a) {
        if (cur == b) return true;
        cur = p.image(cur);
    }
    return false;
}

}  // namespace

MapClass classify_unicellular(const UnicellularMap& u) {
    if (u.edges() == 0)
        throw DomainError("class is undefined for the plant-only map");
    const LabelSet& set = u.labels();
    const Label first = Label::plain(1);
    const Label partner = u.alpha().apply(first);
    // On a valid map plain half-edges pair among themselves.
    if (!partner.is_plain())
        throw InternalError("half-edge 1 is paired with a rainbow end");
    const int r = partner.value;
    const bool same_vertex =
        same_cycle(u.sigma(), set.index_of(first), set.index_of(partner));
    bool exists_k = false;
    for (int k = 2; k < r && !exists_k; ++k)
        exists_k = u.alpha().apply(Label::plain(k)).value > r;
    if (same_vertex && exists_k) return MapClass::II;
    if (!same_vertex && exists_k) return MapClass::I;
    if (!same_vertex) return MapClass::III;
    throw InternalError("class partition violated: 1 and alpha(1) share a vertex "
                        "but no half-edge escapes the interval");
}

MapClass classify_bicellular(const BicellularMap& b) {
    const LabelSet& set = b.labels();
    return same_cycle(b.tau(), set.index_of(L1), set.index_of(L2)) ? MapClass::BII
                                                                   : MapClass::BI;
}

}  // namespace cellmap
