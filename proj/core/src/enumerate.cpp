#include "cellmap/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace cellmap {

namespace {

void matchings_rec(int two_n, std::vector<char>& taken, Matching& acc,
                   const std::function<void(const Matching&)>& visit) {
    int a = 0;
    for (int i = 1; i <= two_n; ++i) {
        if (!taken[static_cast<size_t>(i)]) {
            a = i;
            break;
        }
    }
    if (a == 0) {
        visit(acc);
        return;
    }
    taken[static_cast<size_t>(a)] = 1;
    for (int b = a + 1; b <= two_n; ++b) {
        if (taken[static_cast<size_t>(b)]) continue;
        taken[static_cast<size_t>(b)] = 1;
        acc.emplace_back(a, b);
        matchings_rec(two_n, taken, acc, visit);
        acc.pop_back();
        taken[static_cast<size_t>(b)] = 0;
    }
    taken[static_cast<size_t>(a)] = 0;
}

// Runs work(branch) for branch = 0..branch_count-1 across the given number
// of worker threads, branch i on thread i % workers. Each branch must only
// touch its own accumulator slot.
void run_branches(int branch_count, int workers, const std::function<void(int)>& work) {
    workers = std::max(1, std::min(workers, branch_count));
    if (workers == 1) {
        for (int b = 0; b < branch_count; ++b) work(b);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([=, &work] {
            for (int b = w; b < branch_count; b += workers) work(b);
        });
    }
    for (auto& t : pool) t.join();
}

bool matching_crosses(const Matching& pairs, int m) {
    return std::any_of(pairs.begin(), pairs.end(),
                       [m](auto p) { return p.first <= m && p.second > m; });
}

std::pair<int, int> split_bounds(int n, SplitRange range) {
    if (range == SplitRange::StrictInterior) return {2, 2 * n - 2};
    return {1, 2 * n - 1};
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Matching&)>& visit) {
    if (n == 0) {
        visit({});
        return;
    }
    for (int b = 2; b <= 2 * n; ++b) for_each_matching_with_first(n, b, visit);
}

void for_each_matching_with_first(int n, int first_partner,
                                  const std::function<void(const Matching&)>& visit) {
    if (n == 0) {
        visit({});
        return;
    }
    if (first_partner < 2 || first_partner > 2 * n)
        throw ValidationError("first partner out of range");
    std::vector<char> taken(static_cast<size_t>(2 * n + 1), 0);
    taken[1] = taken[static_cast<size_t>(first_partner)] = 1;
    Matching acc;
    acc.emplace_back(1, first_partner);
    matchings_rec(2 * n, taken, acc, visit);
}

void enumerate_unicellular(int n, std::optional<int> genus,
                           const std::function<void(const UnicellularMap&)>& visit) {
    for_each_matching(n, [&](const Matching& pairs) {
        UnicellularMap u = make_unicellular(n, pairs);
        if (!genus || genus_unicellular(u) == *genus) visit(u);
    });
}

void enumerate_bicellular(int n, std::optional<int> genus,
                          const std::function<void(const BicellularMap&)>& visit,
                          SplitRange range) {
    if (n < 1) throw ValidationError("a bicellular map needs at least one edge");
    auto [m_lo, m_hi] = split_bounds(n, range);
    for (int m = m_lo; m <= m_hi; ++m) {
        for_each_matching(n, [&](const Matching& pairs) {
            if (!matching_crosses(pairs, m)) return;
            BicellularMap b = make_bicellular(n, m, pairs);
            if (!genus || genus_bicellular(b) == *genus) visit(b);
        });
    }
}

std::vector<UnicellularMap> all_unicellular(int n, std::optional<int> genus) {
    std::vector<UnicellularMap> out;
    enumerate_unicellular(n, genus, [&](const UnicellularMap& u) { out.push_back(u); });
    return out;
}

std::vector<BicellularMap> all_bicellular(int n, std::optional<int> genus) {
    std::vector<BicellularMap> out;
    enumerate_bicellular(n, genus, [&](const BicellularMap& b) { out.push_back(b); });
    return out;
}

std::uint64_t CountTable::unicellular_count(int g, int n) const {
    if (g < 0 || n < 0 || n > max_n || g >= static_cast<int>(uni.size())) return 0;
    return uni[static_cast<size_t>(g)][static_cast<size_t>(n)];
}

std::uint64_t CountTable::bicellular_count(int g, int n) const {
    if (g < 0 || n < 1 || n > max_n || g >= static_cast<int>(bi.size())) return 0;
    return bi[static_cast<size_t>(g)][static_cast<size_t>(n)];
}

CountTable count_table(int max_n, int workers, SplitRange range) {
    if (max_n < 0) throw ValidationError("max edge count must be non-negative");
    CountTable table;
    table.max_n = max_n;
    const int rows = max_n / 2 + 1;
    table.uni.assign(static_cast<size_t>(rows),
                     std::vector<std::uint64_t>(static_cast<size_t>(max_n + 1), 0));
    table.bi = table.uni;
    table.uni[0][0] = 1;  // the plant-only map

    for (int n = 1; n <= max_n; ++n) {
        // One branch per partner of half-edge 1; each worker slot owns its
        // own accumulator, merged after the join, so counts are exact and
        // the result does not depend on scheduling.
        const int branches = 2 * n - 1;
        std::vector<std::vector<std::uint64_t>> uni_acc(
            static_cast<size_t>(branches), std::vector<std::uint64_t>(static_cast<size_t>(rows), 0));
        auto bi_acc = uni_acc;
        auto [m_lo, m_hi] = split_bounds(n, range);
        run_branches(branches, workers, [&](int branch) {
            for_each_matching_with_first(n, branch + 2, [&](const Matching& pairs) {
                UnicellularMap u = make_unicellular(n, pairs);
                ++uni_acc[static_cast<size_t>(branch)][static_cast<size_t>(genus_unicellular(u))];
                for (int m = m_lo; m <= m_hi; ++m) {
                    if (!matching_crosses(pairs, m)) continue;
                    BicellularMap b = make_bicellular(n, m, pairs);
                    ++bi_acc[static_cast<size_t>(branch)][static_cast<size_t>(genus_bicellular(b))];
                }
            });
        });
        for (int branch = 0; branch < branches; ++branch) {
            for (int g = 0; g < rows; ++g) {
                table.uni[static_cast<size_t>(g)][static_cast<size_t>(n)] +=
                    uni_acc[static_cast<size_t>(branch)][static_cast<size_t>(g)];
                table.bi[static_cast<size_t>(g)][static_cast<size_t>(n)] +=
                    bi_acc[static_cast<size_t>(branch)][static_cast<size_t>(g)];
            }
        }
    }
    return table;
}

std::string format_count_table(const CountTable& table) {
    std::ostringstream out;
    for (int n = 0; n <= table.max_n; ++n)
        for (int g = 0; g <= n / 2; ++g)
            out << g << ' ' << n << ' ' << table.unicellular_count(g, n) << " uni\n";
    for (int n = 1; n <= table.max_n; ++n)
        for (int g = 0; g <= (n - 1) / 2; ++g)
            out << g << ' ' << n << ' ' << table.bicellular_count(g, n) << " bi\n";
    return out.str();
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream out;
    for (const ReportCell& cell : report.cells) {
        out << "g=" << cell.g << " n=" << cell.n << " pairs=" << cell.lhs_pairs
            << " bicellular=" << cell.lhs_bicellular
            << " total=" << (cell.lhs_pairs + cell.lhs_bicellular)
            << " expected=" << cell.rhs << (cell.pass ? " ok" : " MISMATCH") << '\n';
    }
    out << report.kind << (report.pass ? " PASS" : " FAIL") << " cells=" << report.cells.size()
        << '\n';
    return out.str();
}

VerificationReport verify_recursion(int max_n, int workers, SplitRange range) {
    if (max_n < 1) throw ValidationError("need at least one edge to verify the recursion");
    CountTable t = count_table(max_n, workers, range);
    VerificationReport report;
    report.kind = "RECURSION";
    report.pass = true;
    for (int n = 1; n + 1 <= max_n; ++n) {
        for (int g = 0; g + 1 <= (n + 1) / 2; ++g) {
            ReportCell cell;
            cell.g = g;
            cell.n = n;
            for (int g1 = 0; g1 <= g + 1; ++g1)
                for (int i = 0; i <= n; ++i)
                    cell.lhs_pairs +=
                        t.unicellular_count(g1, i) * t.unicellular_count(g + 1 - g1, n - i);
            cell.lhs_bicellular = t.bicellular_count(g, n);
            cell.rhs = t.unicellular_count(g + 1, n + 1);
            cell.pass = cell.lhs_pairs + cell.lhs_bicellular == cell.rhs;
            report.pass = report.pass && cell.pass;
            report.cells.push_back(cell);
        }
    }
    return report;
}

VerificationReport verify_bijection(int n, int g, int workers) {
    if (n < 1 || g < 1)
        throw ValidationError("bijection check needs n >= 1 and genus >= 1");

    using Key = Matching;  // canonical maps are determined by their pairing
    std::map<Key, int> image_count;

    // Forward over every decomposition of the cell (g-1, n-1); tally where
    // the images land and check the backward round trip.
    std::uint64_t pair_count = 0, bi_count = 0;
    bool ok = true;
    for (int j = 0; j <= n - 1; ++j) {
        for (int g1 = 0; g1 <= g; ++g1) {
            if (2 * g1 > j || 2 * (g - g1) > n - 1 - j) continue;
            auto left = all_unicellular(j, g1);
            auto right = all_unicellular(n - 1 - j, g - g1);
            for (const auto& u1 : left) {
                for (const auto& u2 : right) {
                    auto x = DecompositionResult::from_pair(u1, u2);
                    UnicellularMap image = beta_forward(x);
                    ok = ok && beta_inverse(image) == x;
                    ++image_count[image.pairing()];
                    ++pair_count;
                }
            }
        }
    }
    if (n - 1 >= 1) {
        enumerate_bicellular(n - 1, g - 1, [&](const BicellularMap& b) {
            auto x = DecompositionResult::from_bicellular(b);
            UnicellularMap image = beta_forward(x);
            ok = ok && beta_inverse(image) == x;
            ++image_count[image.pairing()];
            ++bi_count;
        });
    }

    // Backward over the whole cell U_{g,n}, partitioned by the partner of
    // half-edge 1 for the optional worker threads.
    const int branches = 2 * n - 1;
    struct Slot {
        std::uint64_t maps = 0;
        std::uint64_t by_class[3] = {0, 0, 0};
        std::vector<Key> keys;
        bool ok = true;
    };
    std::vector<Slot> slots(static_cast<size_t>(branches));
    run_branches(branches, workers, [&](int branch) {
        Slot& slot = slots[static_cast<size_t>(branch)];
        for_each_matching_with_first(n, branch + 2, [&](const Matching& pairs) {
            UnicellularMap u = make_unicellular(n, pairs);
            if (genus_unicellular(u) != g) return;
            ++slot.maps;
            MapClass c = classify_unicellular(u);
            ++slot.by_class[c == MapClass::I ? 0 : c == MapClass::II ? 1 : 2];
            slot.ok = slot.ok && beta_forward(beta_inverse(u)) == u;
            slot.keys.push_back(u.pairing());
        });
    });
    std::uint64_t total = 0, by_class[3] = {0, 0, 0};
    for (const Slot& slot : slots) {
        ok = ok && slot.ok;
        total += slot.maps;
        for (int i = 0; i < 3; ++i) by_class[i] += slot.by_class[i];
        for (const Key& key : slot.keys) {
            auto it = image_count.find(key);
            // every map must be hit exactly once by the forward direction
            if (it == image_count.end() || it->second != 1) ok = false;
        }
    }
    ok = ok && by_class[0] + by_class[1] + by_class[2] == total;
    ok = ok && pair_count + bi_count == total;
    ok = ok && image_count.size() == total;

    VerificationReport report;
    report.kind = "BIJECTION";
    report.cells.push_back(
        ReportCell{g, n, pair_count, bi_count, total, ok});
    report.pass = ok;
    return report;
}

}  // namespace cellmap
