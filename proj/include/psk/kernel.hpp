#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psk/oracle.hpp"

namespace psk {

/// Twin-capping configuration. With the paper bound, the cap is the double
/// exponential 2^(2^(2r m (r^2+r+1)) * 6^(2r^2)); we keep only its log2 and
/// saturate, so the comparison against any machine-representable class size
/// is exact and overflow-free.
struct KernelConfig {
    int r = 1;
    bool paper_bound = true;
    long long alpha = 1;  // used when !paper_bound; must be >= 1
};

struct KernelReport {
    struct ClassInfo {
        std::string representative;  // smallest kept name
        int kept = 0;
        std::vector<std::string> removed;
    };
    std::vector<ClassInfo> classes;
    bool cap_is_paper_bound = false;
    // log2 of the cap, -1 when it saturates past 2^62 (any desk class fits)
    long long cap_log2 = -1;
};

namespace detail {

/// log2 of the paper cap: 2^(2 r m (r^2+r+1)) * 6^(2 r^2), saturating at 2^62.
inline long long paper_cap_log2(int m, int r) {
    const long long SAT = 1LL << 62;
    long long e = 2LL * r * m * (static_cast<long long>(r) * r + r + 1);
    if (e >= 62) return SAT;
    long long l = 1LL << e;
    for (int i = 0; i < 2 * r * r; ++i) {
        if (l > SAT / 6) return SAT;
        l *= 6;
    }
    return l;
}

}  // namespace detail

/// Exhaustive twin-capping: every twin class keeps at most `cap` vertices
/// (lexicographically smallest names). With the paper bound no desk-scale
/// vertex is ever removed; the size bound |V| <= 2^m * cap holds either way.
inline std::pair<Hypergraph, KernelReport> kernelize(const Hypergraph& h,
                                                     const KernelConfig& cfg) {
    require(cfg.paper_bound || cfg.alpha >= 1, "kernelize: alpha must be >= 1");
    KernelReport report;
    report.cap_is_paper_bound = cfg.paper_bound;
    long long cap;
    if (cfg.paper_bound) {
        long long l2 = detail::paper_cap_log2(h.m(), cfg.r);
        report.cap_log2 = l2 >= (1LL << 62) ? -1 : l2;
        cap = l2 >= 62 ? -1 : (1LL << l2);  // -1: larger than any class
    } else {
        cap = cfg.alpha;
    }
    TwinPartition twins = twin_classes(h);
    VertexSet to_remove;
    for (const auto& cls : twins.classes) {
        std::vector<std::pair<std::string, int>> members;
        for (int v : cls) members.push_back({h.names[v], v});
        std::sort(members.begin(), members.end());
        KernelReport::ClassInfo info;
        info.representative = members.front().first;
        for (std::size_t i = 0; i < members.size(); ++i) {
            bool keep = cap < 0 || static_cast<long long>(i) < cap;
            if (keep)
                ++info.kept;
            else {
                info.removed.push_back(members[i].first);
                to_remove.push_back(members[i].second);
            }
        }
        report.classes.push_back(std::move(info));
    }
    sort_unique(to_remove);
    return {remove_vertices(h, to_remove), std::move(report)};
}

enum class RuleSafety { Safe, Unsafe, Unknown };

/// Directly testable instantiation of the safety lemma: with alpha_oracle =
/// 1 + (minimum representative solution size), removing one vertex of a twin
/// class of size >= alpha_oracle must not change the oracle's yes/no answer.
inline RuleSafety check_rule_safety(const Hypergraph& h, const std::string& vertex,
                                    std::optional<int> r, long long alpha_oracle,
                                    const SearchBudget& budget = {}) {
    int v = h.index_of(vertex);
    require(v >= 0, "check_rule_safety: unknown vertex " + vertex);
    TwinPartition twins = twin_classes(h);
    long long cls = static_cast<long long>(twins.classes[twins.class_of[v]].size());
    require(cls >= alpha_oracle, "check_rule_safety: twin class smaller than alpha");
    auto before = find_support(h, r, budget);
    auto after = find_support(remove_vertices(h, {v}), r, budget);
    if (before.verdict == Verdict::Unknown || after.verdict == Verdict::Unknown)
        return RuleSafety::Unknown;
    return before.verdict == after.verdict ? RuleSafety::Safe : RuleSafety::Unsafe;
}

}  // namespace psk
