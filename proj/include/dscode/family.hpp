#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dscode/projective.hpp"

namespace dscode {

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet canonical_set(IndexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// Center of a multiset of subsets: the union of all pairwise intersections.
/// Fewer than two subsets have an empty center.
inline IndexSet center(const std::vector<IndexSet>& subsets) {
    IndexSet acc;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            acc = set_union(acc, set_intersection(subsets[i], subsets[j]));
    return acc;
}

/// The subsets A_1..A_l of [m], partitioned into blocks B_1..B_s. Empty
/// subsets are dropped at construction; a block may be empty (it removes
/// nothing from the projective space).
class SubsetFamily {
public:
    SubsetFamily(int m, std::vector<std::vector<IndexSet>> blocks) : m_(m) {
        if (m < 1) throw CodeError(Errc::invalid_dimension, "ambient size must be positive");
        if (blocks.empty()) throw CodeError(Errc::empty_input, "family needs at least one block");
        for (auto& block : blocks) {
            std::vector<IndexSet> kept;
            for (auto& s : block) {
                IndexSet c = canonical_set(std::move(s));
                for (int i : c)
                    if (i < 1 || i > m)
                        throw CodeError(Errc::index_out_of_range,
                                        "subset index " + std::to_string(i) + " outside [1," +
                                            std::to_string(m) + "]");
                if (c.empty()) {
                    log_.push_back("dropped empty subset");
                    continue;
                }
                kept.push_back(std::move(c));
            }
            if (kept.empty() && !block.empty())
                log_.push_back("block became empty after dropping empty subsets");
            blocks_.push_back(std::move(kept));
        }
    }

    int m() const noexcept { return m_; }
    int s() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<IndexSet>>& blocks() const noexcept { return blocks_; }
    const std::vector<std::string>& construction_log() const noexcept { return log_; }

    /// Flattened view A_1..A_l across blocks.
    std::vector<IndexSet> flattened() const {
        std::vector<IndexSet> all;
        for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
        return all;
    }

    int ell() const {
        int n = 0;
        for (const auto& b : blocks_) n += static_cast<int>(b.size());
        return n;
    }

private:
    int m_;
    std::vector<std::vector<IndexSet>> blocks_;
    std::vector<std::string> log_;
};

struct PropertyWitness {
    bool satisfied = false;
    /// For each A_i (flattened order) an index surviving outside every block
    /// center; meaningful only when satisfied.
    std::vector<int> survivor;
    /// First violating flattened subset index when not satisfied.
    std::optional<int> violator;
};

/// Property I_s for the family's own partition: every A_i keeps an element
/// outside the union of all block centers.
inline PropertyWitness satisfies_property_Is(const SubsetFamily& fam) {
    IndexSet centers;
    for (const auto& block : fam.blocks()) centers = set_union(centers, center(block));
    PropertyWitness w;
    w.satisfied = true;
    int idx = 0;
    for (const auto& a : fam.flattened()) {
        const IndexSet left = set_difference(a, centers);
        if (left.empty()) {
            w.satisfied = false;
            w.violator = idx;
            w.survivor.clear();
            return w;
        }
        w.survivor.push_back(left.front());
        ++idx;
    }
    return w;
}

/// |P_{B_1} u ... u P_{B_l}| by inclusion-exclusion:
/// (sum over nonempty S of (-1)^{|S|+1} p^{|inter S|} - 1) / (p-1).
inline long long pie_complement_size(const std::vector<IndexSet>& block, const PrimeField& f) {
    if (block.empty()) return 0;
    for (const auto& s : block)
        if (s.empty()) throw CodeError(Errc::empty_input, "empty subset in PIE block");
    const int l = static_cast<int>(block.size());
    if (l > 20) throw CodeError(Errc::scale_limit_exceeded, "PIE over more than 20 subsets");
    long long signed_sum = 0;
    for (unsigned mask = 1; mask < (1u << l); ++mask) {
        IndexSet inter;
        bool first = true;
        for (int i = 0; i < l; ++i) {
            if (!(mask & (1u << i))) continue;
            inter = first ? block[i] : set_intersection(inter, block[i]);
            first = false;
        }
        const int bits = __builtin_popcount(mask);
        const long long term = ipow(f.p(), static_cast<int>(inter.size()));
        signed_sum += (bits % 2 == 1) ? term : -term;
    }
    return (signed_sum - 1) / (f.p() - 1);
}

/// p-adic statistics of N = sum p^{|A_i|-1}: maximum multiplicity M of a
/// subset size, digit sum C, valuation v_p, and the digits themselves.
struct FamilyStats {
    long long sum_p_pow;  // sum over i of p^{|A_i|-1}
    int M = 0;
    int C = 0;
    int v_p = 0;
    std::vector<int> digits;  // base-p digits of sum_p_pow, index = exponent
};

inline FamilyStats family_stats(const SubsetFamily& fam, const PrimeField& f) {
    const auto subsets = fam.flattened();
    if (subsets.empty()) throw CodeError(Errc::empty_input, "stats of an empty family");
    FamilyStats st;
    std::vector<int> size_count(fam.m() + 1, 0);
    long long acc = 0;
    for (const auto& a : subsets) {
        ++size_count[a.size()];
        acc += ipow(f.p(), static_cast<int>(a.size()) - 1);
    }
    st.sum_p_pow = acc;
    st.M = *std::max_element(size_count.begin(), size_count.end());
    long long rest = acc;
    while (rest > 0) {
        st.digits.push_back(static_cast<int>(rest % f.p()));
        rest /= f.p();
    }
    st.C = 0;
    for (int d : st.digits) st.C += d;
    st.v_p = 0;
    while (st.v_p < static_cast<int>(st.digits.size()) && st.digits[st.v_p] == 0) ++st.v_p;
    return st;
}

}  // namespace dscode
