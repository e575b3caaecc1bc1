#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "dscode/family.hpp"

namespace dscode {

inline constexpr long long kDefaultMaxPm = 10'000'000;

/// Weight -> number of codewords of that weight, over distinct codewords.
struct WeightDistribution {
    std::map<long long, long long> counts;

    long long min_positive() const {
        for (const auto& [w, c] : counts)
            if (w > 0 && c > 0) return w;
        return 0;
    }

    long long total() const {
        long long t = 0;
        for (const auto& [w, c] : counts) t += c;
        return t;
    }
};

/// A linear code given by an explicit column multiset grouped into blocks.
/// Immutable after construction; the parameter cache is a write-once memo
/// guarded by a mutex, so concurrent reads are safe.
class DefiningCode {
public:
    /// Defining-set construction: block r consists of the points of P_[m]
    /// outside the union of the block's projective subspaces, in canonical
    /// order.
    static DefiningCode build(const SubsetFamily& fam, const PrimeField& field,
                              long long max_pm = kDefaultMaxPm) {
        check_scale(field.p(), fam.m(), max_pm);
        DefiningCode code(field, fam.m());
        code.space_ = std::make_shared<ProjSpace>(enumerate_projective(field, fam.m()));
        code.hypotheses_hold_ = true;
        for (const auto& block : fam.blocks()) {
            long long removal_budget = 0;
            for (const auto& s : block)
                removal_budget += ipow(field.p(), static_cast<int>(s.size()) - 1);
            if (removal_budget >= ipow(field.p(), fam.m() - 1)) code.hypotheses_hold_ = false;

            std::vector<bool> removed(code.space_->points.size(), false);
            for (const auto& s : block)
                for (std::size_t i = 0; i < code.space_->points.size(); ++i)
                    if (!removed[i] && supported_on(code.space_->points[i].rep, s))
                        removed[i] = true;
            const long long removed_count =
                std::count(removed.begin(), removed.end(), true);
            if (removed_count != pie_complement_size(block, field))
                throw CodeError(Errc::inconsistent_theorem,
                                "inclusion-exclusion disagrees with enumerated union");

            std::vector<int> cols;
            for (std::size_t i = 0; i < code.space_->points.size(); ++i)
                if (!removed[i]) cols.push_back(static_cast<int>(i));
            if (cols.empty())
                throw CodeError(Errc::empty_defining_set, "a block removed every point");
            const int block_id = static_cast<int>(code.block_sizes_.size());
            for (int i : cols) {
                code.columns_.push_back(code.space_->points[i].rep);
                code.block_of_.push_back(block_id);
            }
            code.block_sizes_.push_back(static_cast<int>(cols.size()));
        }
        return code;
    }

    /// Wrap an explicit column list (single block); used by puncturing and
    /// generator-matrix import. Columns may be unnormalized or zero.
    static DefiningCode from_columns(const PrimeField& field, int m,
                                     std::vector<FpVector> columns,
                                     long long max_pm = kDefaultMaxPm) {
        check_scale(field.p(), m, max_pm);
        if (columns.empty()) throw CodeError(Errc::empty_selection, "no columns");
        DefiningCode code(field, m);
        for (const auto& c : columns) {
            if (static_cast<int>(c.size()) != m)
                throw CodeError(Errc::dimension_mismatch, "column length differs from m");
            for (int v : c)
                if (v < 0 || v >= field.p())
                    throw CodeError(Errc::invalid_params, "column entry outside [0,p)");
        }
        code.columns_ = std::move(columns);
        code.block_of_.assign(code.columns_.size(), 0);
        code.block_sizes_ = {static_cast<int>(code.columns_.size())};
        return code;
    }

    const PrimeField& field() const noexcept { return field_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return static_cast<int>(columns_.size()); }
    int s() const noexcept { return static_cast<int>(block_sizes_.size()); }
    const std::vector<FpVector>& columns() const noexcept { return columns_; }
    const std::vector<int>& block_sizes() const noexcept { return block_sizes_; }
    int block_of(int col) const { return block_of_.at(col); }
    bool theorem_hypotheses_hold() const noexcept { return hypotheses_hold_; }

    /// The enumerated projective space, when this code was built from a
    /// family (null for imported column lists).
    std::shared_ptr<const ProjSpace> space() const noexcept { return space_; }

    /// Column indices of block b.
    std::vector<int> block_columns(int b) const {
        std::vector<int> out;
        for (int i = 0; i < n(); ++i)
            if (block_of_[i] == b) out.push_back(i);
        return out;
    }

    /// Hamming weight of the codeword generated by x.
    long long weight_of(const FpVector& x) const {
        if (static_cast<int>(x.size()) != m_)
            throw CodeError(Errc::dimension_mismatch, "argument length differs from m");
        long long w = 0;
        for (const auto& col : columns_)
            if (vec_dot(field_, x, col) != 0) ++w;
        return w;
    }

    /// Dimension: always the rank of the column matrix, never assumed.
    int k() const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!rank_) rank_ = matrix_rank(field_, columns_);
        return *rank_;
    }

    /// Exact weight distribution over all p^k distinct codewords.
    const WeightDistribution& weight_distribution() const {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (!weights_) weights_ = compute_weights();
        return *weights_;
    }

    long long d() const { return weight_distribution().min_positive(); }

    /// Restriction to selected column positions (0-based, distinct).
    DefiningCode puncture(std::vector<int> positions) const {
        std::sort(positions.begin(), positions.end());
        positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
        if (positions.empty()) throw CodeError(Errc::empty_selection, "no positions selected");
        std::vector<FpVector> cols;
        for (int i : positions) {
            if (i < 0 || i >= n())
                throw CodeError(Errc::index_out_of_range, "column index " + std::to_string(i));
            cols.push_back(columns_[i]);
        }
        return from_columns(field_, m_, std::move(cols));
    }

private:
    DefiningCode(const PrimeField& field, int m) : field_(field), m_(m) {}

    static void check_scale(int p, int m, long long max_pm) {
        long long pm = 1;
        for (int i = 0; i < m; ++i) {
            pm *= p;
            if (pm > max_pm)
                throw CodeError(Errc::scale_limit_exceeded,
                                "p^m exceeds the enumeration guard " + std::to_string(max_pm));
        }
    }

    WeightDistribution compute_weights() const {
        // Enumerate the row space of the generator matrix from a reduced
        // basis, so the count covers each distinct codeword exactly once.
        std::vector<FpVector> rows(m_, FpVector(columns_.size(), 0));
        for (int j = 0; j < n(); ++j)
            for (int i = 0; i < m_; ++i) rows[i][j] = columns_[j][i];

        std::vector<FpVector> basis;
        std::vector<int> pivot_col;
        for (auto& row : rows) {
            FpVector r = row;
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (r[pivot_col[b]] != 0)
                    r = vec_sub(field_, r, vec_scale(field_, r[pivot_col[b]], basis[b]));
            int piv = -1;
            for (int j = 0; j < n(); ++j)
                if (r[j] != 0) {
                    piv = j;
                    break;
                }
            if (piv < 0) continue;
            r = vec_scale(field_, field_.inv(r[piv]), r);
            basis.push_back(std::move(r));
            pivot_col.push_back(piv);
        }

        WeightDistribution dist;
        FpVector word(n(), 0);
        enumerate_span(basis, 0, word, dist);
        return dist;
    }

    void enumerate_span(const std::vector<FpVector>& basis, std::size_t level, FpVector& word,
                        WeightDistribution& dist) const {
        if (level == basis.size()) {
            long long w = 0;
            for (int v : word)
                if (v != 0) ++w;
            ++dist.counts[w];
            return;
        }
        for (int c = 0; c < field_.p(); ++c) {
            enumerate_span(basis, level + 1, word, dist);
            if (c + 1 < field_.p())
                for (int j = 0; j < n(); ++j) word[j] = field_.add(word[j], basis[level][j]);
        }
        // undo the p-1 additions to restore the caller's partial word
        for (int j = 0; j < n(); ++j)
            word[j] = field_.sub(word[j], field_.mul(field_.p() - 1, basis[level][j]));
    }

    PrimeField field_;
    int m_;
    std::vector<FpVector> columns_;
    std::vector<int> block_of_;
    std::vector<int> block_sizes_;
    bool hypotheses_hold_ = true;
    std::shared_ptr<const ProjSpace> space_;

    mutable std::mutex cache_mutex_;
    mutable std::optional<int> rank_;
    mutable std::optional<WeightDistribution> weights_;
};

/// Integer value of the additive-character sum over y in F_p^* of
/// chi_x(y * union of P_{A_i}); orthogonality collapses it to
/// p*N0 - |union| where N0 counts the points orthogonal to x.
inline long long char_sum(const ProjSpace& space, const std::vector<IndexSet>& subsets,
                          const FpVector& x) {
    if (is_zero_vector(x)) throw CodeError(Errc::zero_vector, "character sum needs nonzero x");
    long long union_size = 0, orthogonal = 0;
    for (const auto& pt : space.points) {
        bool in_union = false;
        for (const auto& a : subsets)
            if (supported_on(pt.rep, a)) {
                in_union = true;
                break;
            }
        if (!in_union) continue;
        ++union_size;
        if (vec_dot(space.field, x, pt.rep) == 0) ++orthogonal;
    }
    return space.field.p() * orthogonal - union_size;
}

inline bool restriction_is_zero(const FpVector& x, const IndexSet& a) {
    for (int i : a)
        if (x[i - 1] != 0) return false;
    return true;
}

/// Closed form of char_sum for a pair of subsets that do not contain each
/// other, selected by the zero pattern of x on A1, A2 and their
/// intersection.
inline long long lemma21_weight(const PrimeField& f, const IndexSet& a1, const IndexSet& a2,
                                const FpVector& x) {
    if (is_subset(a1, a2) || is_subset(a2, a1))
        throw CodeError(Errc::containment_violated, "subsets must not contain each other");
    if (is_zero_vector(x)) throw CodeError(Errc::zero_vector, "closed form needs nonzero x");
    const IndexSet inter = set_intersection(a1, a2);
    const long long p1 = ipow(f.p(), static_cast<int>(a1.size()));
    const long long p2 = ipow(f.p(), static_cast<int>(a2.size()));
    const long long p12 = ipow(f.p(), static_cast<int>(inter.size()));
    const bool z1 = restriction_is_zero(x, a1);
    const bool z2 = restriction_is_zero(x, a2);
    const bool z12 = restriction_is_zero(x, inter);
    if (z1 && z2) return p1 + p2 - p12 - 1;
    if (z1) return p1 - p12 - 1;
    if (z2) return p2 - p12 - 1;
    if (z12) return -p12 - 1;
    return -1;
}

}  // namespace dscode
