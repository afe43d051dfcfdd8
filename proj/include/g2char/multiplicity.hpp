#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "g2char/rootsys.hpp"

namespace g2char {

// Multiplicities of the dominant weights of V_lambda, stored on the grid
// lambda - m*alpha - n*beta. This is the compact form every other value is
// derived from; the full W-invariant table is expanded on demand.
class DominantTable {
public:
    DominantTable(FwWeight lambda, long long m_max, long long n_max);

    FwWeight highest_weight() const { return lambda_; }

    // Multiplicity of a *dominant* weight; 0 if it is not a weight of V_lambda.
    long long multiplicity_dominant(FwWeight mu) const;

    // Dominant support with multiplicities, sorted by key.
    std::vector<std::pair<FwWeight, long long>> entries() const;

    long long total_with_orbits(const RootSystem& rs) const;  // sum over the full table

private:
    friend DominantTable freudenthal_table(const RootSystem&, FwWeight);
    friend class MultiplicityEngine;

    long long& cell(long long m, long long n) { return mult_[m * (n_max_ + 1) + n]; }
    long long cell(long long m, long long n) const { return mult_[m * (n_max_ + 1) + n]; }

    FwWeight lambda_;
    long long m_max_, n_max_;
    std::vector<long long> mult_;  // 0 marks cells outside the dominant support
};

// Full weight table of V_lambda: every weight, W-invariant multiplicities.
class WeightSystem {
public:
    WeightSystem(FwWeight highest, std::map<FwWeight, long long> table)
        : highest_(highest), table_(std::move(table)) {}

    FwWeight highest_weight() const { return highest_; }
    const std::map<FwWeight, long long>& table() const { return table_; }
    long long multiplicity(FwWeight mu) const {
        auto it = table_.find(mu);
        return it == table_.end() ? 0 : it->second;
    }
    long long total() const;

private:
    FwWeight highest_;
    std::map<FwWeight, long long> table_;
};

// Weyl dimension of V_lambda: prod <lambda+rho, gamma> / <rho, gamma> over
// the positive roots. Used as an independent consistency check.
long long weyl_dim(const RootSystem& rs, FwWeight lambda);

// Freudenthal recursion over the dominant support, highest weight first.
// Throws std::invalid_argument unless lambda is dominant.
DominantTable freudenthal_table(const RootSystem& rs, FwWeight lambda);

// One-shot m_lambda(mu); builds the table each call. Use MultiplicityEngine
// when querying repeatedly.
long long freudenthal_multiplicity(const RootSystem& rs, FwWeight lambda, FwWeight mu);

// Brute-force Kostant-partition oracle:
//   m_lambda(mu) = sum_w det(w) * P(w(lambda+rho) - (mu+rho))
// with P counted by explicit enumeration over the six positive roots.
// Independent of the Freudenthal path; feasible only for small height gaps.
// Throws std::runtime_error when ht(lambda - mu) exceeds height_cap.
long long kostant_multiplicity_oracle(const RootSystem& rs, FwWeight lambda, FwWeight mu,
                                      long long height_cap = 30);

// Expand a dominant table to the full W-invariant weight table.
WeightSystem expand_weight_system(const RootSystem& rs, const DominantTable& dom);

// Memoized multiplicity queries with an optional disk cache. Thread safe:
// concurrent readers, exclusive insertion. The disk cache (one file per
// highest weight, atomic replace) is purely an acceleration; a corrupt file
// is reported through the warning handler and recomputed.
class MultiplicityEngine {
public:
    explicit MultiplicityEngine(const RootSystem& rs,
                                std::optional<std::filesystem::path> cache_dir = std::nullopt);

    const RootSystem& root_system() const { return rs_; }

    std::shared_ptr<const DominantTable> table(FwWeight lambda);
    long long multiplicity(FwWeight lambda, FwWeight mu);
    WeightSystem weight_system(FwWeight lambda);

    void set_warning_handler(std::function<void(const std::string&)> h) {
        warn_ = std::move(h);
    }

    static constexpr const char* kCacheHeaderVersion = "v1";
    std::filesystem::path cache_file(FwWeight lambda) const;

private:
    std::shared_ptr<const DominantTable> load_cached(FwWeight lambda);
    void store_cached(const DominantTable& dom);

    const RootSystem& rs_;
    std::optional<std::filesystem::path> cache_dir_;
    std::function<void(const std::string&)> warn_;
    std::shared_mutex mutex_;
    std::map<FwWeight, std::shared_ptr<const DominantTable>> memo_;
};

}  // namespace g2char
