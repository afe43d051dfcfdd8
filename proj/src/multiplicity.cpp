#include "g2char/multiplicity.hpp"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace g2char {

namespace {

struct PosRoot {
    long long fa, fb;        // fundamental-weight coordinates
    long long ax, ay, az;    // ambient integer coordinates
    long long height;        // coefficient sum in the simple-root basis
};

std::vector<PosRoot> positive_root_data(const RootSystem& rs) {
    std::vector<PosRoot> out;
    for (const Weight& g : rs.positive_roots()) {
        FwWeight f = g.to_fw();
        out.push_back(PosRoot{f.a, f.b, g.x().to_integer(), g.y().to_integer(),
                              g.z().to_integer(), f.height()});
    }
    return out;
}

// |mu + rho|^2 in ambient coordinates, for integral mu = (a,b):
// ambient (a+b, b, -a-2b) gives 2a^2 + 6ab + 6b^2.
long long norm2_shifted(FwWeight mu) {
    long long a = mu.a + 1, b = mu.b + 1;
    return checked_add(checked_mul(2, checked_mul(a, a)),
                       checked_add(checked_mul(6, checked_mul(a, b)),
                                   checked_mul(6, checked_mul(b, b))));
}

long long kostant_partition_count(long long m, long long n) {
    // Nonnegative solutions of
    //   c1*a + c2*b + c3*(a+b) + c4*(2a+b) + c5*(3a+b) + c6*(3a+2b) = m*a + n*b
    // counted one by one.
    long long count = 0;
    for (long long c6 = 0; 3 * c6 <= m && 2 * c6 <= n; ++c6) {
        long long m6 = m - 3 * c6, n6 = n - 2 * c6;
        for (long long c5 = 0; 3 * c5 <= m6 && c5 <= n6; ++c5) {
            long long m5 = m6 - 3 * c5, n5 = n6 - c5;
            for (long long c4 = 0; 2 * c4 <= m5 && c4 <= n5; ++c4) {
                long long m4 = m5 - 2 * c4, n4 = n5 - c4;
                for (long long c3 = 0; c3 <= m4 && c3 <= n4; ++c3)
                    count = checked_add(count, 1);  // c1 = m4-c3, c2 = n4-c3
            }
        }
    }
    return count;
}

}  // namespace

DominantTable::DominantTable(FwWeight lambda, long long m_max, long long n_max)
    : lambda_(lambda), m_max_(m_max), n_max_(n_max),
      mult_((m_max + 1) * (n_max + 1), 0) {}

long long DominantTable::multiplicity_dominant(FwWeight mu) const {
    if (!mu.dominant())
        throw std::invalid_argument("multiplicity_dominant: weight is not dominant");
    long long m = lambda_.root_m() - mu.root_m();
    long long n = lambda_.root_n() - mu.root_n();
    if (m < 0 || n < 0 || m > m_max_ || n > n_max_)
        return 0;
    return cell(m, n);
}

std::vector<std::pair<FwWeight, long long>> DominantTable::entries() const {
    std::vector<std::pair<FwWeight, long long>> out;
    for (long long m = 0; m <= m_max_; ++m)
        for (long long n = 0; n <= n_max_; ++n) {
            long long q = cell(m, n);
            if (q > 0)
                out.emplace_back(FwWeight{lambda_.a - 2 * m + 3 * n,
                                          lambda_.b + m - 2 * n},
                                 q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

long long DominantTable::total_with_orbits(const RootSystem& rs) const {
    long long sum = 0;
    for (const auto& [mu, q] : entries()) {
        std::vector<FwWeight> orbit;
        for (const WeylElement& w : rs.weyl_group()) {
            FwWeight img = w.apply(mu);
            if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                orbit.push_back(img);
        }
        sum = checked_add(sum, checked_mul(q, static_cast<long long>(orbit.size())));
    }
    return sum;
}

long long WeightSystem::total() const {
    long long sum = 0;
    for (const auto& [mu, q] : table_)
        sum = checked_add(sum, q);
    return sum;
}

long long weyl_dim(const RootSystem& rs, FwWeight lambda) {
    if (!lambda.dominant())
        throw std::invalid_argument("weyl_dim: highest weight must be dominant");
    Weight shifted = Weight::from_fw(lambda) + rs.rho();
    Rational prod = 1;
    for (const Weight& g : rs.positive_roots())
        prod *= dot(shifted, g) / dot(rs.rho(), g);
    return prod.to_integer();
}

DominantTable freudenthal_table(const RootSystem& rs, FwWeight lambda) {
    if (!lambda.dominant())
        throw std::invalid_argument("freudenthal_table: highest weight must be dominant");
    const long long M = lambda.root_m();
    const long long N = lambda.root_n();
    DominantTable dom(lambda, M, N);

    const std::vector<PosRoot> roots = positive_root_data(rs);
    const long long norm_top = norm2_shifted(lambda);

    // Dominant cells sorted by height of lambda - mu, so every value the
    // recursion reads has already been computed.
    struct Cell {
        long long h, m, n;
        FwWeight mu;
    };
    std::vector<Cell> cells;
    for (long long m = 0; m <= M; ++m)
        for (long long n = 0; n <= N; ++n) {
            FwWeight mu{lambda.a - 2 * m + 3 * n, lambda.b + m - 2 * n};
            if (mu.dominant())
                cells.push_back(Cell{m + n, m, n, mu});
        }
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.h < b.h; });

    for (const Cell& c : cells) {
        if (c.h == 0) {
            dom.cell(c.m, c.n) = 1;
            continue;
        }
        long long num = 0;
        for (const PosRoot& g : roots) {
            long long kmax = c.h / g.height;
            for (long long k = 1; k <= kmax; ++k) {
                FwWeight nu{c.mu.a + k * g.fa, c.mu.b + k * g.fb};
                FwWeight rep = dominant_representative(rs, nu);
                long long dm = M - rep.root_m();
                long long dn = N - rep.root_n();
                if (dm < 0 || dn < 0 || dm > M || dn > N)
                    continue;
                long long q = dom.cell(dm, dn);
                if (q == 0)
                    continue;
                long long px = nu.a + nu.b, py = nu.b, pz = -nu.a - 2 * nu.b;
                long long pairing = px * g.ax + py * g.ay + pz * g.az;
                num = checked_add(num, checked_mul(q, pairing));
            }
        }
        num = checked_mul(2, num);
        long long den = norm_top - norm2_shifted(c.mu);
        if (den <= 0)
            throw std::logic_error("freudenthal_table: non-positive denominator");
        if (num % den != 0)
            throw std::logic_error("freudenthal_table: non-integral multiplicity");
        long long q = num / den;
        if (q <= 0)
            throw std::logic_error("freudenthal_table: non-positive multiplicity");
        dom.cell(c.m, c.n) = q;
    }
    return dom;
}

long long freudenthal_multiplicity(const RootSystem& rs, FwWeight lambda, FwWeight mu) {
    return freudenthal_table(rs, lambda)
        .multiplicity_dominant(dominant_representative(rs, mu));
}

long long kostant_multiplicity_oracle(const RootSystem& rs, FwWeight lambda, FwWeight mu,
                                      long long height_cap) {
    if (!lambda.dominant())
        throw std::invalid_argument(
            "kostant_multiplicity_oracle: highest weight must be dominant");
    long long gap = lambda.height() - mu.height();
    if (gap > height_cap)
        throw std::runtime_error("kostant_multiplicity_oracle: height gap " +
                                 std::to_string(gap) + " exceeds cap " +
                                 std::to_string(height_cap));
    FwWeight top{lambda.a + 1, lambda.b + 1};
    FwWeight shifted{mu.a + 1, mu.b + 1};
    long long total = 0;
    for (const WeylElement& w : rs.weyl_group()) {
        FwWeight img = w.apply(top);
        FwWeight v{img.a - shifted.a, img.b - shifted.b};
        long long vm = v.root_m(), vn = v.root_n();
        if (vm < 0 || vn < 0)
            continue;
        total = checked_add(total,
                            checked_mul(w.det(), kostant_partition_count(vm, vn)));
    }
    if (total < 0)
        throw std::logic_error("kostant_multiplicity_oracle: negative multiplicity");
    return total;
}

WeightSystem expand_weight_system(const RootSystem& rs, const DominantTable& dom) {
    std::map<FwWeight, long long> full;
    for (const auto& [mu, q] : dom.entries())
        for (const WeylElement& w : rs.weyl_group())
            full[w.apply(mu)] = q;
    return WeightSystem(dom.highest_weight(), std::move(full));
}

MultiplicityEngine::MultiplicityEngine(const RootSystem& rs,
                                       std::optional<std::filesystem::path> cache_dir)
    : rs_(rs), cache_dir_(std::move(cache_dir)),
      warn_([](const std::string& msg) { std::cerr << "g2char: " << msg << std::endl; }) {}

std::filesystem::path MultiplicityEngine::cache_file(FwWeight lambda) const {
    std::string name = "g2_" + std::to_string(lambda.a) + "_" +
                       std::to_string(lambda.b) + ".mult";
    return cache_dir_ ? *cache_dir_ / name : std::filesystem::path(name);
}

std::shared_ptr<const DominantTable> MultiplicityEngine::table(FwWeight lambda) {
    if (!lambda.dominant())
        throw std::invalid_argument("MultiplicityEngine: highest weight must be dominant");
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(lambda);
        if (it != memo_.end())
            return it->second;
    }
    std::shared_ptr<const DominantTable> t;
    if (cache_dir_)
        t = load_cached(lambda);
    bool computed = false;
    if (!t) {
        t = std::make_shared<DominantTable>(freudenthal_table(rs_, lambda));
        computed = true;
    }
    {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = memo_.emplace(lambda, t);
        if (!inserted)
            return it->second;
    }
    if (computed && cache_dir_)
        store_cached(*t);
    return t;
}

long long MultiplicityEngine::multiplicity(FwWeight lambda, FwWeight mu) {
    return table(lambda)->multiplicity_dominant(dominant_representative(rs_, mu));
}

WeightSystem MultiplicityEngine::weight_system(FwWeight lambda) {
    return expand_weight_system(rs_, *table(lambda));
}

std::shared_ptr<const DominantTable> MultiplicityEngine::load_cached(FwWeight lambda) {
    std::filesystem::path file = cache_file(lambda);
    std::ifstream in(file);
    if (!in.is_open())
        return nullptr;  // not cached yet
    auto corrupt = [&](const std::string& why) -> std::shared_ptr<const DominantTable> {
        warn_("cache file " + file.string() + " " + why + "; recomputing");
        return nullptr;
    };

    std::string line;
    if (!std::getline(in, line))
        return corrupt("is empty");
    {
        std::istringstream hs(line);
        std::string version, type;
        long long a = 0, b = 0;
        if (!(hs >> version >> type >> a >> b) || version != kCacheHeaderVersion ||
            type != "g2" || a != lambda.a || b != lambda.b)
            return corrupt("has a bad header");
    }

    std::map<FwWeight, long long> full;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        long long x = 0, y = 0, q = 0;
        if (!(ls >> x >> y >> q) || q < 1)
            return corrupt("has a bad record");
        std::string rest;
        if (ls >> rest)
            return corrupt("has a bad record");
        if (!full.emplace(FwWeight{x, y}, q).second)
            return corrupt("has a duplicate record");
    }
    if (full.empty())
        return corrupt("has no records");
    auto top = full.find(lambda);
    if (top == full.end() || top->second != 1)
        return corrupt("is missing the highest weight");

    long long total = 0;
    for (const auto& [mu, q] : full)
        total = checked_add(total, q);
    if (total != weyl_dim(rs_, lambda))
        return corrupt("does not sum to the Weyl dimension");

    auto dom = std::make_shared<DominantTable>(lambda, lambda.root_m(), lambda.root_n());
    for (const auto& [mu, q] : full) {
        if (!mu.dominant())
            continue;
        long long m = lambda.root_m() - mu.root_m();
        long long n = lambda.root_n() - mu.root_n();
        if (m < 0 || n < 0 || m > lambda.root_m() || n > lambda.root_n())
            return corrupt("contains a weight outside the support");
        dom->cell(m, n) = q;
    }
    return dom;
}

void MultiplicityEngine::store_cached(const DominantTable& dom) {
    WeightSystem ws = expand_weight_system(rs_, dom);
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir_, ec);
    std::filesystem::path file = cache_file(dom.highest_weight());
    std::filesystem::path tmp =
        file.string() + ".tmp." + std::to_string(static_cast<long long>(::getpid()));
    {
        std::ofstream out(tmp);
        if (!out.is_open()) {
            warn_("cannot write cache file " + file.string());
            return;
        }
        out << kCacheHeaderVersion << " g2 " << dom.highest_weight().a << " "
            << dom.highest_weight().b << "\n";
        for (const auto& [mu, q] : ws.table())
            out << mu.a << " " << mu.b << " " << q << "\n";
    }
    std::filesystem::rename(tmp, file, ec);  // atomic replace, last writer wins
    if (ec) {
        warn_("cannot replace cache file " + file.string() + ": " + ec.message());
        std::filesystem::remove(tmp, ec);
    }
}

}  // namespace g2char
