#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2char/multiplicity.hpp"
#include "g2char/rootsys.hpp"

namespace g2char {

// The two bases of the virtual character ring:
//   irr - finite-dimensional irreducibles V(a,b)
//   ind - induced modules Ind_T^G(a,b), keyed by the dominant orbit representative
enum class Basis { irr, ind };

inline const char* to_string(Basis b) { return b == Basis::irr ? "irr" : "ind"; }

// Finite check region for decompositions into irreducibles: the dominant
// integral pairs (a,b) with a+b <= n. Induced modules contain infinitely
// many irreducibles, so windowed results only guarantee these keys.
struct TruncationWindow {
    int n = 0;

    std::size_t size() const {
        return static_cast<std::size_t>(n + 1) * (n + 2) / 2;
    }
    bool contains(FwWeight w) const { return w.dominant() && w.a + w.b <= n; }
    std::vector<FwWeight> keys() const {
        std::vector<FwWeight> out;
        out.reserve(size());
        for (long long a = 0; a <= n; ++a)
            for (long long b = 0; a + b <= n; ++b)
                out.push_back(FwWeight{a, b});
        return out;
    }
};

// Finite integer combination of basis symbols. Keys are always dominant
// integral; ind keys are normalized to the dominant orbit representative on
// construction. Arithmetic never mixes bases, and windows intersect.
class VirtualCharacter {
public:
    using Terms = std::map<FwWeight, long long>;

    explicit VirtualCharacter(Basis basis, std::optional<int> window = std::nullopt)
        : basis_(basis), window_(window) {}

    static VirtualCharacter irr_term(FwWeight lambda, long long coeff = 1);
    static VirtualCharacter ind_term(const RootSystem& rs, FwWeight mu, long long coeff = 1);
    static VirtualCharacter ind_term(const RootSystem& rs, const Weight& mu,
                                     long long coeff = 1);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    std::optional<int> window() const { return window_; }

    long long coeff(FwWeight key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Merge a coefficient into a key; drops the term when it cancels.
    void add_term(FwWeight key, long long coeff);

    VirtualCharacter& operator+=(const VirtualCharacter& o);
    VirtualCharacter& operator-=(const VirtualCharacter& o);
    VirtualCharacter& operator*=(long long s);

    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) {
        return a += b;
    }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) {
        return a -= b;
    }
    friend VirtualCharacter operator*(long long s, VirtualCharacter a) { return a *= s; }

    friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;

    // Drop keys outside the window and tighten the guarantee region.
    VirtualCharacter restricted(TruncationWindow w) const;

private:
    Basis basis_;
    std::optional<int> window_;
    Terms terms_;
};

// Display form, e.g. "Ind(0,0) - Ind(1,0) + 2*Ind(2,1)"; "0" when empty.
std::string to_string(const VirtualCharacter& vc);

// Weyl character formula in the induced basis:
//   V(a,b) = sum_w det(w) Ind(dominant representative of w(lambda+rho) - rho).
VirtualCharacter wcf_expand(const RootSystem& rs, FwWeight lambda);

// Decomposition of an ind-basis character into irreducibles over the window:
// by Frobenius reciprocity the coefficient of V(lambda) in Ind(mu) is the
// weight multiplicity m_lambda(mu). OpenMP-parallel across window keys.
VirtualCharacter ind_decompose(const RootSystem& rs, MultiplicityEngine& engine,
                               const VirtualCharacter& chi, TruncationWindow window);

// Straightforward single-thread reference for the same decomposition; keeps
// no state and shares nothing with the parallel kernel beyond the Freudenthal
// table builder. Used by tests and the benchmark.
VirtualCharacter ind_decompose_serial(const RootSystem& rs, const VirtualCharacter& chi,
                                      TruncationWindow window);

// The closed 6-term form of sum_{n>=0} V(1,n) in the induced basis.
VirtualCharacter discrepancy_series_finite(const RootSystem& rs);

// Truncation sum_{n=0}^{n_max} V(1,n) in the irreducible basis.
VirtualCharacter discrepancy_series_truncated(const RootSystem& rs, int n_max);

}  // namespace g2char
