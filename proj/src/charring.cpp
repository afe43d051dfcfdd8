#include "g2char/charring.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2char {

namespace {

void require_same_basis(const VirtualCharacter& a, const VirtualCharacter& b) {
    if (a.basis() != b.basis())
        throw std::invalid_argument(std::string("virtual character basis mismatch: ") +
                                    to_string(a.basis()) + " vs " + to_string(b.basis()));
}

std::optional<int> min_window(std::optional<int> a, std::optional<int> b) {
    if (!a)
        return b;
    if (!b)
        return a;
    return std::min(*a, *b);
}

}  // namespace

VirtualCharacter VirtualCharacter::irr_term(FwWeight lambda, long long coeff) {
    if (!lambda.dominant())
        throw std::invalid_argument("V" + lambda.to_string() + ": key must be dominant");
    VirtualCharacter vc(Basis::irr);
    vc.add_term(lambda, coeff);
    return vc;
}

VirtualCharacter VirtualCharacter::ind_term(const RootSystem& rs, FwWeight mu,
                                            long long coeff) {
    VirtualCharacter vc(Basis::ind);
    vc.add_term(dominant_representative(rs, mu), coeff);
    return vc;
}

VirtualCharacter VirtualCharacter::ind_term(const RootSystem& rs, const Weight& mu,
                                            long long coeff) {
    return ind_term(rs, mu.to_fw(), coeff);
}

void VirtualCharacter::add_term(FwWeight key, long long coeff) {
    if (!key.dominant())
        throw std::invalid_argument("virtual character key must be dominant: " +
                                    key.to_string());
    if (coeff == 0)
        return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0)
        terms_.erase(it);
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
    require_same_basis(*this, o);
    window_ = min_window(window_, o.window_);
    for (const auto& [key, c] : o.terms_)
        add_term(key, c);
    return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
    require_same_basis(*this, o);
    window_ = min_window(window_, o.window_);
    for (const auto& [key, c] : o.terms_)
        add_term(key, checked_mul(c, -1));
    return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(long long s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_)
        c = checked_mul(c, s);
    return *this;
}

VirtualCharacter VirtualCharacter::restricted(TruncationWindow w) const {
    VirtualCharacter out(basis_, min_window(window_, w.n));
    for (const auto& [key, c] : terms_)
        if (w.contains(key))
            out.add_term(key, c);
    return out;
}

std::string to_string(const VirtualCharacter& vc) {
    if (vc.empty())
        return "0";
    const char* atom = vc.basis() == Basis::irr ? "V" : "Ind";
    std::string out;
    for (const auto& [key, c] : vc.terms()) {
        long long mag = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1)
            out += std::to_string(mag) + "*";
        out += atom;
        out += "(" + std::to_string(key.a) + "," + std::to_string(key.b) + ")";
    }
    return out;
}

VirtualCharacter wcf_expand(const RootSystem& rs, FwWeight lambda) {
    if (!lambda.dominant())
        throw std::invalid_argument("wcf_expand: highest weight must be dominant");
    FwWeight shifted{lambda.a + 1, lambda.b + 1};  // lambda + rho
    VirtualCharacter out(Basis::ind);
    for (const WeylElement& w : rs.weyl_group()) {
        FwWeight img = w.apply(shifted);
        FwWeight key = dominant_representative(rs, FwWeight{img.a - 1, img.b - 1});
        out.add_term(key, w.det());
    }
    return out;
}

namespace {

void require_ind(const VirtualCharacter& chi, const char* who) {
    if (chi.basis() != Basis::ind)
        throw std::invalid_argument(std::string(who) +
                                    ": character must be in the ind basis");
}

}  // namespace

VirtualCharacter ind_decompose(const RootSystem& rs, MultiplicityEngine& engine,
                               const VirtualCharacter& chi, TruncationWindow window) {
    require_ind(chi, "ind_decompose");
    if (&engine.root_system() != &rs)
        throw std::invalid_argument("ind_decompose: engine bound to a different root system");
    const std::vector<FwWeight> keys = window.keys();
    const std::vector<std::pair<FwWeight, long long>> terms(chi.terms().begin(),
                                                            chi.terms().end());
    std::vector<long long> coeffs(keys.size(), 0);

    // Each window key needs its own Freudenthal table; the keys are
    // independent, so the loop parallelizes directly. Table sizes shrink as
    // a+b grows toward the window edge, hence the dynamic schedule.
    std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < keys.size(); ++i) {
        try {
            long long acc = 0;
            for (const auto& [mu, c] : terms)
                acc = checked_add(acc, checked_mul(c, engine.multiplicity(keys[i], mu)));
            coeffs[i] = acc;
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    VirtualCharacter out(Basis::irr, window.n);
    for (std::size_t i = 0; i < keys.size(); ++i)
        out.add_term(keys[i], coeffs[i]);
    return out;
}

VirtualCharacter ind_decompose_serial(const RootSystem& rs, const VirtualCharacter& chi,
                                      TruncationWindow window) {
    require_ind(chi, "ind_decompose_serial");
    VirtualCharacter out(Basis::irr, window.n);
    for (const FwWeight& lambda : window.keys()) {
        DominantTable dom = freudenthal_table(rs, lambda);
        long long acc = 0;
        for (const auto& [mu, c] : chi.terms())
            acc = checked_add(acc, checked_mul(c, dom.multiplicity_dominant(mu)));
        out.add_term(lambda, acc);
    }
    return out;
}

VirtualCharacter discrepancy_series_finite(const RootSystem& rs) {
    VirtualCharacter out(Basis::ind);
    out += VirtualCharacter::ind_term(rs, FwWeight{1, 0}, 1);
    out += VirtualCharacter::ind_term(rs, FwWeight{0, 1}, -1);
    out += VirtualCharacter::ind_term(rs, FwWeight{2, 0}, -1);
    out += VirtualCharacter::ind_term(rs, FwWeight{1, 1}, 1);
    out += VirtualCharacter::ind_term(rs, FwWeight{0, 2}, 1);
    out += VirtualCharacter::ind_term(rs, FwWeight{2, 1}, -1);
    return out;
}

VirtualCharacter discrepancy_series_truncated(const RootSystem&, int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("discrepancy_series_truncated: n_max must be >= 0");
    VirtualCharacter out(Basis::irr);
    for (long long n = 0; n <= n_max; ++n)
        out.add_term(FwWeight{1, n}, 1);
    return out;
}

}  // namespace g2char
