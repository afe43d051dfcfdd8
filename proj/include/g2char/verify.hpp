#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2char/charring.hpp"
#include "g2char/hcmod.hpp"

namespace g2char {

// The published expansion and character displays, stored verbatim as data
// (term order and the doubled "+Ind(3,1)" in the (1,1) list included), so the
// checks compare computed output against the printed text rather than
// against themselves. Never auto-corrected.
struct SignedTerm {
    long long a, b, coeff;
};
struct GenericTerm {
    long long a, b_offset, coeff;  // instantiates to the key (a, n + b_offset)
};

struct PaperFixtures {
    std::vector<SignedTerm> v10_expansion;   // V(1,0) in the induced basis
    std::vector<SignedTerm> v11_expansion;   // V(1,1); lists Ind(3,1) twice
    std::vector<GenericTerm> v1n_expansion;  // V(1,n) for n > 1
    std::vector<SignedTerm> lemma22_rhs;     // 6-term closed form of sum_n V(1,n)
    std::vector<SignedTerm> prop24_lambda1;  // character of U(g)/J((w1+w2)/2)
    std::vector<SignedTerm> prop24_lambda2;  // character of U(g)/J((5w1-w2)/2)
};

const PaperFixtures& paper_fixtures();

// Build an ind-basis character from a fixture term list.
VirtualCharacter character_from(const RootSystem& rs, const std::vector<SignedTerm>& terms);

struct Witness {
    FwWeight key;
    long long expected = 0;
    long long actual = 0;
};

struct VerificationReport {
    std::string name;
    bool passed = false;
    std::optional<Witness> witness;  // present on every failure
    std::vector<std::pair<std::string, long long>> params;
    std::vector<std::string> notes;
    double wall_ms = 0.0;
};

struct VerifyContext {
    const RootSystem& rs;
    MultiplicityEngine& engine;
};

// wcf_expand(1,n) against the printed lists for n = 0, 1 and the generic
// list for 2 <= n <= n_max. The n = 1 report always states the computed
// coefficient of every printed term and addresses the doubled "+Ind(3,1)".
VerificationReport verify_expansions(VerifyContext& ctx, int n_max,
                                     const PaperFixtures& fx = paper_fixtures());

// ind_decompose of the 6-term closed form over D_cutoff has coefficient 1
// exactly on the keys (1,n).
VerificationReport verify_lemma22(VerifyContext& ctx, int cutoff,
                                  const PaperFixtures& fx = paper_fixtures());

// The two 4-term primitive-ideal quotient characters, exact.
VerificationReport verify_prop24(VerifyContext& ctx,
                                 const PaperFixtures& fx = paper_fixtures());

// (i) exact ind-basis identity hc(lambda2) = RO8 - DISC and (ii) its
// truncated irr-basis counterpart over D_cutoff, plus a positivity sweep of
// both function-ring characters.
VerificationReport verify_main(VerifyContext& ctx, int cutoff);

// ind_decompose(RO8 - RO8CL) over D_cutoff is exactly sum_n V(1,n).
VerificationReport verify_costantini(VerifyContext& ctx, int cutoff);

std::vector<VerificationReport> verify_all(VerifyContext& ctx, int cutoff, int n_max);

}  // namespace g2char
