#pragma once

#include <map>
#include <vector>

#include "symfun/laurent.hpp"
#include "symfun/symfun.hpp"

namespace sf {

// Shape of the product whose u^{-target} coefficient is extracted.
enum class GfKind {
    KL,           // 1/P(u) prod u/(u + xbar_j), cross (u_j + ubar_i)/u_j
    HP,           // u/(u + [t](ubar)) HQ-factor, cross (u_j + ubar_i)/(u_j + [t](ubar_i))
    HQ,           // 1/P(u) prod (u + [t](xbar_j))/(u + xbar_j), same cross factor as HP
    HPCorrected,  // HP with the subtracted correction term in every per-variable factor
};

struct GfRequest {
    GfKind kind = GfKind::KL;
    int n = 1;
    std::vector<int> target;  // extract u_1^{-target_1} ... u_r^{-target_r}
    std::vector<int> tails;   // number of (u_i + b_j)/u_i factors per variable (empty: none)
    FormalGroupLaw fgl = FormalGroupLaw::universal();
    BSequence b;
    TruncSeries tval = TruncSeries::variable(VarId::t());  // t, or the constant -1
    int cap = 0;
};

TruncSeries gf_extract(const GfRequest& req);

// Generating-function value of eval_family(spec) (factorial HP and P use the corrected form).
TruncSeries gf_coefficient(const FamilySpec& spec);
// Factorial HP and P through the shifted-parameter form: equals eval_family with spec.b shifted once.
TruncSeries gf_coefficient_shifted(const FamilySpec& spec);
TruncSeries gf_hp_factorial_correction(const Partition& lambda, int n, const FormalGroupLaw& fgl, const BSequence& b,
                                       int cap);

BSequence shift_b(const BSequence& seq);

// Coefficients S_m (m in [-cap, cap]) of 1/P(z) prod_j z/(z + rootbar_j) at z = u^{-1}.
std::map<int, TruncSeries> segre_series(const std::vector<TruncSeries>& roots, const FormalGroupLaw& fgl, int cap);
// Coefficients of S(E) / (P(z) S(F)) at z = u^{-1}, i.e. (1/P(z)) prod_E z/(z + rootbar) prod_F (z + rootbar)/z.
std::map<int, TruncSeries> relative_segre(const std::vector<TruncSeries>& roots_e,
                                          const std::vector<TruncSeries>& roots_f, const FormalGroupLaw& fgl,
                                          int cap);
// Coefficients of u^m, m in [-cap, cap], of the one-variable factor of a KL or HQ (t = -1) product
// with `tail` factors (z + b_j)/z, at z = u^{-1}.
std::map<int, TruncSeries> one_row_coefficients(GfKind kind, int n, int tail, const FormalGroupLaw& fgl,
                                                const BSequence& b, int cap);
// Push-forward of f(x_1..x_r) from the flag bundle, by coefficient extraction.
// The result is kept to weight `cap`; f needs its own terms up to weight cap + dim of the fibre.
TruncSeries dp_pushforward(const TruncSeries& f, int n, int r, const FormalGroupLaw& fgl, int cap);

}  // namespace sf
