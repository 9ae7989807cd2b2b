#pragma once

#include <string>

#include "symfun/fgl.hpp"
#include "symfun/partition.hpp"
#include "symfun/series.hpp"

namespace sf {

enum class Family { S_KL, S_UF, P, Q, HP, HQ };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct StrictnessError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RankError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroExponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The parameter sequence b, possibly shifted: reading index i yields b_{i - shift}, or 0 when i <= shift.
struct BSequence {
    int shift = 0;
    // Indices above limit read as 0 (used for b_n truncation); 0 means no limit.
    int limit = 0;

    BSequence shifted(int k = 1) const { return {shift + k, limit}; }
    // Index of the underlying b-variable, or 0 for the zero entry.
    int source_index(int i) const;
    TruncSeries at(int i, int cap) const;
};

struct FamilySpec {
    Family family = Family::S_KL;
    Partition lambda;
    int n = 1;
    bool factorial = false;
    bool t_on = false;
    FormalGroupLaw fgl = FormalGroupLaw::universal();
    int cap = -1;  // -1: default |lambda| + n
    BSequence b;

    int effective_cap() const { return cap >= 0 ? cap : lambda.weight() + n; }
    // P/Q with t_on select HP/HQ; HP/HQ always carry t.
    Family effective_family() const;
    void validate() const;
};

// [x_i|b]^k = prod_{j<=k} (x_i +_L b_j); x_i^k when not factorial.
TruncSeries factorial_power(int i, int k, const FormalGroupLaw& fgl, bool factorial, int cap,
                            const BSequence& b = {});
// [[x_i|b]]^k = (x_i +_L x_i) [x_i|b]^{k-1}.
TruncSeries double_power(int i, int k, const FormalGroupLaw& fgl, bool factorial, int cap,
                         const BSequence& b = {});
// [x_i; t]^k = (x_i +_L [t](xbar_i)) x_i^{k-1}.
TruncSeries hl_power(int i, int k, const FormalGroupLaw& fgl, int cap);
// [[x_i; t|b]]^k = (x_i +_L [t](xbar_i)) [x_i|b]^{k-1}.
TruncSeries hl_fact_power(int i, int k, const FormalGroupLaw& fgl, bool factorial, int cap,
                          const BSequence& b = {});

// Divided difference (f - s_k f) / (x_k - x_{k+1}).
TruncSeries divided_difference(const TruncSeries& f, int k);
// Number of denominator factors of the rank-r symmetrizer on n variables.
int symmetrizer_length(int n, int r);
// Sum over S_n / (S_1^r x S_{n-r}) of w[N / prod_{i<=r, i<j<=n} (x_i +_L xbar_j)].
// The result has cap numerator.cap() - symmetrizer_length(n, r).
TruncSeries gysin_symmetrize(const TruncSeries& numerator, int n, int r, const FormalGroupLaw& fgl);
// Sum over all of S_n of w[g / prod_{i<j} (x_i - x_j)].
TruncSeries full_symmetrize(const TruncSeries& g, int n);
// prod_{i<=r, i<j<=n} of the unit (x_i +_L xbar_j) / (x_i - x_j), inverted.
TruncSeries inverse_denominator_units(int n, int r, const FormalGroupLaw& fgl, int cap);

// Numerator fed to the symmetrizer for a family (before unit folding), at the given cap.
TruncSeries family_numerator(const FamilySpec& spec, int cap);
TruncSeries eval_family(const FamilySpec& spec);
// P/Q through the 1/(n-r)! full-S_n form.
TruncSeries eval_pq_full_form(const FamilySpec& spec);
// kappa_lambda = S_KL(lambda) on d variables with b truncated to b_1..b_n.
TruncSeries kl_class(const Partition& lambda, int d, int n, const FormalGroupLaw& fgl, int cap);
// S_UF(empty) on the variables x_{offset+1}..x_{offset+m}.
TruncSeries empty_uf(int m, int offset, const FormalGroupLaw& fgl, bool factorial, int cap);
// Coset symmetrizer of [x|b]^{lambda + rho_{r-1} + (n-r)^r} s_empty(x_{r+1..n}|b).
TruncSeries uf_via_kl_difference(const Partition& lambda, int n, const FormalGroupLaw& fgl, bool factorial,
                                 int cap);

// Renames x_k to x_{target[k-1]} for the listed k; other variables untouched.
TruncSeries rename_x(const TruncSeries& s, const std::vector<int>& target);

}  // namespace sf
