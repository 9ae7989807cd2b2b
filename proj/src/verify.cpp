#include "symfun/verify.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "symfun/detpfaff.hpp"
#include "symfun/oracles.hpp"
#include "symfun/parallel.hpp"

namespace sf {

namespace {

// A check returns an empty string on success and a description of the mismatch otherwise.
using Check = std::function<std::string()>;

struct Case {
    std::string key;
    Check check;
};

int pick(int v, int dflt) { return v >= 0 ? v : dflt; }

std::string compare(const TruncSeries& got, const TruncSeries& want, const std::string& what) {
    if (got == want) return {};
    TruncSeries diff = got - want;
    std::string d = diff.str();
    if (d.size() > 300) d = d.substr(0, 300) + "...";
    return what + " differs by " + d;
}

TruncSeries X(int i, int cap) { return TruncSeries::variable(VarId::x(i), cap); }
TruncSeries B(int i, int cap = kNoCap) { return TruncSeries::variable(VarId::b(i), cap); }
TruncSeries C(const Rational& c, int cap = kNoCap) { return TruncSeries::constant(c, cap); }
TruncSeries T() { return TruncSeries::variable(VarId::t()); }

FormalGroupLaw random_custom(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    std::vector<TruncSeries> coeffs;
    for (int i = 0; i < 5; ++i) coeffs.push_back(C(Rational(num(rng), den(rng))));
    return FormalGroupLaw::custom(std::move(coeffs));
}

std::vector<std::pair<std::string, FormalGroupLaw>> laws(const std::vector<std::string>& names, std::uint64_t seed) {
    std::vector<std::pair<std::string, FormalGroupLaw>> out;
    for (auto& n : names) out.emplace_back(n, n == "custom" ? random_custom(seed) : FormalGroupLaw::from_name(n));
    return out;
}

const std::vector<std::string> kThreeLaws = {"additive", "multiplicative", "universal"};
const std::vector<std::string> kFourLaws = {"additive", "multiplicative", "universal", "custom"};

FamilySpec make_spec(Family f, const Partition& lam, int n, bool factorial, const FormalGroupLaw& fgl, int cap) {
    FamilySpec s;
    s.family = f;
    s.lambda = lam;
    s.n = n;
    s.factorial = factorial;
    s.fgl = fgl;
    s.cap = cap;
    return s;
}

std::string spec_key(const std::string& law, Family f, const Partition& lam, int n, bool factorial) {
    return law + "/" + family_name(f) + "/" + lam.str() + "/n=" + std::to_string(n) + (factorial ? "/fact" : "");
}

// ---------------------------------------------------------------- fgl axioms

std::vector<Case> fgl_axiom_cases(const SuiteOptions& opt) {
    int cap = pick(opt.cap, 8);
    std::vector<Case> cases;
    for (auto& [name, f] : laws(kFourLaws, opt.seed)) {
        FormalGroupLaw fgl = f;
        std::string p = name + "/";
        cases.push_back({p + "unit", [=] { return compare(formal_sum(fgl, X(1, cap), TruncSeries(cap)), X(1, cap), "F(x,0)"); }});
        cases.push_back({p + "commutativity", [=] {
                             return compare(formal_sum(fgl, X(1, cap), X(2, cap)), formal_sum(fgl, X(2, cap), X(1, cap)),
                                            "F(x1,x2) - F(x2,x1)");
                         }});
        cases.push_back({p + "associativity", [=] {
                             TruncSeries l = formal_sum(fgl, formal_sum(fgl, X(1, cap), X(2, cap)), X(3, cap));
                             TruncSeries r = formal_sum(fgl, X(1, cap), formal_sum(fgl, X(2, cap), X(3, cap)));
                             return compare(l, r, "associativity");
                         }});
        cases.push_back({p + "log-additivity", [=] {
                             return compare(logarithm(fgl, formal_sum(fgl, X(1, cap), X(2, cap))),
                                            logarithm(fgl, X(1, cap)) + logarithm(fgl, X(2, cap)), "l(F(x1,x2))");
                         }});
        cases.push_back({p + "exp-log", [=] { return compare(exponential(fgl, logarithm(fgl, X(1, cap))), X(1, cap), "exp(l(x))"); }});
        cases.push_back({p + "inverse", [=] {
                             return compare(formal_sum(fgl, X(1, cap), formal_inverse(fgl, X(1, cap))), TruncSeries(cap),
                                            "x +_F xbar");
                         }});
        for (int k = -3; k <= 3; ++k) {
            cases.push_back({p + "n-series/" + std::to_string(k), [=] {
                                 TruncSeries x = X(1, cap);
                                 TruncSeries got = t_series(fgl, x, C(Rational(k)));
                                 TruncSeries iter(cap);
                                 for (int i = 0; i < std::abs(k); ++i) iter = formal_sum(fgl, iter, x);
                                 if (k < 0) iter = formal_inverse(fgl, iter);
                                 std::string d = compare(got, iter, "[n](x) vs iterated sum");
                                 if (!d.empty()) return d;
                                 return compare(logarithm(fgl, got), logarithm(fgl, x).scaled(Rational(k)), "l([n](x))");
                             }});
        }
        cases.push_back({p + "l'-times-P", [=] {
                             return compare(mul(inv_p_series(fgl, cap), p_series(fgl, cap)), C(Rational(1), cap), "l'(z) P(z)");
                         }});
    }
    return cases;
}

// ---------------------------------------------------------------- route equivalence

std::vector<Case> gf_route_cases(const SuiteOptions& opt) {
    int maxw = pick(opt.max_weight, 4);
    int maxn = pick(opt.max_n, 3);
    std::vector<Case> cases;
    const Family fams[] = {Family::S_KL, Family::P, Family::Q, Family::HP, Family::HQ};
    for (auto& [name, fgl] : laws(kThreeLaws, opt.seed))
        for (Family fam : fams)
            for (int factorial = 0; factorial < 2; ++factorial)
                for (int n = std::min(2, maxn); n <= maxn; ++n)
                    for (auto& lam : partitions_up_to(maxw, n)) {
                        if ((fam == Family::P || fam == Family::Q) && !lam.is_strict()) continue;
                        int cap = pick(opt.cap, lam.weight() + n + 2);
                        FamilySpec s = make_spec(fam, lam, n, factorial, fgl, cap);
                        std::string key = spec_key(name, fam, lam, n, factorial);
                        cases.push_back({key, [=] { return compare(gf_coefficient(s), eval_family(s), "gf - symmetrizer"); }});
                        if (factorial && (fam == Family::P || fam == Family::HP))
                            cases.push_back({key + "/shifted", [=] {
                                                 FamilySpec t = s;
                                                 t.b = shift_b(s.b);
                                                 return compare(gf_coefficient_shifted(s), eval_family(t),
                                                                "shifted gf - symmetrizer(shifted b)");
                                             }});
                    }
    return cases;
}

// ---------------------------------------------------------------- Darondeau-Pragacz

std::vector<Case> dp_cases(const SuiteOptions& opt) {
    int cap = pick(opt.cap, 8);
    int maxn = pick(opt.max_n, 3);
    int maxe = pick(opt.max_weight, 3);
    std::vector<Case> cases;
    for (auto& [name, fgl] : laws({"additive", "universal"}, opt.seed))
        for (int n = 1; n <= maxn; ++n)
            for (int r = 1; r <= n; ++r) {
                std::vector<int> e(static_cast<std::size_t>(r), 0);
                while (true) {
                    std::string key = name + "/n=" + std::to_string(n) + "/x^(";
                    for (int i = 0; i < r; ++i) key += (i ? "," : "") + std::to_string(e[static_cast<std::size_t>(i)]);
                    key += ")";
                    FormalGroupLaw f = fgl;
                    cases.push_back({key, [=] {
                                         int L = symmetrizer_length(n, r);
                                         Monomial m;
                                         for (int i = 0; i < r; ++i)
                                             if (e[static_cast<std::size_t>(i)]) m.set(VarId::x(i + 1), e[static_cast<std::size_t>(i)]);
                                         TruncSeries mono = TruncSeries::monomial(m, Rational(1), cap + L);
                                         TruncSeries sym = gysin_symmetrize(mono, n, r, f);
                                         TruncSeries dp = dp_pushforward(mono.with_cap(cap), n, r, f, cap);
                                         return compare(dp, sym, "residue formula - symmetrizer");
                                     }});
                    int i = 0;
                    while (i < r && e[static_cast<std::size_t>(i)] == maxe) e[static_cast<std::size_t>(i++)] = 0;
                    if (i == r) break;
                    ++e[static_cast<std::size_t>(i)];
                }
            }
    return cases;
}

// ---------------------------------------------------------------- worked examples

std::vector<Case> example_cases(const SuiteOptions&) {
    std::vector<Case> cases;
    FormalGroupLaw U = FormalGroupLaw::universal(), A = FormalGroupLaw::additive();
    for (int n = 1; n <= 3; ++n)
        for (int factorial = 0; factorial < 2; ++factorial)
            cases.push_back({"s_kl(empty)/n=" + std::to_string(n) + (factorial ? "/fact" : ""), [=] {
                                 FamilySpec s = make_spec(Family::S_KL, Partition(), n, factorial, U, 4);
                                 std::string d = compare(eval_family(s), C(Rational(1)), "symmetrizer");
                                 return d.empty() ? compare(gf_coefficient(s), C(Rational(1)), "gf") : d;
                             }});
    for (int k = 1; k <= 2; ++k)
        cases.push_back({"s_kl(k,k)(x_2|b)/k=" + std::to_string(k), [=] {
                             int cap = 2 * k + 5;
                             FamilySpec s = make_spec(Family::S_KL, Partition({k, k}), 2, true, U, cap);
                             TruncSeries S = eval_family(s);
                             TruncSeries d12 = formal_difference(U, X(1, cap), X(2, cap));
                             TruncSeries d21 = formal_difference(U, X(2, cap), X(1, cap));
                             BSequence b;
                             TruncSeries p1k = factorial_power(1, k, U, true, cap, b), p2k = factorial_power(2, k, U, true, cap, b);
                             TruncSeries p1 = factorial_power(1, k + 1, U, true, cap, b), p2 = factorial_power(2, k + 1, U, true, cap, b);
                             TruncSeries lhs = S * d12 * d21;
                             TruncSeries rhs = p1 * p2k * d21 + p2 * p1k * d12;
                             return compare(lhs, rhs, "cleared two-term identity");
                         }});
    for (int route = 0; route < 2; ++route) {
        std::string rn = route ? "gf" : "symmetrizer";
        cases.push_back({"hp(1)(x_3;t|b)/" + rn, [=] {
                             FamilySpec s = make_spec(Family::HP, Partition({1}), 3, true, A, 4);
                             TruncSeries want = X(1, 4) + X(2, 4) + X(3, 4) + B(1) * (C(Rational(1)) + T() + T() * T());
                             return compare(route ? gf_coefficient(s) : eval_family(s), want, "HP_(1)");
                         }});
        cases.push_back({"hq(1)(x_3;t|b)/" + rn, [=] {
                             FamilySpec s = make_spec(Family::HQ, Partition({1}), 3, true, A, 4);
                             TruncSeries want = (C(Rational(1)) - T()) * (X(1, 4) + X(2, 4) + X(3, 4));
                             return compare(route ? gf_coefficient(s) : eval_family(s), want, "HQ_(1)");
                         }});
    }
    return cases;
}

// ---------------------------------------------------------------- specializations

TruncSeries at_t(const TruncSeries& s, int v) { return substitute(s, {{VarId::t(), C(Rational(v))}}); }

std::vector<Case> specialization_cases(const SuiteOptions& opt) {
    int maxw = pick(opt.max_weight, 4);
    int maxn = pick(opt.max_n, 3);
    std::vector<Case> cases;
    for (auto& [name, fgl] : laws(kThreeLaws, opt.seed))
        for (int n = 1; n <= maxn; ++n)
            for (auto& lam : partitions_up_to(maxw, n)) {
                int cap = pick(opt.cap, lam.weight() + n);
                FormalGroupLaw f = fgl;
                for (Family fam : {Family::HP, Family::HQ})
                    cases.push_back({"t=0/" + spec_key(name, fam, lam, n, false), [=] {
                                         TruncSeries hl = eval_family(make_spec(fam, lam, n, false, f, cap));
                                         TruncSeries kl = eval_family(make_spec(Family::S_KL, lam, n, false, f, cap));
                                         return compare(at_t(hl, 0), kl, "HL at t=0 - S_KL");
                                     }});
                if (!lam.is_strict()) continue;
                for (int factorial = 0; factorial < 2; ++factorial)
                    for (auto [hl, pq] : {std::pair{Family::HP, Family::P}, std::pair{Family::HQ, Family::Q}})
                        cases.push_back({"t=-1/" + spec_key(name, hl, lam, n, factorial), [=] {
                                             TruncSeries h = eval_family(make_spec(hl, lam, n, factorial, f, cap));
                                             TruncSeries p = eval_family(make_spec(pq, lam, n, factorial, f, cap));
                                             return compare(at_t(h, -1), p, "HL at t=-1 - P/Q");
                                         }});
            }
    FormalGroupLaw A = FormalGroupLaw::additive();
    for (int n = 1; n <= maxn; ++n)
        for (auto& lam : partitions_up_to(maxw, n)) {
            int cap = pick(opt.cap, lam.weight() + n);
            std::string tail = "/" + lam.str() + "/n=" + std::to_string(n);
            cases.push_back({"hq-classical" + tail, [=] {
                                 TruncSeries hq = eval_family(make_spec(Family::HQ, lam, n, false, A, cap));
                                 return compare(hq, oracle::hl_classical(lam, n, oracle::HLKind::Q).to_series(), "HQ - Q(x;t)");
                             }});
            cases.push_back({"hp-classical" + tail, [=] {
                                 // v_{n-r}(t) HP = v_lambda(t) P(x;t)
                                 TruncSeries hp = eval_family(make_spec(Family::HP, lam, n, false, A, cap));
                                 TruncSeries lhs = hp * oracle::v_poly(n - lam.length()).to_series();
                                 TruncSeries rhs = (oracle::v_lambda(lam, n) * oracle::hl_classical(lam, n, oracle::HLKind::P)).to_series();
                                 return compare(lhs, rhs, "v_{n-r} HP - v_lambda P(x;t)");
                             }});
            cases.push_back({"schur-tableaux" + tail, [=] {
                                 TruncSeries s = eval_family(make_spec(Family::S_KL, lam, n, false, A, cap));
                                 return compare(s, oracle::schur_tableaux(lam, n).to_series(), "S_KL - tableau Schur");
                             }});
            cases.push_back({"factorial-bialternant" + tail, [=] {
                                 TruncSeries s = eval_family(make_spec(Family::S_KL, lam, n, true, A, cap));
                                 return compare(s, oracle::factorial_schur_bialternant(lam, n).to_series(true),
                                                "S_KL(b=-a) - factorial bialternant");
                             }});
        }
    return cases;
}

// ---------------------------------------------------------------- closed forms

std::vector<Case> closed_form_cases(const SuiteOptions& opt) {
    int maxw = pick(opt.max_weight, 5);
    int maxn = pick(opt.max_n, 4);
    std::vector<Case> cases;
    FormalGroupLaw A = FormalGroupLaw::additive(), M = FormalGroupLaw::multiplicative();
    BSequence b;
    for (int n = 1; n <= maxn; ++n)
        for (int factorial = 0; factorial < 2; ++factorial) {
            for (auto& lam : partitions_up_to(maxw, n)) {
                int cap = pick(opt.cap, lam.weight() + n + 4);
                std::string tail = "/" + lam.str() + "/n=" + std::to_string(n) + (factorial ? "/fact" : "");
                for (auto v : {JtVariant::Tails, JtVariant::Shifted})
                    cases.push_back({std::string(v == JtVariant::Tails ? "jacobi-trudi" : "jacobi-trudi-shifted") + tail, [=] {
                                         TruncSeries want = eval_family(make_spec(Family::S_KL, lam, n, factorial, A, cap));
                                         return compare(jacobi_trudi_schur(lam, n, factorial, b, cap, v), want, "det - S_KL");
                                     }});
                cases.push_back({"grothendieck" + tail, [=] {
                                     TruncSeries want = eval_family(make_spec(Family::S_KL, lam, n, factorial, M, cap));
                                     return compare(grothendieck_det(lam, n, factorial, b, cap), want, "det - S_KL");
                                 }});
            }
            for (auto& nu : strict_partitions_up_to(maxw + 1, n)) {
                int cap = pick(opt.cap, nu.weight() + n + 4);
                std::string tail = "/" + nu.str() + "/n=" + std::to_string(n) + (factorial ? "/fact" : "");
                cases.push_back({"q-pfaffian" + tail, [=] {
                                     SkewMatrix m = q_matrix(nu, n, factorial, b, cap);
                                     TruncSeries pf = pfaffian(m).truncate(cap);
                                     std::string d = compare(pf * pf, det(m), "Pf^2 - det");
                                     if (!d.empty()) return d;
                                     return compare(pf, eval_family(make_spec(Family::Q, nu, n, factorial, A, cap)), "Pf - Q");
                                 }});
                cases.push_back({"gq-pfaffian" + tail, [=] {
                                     SkewMatrix m = gq_matrix(nu, n, factorial, b, cap);
                                     TruncSeries pf = pfaffian(m).truncate(cap);
                                     std::string d = compare(pf * pf, det(m), "Pf^2 - det");
                                     if (!d.empty()) return d;
                                     return compare(pf, eval_family(make_spec(Family::Q, nu, n, factorial, M, cap)), "Pf - GQ");
                                 }});
            }
        }
    return cases;
}

// ---------------------------------------------------------------- Segre

std::vector<TruncSeries> x_roots(int n, int cap) {
    std::vector<TruncSeries> r;
    for (int j = 1; j <= n; ++j) r.push_back(X(j, cap));
    return r;
}

std::string compare_maps(const std::map<int, TruncSeries>& got, const std::map<int, TruncSeries>& want, int lo, int hi,
                         const std::string& what) {
    for (int m = lo; m <= hi; ++m) {
        auto g = got.find(m), w = want.find(m);
        if (g == got.end() || w == want.end()) return what + ": missing index " + std::to_string(m);
        std::string d = compare(g->second, w->second, what + " at index " + std::to_string(m));
        if (!d.empty()) return d;
    }
    return {};
}

std::vector<Case> segre_cases(const SuiteOptions& opt) {
    int maxk = pick(opt.max_weight, 5);
    int maxn = pick(opt.max_n, 3);
    std::vector<Case> cases;
    for (auto& [name, fgl] : laws(kFourLaws, opt.seed)) {
        FormalGroupLaw f = fgl;
        for (int n = 1; n <= maxn; ++n) {
            std::string tail = name + "/n=" + std::to_string(n);
            for (int k = 0; k <= maxk; ++k)
                cases.push_back({"one-row/" + tail + "/k=" + std::to_string(k), [=] {
                                     int cap = pick(opt.cap, k + n);
                                     auto S = segre_series(x_roots(n, cap), f, cap);
                                     if (k == 0) {
                                         // S_0 is the push-forward of x^{n-1}; it is 1 only for special laws.
                                         int L = symmetrizer_length(n, 1);
                                         TruncSeries x = X(1, cap + L).pow(n - 1);
                                         return compare(S.at(0), gysin_symmetrize(x, n, 1, f), "S_0 - push-forward of x^(n-1)");
                                     }
                                     FamilySpec s = make_spec(Family::S_KL, Partition({k}), n, false, f, cap);
                                     return compare(S.at(k), eval_family(s), "Segre coefficient - S_KL(k)");
                                 }});
            int cap = pick(opt.cap, maxk + 1);
            cases.push_back({"relative-empty-F/" + tail, [=] {
                                 auto roots = x_roots(n, cap);
                                 return compare_maps(relative_segre(roots, {}, f, cap), segre_series(roots, f, cap), -cap,
                                                     cap, "S(E - 0) - S(E)");
                             }});
            cases.push_back({"relative-E=F/" + tail, [=] {
                                 auto roots = x_roots(n, cap);
                                 std::map<int, TruncSeries> want;
                                 for (int m = -cap; m <= cap; ++m) {
                                     TruncSeries c(cap);
                                     if (m == 0) c = C(Rational(1), cap);
                                     if (m < 0) c = f.log_coeff(-m).scaled(Rational(1 - m)).truncate(cap);
                                     want.emplace(m, c);
                                 }
                                 return compare_maps(relative_segre(roots, roots, f, cap), want, -cap, cap, "S(E - E) - 1/P");
                             }});
        }
    }
    FormalGroupLaw M = FormalGroupLaw::multiplicative();
    for (int n = 1; n <= maxn; ++n)
        for (int k = 0; k <= maxk; ++k)
            cases.push_back({"k-theory-relative/n=" + std::to_string(n) + "/k=" + std::to_string(k), [=] {
                                 int cap = pick(opt.cap, maxk + n);
                                 std::vector<TruncSeries> F;
                                 for (int j = 1; j <= k; ++j) F.push_back(formal_inverse(M, B(j, cap)));
                                 auto got = relative_segre(x_roots(n, cap), F, M, cap);
                                 auto want = one_row_series(OneRow::G, k, n, BSequence{}, cap);
                                 return compare_maps(got, want, -cap, cap, "relative Segre - G^(k)");
                             }});
    return cases;
}

// ---------------------------------------------------------------- S_UF vs S_KL

std::vector<Case> uf_kl_cases(const SuiteOptions& opt) {
    int maxw = pick(opt.max_weight, 3);
    int n = pick(opt.max_n, 3);
    int cap = pick(opt.cap, 7);
    std::vector<Case> cases;
    FormalGroupLaw U = FormalGroupLaw::universal();
    for (int factorial = 0; factorial < 2; ++factorial)
        for (auto& lam : partitions_up_to(maxw, n))
            cases.push_back({"universal/" + lam.str() + "/n=" + std::to_string(n) + (factorial ? "/fact" : ""), [=] {
                                 TruncSeries uf = eval_family(make_spec(Family::S_UF, lam, n, factorial, U, cap));
                                 return compare(uf_via_kl_difference(lam, n, U, factorial, cap), uf,
                                                "coset form with s_empty - S_UF");
                             }});
    return cases;
}

struct SuiteDef {
    SuiteInfo info;
    std::function<std::vector<Case>(const SuiteOptions&)> build;
};

const std::vector<SuiteDef>& registry() {
    static const std::vector<SuiteDef> defs = {
        {{"fgl-axioms", "unit, commutativity, associativity, log additivity, n-series, l'P = 1"}, fgl_axiom_cases},
        {{"gf-vs-symmetrizer", "generating-function coefficients equal symmetrizer output for every family"}, gf_route_cases},
        {{"darondeau-pragacz", "residue push-forward equals the symmetrizer on monomials"}, dp_cases},
        {{"worked-examples", "empty-partition, two-term (k,k) and one-row Hall-Littlewood examples"}, example_cases},
        {{"specializations", "t = 0, t = -1, classical Hall-Littlewood, Schur and factorial Schur oracles"},
         specialization_cases},
        {{"closed-forms", "Jacobi-Trudi, Grothendieck determinants and Q/GQ Pfaffians"}, closed_form_cases},
        {{"segre", "Segre and relative Segre series identities"}, segre_cases},
        {{"uf-kl", "S_UF as a coset symmetrizer with the empty-partition factor"}, uf_kl_cases},
    };
    return defs;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (auto& d : registry()) v.push_back(d.info);
        return v;
    }();
    return infos;
}

bool has_suite(const std::string& name) {
    for (auto& d : registry())
        if (d.info.name == name) return true;
    return false;
}

std::vector<CaseResult> run_suite(const std::string& name, const SuiteOptions& opt) {
    const SuiteDef* def = nullptr;
    for (auto& d : registry())
        if (d.info.name == name) def = &d;
    if (!def) throw std::invalid_argument("unknown suite: " + name);
    std::vector<Case> cases = def->build(opt);
    std::vector<CaseResult> results(cases.size());
    std::mutex mu;
    parallel_for(cases.size(), [&](std::size_t i) {
        CaseResult r;
        r.key = cases[i].key;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = cases[i].check();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.pass = r.detail.empty();
        results[i] = r;
        if (opt.progress) {
            std::lock_guard<std::mutex> lock(mu);
            opt.progress(r);
        }
    });
    return results;
}

}  // namespace sf
