#include "symfun/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace sf::oracle {

Poly Poly::constant(const mpq_class& c) {
    Poly p;
    p.add_term(Exps{}, c);
    return p;
}

namespace {
Poly single(int slot) {
    Exps e{};
    e[static_cast<std::size_t>(slot)] = 1;
    Poly p;
    p.add_term(e, 1);
    return p;
}
}  // namespace

Poly Poly::x(int i) { return single(i - 1); }
Poly Poly::a(int i) { return single(kOx + i - 1); }
Poly Poly::t() { return single(kOt); }

void Poly::add_term(const Exps& e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly operator+(const Poly& p, const Poly& q) {
    Poly r = p;
    for (auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    for (auto& [e1, c1] : p.terms_)
        for (auto& [e2, c2] : q.terms_) {
            Exps e;
            for (int k = 0; k < kOvars; ++k) e[static_cast<std::size_t>(k)] = e1[static_cast<std::size_t>(k)] + e2[static_cast<std::size_t>(k)];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::pow(int e) const {
    Poly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::swap_x(int i, int j) const {
    Poly r;
    for (auto& [e, c] : terms_) {
        Exps f = e;
        std::swap(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(j - 1)]);
        r.add_term(f, c);
    }
    return r;
}

Poly Poly::at_t(const mpq_class& v) const {
    Poly r;
    for (auto& [e, c] : terms_) {
        Exps f = e;
        int k = f[kOt];
        f[kOt] = 0;
        mpq_class p = 1;
        for (int i = 0; i < k; ++i) p *= v;
        r.add_term(f, c * p);
    }
    return r;
}

Poly exact_quotient(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw NotDivisible("division by zero polynomial");
    auto lead_d = den.terms_.rbegin();
    Poly q, rem = num;
    while (!rem.is_zero()) {
        auto lead_r = rem.terms_.rbegin();
        Exps e;
        for (int k = 0; k < kOvars; ++k) {
            e[static_cast<std::size_t>(k)] = lead_r->first[static_cast<std::size_t>(k)] - lead_d->first[static_cast<std::size_t>(k)];
            if (e[static_cast<std::size_t>(k)] < 0) throw NotDivisible("oracle polynomial division is not exact");
        }
        Poly m;
        m.add_term(e, lead_r->second / lead_d->second);
        q = q + m;
        rem = rem - m * den;
    }
    return q;
}

TruncSeries Poly::to_series(bool a_as_minus_b) const {
    SeriesBuilder b(kNoCap);
    for (auto& [e, c] : terms_) {
        Monomial m;
        int sign = 1;
        for (int i = 0; i < kOx; ++i)
            if (e[static_cast<std::size_t>(i)]) m.set(VarId::x(i + 1), e[static_cast<std::size_t>(i)]);
        for (int i = 0; i < kOa; ++i) {
            int k = e[static_cast<std::size_t>(kOx + i)];
            if (!k) continue;
            m.set(VarId::b(i + 1), k);
            if (a_as_minus_b && k % 2) sign = -sign;
        }
        if (e[kOt]) m.set(VarId::t(), e[kOt]);
        b.add(m, Rational(mpq_class(sign * c)));
    }
    return b.build();
}

namespace {

void fill(const std::vector<int>& shape, int n, std::vector<std::vector<int>>& tab, std::size_t row, std::size_t col,
          Exps& content, Poly& out) {
    if (row == shape.size()) {
        out.add_term(content, 1);
        return;
    }
    if (col == static_cast<std::size_t>(shape[row])) {
        fill(shape, n, tab, row + 1, 0, content, out);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, tab[row][col - 1]);
    if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
    for (int v = lo; v <= n; ++v) {
        tab[row][col] = v;
        ++content[static_cast<std::size_t>(v - 1)];
        fill(shape, n, tab, row, col + 1, content, out);
        --content[static_cast<std::size_t>(v - 1)];
    }
}

// (x_j | a)^k
Poly fact_pow(int j, int k, bool factorial) {
    Poly p = Poly::constant(1);
    for (int i = 1; i <= k; ++i) p = p * (factorial ? Poly::x(j) - Poly::a(i) : Poly::x(j));
    return p;
}

template <class Entry>
Poly leibniz(int n, Entry entry) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        Poly term = Poly::constant(inv % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) term = term * entry(i, perm[static_cast<std::size_t>(i)]);
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Poly permute_x(const Poly& p, const std::vector<int>& w) {
    Poly r;
    for (auto& [e, c] : p.terms()) {
        Exps f = e;
        for (std::size_t i = 0; i < w.size(); ++i) f[static_cast<std::size_t>(w[i])] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::map<int, int> multiplicities(const Partition& lambda) {
    std::map<int, int> m;
    for (int i = 1; i <= lambda.length(); ++i) ++m[lambda[i]];
    return m;
}

}  // namespace

Poly schur_tableaux(const Partition& lambda, int n) {
    if (lambda.length() > n) return Poly();
    std::vector<int> shape = lambda.parts();
    std::vector<std::vector<int>> tab;
    for (int len : shape) tab.emplace_back(static_cast<std::size_t>(len), 0);
    Exps content{};
    Poly out;
    fill(shape, n, tab, 0, 0, content, out);
    return out;
}

Poly factorial_schur_bialternant(const Partition& lambda, int n, bool factorial) {
    if (lambda.length() > n) return Poly();
    Poly num = leibniz(n, [&](int i, int j) { return fact_pow(j + 1, lambda[i + 1] + n - (i + 1), factorial); });
    Poly den = leibniz(n, [&](int i, int j) { return fact_pow(j + 1, n - (i + 1), factorial); });
    return exact_quotient(num, den);
}

Poly phi(int m) {
    Poly p = Poly::constant(1);
    for (int i = 1; i <= m; ++i) p = p * (Poly::constant(1) - Poly::t().pow(i));
    return p;
}

Poly v_poly(int m) {
    Poly p = Poly::constant(1);
    // (1 - t^i) / (1 - t) = 1 + t + ... + t^{i-1}
    for (int i = 1; i <= m; ++i) {
        Poly s;
        for (int k = 0; k < i; ++k) s = s + Poly::t().pow(k);
        p = p * s;
    }
    return p;
}

Poly b_lambda(const Partition& lambda) {
    Poly p = Poly::constant(1);
    for (auto [part, mult] : multiplicities(lambda)) p = p * phi(mult);
    return p;
}

Poly v_lambda(const Partition& lambda, int n) {
    Poly p = v_poly(n - lambda.length());
    for (auto [part, mult] : multiplicities(lambda)) p = p * v_poly(mult);
    return p;
}

Poly hl_classical(const Partition& lambda, int n, HLKind kind) {
    if (lambda.length() > n) return Poly();
    Poly num = Poly::constant(1);
    for (int i = 1; i <= n; ++i) num = num * Poly::x(i).pow(lambda[i]);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) num = num * (Poly::x(i) - Poly::t() * Poly::x(j));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    Poly alt;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) ++inv;
        Poly term = permute_x(num, w);
        alt = inv % 2 ? alt - term : alt + term;
    } while (std::next_permutation(w.begin(), w.end()));
    Poly vand = Poly::constant(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) vand = vand * (Poly::x(i) - Poly::x(j));
    Poly P = exact_quotient(exact_quotient(alt, vand), v_lambda(lambda, n));
    return kind == HLKind::P ? P : b_lambda(lambda) * P;
}

Poly schur_q(const Partition& nu, int n) { return hl_classical(nu, n, HLKind::Q).at_t(-1); }

}  // namespace sf::oracle
