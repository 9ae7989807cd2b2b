#include "symfun/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace sf {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != kMin; }

std::int64_t as_i64(const mpz_class& z) { return static_cast<std::int64_t>(z.get_si()); }

mpq_class make_q(std::int64_t n, std::int64_t d) {
    mpq_class q;
    mpz_set_si(mpq_numref(q.get_mpq_t()), static_cast<long>(n));
    mpz_set_si(mpq_denref(q.get_mpq_t()), static_cast<long>(d));
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(0), den_(1), big_(nullptr) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (n == kMin || d == kMin) {
        set_big(make_q(n, d));
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1), big_(nullptr) {
    mpq_class c(q);
    c.canonicalize();
    set_big(std::move(c));
}

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    num_ = o.num_;
    den_ = o.den_;
    if (o.big_) {
        if (big_) *big_ = *o.big_;
        else big_ = new mpq_class(*o.big_);
    } else {
        delete big_;
        big_ = nullptr;
    }
    return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
    if (this == &o) return *this;
    delete big_;
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_;
    o.big_ = nullptr;
    return *this;
}

void Rational::set_big(mpq_class&& q) {
    if (fits(q.get_num()) && fits(q.get_den())) {
        num_ = as_i64(q.get_num());
        den_ = as_i64(q.get_den());
        delete big_;
        big_ = nullptr;
        return;
    }
    if (big_) *big_ = std::move(q);
    else big_ = new mpq_class(std::move(q));
    num_ = 0;
    den_ = 1;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return make_q(num_, den_);
}

Rational Rational::parse(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(num_, o.num_, &r) && r != kMin) {
                num_ = r;
                return *this;
            }
        } else {
            std::int64_t g = std::gcd(den_, o.den_);
            std::int64_t a = den_ / g, b = o.den_ / g;
            std::int64_t t1, t2, n, d;
            if (!__builtin_mul_overflow(num_, b, &t1) && !__builtin_mul_overflow(o.num_, a, &t2) &&
                !__builtin_add_overflow(t1, t2, &n) && !__builtin_mul_overflow(den_, b, &d) && n != kMin) {
                std::int64_t g2 = std::gcd(n, g);
                num_ = n / g2;
                den_ = d / g2;
                if (num_ == 0) den_ = 1;
                return *this;
            }
        }
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(num_, o.num_, &r) && r != kMin) {
                num_ = r;
                return *this;
            }
        } else {
            std::int64_t g1 = std::gcd(num_, o.den_), g2 = std::gcd(o.num_, den_);
            if (g1 == 0) g1 = 1;
            if (g2 == 0) g2 = 1;
            std::int64_t n, d;
            if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) &&
                !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d) && n != kMin) {
                num_ = n;
                den_ = n == 0 ? 1 : d;
                return *this;
            }
        }
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    if (big_) return Rational(mpq_class(1) / *big_);
    return Rational(den_, num_);
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

void Rational::add_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p, r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &r) && r != kMin) {
            num_ = r;
            return;
        }
    }
    Rational p = a;
    p *= b;
    *this += p;
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value that fits is never stored big
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1) return a.num_ < b.num_;
    return a.to_mpq() < b.to_mpq();
}

Rational binomial(std::int64_t a, std::int64_t k) {
    if (k < 0) return Rational(0);
    mpz_class r = 1;
    for (std::int64_t i = 0; i < k; ++i) r *= (a - i);
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    mpq_class q(r, f);
    q.canonicalize();
    return Rational(q);
}

}  // namespace sf
