#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sf {

// Exact rational with an int64 fast path; spills to GMP on overflow.
class Rational {
public:
    Rational() noexcept : num_(0), den_(1), big_(nullptr) {}
    Rational(std::int64_t n) noexcept : num_(n), den_(1), big_(nullptr) {}  // NOLINT
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? new mpq_class(*o.big_) : nullptr) {}
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept;
    ~Rational() { delete big_; }

    static Rational parse(std::string_view s);

    bool is_zero() const noexcept { return big_ == nullptr && num_ == 0; }
    bool is_one() const noexcept { return big_ == nullptr && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    // this += a * b, the inner loop of every product.
    void add_mul(const Rational& a, const Rational& b);

    Rational operator-() const;
    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    Rational inverse() const;

private:
    void set_big(mpq_class&& q);

    std::int64_t num_;
    std::int64_t den_;
    mpq_class* big_;
};

// Generalized binomial coefficient binom(a, k) for any integer a and k >= 0.
Rational binomial(std::int64_t a, std::int64_t k);

}  // namespace sf
