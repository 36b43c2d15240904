#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace nonobtuse {

// Exact rational number. Invariants: denominator > 0 and gcd(|num|, den) = 1;
// both are enforced on every construction path, arithmetic results come out
// of GMP already canonical.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {
        static_assert(sizeof(long) == 8, "LP64 assumed");
    }

    Rational(long long num, long long den) : q_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(std::move(num)) / mpq_class(std::move(den));
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "n" or "p/q" in base 10. Returns nullopt on anything else.
    static std::optional<Rational> parse(const std::string& s) {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) return std::nullopt;
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
        q.canonicalize();
        return Rational(std::move(q), already_canonical{});
    }

    // "n" for integers, "p/q" otherwise, lowest terms, positive denominator.
    std::string str() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_integer() const { return mpz_cmp_ui(q_.get_den_mpz_t(), 1) == 0; }

    bool fits_int64() const {
        return is_integer() && mpz_fits_slong_p(q_.get_num_mpz_t()) != 0;
    }
    std::int64_t to_int64() const { return mpz_get_si(q_.get_num_mpz_t()); }

    // Rounded toward zero; used only for display and as an interval anchor.
    double approx() const { return mpq_get_d(q_.get_mpq_t()); }

    Rational operator-() const { return Rational(-q_, already_canonical{}); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.sign() == 0) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : q_(std::move(q)) {}

    mpq_class q_;
};

inline int compare(const Rational& a, const Rational& b) {
    return cmp(a.raw(), b.raw());
}

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace nonobtuse
