#include "userial/field.hpp"

namespace userial {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Inverse of a mod p by extended Euclid; a in [1, p).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw Error("element has no inverse mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p > (std::uint64_t{1} << 31))
        throw Error("prime fields are supported for p <= 2^31, got " + std::to_string(p));
    if (!is_prime_u64(p)) throw Error("F_p requires a prime p, got " + std::to_string(p));
    return Field(FieldKind::prime, p);
}

Scalar Field::zero() const {
    if (kind_ == FieldKind::prime) return Scalar(std::uint64_t{0});
    return Scalar(mpq_class(0));
}

Scalar Field::one() const {
    if (kind_ == FieldKind::prime) return Scalar(std::uint64_t{1} % p_);
    return Scalar(mpq_class(1));
}

Scalar Field::from_long(long n) const {
    if (kind_ == FieldKind::prime) {
        std::int64_t m = n % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return Scalar(static_cast<std::uint64_t>(m));
    }
    return Scalar(mpq_class(n));
}

Scalar Field::element(std::uint64_t i) const {
    if (kind_ != FieldKind::prime) throw Error("element enumeration needs a finite field");
    return Scalar(i % p_);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) {
        std::uint64_t s = a.residue() + b.residue();
        if (s >= p_) s -= p_;
        return Scalar(s);
    }
    mpq_class r = a.rational() + b.rational();
    return Scalar(std::move(r));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) {
        std::uint64_t s = a.residue() + p_ - b.residue();
        if (s >= p_) s -= p_;
        return Scalar(s);
    }
    mpq_class r = a.rational() - b.rational();
    return Scalar(std::move(r));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) {
        // p <= 2^31 so the product fits in 64 bits.
        return Scalar((a.residue() * b.residue()) % p_);
    }
    mpq_class r = a.rational() * b.rational();
    return Scalar(std::move(r));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::prime) {
        return Scalar(a.residue() == 0 ? 0 : p_ - a.residue());
    }
    mpq_class r = -a.rational();
    return Scalar(std::move(r));
}

Scalar Field::inv(const Scalar& a) const {
    if (kind_ == FieldKind::prime) {
        if (a.residue() == 0) throw Error("division by zero in F_p");
        return Scalar(mod_inverse(a.residue(), p_));
    }
    if (a.rational() == 0) throw Error("division by zero in Q");
    mpq_class r = 1 / a.rational();
    return Scalar(std::move(r));
}

bool Field::is_zero(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return a.residue() == 0;
    return a.rational() == 0;
}

bool Field::is_one(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return a.residue() == 1 % p_;
    return a.rational() == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return a.residue() == b.residue();
    return a.rational() == b.rational();
}

Scalar Field::parse(const std::string& text) const {
    if (text.empty()) throw Error("empty scalar literal");
    if (kind_ == FieldKind::rationals) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw Error("bad rational literal '" + text + "'");
        q.canonicalize();
        return Scalar(std::move(q));
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    std::uint64_t v = 0;
    if (pos == text.size()) throw Error("bad integer literal '" + text + "'");
    for (; pos < text.size(); ++pos) {
        if (text[pos] < '0' || text[pos] > '9')
            throw Error("bad integer literal '" + text + "' for F_" + std::to_string(p_));
        v = (v * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % p_;
    }
    if (negative && v != 0) v = p_ - v;
    return Scalar(v);
}

std::string Field::to_plain_string(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return std::to_string(a.residue());
    return a.rational().get_str();
}

std::string Field::to_string(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return std::to_string(a.residue()) + " mod " + std::to_string(p_);
    return a.rational().get_str();
}

std::string Field::describe() const {
    if (kind_ == FieldKind::prime) return "F" + std::to_string(p_);
    return "Q";
}

}  // namespace userial
