#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "userial/errors.hpp"

namespace userial {

// Exact field element. Holds either a residue mod p or an arbitrary-precision
// rational; which alternative is active is dictated by the Field that created
// it. No floating point anywhere.
class Scalar {
public:
    Scalar() : v_(std::uint64_t{0}) {}
    explicit Scalar(std::uint64_t r) : v_(r) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    bool holds_rational() const { return std::holds_alternative<mpq_class>(v_); }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }

private:
    std::variant<std::uint64_t, mpq_class> v_;
};

enum class FieldKind { rationals, prime };

// Field context: Q or F_p with p prime, p <= 2^31. All Scalar arithmetic goes
// through a Field; a Scalar is only meaningful relative to the Field that
// produced it.
class Field {
public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }
    static Field prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == FieldKind::prime; }
    std::uint64_t characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }
    // Number of elements, when finite.
    std::optional<std::uint64_t> size() const {
        if (is_finite()) return p_;
        return std::nullopt;
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_long(long n) const;
    // i-th element in the canonical enumeration 0, 1, 2, ... (finite fields).
    Scalar element(std::uint64_t i) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    // "3/7" over Q, "5" or "-2" over either field.
    Scalar parse(const std::string& text) const;
    // Exact textual form: "3/7" over Q, "2 mod 5" over F_5.
    std::string to_string(const Scalar& a) const;
    // Bare value without the field suffix ("2" rather than "2 mod 5").
    std::string to_plain_string(const Scalar& a) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    std::string describe() const;

private:
    Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

}  // namespace userial
