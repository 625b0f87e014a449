#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "dglift/errors.hpp"

namespace dglift {

/* Ground field: the rationals or a prime field F_p. All arithmetic is
 * exact; rationals are arbitrary-precision and kept in lowest terms,
 * residues lie in [0, p). */
class Field {
public:
    enum class Kind { rational, prime };

    static Field rationals() { return Field(Kind::rational, 0); }
    static Field prime(std::uint64_t p);

    /* "q" or "f<p>", e.g. "f2", "f3". */
    static Field parse(const std::string& name);

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == Kind::prime ? p_ : 0; }
    std::string name() const;

    bool operator==(const Field& other) const { return kind_ == other.kind_ && p_ == other.p_; }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

class FieldElement {
public:
    explicit FieldElement(const Field& field) : field_(field), res_(0) {}

    static FieldElement zero(const Field& field) { return FieldElement(field); }
    static FieldElement one(const Field& field) { return from_integer(field, 1); }
    static FieldElement from_integer(const Field& field, long n);
    static FieldElement from_rational(const Field& field, const mpq_class& q);

    /* "3", "-1/2", "a/b"; in F_p "a/b" means a * b^{-1}. */
    static FieldElement parse(const Field& field, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const { return *this == one(field_); }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator/(const FieldElement& other) const;
    FieldElement& operator+=(const FieldElement& other) { return *this = *this + other; }
    FieldElement& operator-=(const FieldElement& other) { return *this = *this - other; }
    FieldElement& operator*=(const FieldElement& other) { return *this = *this * other; }

    FieldElement inverse() const;

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    std::string str() const;

private:
    void check_same_field(const FieldElement& other) const;

    Field field_;
    mpq_class rat_;       // canonical; used when kind == rational
    std::uint64_t res_;   // in [0, p); used when kind == prime
};

}  // namespace dglift
