#include "dglift/field.hpp"

namespace dglift {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
    if (p >= (1ull << 31))
        throw ShapeError("prime modulus too large: " + std::to_string(p));
    if (!is_prime(p))
        throw ShapeError("modulus is not prime: " + std::to_string(p));
    return Field(Kind::prime, p);
}

Field Field::parse(const std::string& name)
{
    if (name == "q" || name == "Q")
        return rationals();
    if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
        std::uint64_t p = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(name[i])))
                throw ShapeError("bad field name: " + name);
            p = p * 10 + static_cast<std::uint64_t>(name[i] - '0');
            if (p >= (1ull << 31))
                throw ShapeError("prime modulus too large in field name: " + name);
        }
        return prime(p);
    }
    throw ShapeError("bad field name: " + name + " (expected q or f<p>)");
}

std::string Field::name() const
{
    return kind_ == Kind::rational ? std::string("q") : "f" + std::to_string(p_);
}

FieldElement FieldElement::from_integer(const Field& field, long n)
{
    FieldElement x(field);
    if (field.kind() == Field::Kind::rational) {
        x.rat_ = n;
    }
    else {
        const auto p = static_cast<long>(field.characteristic());
        long r = n % p;
        if (r < 0)
            r += p;
        x.res_ = static_cast<std::uint64_t>(r);
    }
    return x;
}

FieldElement FieldElement::from_rational(const Field& field, const mpq_class& q)
{
    if (field.kind() == Field::Kind::rational) {
        FieldElement x(field);
        x.rat_ = q;
        x.rat_.canonicalize();
        return x;
    }
    const std::uint64_t p = field.characteristic();
    mpz_class num = q.get_num() % static_cast<long>(p);
    mpz_class den = q.get_den() % static_cast<long>(p);
    long n = num.get_si();
    long d = den.get_si();
    if (n < 0)
        n += static_cast<long>(p);
    if (d < 0)
        d += static_cast<long>(p);
    FieldElement x = from_integer(field, n);
    FieldElement y = from_integer(field, d);
    return x / y;
}

FieldElement FieldElement::parse(const Field& field, const std::string& text)
{
    if (text.empty())
        throw ShapeError("empty scalar");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class q(text);
            q.canonicalize();
            return from_rational(field, q);
        }
        mpq_class num(text.substr(0, slash));
        mpq_class den(text.substr(slash + 1));
        if (den == 0)
            throw ShapeError("zero denominator in scalar: " + text);
        mpq_class q = num / den;
        q.canonicalize();
        return from_rational(field, q);
    }
    catch (const std::invalid_argument&) {
        throw ShapeError("bad scalar: " + text);
    }
}

bool FieldElement::is_zero() const
{
    return field_.kind() == Field::Kind::rational ? rat_ == 0 : res_ == 0;
}

void FieldElement::check_same_field(const FieldElement& other) const
{
    if (field_ != other.field_)
        throw ShapeError("mixed fields: " + field_.name() + " vs " + other.field_.name());
}

FieldElement FieldElement::operator-() const
{
    FieldElement x(field_);
    if (field_.kind() == Field::Kind::rational)
        x.rat_ = -rat_;
    else
        x.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
    return x;
}

FieldElement FieldElement::operator+(const FieldElement& other) const
{
    check_same_field(other);
    FieldElement x(field_);
    if (field_.kind() == Field::Kind::rational)
        x.rat_ = rat_ + other.rat_;
    else
        x.res_ = (res_ + other.res_) % field_.characteristic();
    return x;
}

FieldElement FieldElement::operator-(const FieldElement& other) const
{
    return *this + (-other);
}

FieldElement FieldElement::operator*(const FieldElement& other) const
{
    check_same_field(other);
    FieldElement x(field_);
    if (field_.kind() == Field::Kind::rational)
        x.rat_ = rat_ * other.rat_;
    else
        x.res_ = res_ * other.res_ % field_.characteristic();
    return x;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw ShapeError("division by zero");
    FieldElement x(field_);
    if (field_.kind() == Field::Kind::rational)
        x.rat_ = 1 / rat_;
    else
        x.res_ = mod_pow(res_, field_.characteristic() - 2, field_.characteristic());
    return x;
}

FieldElement FieldElement::operator/(const FieldElement& other) const
{
    return *this * other.inverse();
}

bool FieldElement::operator==(const FieldElement& other) const
{
    check_same_field(other);
    return field_.kind() == Field::Kind::rational ? rat_ == other.rat_ : res_ == other.res_;
}

std::string FieldElement::str() const
{
    return field_.kind() == Field::Kind::rational ? rat_.get_str() : std::to_string(res_);
}

}  // namespace dglift
