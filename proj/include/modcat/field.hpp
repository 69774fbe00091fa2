#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modcat {

/// Error with a stable machine-readable code ("SpecMismatch", "DivisionByZero", ...).
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

enum class FieldKind : uint8_t { Rational, Cyclotomic, Prime };

/// One of Q, Q(zeta_n), F_p. Cyclotomic elements are kept reduced modulo the
/// n-th cyclotomic polynomial, so they have exactly phi(n) coordinates.
struct FieldSpec {
    FieldKind kind = FieldKind::Rational;
    long param = 0;  // cyclotomic order n, or characteristic p

    static FieldSpec rational() { return {FieldKind::Rational, 0}; }
    static FieldSpec cyclotomic(long n);
    static FieldSpec prime(long p);

    long characteristic() const { return kind == FieldKind::Prime ? param : 0; }
    long degree() const;  // dimension over the prime field: 1, phi(n), 1

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

/// Coefficients of Phi_n, monic, constant term first (size phi(n)+1). Cached.
const std::vector<mpq_class>& cyclotomic_polynomial(long n);

long euler_phi(long n);
bool is_prime(long p);

/// Immutable exact field element in canonical form; equality is representational.
class Scalar {
  public:
    Scalar() : spec_(FieldSpec::rational()) {}

    static Scalar zero(const FieldSpec& spec);
    static Scalar one(const FieldSpec& spec);
    static Scalar of_int(const FieldSpec& spec, long v);
    static Scalar of_rational(const FieldSpec& spec, const mpq_class& v);
    /// zeta_n, only for Cyclotomic(n) with n > 1 (for n = 1 this is 1).
    static Scalar root(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inv() const;
    Scalar pow(long k) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// The rational value; only for Rational spec.
    const mpq_class& rational() const;
    /// Coordinate vector over Q of length spec().degree() (cyclotomic), or the
    /// single rational (wrapped), or the residue as a rational.
    std::vector<mpq_class> coords() const;
    /// Residue in [0, p); only for Prime spec.
    long residue() const;

    /// Canonical text form: "a/b" | cyclotomic polynomial in z | decimal residue.
    std::string str() const;
    static Scalar parse(const FieldSpec& spec, std::string_view text);

  private:
    FieldSpec spec_;
    mpq_class rat_;                // Rational
    std::vector<mpq_class> coef_;  // Cyclotomic, size phi(n)
    long res_ = 0;                 // Prime

    void reduce_cyclotomic(std::vector<mpq_class>& raw) const;
    friend Scalar scalar_mul_impl(const Scalar&, const Scalar&);
};

/// Field arithmetic with explicit op selector, spec-checked.
enum class ScalarOp { Add, Sub, Mul, Div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

/// A primitive `order`-th root of unity in `spec`; errors with NoSuchRoot if
/// the field has none (needs order | n for Q(zeta_n), order | p-1 for F_p).
Scalar primitive_root(const FieldSpec& spec, long order);

}  // namespace modcat
