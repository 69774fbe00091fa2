#include "modcat/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace modcat {

long euler_phi(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::cyclotomic(long n) {
    if (n < 1) fail("ValidationError", "cyclotomic order must be >= 1");
    return {FieldKind::Cyclotomic, n};
}

FieldSpec FieldSpec::prime(long p) {
    if (!is_prime(p)) fail("ValidationError", "characteristic must be prime, got " + std::to_string(p));
    return {FieldKind::Prime, p};
}

long FieldSpec::degree() const {
    switch (kind) {
        case FieldKind::Rational: return 1;
        case FieldKind::Cyclotomic: return euler_phi(param);
        case FieldKind::Prime: return 1;
    }
    return 1;
}

std::string FieldSpec::str() const {
    switch (kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(param) + ")";
        case FieldKind::Prime: return "F_" + std::to_string(param);
    }
    return "?";
}

namespace {

using Poly = std::vector<mpq_class>;  // constant term first

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of polynomials over Q; remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpq_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        mpq_class c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        poly_trim(num);
    }
    if (!num.empty()) fail("ValidationError", "non-exact polynomial division");
    return q;
}

std::map<long, Poly>& phi_cache() {
    static std::map<long, Poly> cache;
    return cache;
}
std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

Poly compute_phi(long n);

const Poly& phi_locked(long n) {
    auto it = phi_cache().find(n);
    if (it == phi_cache().end()) it = phi_cache().emplace(n, compute_phi(n)).first;
    return it->second;
}

Poly compute_phi(long n) {
    // x^n - 1 divided by Phi_d for all proper divisors d of n.
    Poly xn(n + 1, mpq_class(0));
    xn[0] = -1;
    xn[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) xn = poly_div_exact(std::move(xn), phi_locked(d));
    return xn;
}

struct CycTable {
    long phi = 1;
    Poly modulus;
    // reduction[k] = coordinates of x^(phi+k) modulo Phi_n, k in [0, phi-1]
    std::vector<Poly> reduction;
};

const CycTable& cyc_table(long n) {
    static std::map<long, CycTable> cache;
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CycTable t;
    t.modulus = phi_locked(n);
    t.phi = static_cast<long>(t.modulus.size()) - 1;
    Poly cur(t.phi, mpq_class(0));  // will hold x^(phi+k) reduced
    for (long i = 0; i < t.phi; ++i) cur[i] = -t.modulus[i];  // x^phi = -(lower part)
    t.reduction.push_back(cur);
    for (long k = 1; k < t.phi; ++k) {
        // multiply by x, reduce once using reduction[0]
        Poly next(t.phi, mpq_class(0));
        mpq_class top = cur[t.phi - 1];
        for (long i = t.phi - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
            for (long i = 0; i < t.phi; ++i) next[i] += top * t.reduction[0][i];
        t.reduction.push_back(next);
        cur = next;
    }
    return cache.emplace(n, std::move(t)).first->second;
}

long mod_norm(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long mod_pow(long b, long e, long p) {
    long r = 1 % p;
    b = mod_norm(b, p);
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

long mod_inv(long v, long p) {
    return mod_pow(mod_norm(v, p), p - 2, p);
}

}  // namespace

const std::vector<mpq_class>& cyclotomic_polynomial(long n) {
    if (n < 1) fail("ValidationError", "cyclotomic order must be >= 1");
    std::lock_guard<std::mutex> lock(phi_mutex());
    return phi_locked(n);
}

Scalar Scalar::zero(const FieldSpec& spec) {
    Scalar s;
    s.spec_ = spec;
    if (spec.kind == FieldKind::Cyclotomic) s.coef_.assign(spec.degree(), mpq_class(0));
    return s;
}

Scalar Scalar::one(const FieldSpec& spec) { return of_int(spec, 1); }

Scalar Scalar::of_int(const FieldSpec& spec, long v) {
    return of_rational(spec, mpq_class(v));
}

Scalar Scalar::of_rational(const FieldSpec& spec, const mpq_class& raw) {
    mpq_class v = raw;
    v.canonicalize();
    Scalar s = zero(spec);
    switch (spec.kind) {
        case FieldKind::Rational: s.rat_ = v; break;
        case FieldKind::Cyclotomic: s.coef_[0] = v; break;
        case FieldKind::Prime: {
            if (v.get_den() != 1) {
                long den = mod_norm(static_cast<long>(mpz_fdiv_ui(v.get_den().get_mpz_t(), spec.param)), spec.param);
                if (den == 0) fail("DivisionByZero", "rational with denominator divisible by p");
                long num = mod_norm(static_cast<long>(mpz_fdiv_ui(v.get_num().get_mpz_t(), spec.param)), spec.param);
                s.res_ = (num * mod_inv(den, spec.param)) % spec.param;
            } else {
                s.res_ = mod_norm(static_cast<long>(mpz_fdiv_ui(v.get_num().get_mpz_t(), spec.param)), spec.param);
            }
            break;
        }
    }
    return s;
}

Scalar Scalar::root(const FieldSpec& spec) {
    if (spec.kind != FieldKind::Cyclotomic) fail("NoSuchRoot", "root() needs a cyclotomic spec");
    Scalar s = zero(spec);
    if (spec.param == 1) {
        s.coef_[0] = 1;  // zeta_1 = 1
        return s;
    }
    if (spec.degree() == 1) {
        // n = 2: zeta_2 = -1 is already rational
        s.coef_[0] = -1;
        return s;
    }
    s.coef_[1] = 1;
    return s;
}

bool Scalar::is_zero() const {
    switch (spec_.kind) {
        case FieldKind::Rational: return rat_ == 0;
        case FieldKind::Cyclotomic:
            return std::all_of(coef_.begin(), coef_.end(), [](const mpq_class& c) { return c == 0; });
        case FieldKind::Prime: return res_ == 0;
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(spec_); }

static void check_same_spec(const Scalar& a, const Scalar& b) {
    if (!(a.spec() == b.spec()))
        fail("SpecMismatch", "operands over " + a.spec().str() + " and " + b.spec().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_spec(*this, o);
    Scalar s = *this;
    switch (spec_.kind) {
        case FieldKind::Rational: s.rat_ += o.rat_; break;
        case FieldKind::Cyclotomic:
            for (size_t i = 0; i < coef_.size(); ++i) s.coef_[i] += o.coef_[i];
            break;
        case FieldKind::Prime: s.res_ = (res_ + o.res_) % spec_.param; break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    switch (spec_.kind) {
        case FieldKind::Rational: s.rat_ = -rat_; break;
        case FieldKind::Cyclotomic:
            for (auto& c : s.coef_) c = -c;
            break;
        case FieldKind::Prime: s.res_ = mod_norm(-res_, spec_.param); break;
    }
    return s;
}

void Scalar::reduce_cyclotomic(std::vector<mpq_class>& raw) const {
    const CycTable& t = cyc_table(spec_.param);
    for (size_t k = raw.size(); k-- > static_cast<size_t>(t.phi);) {
        if (raw[k] == 0) continue;
        const Poly& row = t.reduction[k - t.phi];
        for (long i = 0; i < t.phi; ++i) raw[i] += raw[k] * row[i];
        raw[k] = 0;
    }
    raw.resize(t.phi);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_spec(*this, o);
    Scalar s = zero(spec_);
    switch (spec_.kind) {
        case FieldKind::Rational: s.rat_ = rat_ * o.rat_; break;
        case FieldKind::Cyclotomic: {
            size_t d = coef_.size();
            std::vector<mpq_class> raw(2 * d - 1, mpq_class(0));
            for (size_t i = 0; i < d; ++i) {
                if (coef_[i] == 0) continue;
                for (size_t j = 0; j < d; ++j) {
                    if (o.coef_[j] == 0) continue;
                    raw[i + j] += coef_[i] * o.coef_[j];
                }
            }
            reduce_cyclotomic(raw);
            s.coef_ = std::move(raw);
            break;
        }
        case FieldKind::Prime: s.res_ = (res_ * o.res_) % spec_.param; break;
    }
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero over " + spec_.str());
    Scalar s = zero(spec_);
    switch (spec_.kind) {
        case FieldKind::Rational: s.rat_ = 1 / rat_; break;
        case FieldKind::Cyclotomic: {
            // extended Euclid in Q[x] for (this, Phi_n)
            Poly r0(coef_.begin(), coef_.end());
            poly_trim(r0);
            Poly r1 = cyc_table(spec_.param).modulus;
            Poly u0{mpq_class(1)}, u1{};  // coefficients of `this`
            while (!r1.empty()) {
                // r0 = q*r1 + r; u' = u0 - q*u1
                Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, mpq_class(0));
                Poly rem = r0;
                while (rem.size() >= r1.size() && !rem.empty()) {
                    mpq_class c = rem.back() / r1.back();
                    size_t shift = rem.size() - r1.size();
                    q[shift] += c;
                    for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
                    poly_trim(rem);
                }
                Poly unew = u0;
                if (unew.size() < q.size() + u1.size()) unew.resize(q.size() + u1.size() ? q.size() + u1.size() - 1 : 0, mpq_class(0));
                for (size_t i = 0; i < q.size(); ++i) {
                    if (q[i] == 0) continue;
                    for (size_t j = 0; j < u1.size(); ++j) {
                        if (i + j >= unew.size()) unew.resize(i + j + 1, mpq_class(0));
                        unew[i + j] -= q[i] * u1[j];
                    }
                }
                poly_trim(unew);
                r0 = std::move(r1);
                r1 = std::move(rem);
                u0 = std::move(u1);
                u1 = std::move(unew);
            }
            // r0 is a nonzero constant (Phi_n irreducible): inverse = u0 / r0
            if (r0.size() != 1) fail("ValidationError", "cyclotomic gcd not constant");
            std::vector<mpq_class> raw(u0.begin(), u0.end());
            raw.resize(std::max<size_t>(raw.size(), coef_.size()), mpq_class(0));
            reduce_cyclotomic(raw);
            for (auto& c : raw) c /= r0[0];
            s.coef_ = std::move(raw);
            break;
        }
        case FieldKind::Prime: s.res_ = mod_inv(res_, spec_.param); break;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_spec(*this, o);
    return *this * o.inv();
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Scalar r = one(spec_), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(spec_ == o.spec_)) return false;
    switch (spec_.kind) {
        case FieldKind::Rational: return rat_ == o.rat_;
        case FieldKind::Cyclotomic: return coef_ == o.coef_;
        case FieldKind::Prime: return res_ == o.res_;
    }
    return false;
}

const mpq_class& Scalar::rational() const {
    if (spec_.kind != FieldKind::Rational) fail("SpecMismatch", "rational() on " + spec_.str());
    return rat_;
}

std::vector<mpq_class> Scalar::coords() const {
    switch (spec_.kind) {
        case FieldKind::Rational: return {rat_};
        case FieldKind::Cyclotomic: return coef_;
        case FieldKind::Prime: return {mpq_class(res_)};
    }
    return {};
}

long Scalar::residue() const {
    if (spec_.kind != FieldKind::Prime) fail("SpecMismatch", "residue() on " + spec_.str());
    return res_;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::Add: return a + b;
        case ScalarOp::Sub: return a - b;
        case ScalarOp::Mul: return a * b;
        case ScalarOp::Div: return a / b;
    }
    fail("ValidationError", "bad op");
}

Scalar primitive_root(const FieldSpec& spec, long order) {
    if (order < 1) fail("NoSuchRoot", "order must be positive");
    if (order == 1) return Scalar::one(spec);
    switch (spec.kind) {
        case FieldKind::Rational:
            fail("NoSuchRoot", "Q has no primitive root of order " + std::to_string(order));
        case FieldKind::Cyclotomic: {
            if (spec.param % order != 0)
                fail("NoSuchRoot", spec.str() + " has no primitive root of order " + std::to_string(order));
            return Scalar::root(spec).pow(spec.param / order);
        }
        case FieldKind::Prime: {
            long p = spec.param;
            if ((p - 1) % order != 0)
                fail("NoSuchRoot", spec.str() + " has no primitive root of order " + std::to_string(order));
            for (long g = 1; g < p; ++g) {
                long q = mod_pow(g, (p - 1) / order, p);
                bool primitive = mod_pow(q, order, p) == 1;
                for (long k = 1; primitive && k < order; ++k)
                    if (mod_pow(q, k, p) == 1) primitive = false;
                if (primitive) return Scalar::of_int(spec, q);
            }
            fail("NoSuchRoot", "no generator found");
        }
    }
    fail("NoSuchRoot", "unreachable");
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// One cyclotomic term: coefficient q (nonzero) times z^k.
std::string cyc_term(const mpq_class& q, long k, bool leading) {
    mpq_class a = abs(q);
    std::string sign = (q < 0) ? (leading ? "-" : " - ") : (leading ? "" : " + ");
    if (k == 0) return sign + rat_str(a);
    std::string zs = (k == 1) ? "z" : "z^" + std::to_string(k);
    if (a == 1) return sign + zs;
    return sign + rat_str(a) + "*" + zs;
}

}  // namespace

std::string Scalar::str() const {
    switch (spec_.kind) {
        case FieldKind::Rational: return rat_str(rat_);
        case FieldKind::Prime: return std::to_string(res_);
        case FieldKind::Cyclotomic: {
            std::string out;
            for (size_t k = 0; k < coef_.size(); ++k) {
                if (coef_[k] == 0) continue;
                out += cyc_term(coef_[k], static_cast<long>(k), out.empty());
            }
            return out.empty() ? "0" : out;
        }
    }
    return "0";
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

// Parses an optionally signed rational "a" or "a/b".
mpq_class parse_rational(std::string_view& s) {
    skip_ws(s);
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t start_digits = i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start_digits) fail("ParseError", "expected number in scalar: '" + std::string(s) + "'");
    if (i < s.size() && s[i] == '/') {
        ++i;
        size_t j = i;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == j) fail("ParseError", "expected denominator in scalar");
    }
    mpq_class q(std::string(s.substr(0, i)));
    q.canonicalize();
    s.remove_prefix(i);
    return q;
}

}  // namespace

Scalar Scalar::parse(const FieldSpec& spec, std::string_view text) {
    std::string_view s = text;
    skip_ws(s);
    if (s.empty()) fail("ParseError", "empty scalar");
    if (spec.kind != FieldKind::Cyclotomic) {
        mpq_class q = parse_rational(s);
        skip_ws(s);
        if (!s.empty()) fail("ParseError", "trailing characters in scalar: '" + std::string(text) + "'");
        return of_rational(spec, q);
    }
    Scalar acc = zero(spec);
    bool first = true;
    while (true) {
        skip_ws(s);
        if (s.empty()) {
            if (first) fail("ParseError", "empty scalar");
            break;
        }
        int sign = 1;
        if (s.front() == '+' || s.front() == '-') {
            if (s.front() == '-') sign = -1;
            s.remove_prefix(1);
            skip_ws(s);
        } else if (!first) {
            fail("ParseError", "expected +/- between terms: '" + std::string(text) + "'");
        }
        mpq_class coef(1);
        bool have_coef = false;
        if (!s.empty() && (isdigit(static_cast<unsigned char>(s.front())))) {
            coef = parse_rational(s);
            have_coef = true;
            skip_ws(s);
            if (!s.empty() && s.front() == '*') {
                s.remove_prefix(1);
                skip_ws(s);
            }
        }
        long k = 0;
        if (!s.empty() && s.front() == 'z') {
            s.remove_prefix(1);
            k = 1;
            if (!s.empty() && s.front() == '^') {
                s.remove_prefix(1);
                size_t i = 0;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == 0) fail("ParseError", "expected exponent after '^'");
                k = std::stol(std::string(s.substr(0, i)));
                s.remove_prefix(i);
            }
        } else if (!have_coef) {
            fail("ParseError", "expected term in scalar: '" + std::string(text) + "'");
        }
        if (sign < 0) coef = -coef;
        Scalar term = of_rational(spec, coef);
        if (k > 0) term = term * Scalar::root(spec).pow(k);
        acc = acc + term;
        first = false;
    }
    return acc;
}

}  // namespace modcat
