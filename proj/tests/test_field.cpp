#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modcat/field.hpp"

using namespace modcat;

namespace {

Scalar rand_scalar(const FieldSpec& spec, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    switch (spec.kind) {
        case FieldKind::Rational:
            return Scalar::of_rational(spec, mpq_class(num(rng), den(rng)));
        case FieldKind::Prime:
            return Scalar::of_int(spec, num(rng));
        case FieldKind::Cyclotomic: {
            Scalar s = Scalar::zero(spec);
            Scalar z = Scalar::root(spec);
            for (long k = 0; k < spec.degree(); ++k)
                s += Scalar::of_rational(spec, mpq_class(num(rng), den(rng))) * z.pow(k);
            return s;
        }
    }
    return Scalar::zero(spec);
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    auto Q = FieldSpec::rational();
    Scalar half = Scalar::parse(Q, "1/2"), third = Scalar::parse(Q, "1/3");
    CHECK(scalar_arith(half, third, ScalarOp::Add) == Scalar::parse(Q, "5/6"));
    CHECK((half - half).is_zero());
    CHECK((half / third) == Scalar::parse(Q, "3/2"));
    CHECK_THROWS_AS(half / Scalar::zero(Q), Error);
}

TEST_CASE("cyclotomic reduction mod Phi_3") {
    auto K = FieldSpec::cyclotomic(3);
    Scalar z = Scalar::root(K);
    // z^2 = -1 - z since Phi_3 = x^2 + x + 1
    Scalar expect = -Scalar::one(K) - z;
    CHECK(z * z == expect);
    CHECK(z.pow(3) == Scalar::one(K));
}

TEST_CASE("prime field characteristic") {
    auto F2 = FieldSpec::prime(2);
    CHECK((Scalar::one(F2) + Scalar::one(F2)).is_zero());
    CHECK_THROWS_AS(FieldSpec::prime(6), Error);
}

TEST_CASE("spec mismatch is rejected") {
    CHECK_THROWS_AS(Scalar::one(FieldSpec::rational()) + Scalar::one(FieldSpec::prime(2)), Error);
}

TEST_CASE("cyclotomic polynomials") {
    auto phi = [](long n) { return cyclotomic_polynomial(n); };
    CHECK(phi(1) == std::vector<mpq_class>{-1, 1});
    CHECK(phi(2) == std::vector<mpq_class>{1, 1});
    CHECK(phi(3) == std::vector<mpq_class>{1, 1, 1});
    CHECK(phi(4) == std::vector<mpq_class>{1, 0, 1});
    CHECK(phi(6) == std::vector<mpq_class>{1, -1, 1});
    CHECK(phi(12) == std::vector<mpq_class>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("primitive roots") {
    CHECK(primitive_root(FieldSpec::rational(), 1).is_one());
    auto K3 = FieldSpec::cyclotomic(3);
    Scalar q = primitive_root(K3, 3);
    CHECK(q == Scalar::root(K3));
    CHECK(q.pow(3).is_one());
    CHECK(!q.pow(1).is_one());
    CHECK(!q.pow(2).is_one());
    // q^{(p+1)/2} is a square root of q when p is odd: check (q^2)^2 = q for p = 3
    Scalar h = q.pow((3 + 1) / 2);
    CHECK(h * h == q);

    auto F7 = FieldSpec::prime(7);
    Scalar r = primitive_root(F7, 3);
    CHECK(r.pow(3).is_one());
    CHECK(!r.pow(1).is_one());
    CHECK(!r.pow(2).is_one());
    CHECK_THROWS_AS(primitive_root(F7, 5), Error);
    CHECK_THROWS_AS(primitive_root(FieldSpec::cyclotomic(4), 3), Error);
    CHECK_THROWS_AS(primitive_root(FieldSpec::rational(), 4), Error);
}

TEST_CASE("field axioms on randomized triples") {
    std::vector<FieldSpec> specs = {FieldSpec::rational(), FieldSpec::cyclotomic(3),
                                    FieldSpec::cyclotomic(4), FieldSpec::cyclotomic(12),
                                    FieldSpec::prime(2), FieldSpec::prime(5)};
    for (const auto& spec : specs) {
        std::mt19937_64 rng(12345);
        for (int t = 0; t < 1000; ++t) {
            Scalar a = rand_scalar(spec, rng), b = rand_scalar(spec, rng), c = rand_scalar(spec, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE((a - a).is_zero());
            if (!a.is_zero()) {
                REQUIRE((a * a.inv()).is_one());
                REQUIRE(a.pow(-2) == (a * a).inv());
            }
        }
    }
}

TEST_CASE("serialization round-trips") {
    std::vector<FieldSpec> specs = {FieldSpec::rational(), FieldSpec::cyclotomic(3),
                                    FieldSpec::cyclotomic(12), FieldSpec::prime(5)};
    for (const auto& spec : specs) {
        std::mt19937_64 rng(99);
        for (int t = 0; t < 200; ++t) {
            Scalar a = rand_scalar(spec, rng);
            Scalar back = Scalar::parse(spec, a.str());
            REQUIRE(back == a);
        }
    }
    auto K = FieldSpec::cyclotomic(3);
    CHECK(Scalar::parse(K, "-1 - z") == Scalar::root(K) * Scalar::root(K));
    // z^2 reduces mod Phi_3: 1/2*z^2 + z - 3 = 1/2*(-1-z) + z - 3
    CHECK(Scalar::parse(K, "1/2*z^2 + z - 3").str() == "-7/2 + 1/2*z");
    CHECK_THROWS_AS(Scalar::parse(K, "1 +"), Error);
    CHECK_THROWS_AS(Scalar::parse(FieldSpec::rational(), "x"), Error);
}
