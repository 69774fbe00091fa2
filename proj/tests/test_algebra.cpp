#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "modcat/algebra.hpp"

using namespace modcat;

namespace {

// k[y]/(y^2 - c), basis {1, y}
AlgebraSC quadratic_algebra(const FieldSpec& spec, long c, const std::string& name) {
    AlgebraSC a(spec, 2);
    a.name = name;
    a.labels = {"1", "y"};
    a.unit[0] = Scalar::one(spec);
    Scalar one = Scalar::one(spec);
    a.set_term(0, 0, 0, one);
    a.set_term(0, 1, 1, one);
    a.set_term(1, 0, 1, one);
    a.set_term(1, 1, 0, Scalar::of_int(spec, c));
    return a;
}

// Sweedler algebra: basis {1, g, x, gx}, relations x^2 = 0, g^2 = 1, gx = -xg.
AlgebraSC sweedler_algebra(const FieldSpec& spec) {
    AlgebraSC a(spec, 4);
    a.name = "S";
    a.labels = {"1", "g", "x", "gx"};
    a.unit[0] = Scalar::one(spec);
    Scalar one = Scalar::one(spec), neg = -one;
    // multiplication table in the basis (1, g, x, gx); xg = -gx
    // rows: left factor, cols: right factor
    auto set = [&](int i, int j, int k, const Scalar& c) { a.set_term(i, j, k, c); };
    for (int i = 0; i < 4; ++i) {
        set(0, i, i, one);
        if (i != 0) set(i, 0, i, one);
    }
    set(1, 1, 0, one);    // g*g = 1
    set(1, 2, 3, one);    // g*x = gx
    set(1, 3, 2, one);    // g*gx = x
    set(2, 1, 3, neg);    // x*g = -gx
    set(2, 2, 0, Scalar::zero(spec));  // x*x = 0
    set(2, 3, 0, Scalar::zero(spec));  // x*gx = (x g) x = -gx x = 0
    set(3, 1, 2, neg);    // gx*g = g(xg) = -g(gx) = -x
    set(3, 2, 0, Scalar::zero(spec));  // gx*x = 0
    set(3, 3, 0, Scalar::zero(spec));  // gx*gx = g(xg)x = -x x g... = 0
    return a;
}

// M_2(Q) on matrix units {E11, E12, E21, E22}
AlgebraSC matrix_algebra_2() {
    auto Q = FieldSpec::rational();
    AlgebraSC a(Q, 4);
    a.name = "M2";
    a.labels = {"E11", "E12", "E21", "E22"};
    a.unit[0] = Scalar::one(Q);
    a.unit[3] = Scalar::one(Q);
    auto idx = [](int i, int j) { return 2 * i + j; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) a.set_term(idx(i, j), idx(k, l), idx(i, l), Scalar::one(Q));
    return a;
}

// group algebra kC_n, basis {1, g, ..., g^{n-1}}
AlgebraSC group_algebra(const FieldSpec& spec, int n) {
    AlgebraSC a(spec, n);
    a.name = "kC" + std::to_string(n);
    a.unit[0] = Scalar::one(spec);
    for (int i = 0; i < n; ++i) {
        a.labels[static_cast<size_t>(i)] = i == 0 ? "1" : "g^" + std::to_string(i);
        for (int j = 0; j < n; ++j) a.set_term(i, j, (i + j) % n, Scalar::one(spec));
    }
    return a;
}

std::vector<Scalar> basis_vec(const FieldSpec& s, int dim, int i) {
    std::vector<Scalar> v(static_cast<size_t>(dim), Scalar::zero(s));
    v[static_cast<size_t>(i)] = Scalar::one(s);
    return v;
}

}  // namespace

TEST_CASE("verify_algebra") {
    auto Q = FieldSpec::rational();
    CHECK(verify_algebra(quadratic_algebra(Q, 1, "I")).ok);
    CHECK(verify_algebra(sweedler_algebra(Q)).ok);
    CHECK(verify_algebra(matrix_algebra_2()).ok);

    // wrong unit vector: report must point at the unit law
    AlgebraSC bad = quadratic_algebra(Q, 0, "bad");
    bad.unit[0] = Scalar::zero(Q);
    bad.unit[1] = Scalar::one(Q);
    auto rep = verify_algebra(bad);
    CHECK(!rep.ok);
    CHECK(rep.detail.find("unit law") != std::string::npos);
}

TEST_CASE("regular representations") {
    auto Q = FieldSpec::rational();
    AlgebraSC triv(Q, 1);
    triv.unit[0] = Scalar::one(Q);
    triv.set_term(0, 0, 0, Scalar::one(Q));
    auto rr = regular_reps(triv);
    CHECK(rr.left[0] == Mat::identity(Q, 1));
    CHECK(rr.right[0] == Mat::identity(Q, 1));

    // k[y]/(y^2): L_y is the nilpotent shift in basis {1, y}
    AlgebraSC dual_numbers = quadratic_algebra(Q, 0, "D");
    auto rd = regular_reps(dual_numbers);
    Mat shift(Q, 2, 2);
    shift.at(1, 0) = Scalar::one(Q);
    CHECK(rd.left[1] == shift);

    // kC2 over F2: L_g^2 = I
    auto F2 = FieldSpec::prime(2);
    auto rg = regular_reps(group_algebra(F2, 2));
    CHECK(rg.left[1] * rg.left[1] == Mat::identity(F2, 2));

    // representation property L_i L_j = sum_k c_ijk L_k on the Sweedler algebra
    AlgebraSC s = sweedler_algebra(Q);
    auto rs = regular_reps(s);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Mat sum(Q, 4, 4);
            for (const auto& [k, c] : s.mult[static_cast<size_t>(i)][static_cast<size_t>(j)])
                sum = sum + rs.left[static_cast<size_t>(k)].scaled(c);
            REQUIRE(rs.left[static_cast<size_t>(i)] * rs.left[static_cast<size_t>(j)] == sum);
        }
}

TEST_CASE("opposite algebra") {
    auto Q = FieldSpec::rational();
    AlgebraSC comm = quadratic_algebra(Q, 1, "I");
    AlgebraSC opp = opposite(comm);
    CHECK(opp.mult == comm.mult);

    AlgebraSC s = sweedler_algebra(Q);
    AlgebraSC sop = opposite(s);
    CHECK(verify_algebra(sop).ok);
    // g *_op x = x * g = -gx: the relation gx = -xg persists in the opposite
    auto p = sop.basis_product(1, 2);
    CHECK(p[3] == -Scalar::one(Q));
    AlgebraSC back = opposite(sop);
    CHECK(back.mult == s.mult);
}

TEST_CASE("verify_alg_map") {
    auto Q = FieldSpec::rational();
    auto s = std::make_shared<AlgebraSC>(sweedler_algebra(Q));
    AlgMap id{s, s, Mat::identity(Q, 4)};
    CHECK(verify_alg_map(id).ok);

    AlgMap zero{s, s, Mat::zero(Q, 4, 4)};
    CHECK(!verify_alg_map(zero).ok);  // sends 1 to 0
}

TEST_CASE("trace radical") {
    auto Q = FieldSpec::rational();
    CHECK(trace_radical(matrix_algebra_2()).cols == 0);

    Mat r = trace_radical(quadratic_algebra(Q, 0, "D"));
    REQUIRE(r.cols == 1);
    CHECK(r.at(0, 0).is_zero());
    CHECK(!r.at(1, 0).is_zero());

    CHECK_THROWS_AS(trace_radical(group_algebra(FieldSpec::prime(2), 2)), Error);

    // radical is an ideal with vanishing powers: check for D = k[y]/(y^2)
    AlgebraSC D = quadratic_algebra(Q, 0, "D");
    auto y = basis_vec(Q, 2, 1);
    CHECK(D.product(y, y) == std::vector<Scalar>{Scalar::zero(Q), Scalar::zero(Q)});
}

TEST_CASE("subalgebra span") {
    auto Q = FieldSpec::rational();
    AlgebraSC s = sweedler_algebra(Q);
    CHECK(subalgebra_span(s, {}).cols == 1);
    CHECK(subalgebra_span(s, {basis_vec(Q, 4, 1)}).cols == 2);       // {1, g}
    CHECK(subalgebra_span(s, {basis_vec(Q, 4, 2)}).cols == 2);       // {1, x}
    CHECK(subalgebra_span(s, {basis_vec(Q, 4, 1), basis_vec(Q, 4, 2)}).cols == 4);

    // multiplicative closure: re-closing the span basis is a fixpoint
    Mat span = subalgebra_span(s, {basis_vec(Q, 4, 1)});
    std::vector<std::vector<Scalar>> cols;
    for (int j = 0; j < span.cols; ++j) cols.push_back(span.col_vec(j));
    CHECK(subalgebra_span(s, cols).cols == span.cols);
}

TEST_CASE("algebra generators (greedy)") {
    auto Q = FieldSpec::rational();
    AlgebraSC s = sweedler_algebra(Q);
    auto gens = algebra_generators(s);
    // {g, x} generate; greedy picks basis elements 1 (g) and 2 (x)
    CHECK(gens == std::vector<int>{1, 2});
    CHECK(algebra_generators(matrix_algebra_2()).size() <= 3);
}
