#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modcat/catalog.hpp"
#include "modcat/hopf.hpp"

using namespace modcat;

namespace {

const CatalogEntry& sweedler_entry() {
    static CatalogEntry e = sweedler();
    return e;
}

const CatalogEntry& uq3_entry() {
    static CatalogEntry e = uq_sl2(3);
    return e;
}

std::vector<Scalar> basis_vec(const FieldSpec& s, int dim, int i) {
    std::vector<Scalar> v(static_cast<size_t>(dim), Scalar::zero(s));
    v[static_cast<size_t>(i)] = Scalar::one(s);
    return v;
}

}  // namespace

TEST_CASE("verify_hopf on the catalog entries") {
    CHECK(verify_hopf(*sweedler_entry().hopf).ok);
    CHECK(verify_hopf(*group_family(2, 2).hopf).ok);
    CHECK(verify_hopf(*uq3_entry().hopf).ok);
}

TEST_CASE("broken antipode is caught") {
    HopfData h = *group_family(2, std::nullopt).hopf;
    h.antipode = Mat::zero(h.spec(), 2, 2);
    CHECK(!verify_hopf(h).ok);
}

TEST_CASE("dual of kC2 is the function algebra") {
    auto e = group_family(2, std::nullopt);
    HopfData dual = dual_hopf(*e.hopfs.at("group"));
    CHECK(verify_hopf(dual).ok);
    // semisimple when char != 2: the trace radical vanishes
    CHECK(trace_radical(dual.alg).cols == 0);
    // idempotent basis: (d0)^2 = d0 after change to delta functions
    // the dual basis elements are the delta functions, d_a d_b = [a=b] d_a
    CHECK(dual.alg.basis_product(0, 0) == basis_vec(dual.spec(), 2, 0));
    CHECK(dual.alg.basis_product(0, 1) == std::vector<Scalar>(2, Scalar::zero(dual.spec())));
}

TEST_CASE("u_q dual: functional values of the matrix coefficients") {
    const auto& e = uq3_entry();
    const long p = 3;
    const FieldSpec& K = e.hopf->spec();
    Scalar q = primitive_root(K, p);
    // a, b, c, d as coordinate vectors in the dual basis
    auto zero = [&] { return std::vector<Scalar>(27, Scalar::zero(K)); };
    auto a = zero(), b = zero(), c = zero(), d = zero();
    for (int j = 0; j < p; ++j) {
        a[static_cast<size_t>(uq_index(p, 0, 0, j))] = q.pow(j);
        b[static_cast<size_t>(uq_index(p, 0, 1, j))] = q.pow(-j);
        c[static_cast<size_t>(uq_index(p, 1, 0, j))] = q.pow(j);
        d[static_cast<size_t>(uq_index(p, 0, 0, j))] = q.pow(-j);
        d[static_cast<size_t>(uq_index(p, 1, 1, j))] = q.pow(-j);
    }
    HopfData dual = dual_hopf(*e.hopf);
    REQUIRE(verify_hopf(dual).ok);

    // relations bc = cb, db = q^{-1} bd, dc = q^{-1} cd, b^p = c^p = 0, d^p = 1
    auto mul = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) { return dual.alg.product(x, y); };
    CHECK(mul(b, c) == mul(c, b));
    {
        auto lhs = mul(d, b);
        auto rhs = mul(b, d);
        for (auto& s : rhs) s = s * q.inv();
        CHECK(lhs == rhs);
    }
    {
        auto lhs = mul(d, c);
        auto rhs = mul(c, d);
        for (auto& s : rhs) s = s * q.inv();
        CHECK(lhs == rhs);
    }
    CHECK(dual.alg.power(b, p) == std::vector<Scalar>(27, Scalar::zero(K)));
    CHECK(dual.alg.power(c, p) == std::vector<Scalar>(27, Scalar::zero(K)));
    CHECK(dual.alg.power(d, p) == dual.alg.unit);
    // da - ad = (q^{-1} - q) cb
    {
        auto lhs = mul(d, a);
        auto rhs = mul(a, d);
        auto cb = mul(c, b);
        for (size_t t = 0; t < lhs.size(); ++t) lhs[t] = lhs[t] - rhs[t];
        for (auto& s : cb) s = s * (q.inv() - q);
        CHECK(lhs == cb);
    }

    // the primitive idempotents e_xi generate left ideals of dimension p^2
    for (int xi = 0; xi < p; ++xi) {
        auto exi = std::vector<Scalar>(27, Scalar::zero(K));
        for (int nn = 1; nn <= p; ++nn) {
            auto dn = dual.alg.power(d, nn);
            Scalar coef = q.pow(-static_cast<long>(xi) * nn) * Scalar::of_rational(K, mpq_class(1, p));
            for (size_t t = 0; t < exi.size(); ++t) exi[t] += coef * dn[t];
        }
        CHECK(mul(d, exi) == [&] {
            auto v = exi;
            for (auto& s : v) s = s * q.pow(xi);
            return v;
        }());
        EchelonAccumulator acc(K, 27);
        for (int i = 0; i < 27; ++i) acc.add_row(mul(basis_vec(K, 27, i), exi));
        CHECK(acc.rank() == 9);
    }
}

TEST_CASE("r_matrix_check") {
    // R = 1 (x) 1 on a cocommutative Hopf algebra: valid and symmetric
    auto gf = group_family(2, std::nullopt);
    auto rep = r_matrix_check(*gf.hopf, gf.rmatrices.at("unit"));
    CHECK(rep.ok());
    CHECK(rep.symmetric);

    // Sweedler R_t: valid and symmetric for several t
    const auto& sw = sweedler_entry();
    for (const std::string& nm : {"R0", "R1", "R2"}) {
        auto r = r_matrix_check(*sw.hopf, sw.rmatrices.at(nm));
        CHECK(r.ok());
        CHECK(r.symmetric);
    }
    // a broken candidate fails
    TensorElt bad = sw.rmatrices.at("R0");
    bad.add_term(2, 2, Scalar::one(sw.hopf->spec()));
    bad.canonicalize();
    CHECK(!r_matrix_check(*sw.hopf, bad).ok());

    // Drinfeld double: valid, not symmetric
    auto dd = drinfeld_double_group(2, 2);
    auto rd = r_matrix_check(*dd.hopf, dd.rmatrices.at("R"));
    CHECK(rd.ok());
    CHECK(!rd.symmetric);

    // u_q(sl2): valid (the normalization search succeeded), not symmetric
    auto ru = r_matrix_check(*uq3_entry().hopf, uq3_entry().rmatrices.at("R"));
    CHECK(ru.ok());
    CHECK(!ru.symmetric);
}

TEST_CASE("cocycle_check") {
    const auto& sw = sweedler_entry();
    CHECK(cocycle_check(*sw.hopf, sw.cocycles.at("unit")).ok());
    CHECK(cocycle_check(*sw.hopf, sw.cocycles.at("R2")).ok());
    // non-normalized: 2 (1 (x) 1)
    TensorElt two = sw.cocycles.at("unit").scaled(Scalar::of_int(sw.hopf->spec(), 2));
    auto rep = cocycle_check(*sw.hopf, two);
    CHECK(!rep.normalized);
    CHECK(!rep.ok());
    // non-invertible: 0
    TensorElt z{sw.hopf, sw.hopf, {}};
    CHECK_THROWS_AS(cocycle_check(*sw.hopf, z), Error);
}

TEST_CASE("phi_of ranks on Sweedler") {
    const auto& sw = sweedler_entry();
    // R = 1 (x) 1 collapses phi to unit . counit with rank 1
    TensorElt unit = tensor_unit(sw.hopf, sw.hopf);
    AlgMap phi1 = phi_of(sw.hopf, unit);
    CHECK(rank_of(phi1.matrix) == 1);

    AlgMap phi0 = phi_of(sw.hopf, sw.rmatrices.at("R0"));
    CHECK(rank_of(phi0.matrix) == 2);
    // image is the span of {1, g}
    std::vector<std::vector<Scalar>> img;
    for (int j = 0; j < 4; ++j) img.push_back(phi0.matrix.col_vec(j));
    Mat span = subalgebra_span(sw.hopf->alg, img);
    CHECK(span.cols == 2);
    for (int c = 0; c < span.cols; ++c) {
        CHECK(span.at(2, c).is_zero());
        CHECK(span.at(3, c).is_zero());
    }

    AlgMap phi_1 = phi_of(sw.hopf, sw.rmatrices.at("R1"));
    CHECK(rank_of(phi_1.matrix) == 4);
}

TEST_CASE("phi image of u_q is the positive Borel half") {
    const auto& e = uq3_entry();
    AlgMap phi = phi_of(e.hopf, e.rmatrices.at("R"));
    std::vector<std::vector<Scalar>> img;
    for (int j = 0; j < 27; ++j) img.push_back(phi.matrix.col_vec(j));
    Mat span = subalgebra_span(e.hopf->alg, img);
    CHECK(span.cols == 9);
    // the Borel generated by E and K has dimension 9 and contains the image
    auto K = e.hopf->spec();
    Mat borel = subalgebra_span(e.hopf->alg, {basis_vec(K, 27, uq_index(3, 0, 1, 0)),
                                              basis_vec(K, 27, uq_index(3, 0, 0, 1))});
    CHECK(borel.cols == 9);
    EchelonAccumulator acc(K, 27);
    for (int c = 0; c < borel.cols; ++c) acc.add_row(borel.col_vec(c));
    for (int c = 0; c < span.cols; ++c) CHECK(acc.contains(span.col_vec(c)));
}

TEST_CASE("twist identity on the Sweedler family") {
    const auto& sw = sweedler_entry();
    auto rt = [&](const mpq_class& t) { return sweedler_r(sw.hopf, t); };
    for (const auto& [t, lam] : std::vector<std::pair<mpq_class, mpq_class>>{
             {0, 1}, {1, -1}, {2, 3}, {mpq_class(1, 2), mpq_class(1, 3)}, {-3, mpq_class(5, 2)}}) {
        TensorElt lhs = twist_r(rt(t), rt(lam));
        TensorElt rhs = rt(t + 2 * lam);
        CHECK(lhs == rhs);
    }
    // twist by J then J^{-1} returns R
    TensorElt r = rt(mpq_class(1, 2));
    TensorElt j = rt(2);
    CHECK(twist_r(twist_r(r, j), j.inv()) == r);
    // composing twists matches the parameter arithmetic
    CHECK(twist_r(twist_r(rt(0), rt(1)), rt(mpq_class(3, 2))) == rt(5));
}

TEST_CASE("twisted coalgebra is coassociative and counital") {
    const auto& sw = sweedler_entry();
    TensorElt L = sweedler_r(sw.hopf, mpq_class(1, 2));  // R_{1/mu}, mu = 2
    TensorElt J = sweedler_r(sw.hopf, 1);                // R_{1/lambda}, lambda = 1
    CoalgebraData c = twisted_coalgebra(*sw.hopf, L, J);
    CHECK(verify_coalgebra(c).ok);
    // L = J = unit gives back Delta
    CoalgebraData c0 = twisted_coalgebra(*sw.hopf, sw.cocycles.at("unit"), sw.cocycles.at("unit"));
    CHECK(c0.comult == sw.hopf->comult);
    // counit laws hold for all catalog twists
    for (const auto& [nm, j] : sw.cocycles) {
        CoalgebraData ct = twisted_coalgebra(*sw.hopf, j, j);
        CHECK(verify_coalgebra(ct).ok);
    }
}

TEST_CASE("twisted dual algebra: semisimple iff d != 0") {
    const auto& sw = sweedler_entry();
    // L = R_{1/mu}, J = R_{1/lambda}; d = 1/lambda - 1/mu
    auto twisted = [&](const mpq_class& lam, const mpq_class& mu) {
        TensorElt L = sweedler_r(sw.hopf, 1 / mu);
        TensorElt J = sweedler_r(sw.hopf, 1 / lam);
        return twisted_dual_algebra(*sw.hopf, L, J);
    };
    AlgebraSC s12 = twisted(1, 2);
    REQUIRE(verify_algebra(s12).ok);
    CHECK(trace_radical(s12).cols == 0);

    AlgebraSC s1m1 = twisted(1, -1);
    REQUIRE(verify_algebra(s1m1).ok);
    CHECK(trace_radical(s1m1).cols == 0);

    AlgebraSC s11 = twisted(1, 1);  // d = 0
    REQUIRE(verify_algebra(s11).ok);
    CHECK(trace_radical(s11).cols == 2);

    // L = J = unit gives the plain dual algebra
    AlgebraSC plain = twisted_dual_algebra(*sw.hopf, sw.cocycles.at("unit"), sw.cocycles.at("unit"));
    HopfData dual = dual_hopf(*sw.hopf);
    CHECK(plain.mult == dual.alg.mult);
    CHECK(plain.unit == dual.alg.unit);
}

TEST_CASE("braided opposite of the catalog algebras") {
    const auto& sw = sweedler_entry();
    const auto& R0 = sw.rmatrices.at("R0");
    // the trivial algebra is fixed
    ModuleAlgebra triv = unit_module_algebra(sw.hopf);
    ModuleAlgebra trivPsi = braided_opposite(triv, R0);
    CHECK(trivPsi.alg.mult == triv.alg.mult);

    // B* is commutative in C: (B*)^psi = B*
    const ModuleAlgebra& bstar = sw.moduleAlgebras.at("B*");
    ModuleAlgebra bstarPsi = braided_opposite(bstar, R0);
    CHECK(validate_module_algebra(bstarPsi).ok);
    CHECK(bstarPsi.alg.mult == bstar.alg.mult);

    // I^psi has y . y = -1
    const ModuleAlgebra& I = sw.moduleAlgebras.at("I");
    ModuleAlgebra IPsi = braided_opposite(I, R0);
    CHECK(validate_module_algebra(IPsi).ok);
    auto yy = IPsi.alg.basis_product(1, 1);
    CHECK(yy[0] == -Scalar::one(sw.hopf->spec()));
    CHECK(yy[1].is_zero());

    // (A^psi)^{psi^{-1}} = A exactly
    ModuleAlgebra back = braided_opposite(IPsi, R0, /*use_inverse=*/true);
    CHECK(back.alg.mult == I.alg.mult);
}

TEST_CASE("braided tensor and the middle-flip isomorphism") {
    const auto& sw = sweedler_entry();
    const auto& R0 = sw.rmatrices.at("R0");
    const ModuleAlgebra& I = sw.moduleAlgebras.at("I");

    ModuleAlgebra II = braided_tensor(I, I, R0);
    CHECK(verify_algebra(II.alg).ok);
    CHECK(validate_module_algebra(II).ok);
    CHECK(II.dim() == 4);

    // 1 (x) A is A in identity coordinates
    ModuleAlgebra triv = unit_module_algebra(sw.hopf);
    ModuleAlgebra tI = braided_tensor(triv, I, R0);
    CHECK(tI.alg.mult == I.alg.mult);

    // psi^{-1}_{A,B} is an algebra isomorphism A (x)^psi B -> B (x)^{psi^{-1}} A
    const ModuleAlgebra& B = sw.moduleAlgebras.at("B*");
    ModuleAlgebra AB = braided_tensor(I, B, R0);
    ModuleAlgebra BA = braided_tensor(B, I, R0, /*use_inverse=*/true);
    Mat flip = braiding_inverse(I.hAction, B.hAction, R0.inv());
    AlgMap iso{std::make_shared<const AlgebraSC>(AB.alg), std::make_shared<const AlgebraSC>(BA.alg), flip};
    CHECK(verify_alg_map(iso).ok);
}

TEST_CASE("double dual pairing is a Hopf isomorphism via the antipode") {
    for (const HopfPtr& h : {sweedler_entry().hopf, group_family(2, 2).hopf}) {
        HopfData dd = dual_hopf(dual_hopf(*h));
        REQUIRE(verify_hopf(dd).ok);
        auto ddp = std::make_shared<const HopfData>(dd);
        AlgMap iso = double_dual_iso(h, ddp);
        CHECK(verify_alg_map(iso).ok);
        CHECK(verify_coalgebra_map(*h, dd, iso.matrix).ok);
        CHECK(rank_of(iso.matrix) == h->dim());
    }
}

TEST_CASE("uq coproduct matches the closed q-binomial formula") {
    const auto& e = uq3_entry();
    const long p = 3;
    const FieldSpec& K = e.hopf->spec();
    Scalar q = primitive_root(K, p);
    auto qnum = [&](long k) { return (q.pow(k) - q.pow(-k)) / (q - q.pow(-1)); };
    auto qfact = [&](long k) {
        Scalar f = Scalar::one(K);
        for (long t = 1; t <= k; ++t) f = f * qnum(t);
        return f;
    };
    auto qbin = [&](long m, long n) { return qfact(m) / (qfact(n) * qfact(m - n)); };
    // Delta(F^m E^n K^j) = sum_{r,s} q^{2(n-s)(r-m)+r(m-r)+s(n-s)}
    //   [m choose r][n choose s] F^r E^{n-s} K^{r-m+j} (x) F^{m-r} E^s K^{n-s+j}
    for (int m = 0; m < p; ++m)
        for (int n = 0; n < p; ++n)
            for (int j = 0; j < p; ++j) {
                std::map<std::pair<int, int>, Scalar> expect;
                for (int r = 0; r <= m; ++r)
                    for (int s = 0; s <= n; ++s) {
                        long ex = 2 * (n - s) * (r - m) + r * (m - r) + s * (n - s);
                        Scalar coef = q.pow(((ex % p) + p) % p) * qbin(m, r) * qbin(n, s);
                        int left = uq_index(p, r, n - s, ((r - m + j) % static_cast<int>(p) + static_cast<int>(p)) % static_cast<int>(p));
                        int right = uq_index(p, m - r, s, ((n - s + j) % static_cast<int>(p)) % static_cast<int>(p));
                        auto key = std::make_pair(left, right);
                        auto it = expect.find(key);
                        if (it == expect.end()) expect.emplace(key, coef);
                        else it->second += coef;
                    }
                std::map<std::pair<int, int>, Scalar> got;
                for (const auto& [pq, c] : e.hopf->comult[static_cast<size_t>(uq_index(p, m, n, j))])
                    got.emplace(pq, c);
                for (auto it = expect.begin(); it != expect.end();)
                    it = it->second.is_zero() ? expect.erase(it) : std::next(it);
                REQUIRE(got == expect);
            }
}
