#include "modcat/algebra.hpp"

#include <algorithm>

namespace modcat {

AlgebraSC::AlgebraSC(FieldSpec s, int d) : spec(s), dim(d) {
    labels.resize(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) labels[static_cast<size_t>(i)] = "e" + std::to_string(i);
    mult.assign(static_cast<size_t>(d), std::vector<std::vector<std::pair<int, Scalar>>>(static_cast<size_t>(d)));
    unit.assign(static_cast<size_t>(d), Scalar::zero(s));
}

void AlgebraSC::set_term(int i, int j, int k, const Scalar& c) {
    if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
        fail("ValidationError", "structure constant index out of range");
    auto& terms = mult[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (auto& t : terms)
        if (t.first == k) {
            t.second = t.second + c;
            if (t.second.is_zero()) terms.erase(std::find_if(terms.begin(), terms.end(), [&](auto& u) { return u.first == k; }));
            return;
        }
    if (!c.is_zero()) {
        terms.emplace_back(k, c);
        std::sort(terms.begin(), terms.end(), [](auto& l, auto& r) { return l.first < r.first; });
    }
}

std::vector<Scalar> AlgebraSC::basis_product(int i, int j) const {
    std::vector<Scalar> v(static_cast<size_t>(dim), Scalar::zero(spec));
    for (const auto& [k, c] : mult[static_cast<size_t>(i)][static_cast<size_t>(j)]) v[static_cast<size_t>(k)] = c;
    return v;
}

std::vector<Scalar> AlgebraSC::product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> v(static_cast<size_t>(dim), Scalar::zero(spec));
    for (int i = 0; i < dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            Scalar f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (const auto& [k, c] : mult[static_cast<size_t>(i)][static_cast<size_t>(j)])
                v[static_cast<size_t>(k)] += f * c;
        }
    }
    return v;
}

std::vector<Scalar> AlgebraSC::power(const std::vector<Scalar>& x, long n) const {
    std::vector<Scalar> r = unit, b = x;
    while (n > 0) {
        if (n & 1) r = product(r, b);
        b = product(b, b);
        n >>= 1;
    }
    return r;
}

namespace {

bool vec_eq(const std::vector<Scalar>& a, const std::vector<Scalar>& b) { return a == b; }

std::vector<Scalar> basis_vec(const FieldSpec& s, int dim, int i) {
    std::vector<Scalar> v(static_cast<size_t>(dim), Scalar::zero(s));
    v[static_cast<size_t>(i)] = Scalar::one(s);
    return v;
}

}  // namespace

VerifyReport verify_algebra(const AlgebraSC& a) {
    for (int i = 0; i < a.dim; ++i) {
        auto ei = basis_vec(a.spec, a.dim, i);
        if (!vec_eq(a.product(a.unit, ei), ei))
            return {false, "unit law fails on the left at basis element " + std::to_string(i)};
        if (!vec_eq(a.product(ei, a.unit), ei))
            return {false, "unit law fails on the right at basis element " + std::to_string(i)};
    }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            auto ij = a.basis_product(i, j);
            for (int k = 0; k < a.dim; ++k) {
                auto jk = a.basis_product(j, k);
                auto lhs = a.product(ij, basis_vec(a.spec, a.dim, k));
                auto rhs = a.product(basis_vec(a.spec, a.dim, i), jk);
                if (!vec_eq(lhs, rhs))
                    return {false, "associativity fails at triple (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(k) + ")"};
            }
        }
    return {true, ""};
}

RegularReps regular_reps(const AlgebraSC& a) {
    RegularReps r;
    r.left.reserve(static_cast<size_t>(a.dim));
    r.right.reserve(static_cast<size_t>(a.dim));
    for (int i = 0; i < a.dim; ++i) {
        Mat L(a.spec, a.dim, a.dim), R(a.spec, a.dim, a.dim);
        for (int j = 0; j < a.dim; ++j) {
            for (const auto& [k, c] : a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)]) L.at(k, j) = c;
            for (const auto& [k, c] : a.mult[static_cast<size_t>(j)][static_cast<size_t>(i)]) R.at(k, j) = c;
        }
        r.left.push_back(std::move(L));
        r.right.push_back(std::move(R));
    }
    return r;
}

AlgebraSC opposite(const AlgebraSC& a) {
    AlgebraSC o(a.spec, a.dim);
    o.labels = a.labels;
    o.unit = a.unit;
    o.name = a.name.empty() ? "" : a.name + "^op";
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) o.mult[static_cast<size_t>(j)][static_cast<size_t>(i)] = a.mult[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return o;
}

VerifyReport verify_alg_map(const AlgMap& f) {
    const AlgebraSC& A = *f.source;
    const AlgebraSC& B = *f.target;
    if (!(A.spec == B.spec)) return {false, "source and target field specs differ"};
    if (f.matrix.rows != B.dim || f.matrix.cols != A.dim) return {false, "matrix shape mismatch"};
    if (!vec_eq(f.matrix.apply(A.unit), B.unit)) return {false, "unit is not preserved"};
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            auto lhs = f.matrix.apply(A.basis_product(i, j));
            auto rhs = B.product(f.matrix.col_vec(i), f.matrix.col_vec(j));
            if (!vec_eq(lhs, rhs))
                return {false, "multiplicativity fails at pair (" + std::to_string(i) + "," + std::to_string(j) + ")"};
        }
    return {true, ""};
}

Mat trace_radical(const AlgebraSC& a) {
    if (a.spec.kind == FieldKind::Prime)
        fail("CharPUnsupported", "trace-form radical requires characteristic zero");
    // G_{ij} = Tr(L_i L_j) = sum_m <e_i (e_j e_m)>_m
    Mat G(a.spec, a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Scalar tr = Scalar::zero(a.spec);
            for (int m = 0; m < a.dim; ++m)
                for (const auto& [k, c] : a.mult[static_cast<size_t>(j)][static_cast<size_t>(m)])
                    for (const auto& [l, d] : a.mult[static_cast<size_t>(i)][static_cast<size_t>(k)])
                        if (l == m) tr += c * d;
            G.at(i, j) = tr;
        }
    return nullspace(G);
}

Mat subalgebra_span(const AlgebraSC& a, const std::vector<std::vector<Scalar>>& gens) {
    EchelonAccumulator acc(a.spec, a.dim);
    std::vector<std::vector<Scalar>> members;  // vectors that made it into the span
    auto push = [&](const std::vector<Scalar>& v) {
        if (acc.add_row(v).extended) members.push_back(v);
    };
    push(a.unit);
    for (const auto& g : gens) push(g);
    size_t done = 0;  // pairs with both factors below `done` were already multiplied
    while (true) {
        size_t n = members.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i < done && j < done) continue;
                push(a.product(members[i], members[j]));
            }
        done = n;
        if (members.size() == n) break;
    }
    Mat rows = acc.echelon();
    return rows.transpose();
}

std::vector<int> algebra_generators(const AlgebraSC& a) {
    std::vector<int> gens;
    std::vector<std::vector<Scalar>> gen_vecs;
    Mat span = subalgebra_span(a, gen_vecs);
    for (int i = 0; i < a.dim && span.cols < a.dim; ++i) {
        EchelonAccumulator acc(a.spec, a.dim);
        for (int c = 0; c < span.cols; ++c) acc.add_row(span.col_vec(c));
        auto ei = std::vector<Scalar>(static_cast<size_t>(a.dim), Scalar::zero(a.spec));
        ei[static_cast<size_t>(i)] = Scalar::one(a.spec);
        if (acc.contains(ei)) continue;
        gens.push_back(i);
        gen_vecs.push_back(ei);
        span = subalgebra_span(a, gen_vecs);
    }
    return gens;
}

}  // namespace modcat
