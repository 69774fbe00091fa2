#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modcat/linalg.hpp"

namespace modcat {

struct VerifyReport {
    bool ok = true;
    std::string detail;
};

/// Finite-dimensional unital associative algebra by structure constants:
/// e_i * e_j = sum_k mult[i][j] . (k, c) * e_k. The tensor is stored sparsely.
struct AlgebraSC {
    FieldSpec spec;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> mult;
    std::vector<Scalar> unit;
    std::string name;

    AlgebraSC() : spec(FieldSpec::rational()) {}
    AlgebraSC(FieldSpec s, int d);

    void set_term(int i, int j, int k, const Scalar& c);
    std::vector<Scalar> basis_product(int i, int j) const;
    std::vector<Scalar> product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    std::vector<Scalar> unit_vec() const { return unit; }
    std::vector<Scalar> power(const std::vector<Scalar>& x, long n) const;
};

/// Associativity on all basis triples plus both unit laws; reports the first
/// violated instance.
VerifyReport verify_algebra(const AlgebraSC& a);

/// Left action matrices L_i (v -> e_i v) and right action matrices R_i
/// (v -> v e_i); L is an algebra map, R an anti-map.
struct RegularReps {
    std::vector<Mat> left, right;
};
RegularReps regular_reps(const AlgebraSC& a);

AlgebraSC opposite(const AlgebraSC& a);

/// Algebra homomorphism source -> target as a matrix on coordinates.
struct AlgMap {
    std::shared_ptr<const AlgebraSC> source, target;
    Mat matrix;  // target.dim x source.dim
};
VerifyReport verify_alg_map(const AlgMap& f);

/// Basis (as columns) of {x : Tr(L_x L_y) = 0 for all y}; this is the Jacobson
/// radical in characteristic zero. Errors with CharPUnsupported over F_p.
Mat trace_radical(const AlgebraSC& a);

/// Smallest unital, multiplicatively closed subspace containing the given
/// vectors, by closure iteration. Returns a basis as columns.
Mat subalgebra_span(const AlgebraSC& a, const std::vector<std::vector<Scalar>>& gens);

/// Greedy generating set of basis elements: scan e_1..e_n, keep those not in
/// the unital subalgebra generated by the previous picks.
std::vector<int> algebra_generators(const AlgebraSC& a);

}  // namespace modcat
