#pragma once

#include <memory>
#include <tuple>

#include "modcat/algebra.hpp"

namespace modcat {

/// comult[i] = list of ((j,k), c) with Delta(e_i) = sum c * e_j (x) e_k.
using ComultTensor = std::vector<std::vector<std::pair<std::pair<int, int>, Scalar>>>;

struct CoalgebraData {
    FieldSpec spec;
    int dim = 0;
    ComultTensor comult;
    std::vector<Scalar> counit;
};
/// Coassociativity and both counit laws on all basis elements.
VerifyReport verify_coalgebra(const CoalgebraData& c);

struct HopfData {
    AlgebraSC alg;
    ComultTensor comult;
    std::vector<Scalar> counit;
    Mat antipode;
    std::string name;

    int dim() const { return alg.dim; }
    const FieldSpec& spec() const { return alg.spec; }
    CoalgebraData coalgebra() const { return {alg.spec, alg.dim, comult, counit}; }
    Scalar counit_of(const std::vector<Scalar>& v) const;
};
using HopfPtr = std::shared_ptr<const HopfData>;

/// All bialgebra axioms plus the antipode axioms, checked on basis elements.
VerifyReport verify_hopf(const HopfData& h);

/// The one-dimensional Hopf algebra over `spec`; carrier for plain algebras.
HopfPtr trivial_hopf(const FieldSpec& spec);

/// Dual Hopf algebra on the dual basis. The product dualizes the coproduct
/// with the factors swapped, (fg)(h) = f(h_(2)) g(h_(1)); the coproduct
/// dualizes the product, f(hk) = f_(1)(h) f_(2)(k). This reversed product
/// convention is fixed project-wide.
HopfData dual_hopf(const HopfData& h);

/// Sparse element of left (x) right for two Hopf algebras.
struct TensorElt {
    HopfPtr left, right;
    std::vector<std::tuple<int, int, Scalar>> coords;  // sorted, no zeros

    const FieldSpec& spec() const { return left->spec(); }
    void add_term(int i, int j, const Scalar& c);
    void canonicalize();
    bool is_zero() const { return coords.empty(); }

    TensorElt mul(const TensorElt& o) const;
    TensorElt add(const TensorElt& o) const;
    TensorElt scaled(const Scalar& c) const;
    /// Legs exchanged: an element of right (x) left.
    TensorElt swapped() const;
    /// Inverse in the tensor-square algebra; tries the antipode candidate
    /// (S (x) id) first, falls back to a linear solve. Errors NotInvertible.
    TensorElt inv() const;
    bool operator==(const TensorElt& o) const;

    /// Matrix of sum c * rho_left(e_i) (x) rho_right(e_j) acting on X (x) Y.
    Mat act(const std::vector<Mat>& rhoX, const std::vector<Mat>& rhoY) const;
};
TensorElt tensor_unit(const HopfPtr& l, const HopfPtr& r);
/// Delta(e_i) as an element of H (x) H.
TensorElt coproduct_elt(const HopfPtr& h, int i);

/// Permutation matrix X (x) Y -> Y (x) X for the fixed row-major pair index.
Mat swap_matrix(const FieldSpec& spec, int dx, int dy);

/// Braiding psi_{X,Y}: X (x) Y -> Y (x) X, v (x) w -> R^(2) w (x) R^(1) v.
Mat braiding(const std::vector<Mat>& rhoX, const std::vector<Mat>& rhoY, const TensorElt& r);
/// Inverse braiding psi^{-1}_{U,V}: U (x) V -> V (x) U given R^{-1}.
Mat braiding_inverse(const std::vector<Mat>& rhoU, const std::vector<Mat>& rhoV, const TensorElt& rinv);

struct RMatrixReport {
    bool invertible = false;
    bool coproduct_left = false;   // (Delta (x) id) R = R_23 R_13
    bool coproduct_right = false;  // (id (x) Delta) R = R_12 R_13
    bool intertwines = false;      // R Delta(h) = Delta^op(h) R
    bool symmetric = false;        // R_21 R = 1 (x) 1
    bool ok() const { return invertible && coproduct_left && coproduct_right && intertwines; }
    std::string detail;
};
RMatrixReport r_matrix_check(const HopfData& h, const TensorElt& r);

struct CocycleReport {
    bool cocycle = false;     // (id (x) Delta)J . J_23 = (Delta (x) id)J . J_12
    bool normalized = false;  // (eps (x) id)J = 1 = (id (x) eps)J
    bool ok() const { return cocycle && normalized; }
    std::string detail;
};
/// Errors NotInvertible when j has no inverse in H (x) H.
CocycleReport cocycle_check(const HopfData& h, const TensorElt& j);

/// phi_R: H* -> H built by pairing functionals against one leg of R and
/// keeping the other; the pairing direction is fixed so that phi is a Hopf
/// algebra map into the reversed-product dual. Requires r to pass
/// r_matrix_check (errors RMatrixInvalid); the result passes verify_alg_map
/// and the coalgebra-map check.
AlgMap phi_of(const HopfPtr& h, const TensorElt& r);

/// R^J = J^{-1}_21 . R . J. Errors NotInvertible.
TensorElt twist_r(const TensorElt& r, const TensorElt& j);

/// Coalgebra on the space of H with coproduct h -> L^{-1} Delta(h) J.
/// Both l and j must pass cocycle_check (errors CocycleInvalid).
CoalgebraData twisted_coalgebra(const HopfData& h, const TensorElt& l, const TensorElt& j);

/// Algebra on the dual space dualizing the twisted coproduct:
/// (fg)(h) = g(L^(-1) h_(1) J^(1)) f(L^(-2) h_(2) J^(2)).
AlgebraSC twisted_dual_algebra(const HopfData& h, const TensorElt& l, const TensorElt& j);

/// Algebra internal to H-mod: underlying algebra plus an H-action under which
/// multiplication and unit are equivariant.
struct ModuleAlgebra {
    HopfPtr hopf;
    AlgebraSC alg;
    std::vector<Mat> hAction;  // one matrix per H basis element
    std::string name;

    int dim() const { return alg.dim; }
    const FieldSpec& spec() const { return alg.spec; }
    /// A plain algebra viewed over the trivial Hopf algebra.
    static ModuleAlgebra plain(const AlgebraSC& a);
};
VerifyReport validate_module_algebra(const ModuleAlgebra& a);

/// The trivial one-dimensional module algebra (the tensor unit).
ModuleAlgebra unit_module_algebra(const HopfPtr& h);

/// A^psi (use_inverse = false) or A^{psi^{-1}} (use_inverse = true):
/// same H-module, product m o psi.
ModuleAlgebra braided_opposite(const ModuleAlgebra& a, const TensorElt& r, bool use_inverse = false);

/// A (x)^psi B on the tensor product H-module, product crossing the middle
/// legs with the braiding (or its inverse).
ModuleAlgebra braided_tensor(const ModuleAlgebra& a, const ModuleAlgebra& b, const TensorElt& r,
                             bool use_inverse = false);

/// Representation of H on a finite-dimensional space.
struct HModuleRep {
    HopfPtr hopf;
    int dim = 0;
    std::vector<Mat> action;

    static HModuleRep regular(const HopfPtr& h);
    static HModuleRep trivial(const HopfPtr& h);
    static HModuleRep of_algebra(const ModuleAlgebra& a);  // underlying H-module
    static HModuleRep tensor(const HModuleRep& x, const HModuleRep& y);  // H via Delta
};
VerifyReport verify_representation(const HModuleRep& m);

/// Coalgebra-map check: (f (x) f) Delta_src = Delta_tgt f and counit match.
VerifyReport verify_coalgebra_map(const HopfData& src, const HopfData& tgt, const Mat& f);

/// The double-dual comparison map H -> H** under the reversed-product dual;
/// the canonical evaluation pairing composed with the antipode (the plain
/// evaluation is an algebra anti-map under this convention).
AlgMap double_dual_iso(const HopfPtr& h, const HopfPtr& ddual);

}  // namespace modcat
