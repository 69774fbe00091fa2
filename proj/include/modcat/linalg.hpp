#pragma once

#include <optional>
#include <vector>

#include "modcat/field.hpp"

namespace modcat {

/// Dense matrix over one FieldSpec, row-major.
struct Mat {
    FieldSpec spec;
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() : spec(FieldSpec::rational()) {}
    Mat(FieldSpec s, int r, int c) : spec(s), rows(r), cols(c), a(static_cast<size_t>(r) * c, Scalar::zero(s)) {}

    static Mat zero(const FieldSpec& s, int r, int c) { return Mat(s, r, c); }
    static Mat identity(const FieldSpec& s, int n);

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const;

    Mat transpose() const;
    Mat scaled(const Scalar& c) const;
    bool is_zero() const;
    bool is_identity() const;

    std::vector<Scalar> row_vec(int i) const;
    std::vector<Scalar> col_vec(int j) const;
    static Mat from_cols(const FieldSpec& s, int dim, const std::vector<std::vector<Scalar>>& cols);

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // matrix * column
    /// Row-major flattening as a single column (rows*cols x 1).
    Mat vec() const;
};

Mat hstack(const Mat& l, const Mat& r);
Mat vstack(const Mat& t, const Mat& b);

/// Reduced row echelon form with the left transform: transform * input = r.
/// Deterministic: columns scanned left to right, pivot is the first row with a
/// nonzero entry scanning top-down. Fraction-free (Bareiss) forward pass over
/// Q and Q(zeta_n); plain elimination over F_p.
struct Rref {
    Mat r;
    Mat transform;
    int rank = 0;
    std::vector<int> pivots;
};
Rref rref(const Mat& m);

int rank_of(const Mat& m);

/// Feasibility of A x = b (b may carry several right-hand columns).
/// Either a full solution (plus kernel basis of A), or a certificate row y
/// with y A = 0 and y b != 0 on the first inconsistent column.
struct Feasibility {
    bool feasible = false;
    Mat solution;     // A.cols x b.cols
    Mat kernel;       // A.cols x nullity, basis as columns
    Mat certificate;  // 1 x A.rows
    int badColumn = -1;
};
Feasibility solve_affine(const Mat& A, const Mat& b);

Mat nullspace(const Mat& m);  // basis as columns
Mat inverse(const Mat& m);    // errors NotInvertible

/// Kronecker product with row-major pair index i*b.rows + k (project-wide).
Mat kron(const Mat& a, const Mat& b);

/// Incremental reduced echelon of rows; used to ingest large sparse systems
/// row by row without materializing them. Row ops are integer-preserving with
/// content stripping over characteristic zero.
class EchelonAccumulator {
  public:
    EchelonAccumulator(const FieldSpec& spec, int cols, bool track_combos = false);

    struct AddResult {
        bool extended = false;
        std::vector<Scalar> combo;  // over previously inserted rows, when !extended
    };
    AddResult add_row(std::vector<Scalar> row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const FieldSpec& spec() const { return spec_; }
    std::vector<int> pivot_columns() const;
    /// Normalized reduced echelon (pivots 1), rows sorted by pivot column.
    Mat echelon() const;
    Mat nullspace() const;
    bool contains(const std::vector<Scalar>& v) const;

  private:
    FieldSpec spec_;
    int cols_;
    bool track_;
    int inserted_ = 0;
    struct Row {
        int pivot;
        std::vector<Scalar> v;
        std::vector<Scalar> combo;  // over original rows (dense, length inserted_ at creation)
    };
    std::vector<Row> rows_;  // kept sorted by pivot column, mutually reduced

    void strip_content(std::vector<Scalar>& v, std::vector<Scalar>* combo) const;
};

}  // namespace modcat
