#include "modcat/linalg.hpp"

#include <algorithm>

namespace modcat {

Mat Mat::identity(const FieldSpec& s, int n) {
    Mat m(s, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(s);
    return m;
}

static void check_spec(const Mat& a, const Mat& b) {
    if (!(a.spec == b.spec)) fail("SpecMismatch", "matrices over " + a.spec.str() + " and " + b.spec.str());
}

Mat Mat::operator*(const Mat& o) const {
    check_spec(*this, o);
    if (cols != o.rows) fail("ValidationError", "shape mismatch in matrix product");
    Mat r(spec, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Scalar& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    check_spec(*this, o);
    if (rows != o.rows || cols != o.cols) fail("ValidationError", "shape mismatch in matrix sum");
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.a) x = -x;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return spec == o.spec && rows == o.rows && cols == o.cols && a == o.a;
}

Mat Mat::transpose() const {
    Mat r(spec, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat r = *this;
    for (auto& x : r.a) x = x * c;
    return r;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::is_identity() const {
    if (rows != cols) return false;
    return *this == identity(spec, rows);
}

std::vector<Scalar> Mat::row_vec(int i) const {
    std::vector<Scalar> v(a.begin() + static_cast<size_t>(i) * cols, a.begin() + static_cast<size_t>(i + 1) * cols);
    return v;
}

std::vector<Scalar> Mat::col_vec(int j) const {
    std::vector<Scalar> v;
    v.reserve(rows);
    for (int i = 0; i < rows; ++i) v.push_back(at(i, j));
    return v;
}

Mat Mat::from_cols(const FieldSpec& s, int dim, const std::vector<std::vector<Scalar>>& cols) {
    Mat m(s, dim, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != dim) fail("ValidationError", "column length mismatch");
        for (int i = 0; i < dim; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols) fail("ValidationError", "vector length mismatch");
    std::vector<Scalar> r(rows, Scalar::zero(spec));
    for (int j = 0; j < cols; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows; ++i) {
            const Scalar& x = at(i, j);
            if (!x.is_zero()) r[i] += x * v[j];
        }
    }
    return r;
}

Mat Mat::vec() const {
    Mat r(spec, rows * cols, 1);
    r.a = a;
    return r;
}

Mat hstack(const Mat& l, const Mat& r) {
    check_spec(l, r);
    if (l.rows != r.rows) fail("ValidationError", "hstack row mismatch");
    Mat m(l.spec, l.rows, l.cols + r.cols);
    for (int i = 0; i < l.rows; ++i) {
        for (int j = 0; j < l.cols; ++j) m.at(i, j) = l.at(i, j);
        for (int j = 0; j < r.cols; ++j) m.at(i, l.cols + j) = r.at(i, j);
    }
    return m;
}

Mat vstack(const Mat& t, const Mat& b) {
    check_spec(t, b);
    if (t.cols != b.cols) fail("ValidationError", "vstack col mismatch");
    Mat m(t.spec, t.rows + b.rows, t.cols);
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j) m.at(i, j) = t.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) m.at(t.rows + i, j) = b.at(i, j);
    return m;
}

namespace {

// lcm of denominators across the row, used to pre-scale before the
// fraction-free pass over characteristic zero.
mpz_class row_denominator_lcm(const std::vector<Scalar>& row) {
    mpz_class l(1);
    for (const Scalar& s : row)
        for (const mpq_class& q : s.coords()) {
            mpz_class d = q.get_den();
            l = l / gcd(l, d) * d;
        }
    return l;
}

}  // namespace

Rref rref(const Mat& m) {
    const int n = m.rows, nc = m.cols;
    const bool charzero = m.spec.kind != FieldKind::Prime;
    // augmented [m | I]; the I block tracks the transform
    Mat w = hstack(m, Mat::identity(m.spec, n));
    if (charzero) {
        for (int i = 0; i < n; ++i) {
            mpz_class l = row_denominator_lcm(w.row_vec(i));
            if (l != 1) {
                Scalar c = Scalar::of_rational(m.spec, mpq_class(l));
                for (int j = 0; j < w.cols; ++j) w.at(i, j) = w.at(i, j) * c;
            }
        }
    }
    Rref out;
    out.pivots.clear();
    int r = 0;
    Scalar prev = Scalar::one(m.spec);
    for (int c = 0; c < nc && r < n; ++c) {
        int sel = -1;
        for (int i = r; i < n; ++i)
            if (!w.at(i, c).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(r, j));
        Scalar piv = w.at(r, c);
        for (int i = r + 1; i < n; ++i) {
            Scalar f = w.at(i, c);
            for (int j = 0; j < w.cols; ++j)
                w.at(i, j) = (piv * w.at(i, j) - f * w.at(r, j)) / prev;
        }
        prev = piv;
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    // back substitution to reduced form
    for (int k = r - 1; k >= 0; --k) {
        int c = out.pivots[static_cast<size_t>(k)];
        Scalar piv = w.at(k, c);
        Scalar inv = piv.inv();
        for (int j = 0; j < w.cols; ++j) w.at(k, j) = w.at(k, j) * inv;
        for (int i = 0; i < k; ++i) {
            Scalar f = w.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < w.cols; ++j) w.at(i, j) = w.at(i, j) - f * w.at(k, j);
        }
    }
    out.r = Mat(m.spec, n, nc);
    out.transform = Mat(m.spec, n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < nc; ++j) out.r.at(i, j) = w.at(i, j);
        for (int j = 0; j < n; ++j) out.transform.at(i, j) = w.at(i, nc + j);
    }
    return out;
}

int rank_of(const Mat& m) { return rref(m).rank; }

Feasibility solve_affine(const Mat& A, const Mat& b) {
    check_spec(A, b);
    if (A.rows != b.rows) fail("ValidationError", "solve_affine shape mismatch");
    Rref e = rref(A);
    Mat tb = e.transform * b;
    Feasibility out;
    // consistency: the zero rows of the echelon must annihilate b
    for (int col = 0; col < b.cols; ++col) {
        for (int i = e.rank; i < A.rows; ++i) {
            if (!tb.at(i, col).is_zero()) {
                out.feasible = false;
                out.badColumn = col;
                Scalar v = tb.at(i, col);
                Mat y(A.spec, 1, A.rows);
                Scalar inv = v.inv();
                for (int j = 0; j < A.rows; ++j) y.at(0, j) = e.transform.at(i, j) * inv;
                out.certificate = y;  // y*A = 0, y*b(col) = 1
                return out;
            }
        }
    }
    out.feasible = true;
    out.solution = Mat(A.spec, A.cols, b.cols);
    for (int col = 0; col < b.cols; ++col)
        for (int k = 0; k < e.rank; ++k) out.solution.at(e.pivots[static_cast<size_t>(k)], col) = tb.at(k, col);
    // kernel basis from free columns
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(static_cast<size_t>(A.cols), false);
        for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
        for (int j = 0; j < A.cols; ++j)
            if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
    }
    out.kernel = Mat(A.spec, A.cols, static_cast<int>(free_cols.size()));
    for (size_t fj = 0; fj < free_cols.size(); ++fj) {
        int f = free_cols[fj];
        out.kernel.at(f, static_cast<int>(fj)) = Scalar::one(A.spec);
        for (int k = 0; k < e.rank; ++k)
            out.kernel.at(e.pivots[static_cast<size_t>(k)], static_cast<int>(fj)) = -e.r.at(k, f);
    }
    return out;
}

Mat nullspace(const Mat& m) { return solve_affine(m, Mat::zero(m.spec, m.rows, 1)).kernel; }

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) fail("NotInvertible", "inverse of non-square matrix");
    Feasibility f = solve_affine(m, Mat::identity(m.spec, m.rows));
    if (!f.feasible || f.kernel.cols != 0) fail("NotInvertible", "singular matrix");
    return f.solution;
}

Mat kron(const Mat& a, const Mat& b) {
    check_spec(a, b);
    Mat r(a.spec, a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const Scalar& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l) {
                    const Scalar& y = b.at(k, l);
                    if (!y.is_zero()) r.at(i * b.rows + k, j * b.cols + l) = x * y;
                }
        }
    return r;
}

EchelonAccumulator::EchelonAccumulator(const FieldSpec& spec, int cols, bool track_combos)
    : spec_(spec), cols_(cols), track_(track_combos) {}

void EchelonAccumulator::strip_content(std::vector<Scalar>& v, std::vector<Scalar>* combo) const {
    if (spec_.kind == FieldKind::Prime) {
        // normalize pivot to 1
        for (const Scalar& s : v) {
            if (s.is_zero()) continue;
            Scalar inv = s.inv();
            for (auto& x : v) x = x * inv;
            if (combo)
                for (auto& x : *combo) x = x * inv;
            return;
        }
        return;
    }
    mpz_class num_gcd(0), den_lcm(1);
    for (const Scalar& s : v)
        for (const mpq_class& q : s.coords()) {
            if (q == 0) continue;
            mpz_class d = q.get_den();
            den_lcm = den_lcm / gcd(den_lcm, d) * d;
        }
    for (const Scalar& s : v)
        for (const mpq_class& q : s.coords()) {
            if (q == 0) continue;
            mpz_class scaled_num = q.get_num() * (den_lcm / q.get_den());
            num_gcd = gcd(num_gcd, scaled_num);
        }
    if (num_gcd == 0) return;  // zero row
    mpq_class factor(den_lcm, num_gcd);  // multiply row by this
    // sign normalization: first nonzero coordinate positive
    for (const Scalar& s : v) {
        bool done = false;
        for (const mpq_class& q : s.coords()) {
            if (q != 0) {
                if (q * factor < 0) factor = -factor;
                done = true;
                break;
            }
        }
        if (done) break;
    }
    if (factor == 1) return;
    Scalar c = Scalar::of_rational(spec_, factor);
    for (auto& x : v) x = x * c;
    if (combo)
        for (auto& x : *combo) x = x * c;
}

EchelonAccumulator::AddResult EchelonAccumulator::add_row(std::vector<Scalar> row) {
    if (static_cast<int>(row.size()) != cols_) fail("ValidationError", "accumulator row length mismatch");
    std::vector<Scalar> combo;
    if (track_) {
        combo.assign(static_cast<size_t>(inserted_) + 1, Scalar::zero(spec_));
        combo.back() = Scalar::one(spec_);  // coefficient of the new row itself
    }
    for (const Row& s : rows_) {
        const Scalar f = row[static_cast<size_t>(s.pivot)];
        if (f.is_zero()) continue;
        const Scalar& p = s.v[static_cast<size_t>(s.pivot)];
        for (int j = 0; j < cols_; ++j)
            row[static_cast<size_t>(j)] = p * row[static_cast<size_t>(j)] - f * s.v[static_cast<size_t>(j)];
        if (track_) {
            for (auto& x : combo) x = p * x;
            for (size_t t = 0; t < s.combo.size(); ++t) combo[t] -= f * s.combo[t];
        }
    }
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (!row[static_cast<size_t>(j)].is_zero()) { pivot = j; break; }
    AddResult res;
    if (pivot < 0) {
        if (track_) {
            // 0 = sum_t combo_t * orig_t + gamma * new; solve for new
            Scalar gamma = combo.back();
            res.combo.assign(static_cast<size_t>(inserted_), Scalar::zero(spec_));
            if (!gamma.is_zero()) {
                Scalar ginv = gamma.inv();
                for (int t = 0; t < inserted_; ++t) res.combo[static_cast<size_t>(t)] = -(combo[static_cast<size_t>(t)] * ginv);
            }
        }
        ++inserted_;
        // pad stored combos so lengths stay aligned with inserted_
        if (track_)
            for (Row& s : rows_) s.combo.resize(static_cast<size_t>(inserted_), Scalar::zero(spec_));
        res.extended = false;
        return res;
    }
    strip_content(row, track_ ? &combo : nullptr);
    ++inserted_;
    if (track_) {
        combo.resize(static_cast<size_t>(inserted_), Scalar::zero(spec_));
        for (Row& s : rows_) s.combo.resize(static_cast<size_t>(inserted_), Scalar::zero(spec_));
    }
    // reduced maintenance: clear the new pivot column in existing rows
    for (Row& s : rows_) {
        const Scalar f = s.v[static_cast<size_t>(pivot)];
        if (f.is_zero()) continue;
        const Scalar& p = row[static_cast<size_t>(pivot)];
        for (int j = 0; j < cols_; ++j)
            s.v[static_cast<size_t>(j)] = p * s.v[static_cast<size_t>(j)] - f * row[static_cast<size_t>(j)];
        if (track_) {
            for (size_t t = 0; t < s.combo.size(); ++t) s.combo[t] = p * s.combo[t] - f * combo[t];
            strip_content(s.v, &s.combo);
        } else {
            strip_content(s.v, nullptr);
        }
    }
    Row nr{pivot, std::move(row), std::move(combo)};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), nr.pivot,
                                [](const Row& r, int p) { return r.pivot < p; });
    rows_.insert(pos, std::move(nr));
    res.extended = true;
    return res;
}

std::vector<int> EchelonAccumulator::pivot_columns() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const Row& r : rows_) p.push_back(r.pivot);
    return p;
}

Mat EchelonAccumulator::echelon() const {
    Mat m(spec_, rank(), cols_);
    for (size_t i = 0; i < rows_.size(); ++i) {
        Scalar inv = rows_[i].v[static_cast<size_t>(rows_[i].pivot)].inv();
        for (int j = 0; j < cols_; ++j) m.at(static_cast<int>(i), j) = rows_[i].v[static_cast<size_t>(j)] * inv;
    }
    return m;
}

Mat EchelonAccumulator::nullspace() const {
    Mat e = echelon();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (const Row& r : rows_) is_pivot[static_cast<size_t>(r.pivot)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
    Mat k(spec_, cols_, static_cast<int>(free_cols.size()));
    for (size_t fj = 0; fj < free_cols.size(); ++fj) {
        k.at(free_cols[fj], static_cast<int>(fj)) = Scalar::one(spec_);
        for (int i = 0; i < e.rows; ++i) k.at(rows_[static_cast<size_t>(i)].pivot, static_cast<int>(fj)) = -e.at(i, free_cols[fj]);
    }
    return k;
}

bool EchelonAccumulator::contains(const std::vector<Scalar>& v) const {
    std::vector<Scalar> row = v;
    for (const Row& s : rows_) {
        const Scalar f = row[static_cast<size_t>(s.pivot)];
        if (f.is_zero()) continue;
        const Scalar& p = s.v[static_cast<size_t>(s.pivot)];
        for (int j = 0; j < cols_; ++j)
            row[static_cast<size_t>(j)] = p * row[static_cast<size_t>(j)] - f * s.v[static_cast<size_t>(j)];
    }
    return std::all_of(row.begin(), row.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace modcat
