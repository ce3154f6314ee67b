#include "gradua/matrix.hpp"

#include <algorithm>
#include <cstring>
#include <map>

namespace gradua {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field() || !b.field() || !(a.field()->desc() == b.field()->desc()))
        fail(ErrorKind::FieldMismatch, "matrices over different fields");
}

uint32_t fe_residue(const Field& F, const FE& x) {
    // valid for fields without transcendentals: canonical form has constant
    // numerator and denominator
    uint32_t n = x.num.constant_value();
    uint32_t d = x.den.constant_value();
    return d == 1 ? n : F.cmul(n, F.cinv(d));
}

} // namespace

Matrix::Matrix(FieldPtr f, size_t rows, size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, f_->zero()) {}

Matrix Matrix::identity(FieldPtr f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    check_same_field(*this, rhs);
    if (cols_ != rhs.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix r(f_, rows_, rhs.cols_);
    const Field& F = *f_;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const FE& x = at(i, k);
            if (F.is_zero(x)) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                const FE& y = rhs.at(k, j);
                if (F.is_zero(y)) continue;
                r.at(i, j) = F.add(r.at(i, j), F.mul(x, y));
            }
        }
    return r;
}

Matrix Matrix::add(const Matrix& rhs) const {
    check_same_field(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(ErrorKind::DimensionMismatch, "matrix sum shape");
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], rhs.a_[i]);
    return r;
}

Matrix Matrix::sub(const Matrix& rhs) const {
    check_same_field(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(ErrorKind::DimensionMismatch, "matrix difference shape");
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], rhs.a_[i]);
    return r;
}

Matrix Matrix::scale(const FE& c) const {
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], c);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::hcat(const Matrix& rhs) const {
    check_same_field(*this, rhs);
    if (rows_ != rhs.rows_) fail(ErrorKind::DimensionMismatch, "hcat row mismatch");
    Matrix r(f_, rows_, cols_ + rhs.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (size_t j = 0; j < rhs.cols_; ++j) r.at(i, cols_ + j) = rhs.at(i, j);
    }
    return r;
}

Matrix Matrix::vcat(const Matrix& rhs) const {
    check_same_field(*this, rhs);
    if (cols_ != rhs.cols_) fail(ErrorKind::DimensionMismatch, "vcat column mismatch");
    Matrix r(f_, rows_ + rhs.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (size_t i = 0; i < rhs.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = rhs.at(i, j);
    return r;
}

std::vector<FE> Matrix::apply(const std::vector<FE>& v) const {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector shape");
    std::vector<FE> r(rows_, f_->zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!f_->is_zero(at(i, j))) r[i] = f_->add(r[i], f_->mul(at(i, j), v[j]));
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!f_->is_zero(x)) return false;
    return true;
}

bool Matrix::equals(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!f_->eq(a_[i], rhs.a_[i])) return false;
    return true;
}

namespace {

// ---------------------------------------------------------------- GF(2) path

Echelon echelon_gf2(const Matrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    const size_t words = (cols + 63) / 64;
    const Field& F = *m.field();
    std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (fe_residue(F, m.at(i, j))) a[i][j >> 6] |= (uint64_t(1) << (j & 63));

    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && !((a[p][c >> 6] >> (c & 63)) & 1)) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            if ((a[i][c >> 6] >> (c & 63)) & 1)
                for (size_t w = 0; w < words; ++w) a[i][w] ^= a[r][w];
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix rref(m.field(), rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if ((a[i][j >> 6] >> (j & 63)) & 1) rref.at(i, j) = F.one();
    return {std::move(rref), std::move(pivots)};
}

// ------------------------------------------------------------ mod-p path

Echelon echelon_modp(const Matrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    const Field& F = *m.field();
    const uint32_t p = F.p();
    std::vector<std::vector<uint32_t>> a(rows, std::vector<uint32_t>(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = fe_residue(F, m.at(i, j));

    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        uint32_t inv = F.cinv(a[r][c]);
        for (size_t j = c; j < cols; ++j) a[r][j] = F.cmul(a[r][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            uint32_t f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] = (a[i][j] + uint64_t(p - f) * a[r][j]) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix rref(m.field(), rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (a[i][j]) rref.at(i, j) = F.from_int(a[i][j]);
    return {std::move(rref), std::move(pivots)};
}

// -------------------------------------------- fraction-free symbolic path

// Clears denominators row by row, runs one-step Bareiss elimination on the
// polynomial numerators, then divides back to rational functions for the
// reduced form. Intermediate entries stay polynomial, which is what keeps
// rational-function pivots from blowing up.
Echelon echelon_bareiss(const Matrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    const Field& F = *m.field();
    std::vector<std::vector<TPoly>> a(rows, std::vector<TPoly>(cols));
    for (size_t i = 0; i < rows; ++i) {
        TPoly denprod = F.tconst(1);
        for (size_t j = 0; j < cols; ++j) denprod = F.tmul(denprod, m.at(i, j).den);
        TPoly content;
        for (size_t j = 0; j < cols; ++j) {
            const FE& x = m.at(i, j);
            a[i][j] = F.tmul(x.num, F.tdiv_exact(denprod, x.den));
            content = F.tgcd(content, a[i][j]);
        }
        if (!content.is_zero() && !(content.is_constant() && content.constant_value() == 1))
            for (size_t j = 0; j < cols; ++j)
                if (!a[i][j].is_zero()) a[i][j] = F.tdiv_exact(a[i][j], content);
    }

    std::vector<size_t> pivots;
    TPoly prev = F.tconst(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        const TPoly pivot = a[r][c];
        for (size_t i = r + 1; i < rows; ++i) {
            TPoly f = a[i][c];
            for (size_t j = c; j < cols; ++j) {
                TPoly v = F.tsub(F.tmul(a[i][j], pivot), F.tmul(f, a[r][j]));
                a[i][j] = v.is_zero() ? TPoly{} : F.tdiv_exact(v, prev);
            }
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }

    // back-substitute over the field for the reduced form
    Matrix rref(m.field(), rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (!a[i][j].is_zero()) rref.at(i, j) = F.from_tpoly(a[i][j]);
    for (size_t k = pivots.size(); k-- > 0;) {
        size_t c = pivots[k];
        FE inv = F.inv(rref.at(k, c));
        for (size_t j = c; j < cols; ++j) rref.at(k, j) = F.mul(rref.at(k, j), inv);
        for (size_t i = 0; i < k; ++i) {
            FE f = rref.at(i, c);
            if (F.is_zero(f)) continue;
            for (size_t j = c; j < cols; ++j)
                rref.at(i, j) = F.sub(rref.at(i, j), F.mul(f, rref.at(k, j)));
        }
    }
    return {std::move(rref), std::move(pivots)};
}

// ------------------------------------------------------- sparse fallback

// Row-list Gauss-Jordan with field division; used for symbolic matrices past
// the dense limit where a full Bareiss array would be wasteful.
Echelon echelon_sparse(const Matrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    const Field& F = *m.field();
    using Row = std::map<size_t, FE>;
    std::vector<Row> reduced;          // rows with distinct pivot columns
    std::vector<size_t> pivotCol;

    auto reduce_row = [&](Row& row) {
        for (size_t k = 0; k < reduced.size(); ++k) {
            auto it = row.find(pivotCol[k]);
            if (it == row.end()) continue;
            FE f = it->second;
            row.erase(it);
            for (const auto& [c, v] : reduced[k]) {
                if (c == pivotCol[k]) continue;
                auto jt = row.find(c);
                FE nv = jt == row.end() ? F.neg(F.mul(f, v)) : F.sub(jt->second, F.mul(f, v));
                if (F.is_zero(nv)) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[c] = nv;
                }
            }
        }
    };

    for (size_t i = 0; i < rows; ++i) {
        Row row;
        for (size_t j = 0; j < cols; ++j)
            if (!F.is_zero(m.at(i, j))) row[j] = m.at(i, j);
        reduce_row(row);
        if (row.empty()) continue;
        size_t pc = row.begin()->first;
        FE inv = F.inv(row.begin()->second);
        for (auto& [c, v] : row) v = F.mul(v, inv);
        // back-reduce existing rows against the new pivot
        for (size_t k = 0; k < reduced.size(); ++k) {
            auto it = reduced[k].find(pc);
            if (it == reduced[k].end()) continue;
            FE f = it->second;
            reduced[k].erase(it);
            for (const auto& [c, v] : row) {
                if (c == pc) continue;
                auto jt = reduced[k].find(c);
                FE nv = jt == reduced[k].end() ? F.neg(F.mul(f, v)) : F.sub(jt->second, F.mul(f, v));
                if (F.is_zero(nv)) {
                    if (jt != reduced[k].end()) reduced[k].erase(jt);
                } else {
                    reduced[k][c] = nv;
                }
            }
        }
        reduced.push_back(std::move(row));
        pivotCol.push_back(pc);
    }

    // order rows by pivot column
    std::vector<size_t> order(reduced.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return pivotCol[x] < pivotCol[y]; });
    Matrix rref(m.field(), rows, cols);
    std::vector<size_t> pivots;
    for (size_t k = 0; k < order.size(); ++k) {
        for (const auto& [c, v] : reduced[order[k]]) rref.at(k, c) = v;
        pivots.push_back(pivotCol[order[k]]);
    }
    return {std::move(rref), std::move(pivots)};
}

} // namespace

Echelon reduced_echelon(const Matrix& m) {
    if (!m.field()) fail(ErrorKind::FieldMismatch, "matrix without field");
    const Field& F = *m.field();
    if (F.nvars() == 0) {
        if (uint64_t(m.rows()) * m.cols() > (uint64_t(1) << 26)) return echelon_sparse(m);
        return F.p() == 2 ? echelon_gf2(m) : echelon_modp(m);
    }
    if (std::max(m.rows(), m.cols()) > kDenseLimit) return echelon_sparse(m);
    return echelon_bareiss(m);
}

RankKernel rank_kernel(const Matrix& m) {
    Echelon e = reduced_echelon(m);
    const Field& F = *m.field();
    const size_t cols = m.cols();
    std::vector<bool> isPivot(cols, false);
    for (size_t c : e.pivots) isPivot[c] = true;
    std::vector<size_t> freeCols;
    for (size_t c = 0; c < cols; ++c)
        if (!isPivot[c]) freeCols.push_back(c);

    Matrix kernel(m.field(), cols, freeCols.size());
    for (size_t k = 0; k < freeCols.size(); ++k) {
        size_t fcol = freeCols[k];
        kernel.at(fcol, k) = F.one();
        for (size_t r = 0; r < e.pivots.size(); ++r)
            kernel.at(e.pivots[r], k) = F.neg(e.rref.at(r, fcol));
    }
    return {e.pivots.size(), std::move(kernel)};
}

size_t rank_of(const Matrix& m) { return reduced_echelon(m).pivots.size(); }

std::optional<std::vector<FE>> solve_linear(const Matrix& a, const std::vector<FE>& b) {
    if (b.size() != a.rows()) fail(ErrorKind::DimensionMismatch, "solve rhs length");
    const Field& F = *a.field();
    Matrix rhs(a.field(), a.rows(), 1);
    for (size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
    Echelon e = reduced_echelon(a.hcat(rhs));
    std::vector<FE> x(a.cols(), F.zero());
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt; // pivot in rhs column
        x[e.pivots[r]] = e.rref.at(r, a.cols());
    }
    // exactness guard
    std::vector<FE> check = a.apply(x);
    for (size_t i = 0; i < b.size(); ++i)
        if (!F.eq(check[i], b[i]))
            fail(ErrorKind::DimensionMismatch, "internal: solve verification failed");
    return x;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::DimensionMismatch, "solve rhs rows");
    const Field& F = *a.field();
    Echelon e = reduced_echelon(a.hcat(b));
    Matrix x(a.field(), a.cols(), b.cols());
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols()) return std::nullopt;
        for (size_t j = 0; j < b.cols(); ++j) x.at(e.pivots[r], j) = e.rref.at(r, a.cols() + j);
    }
    if (!a.mul(x).equals(b)) return std::nullopt;
    (void)F;
    return x;
}

std::vector<size_t> column_basis(const Matrix& m) { return reduced_echelon(m).pivots; }

} // namespace gradua
