#ifndef GRADUA_MATRIX_HPP
#define GRADUA_MATRIX_HPP

#include <optional>
#include <vector>

#include "gradua/field.hpp"

namespace gradua {

/// Dense exact matrix over a Field. Row-major. Matrices above kDenseLimit in
/// either dimension are eliminated through the sparse row-list path.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, size_t rows, size_t cols);

    static Matrix identity(FieldPtr f, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    FE& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const FE& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Matrix mul(const Matrix& rhs) const;
    Matrix add(const Matrix& rhs) const;
    Matrix sub(const Matrix& rhs) const;
    Matrix scale(const FE& c) const;
    Matrix transpose() const;
    Matrix hcat(const Matrix& rhs) const;
    Matrix vcat(const Matrix& rhs) const;
    std::vector<FE> apply(const std::vector<FE>& v) const;
    bool is_zero() const;
    bool equals(const Matrix& rhs) const;

private:
    FieldPtr f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<FE> a_;
};

inline constexpr size_t kDenseLimit = 512;

struct RankKernel {
    size_t rank = 0;
    /// Kernel basis vectors as matrix columns, reduced echelon normalization.
    Matrix kernel;
};

/// Rank and kernel basis. Prime fields run plain modular elimination
/// (bit-packed for p = 2); transcendental fields clear denominators row-wise
/// and run fraction-free Bareiss elimination on the polynomial numerators,
/// dividing back to field elements only for the kernel basis.
RankKernel rank_kernel(const Matrix& m);

size_t rank_of(const Matrix& m);

/// Some solution x of a x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<FE>> solve_linear(const Matrix& a, const std::vector<FE>& b);

/// Solve a X = B column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

/// Basis of the column space as column indices of a maximal independent set.
std::vector<size_t> column_basis(const Matrix& m);

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
    Matrix rref;
    std::vector<size_t> pivots;
};
Echelon reduced_echelon(const Matrix& m);

} // namespace gradua

#endif
