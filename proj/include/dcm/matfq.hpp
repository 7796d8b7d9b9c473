#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "dcm/gf2r.hpp"

namespace dcm {

/// Dense row-major matrix over F_q. Entries are element bit patterns; the
/// Field is held by non-owning pointer and must outlive the matrix.
class MatrixFq {
public:
    MatrixFq(const Field& field, std::size_t rows, std::size_t cols);
    MatrixFq(const Field& field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);
    /// Row-major nested initializer of bit patterns.
    MatrixFq(const Field& field, std::initializer_list<std::initializer_list<std::uint32_t>> rows);

    static MatrixFq identity(const Field& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const Field& field() const { return *field_; }

    std::uint32_t raw(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set_raw(std::size_t i, std::size_t j, std::uint32_t v) { data_[i * cols_ + j] = v; }
    FieldElement at(std::size_t i, std::size_t j) const { return FieldElement(*field_, raw(i, j)); }
    void set(std::size_t i, std::size_t j, const FieldElement& v);

    std::span<const std::uint32_t> data() const { return data_; }

    MatrixFq transpose() const;
    /// The nr x nc submatrix with top-left corner (r0, c0).
    MatrixFq block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    bool is_zero() const;

    friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same_as(*b.field_) &&
               a.data_ == b.data_;
    }

private:
    const Field* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b);
inline MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) { return mat_mul(a, b); }
MatrixFq mat_add(const MatrixFq& a, const MatrixFq& b);

/// Gauss-Jordan inverse; throws SingularMatrix.
MatrixFq mat_inv(const MatrixFq& a);
FieldElement mat_trace(const MatrixFq& a);
/// Trace of a*b without forming the product.
std::uint32_t trace_of_product(const MatrixFq& a, const MatrixFq& b);
/// Zero diagonal and a_ij = a_ji (characteristic-2 antisymmetry).
bool is_alternating(const MatrixFq& a);
std::size_t mat_rank(const MatrixFq& a);

struct MatrixHash {
    std::size_t operator()(const MatrixFq& m) const noexcept;
};

}  // namespace dcm
