#include "dcm/matfq.hpp"

#include <string>
#include <utility>

#include "dcm/error.hpp"

namespace dcm {

namespace {

void require_field(const MatrixFq& a, const MatrixFq& b) {
    if (!a.field().same_as(b.field())) throw MismatchError("matrices over different fields");
}

void require_square(const MatrixFq& a, const char* op) {
    if (!a.is_square())
        throw MismatchError(std::string(op) + " needs a square matrix, got " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()));
}

}  // namespace

MatrixFq::MatrixFq(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixFq::MatrixFq(const Field& field, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
    : field_(&field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw MismatchError("entry count does not match matrix shape");
    for (auto v : data_)
        if (v >= field.size()) throw DomainError("matrix entry outside the field");
}

MatrixFq::MatrixFq(const Field& field, std::initializer_list<std::initializer_list<std::uint32_t>> rows)
    : field_(&field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw MismatchError("ragged matrix initializer");
        for (auto v : row) {
            if (v >= field.size()) throw DomainError("matrix entry outside the field");
            data_.push_back(v);
        }
    }
}

MatrixFq MatrixFq::identity(const Field& field, std::size_t n) {
    MatrixFq m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

void MatrixFq::set(std::size_t i, std::size_t j, const FieldElement& v) {
    if (!v.field().same_as(*field_)) throw MismatchError("entry from a different field");
    set_raw(i, j, v.bits());
}

MatrixFq MatrixFq::transpose() const {
    MatrixFq t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set_raw(j, i, raw(i, j));
    return t;
}

MatrixFq MatrixFq::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw MismatchError("block outside the matrix");
    MatrixFq b(*field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b.set_raw(i, j, raw(r0 + i, c0 + j));
    return b;
}

bool MatrixFq::is_zero() const {
    for (auto v : data_)
        if (v != 0) return false;
    return true;
}

MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b) {
    require_field(a, b);
    if (a.cols() != b.rows())
        throw MismatchError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const Field& f = a.field();
    MatrixFq c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint32_t aik = a.raw(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.set_raw(i, j, c.raw(i, j) ^ f.mul(aik, b.raw(k, j)));
        }
    return c;
}

MatrixFq mat_add(const MatrixFq& a, const MatrixFq& b) {
    require_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw MismatchError("cannot add matrices of different shapes");
    MatrixFq c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.set_raw(i, j, a.raw(i, j) ^ b.raw(i, j));
    return c;
}

MatrixFq mat_inv(const MatrixFq& a) {
    require_square(a, "inverse");
    const Field& f = a.field();
    const std::size_t n = a.rows();
    MatrixFq m = a;
    MatrixFq inv = MatrixFq::identity(f, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.raw(pivot, col) == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is not invertible");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::uint32_t t = m.raw(col, j);
                m.set_raw(col, j, m.raw(pivot, j));
                m.set_raw(pivot, j, t);
                t = inv.raw(col, j);
                inv.set_raw(col, j, inv.raw(pivot, j));
                inv.set_raw(pivot, j, t);
            }
        const std::uint32_t s = f.inv(m.raw(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            m.set_raw(col, j, f.mul(s, m.raw(col, j)));
            inv.set_raw(col, j, f.mul(s, inv.raw(col, j)));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t factor = m.raw(i, col);
            if (i == col || factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m.set_raw(i, j, m.raw(i, j) ^ f.mul(factor, m.raw(col, j)));
                inv.set_raw(i, j, inv.raw(i, j) ^ f.mul(factor, inv.raw(col, j)));
            }
        }
    }
    return inv;
}

FieldElement mat_trace(const MatrixFq& a) {
    require_square(a, "trace");
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) t ^= a.raw(i, i);
    return a.field().elem(t);
}

std::uint32_t trace_of_product(const MatrixFq& a, const MatrixFq& b) {
    require_field(a, b);
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw MismatchError("trace_of_product shape mismatch");
    const Field& f = a.field();
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t ^= f.mul(a.raw(i, k), b.raw(k, i));
    return t;
}

bool is_alternating(const MatrixFq& a) {
    require_square(a, "is_alternating");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.raw(i, i) != 0) return false;
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a.raw(i, j) != a.raw(j, i)) return false;
    }
    return true;
}

std::size_t mat_rank(const MatrixFq& a) {
    const Field& f = a.field();
    MatrixFq m = a;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.raw(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::uint32_t t = m.raw(rank, j);
            m.set_raw(rank, j, m.raw(pivot, j));
            m.set_raw(pivot, j, t);
        }
        const std::uint32_t s = f.inv(m.raw(rank, col));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            const std::uint32_t factor = f.mul(m.raw(i, col), s);
            if (factor == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j) m.set_raw(i, j, m.raw(i, j) ^ f.mul(factor, m.raw(rank, j)));
        }
        ++rank;
    }
    return rank;
}

std::size_t MatrixHash::operator()(const MatrixFq& m) const noexcept {
    std::size_t h = m.rows() * 0x9E3779B97F4A7C15ull ^ m.cols();
    for (auto v : m.data()) h = (h ^ v) * 0x100000001B3ull;
    return h;
}

}  // namespace dcm
