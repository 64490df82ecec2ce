#include "qres/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

#include "qres/error.hpp"
#include "qres/rng.hpp"

namespace qres {

namespace {

struct PrimeOps {
    using T = std::uint32_t;
    std::uint64_t p;

    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(T a) const { return a == 0; }
    bool is_one(T a) const { return a == 1; }
    T add(T a, T b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        return T(s >= p ? s - p : s);
    }
    T sub(T a, T b) const { return a >= b ? a - b : T(a + p - b); }
    T mul(T a, T b) const { return T(std::uint64_t(a) * b % p); }
    T neg(T a) const { return a ? T(p - a) : 0; }
    T inv(T a) const { return inverse_mod(a, std::uint32_t(p)); }
    // x -= f * y
    void submul(T& x, T f, T y) const { x = T((x + (p - f) * std::uint64_t(y)) % p); }
    T from(const Scalar& s) const { return s.residue(); }
    Scalar to(Field f, T a) const { return Scalar(f, static_cast<long long>(a)); }
    T from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p);
        return T(r < 0 ? r + static_cast<long long>(p) : r);
    }
};

struct RationalOps {
    using T = mpq_class;

    T zero() const { return T(0); }
    T one() const { return T(1); }
    bool is_zero(const T& a) const { return sgn(a) == 0; }
    bool is_one(const T& a) const { return a == 1; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return 1 / a; }
    void submul(T& x, const T& f, const T& y) const { x -= f * y; }
    T from(const Scalar& s) const { return s.rational(); }
    Scalar to(Field f, const T& a) const { return Scalar(f, a); }
    T from_int(long long v) const { return T(static_cast<long>(v)); }
};

template <class Fn>
decltype(auto) with_ops(Field f, Fn&& fn)
{
    if (f.is_prime())
        return fn(PrimeOps{f.characteristic()});
    return fn(RationalOps{});
}

// In-place reduced row echelon form of a row-major block; pivots are only
// searched among the first pivot_cols columns.
template <class Ops>
std::vector<std::size_t> rref_kernel(const Ops& ops, std::vector<typename Ops::T>& d, std::size_t rows,
                                     std::size_t cols, std::size_t pivot_cols)
{
    using T = typename Ops::T;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> nz;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!ops.is_zero(d[i * cols + c])) {
                piv = i;
                break;
            }
        }
        if (piv == rows)
            continue;
        if (piv != r)
            std::swap_ranges(d.begin() + piv * cols, d.begin() + (piv + 1) * cols, d.begin() + r * cols);
        T* prow = &d[r * cols];
        if (!ops.is_one(prow[c])) {
            T inv = ops.inv(prow[c]);
            for (std::size_t j = c; j < cols; ++j)
                if (!ops.is_zero(prow[j]))
                    prow[j] = ops.mul(prow[j], inv);
        }
        nz.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (!ops.is_zero(prow[j]))
                nz.push_back(j);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            T* row = &d[i * cols];
            if (ops.is_zero(row[c]))
                continue;
            T f = row[c];
            for (std::size_t j : nz)
                ops.submul(row[j], f, prow[j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

struct MatrixAccess {
    template <class Ops>
    static auto& data(Matrix& m)
    {
        if constexpr (std::is_same_v<Ops, PrimeOps>)
            return m.fp_;
        else
            return m.q_;
    }
    template <class Ops>
    static const auto& data(const Matrix& m)
    {
        if constexpr (std::is_same_v<Ops, PrimeOps>)
            return m.fp_;
        else
            return m.q_;
    }
};

namespace {

template <class Ops>
auto& data(Matrix& m)
{
    return MatrixAccess::data<Ops>(m);
}

template <class Ops>
const auto& data(const Matrix& m)
{
    return MatrixAccess::data<Ops>(m);
}

void check_same_field(const Matrix& a, const Matrix& b)
{
    require(a.field() == b.field(), ErrorKind::DimensionMismatch, "matrices over different fields");
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols)
{
    if (field.is_prime())
        fp_.assign(rows * cols, 0);
    else
        q_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(Field field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long long>> rows)
{
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows.begin()->size() : 0;
    std::vector<long long> flat;
    for (const auto& row : rows) {
        require(row.size() == nc, ErrorKind::DimensionMismatch, "ragged matrix rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_rows(field, nr, nc, flat);
}

Matrix Matrix::from_rows(Field field, std::size_t rows, std::size_t cols, const std::vector<long long>& row_major)
{
    require(row_major.size() == rows * cols, ErrorKind::DimensionMismatch, "entry count does not match shape");
    Matrix m(field, rows, cols);
    with_ops(field, [&](auto ops) {
        auto& d = data<decltype(ops)>(m);
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = ops.from_int(row_major[i]);
    });
    return m;
}

Matrix Matrix::random(Field field, std::size_t rows, std::size_t cols, Rng& rng)
{
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, rng.scalar(field));
    return m;
}

Matrix Matrix::column(Field field, const std::vector<long long>& entries)
{
    return from_rows(field, entries.size(), 1, entries);
}

Matrix Matrix::unit_column(Field field, std::size_t n, std::size_t i)
{
    Matrix m(field, n, 1);
    m.set(i, 0, 1);
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const
{
    require(i < rows_ && j < cols_, ErrorKind::DimensionMismatch, "matrix index out of range");
    if (field_.is_prime())
        return Scalar(field_, static_cast<long long>(fp_[i * cols_ + j]));
    return Scalar(field_, q_[i * cols_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& value)
{
    require(i < rows_ && j < cols_, ErrorKind::DimensionMismatch, "matrix index out of range");
    require(value.field() == field_, ErrorKind::DimensionMismatch, "scalar from another field");
    if (field_.is_prime())
        fp_[i * cols_ + j] = value.residue();
    else
        q_[i * cols_ + j] = value.rational();
}

void Matrix::set(std::size_t i, std::size_t j, long long value)
{
    set(i, j, Scalar(field_, value));
}

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const
{
    if (field_.is_prime())
        return fp_[i * cols_ + j] == 0;
    return sgn(q_[i * cols_ + j]) == 0;
}

bool Matrix::is_zero() const
{
    if (field_.is_prime())
        return std::all_of(fp_.begin(), fp_.end(), [](std::uint32_t v) { return v == 0; });
    return std::all_of(q_.begin(), q_.end(), [](const mpq_class& v) { return sgn(v) == 0; });
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            bool zero = is_zero_at(i, j);
            if (i == j ? (zero || !at(i, j).is_one()) : !zero)
                return false;
        }
    return true;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fp_ == b.fp_ && a.q_ == b.q_;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    check_same_field(*this, other);
    require(cols_ == other.rows_, ErrorKind::DimensionMismatch,
            "cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    Matrix out(field_, rows_, other.cols_);
    const std::size_t n = other.cols_;
    if (field_.is_prime()) {
        const std::uint64_t p = field_.characteristic();
        const bool small = p < (1u << 16);
        std::vector<std::uint64_t> acc(n);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t a = fp_[i * cols_ + k];
                if (a == 0)
                    continue;
                const std::uint32_t* brow = &other.fp_[k * n];
                if (small) {
                    for (std::size_t j = 0; j < n; ++j)
                        acc[j] += a * brow[j];
                } else {
                    for (std::size_t j = 0; j < n; ++j)
                        acc[j] = (acc[j] + a * brow[j]) % p;
                }
            }
            for (std::size_t j = 0; j < n; ++j)
                out.fp_[i * n + j] = std::uint32_t(acc[j] % p);
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const mpq_class& a = q_[i * cols_ + k];
                if (sgn(a) == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(other.q_[k * n + j]) != 0)
                        out.q_[i * n + j] += a * other.q_[k * n + j];
            }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const
{
    Matrix out = *this;
    out += other;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& other)
{
    check_same_field(*this, other);
    require(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    with_ops(field_, [&](auto ops) {
        using Ops = decltype(ops);
        auto& a = data<Ops>(*this);
        const auto& b = data<Ops>(other);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = ops.add(a[i], b[i]);
    });
    return *this;
}

void Matrix::add_scaled(const Matrix& other, const Scalar& s)
{
    check_same_field(*this, other);
    require(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    if (s.is_zero())
        return;
    with_ops(field_, [&](auto ops) {
        using Ops = decltype(ops);
        auto& a = data<Ops>(*this);
        const auto& b = data<Ops>(other);
        auto f = ops.neg(ops.from(s));
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!ops.is_zero(b[i]))
                ops.submul(a[i], f, b[i]);
    });
}

Matrix Matrix::operator-(const Matrix& other) const
{
    Matrix out = *this;
    out.add_scaled(other, Scalar(field_, -1LL));
    return out;
}

Matrix Matrix::operator-() const
{
    return scaled(Scalar(field_, -1LL));
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix out = *this;
    with_ops(field_, [&](auto ops) {
        auto& a = data<decltype(ops)>(out);
        auto f = ops.from(s);
        for (auto& x : a)
            x = ops.mul(x, f);
    });
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(field_, cols_, rows_);
    with_ops(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& a = data<Ops>(*this);
        auto& b = data<Ops>(out);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                b[j * rows_ + i] = a[i * cols_ + j];
    });
    return out;
}

Matrix Matrix::power(std::size_t n) const
{
    require(rows_ == cols_, ErrorKind::DimensionMismatch, "power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (n) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::DimensionMismatch, "block out of range");
    Matrix out(field_, nr, nc);
    with_ops(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& a = data<Ops>(*this);
        auto& b = data<Ops>(out);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                b[i * nc + j] = a[(r0 + i) * cols_ + c0 + j];
    });
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& blk)
{
    check_same_field(*this, blk);
    require(r0 + blk.rows_ <= rows_ && c0 + blk.cols_ <= cols_, ErrorKind::DimensionMismatch, "block out of range");
    with_ops(field_, [&](auto ops) {
        using Ops = decltype(ops);
        auto& a = data<Ops>(*this);
        const auto& b = data<Ops>(blk);
        for (std::size_t i = 0; i < blk.rows_; ++i)
            for (std::size_t j = 0; j < blk.cols_; ++j)
                a[(r0 + i) * cols_ + c0 + j] = b[i * blk.cols_ + j];
    });
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const
{
    Matrix out(field_, rows_, idx.size());
    with_ops(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& a = data<Ops>(*this);
        auto& b = data<Ops>(out);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) {
                require(idx[j] < cols_, ErrorKind::DimensionMismatch, "column index out of range");
                b[i * idx.size() + j] = a[i * cols_ + idx[j]];
            }
    });
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const
{
    Matrix out(field_, idx.size(), cols_);
    with_ops(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& a = data<Ops>(*this);
        auto& b = data<Ops>(out);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            require(idx[i] < rows_, ErrorKind::DimensionMismatch, "row index out of range");
            std::copy(a.begin() + idx[i] * cols_, a.begin() + (idx[i] + 1) * cols_, b.begin() + i * cols_);
        }
    });
    return out;
}

Matrix Matrix::flatten() const
{
    Matrix out = *this;
    out.rows_ = rows_ * cols_;
    out.cols_ = 1;
    return out;
}

Matrix Matrix::unflatten(const Matrix& column, std::size_t rows, std::size_t cols, std::size_t offset)
{
    require(column.cols_ == 1 && offset + rows * cols <= column.rows_, ErrorKind::DimensionMismatch,
            "cannot unflatten vector");
    Matrix out(column.field_, rows, cols);
    with_ops(column.field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& a = data<Ops>(column);
        auto& b = data<Ops>(out);
        std::copy(a.begin() + offset, a.begin() + offset + rows * cols, b.begin());
    });
    return out;
}

Matrix Matrix::hstack(Field field, std::size_t rows, const std::vector<Matrix>& parts)
{
    std::size_t cols = 0;
    for (const auto& p : parts) {
        require(p.rows_ == rows, ErrorKind::DimensionMismatch, "hstack row mismatch");
        cols += p.cols_;
    }
    Matrix out(field, rows, cols);
    std::size_t c = 0;
    for (const auto& p : parts) {
        out.set_block(0, c, p);
        c += p.cols_;
    }
    return out;
}

Matrix Matrix::vstack(Field field, std::size_t cols, const std::vector<Matrix>& parts)
{
    std::size_t rows = 0;
    for (const auto& p : parts) {
        require(p.cols_ == cols, ErrorKind::DimensionMismatch, "vstack column mismatch");
        rows += p.rows_;
    }
    Matrix out(field, rows, cols);
    std::size_t r = 0;
    for (const auto& p : parts) {
        out.set_block(r, 0, p);
        r += p.rows_;
    }
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    return hstack(a.field_, a.rows_, {a, b});
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    return vstack(a.field_, a.cols_, {a, b});
}

Matrix Matrix::block_diagonal(Field field, const std::vector<Matrix>& parts)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        rows += p.rows_;
        cols += p.cols_;
    }
    Matrix out(field, rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
        out.set_block(r, c, p);
        r += p.rows_;
        c += p.cols_;
    }
    return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b)
{
    check_same_field(a, b);
    Matrix out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    with_ops(a.field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& x = data<Ops>(a);
        const auto& y = data<Ops>(b);
        auto& z = data<Ops>(out);
        const std::size_t oc = out.cols_;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const auto& s = x[i * a.cols_ + j];
                if (ops.is_zero(s))
                    continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        z[(i * b.rows_ + k) * oc + j * b.cols_ + l] = ops.mul(s, y[k * b.cols_ + l]);
            }
    });
    return out;
}

Matrix::Rref Matrix::rref() const
{
    Rref out{*this, {}};
    with_ops(field_, [&](auto ops) {
        out.pivots = rref_kernel(ops, data<decltype(ops)>(out.reduced), rows_, cols_, cols_);
    });
    return out;
}

std::size_t Matrix::rank() const
{
    if (empty())
        return 0;
    return rref().pivots.size();
}

bool Matrix::is_invertible() const
{
    return rows_ == cols_ && rank() == rows_;
}

std::optional<Matrix> Matrix::inverse() const
{
    require(rows_ == cols_, ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    Matrix aug = hstack(*this, identity(field_, rows_));
    std::vector<std::size_t> pivots;
    with_ops(field_, [&](auto ops) {
        pivots = rref_kernel(ops, data<decltype(ops)>(aug), aug.rows_, aug.cols_, cols_);
    });
    if (pivots.size() < rows_)
        return std::nullopt;
    return aug.block(0, cols_, rows_, rows_);
}

Matrix Matrix::kernel_basis() const
{
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c])
            free.push_back(c);
    Matrix out(field_, cols_, free.size());
    with_ops(field_, [&](auto ops) {
        using Ops = decltype(ops);
        const auto& a = data<Ops>(r);
        auto& b = data<Ops>(out);
        const std::size_t nf = free.size();
        for (std::size_t k = 0; k < nf; ++k) {
            b[free[k] * nf + k] = ops.one();
            for (std::size_t i = 0; i < pivots.size(); ++i)
                b[pivots[i] * nf + k] = ops.neg(a[i * cols_ + free[k]]);
        }
    });
    return out;
}

Matrix Matrix::image_basis() const
{
    if (empty())
        return Matrix(field_, rows_, 0);
    auto [r, pivots] = transpose().rref();
    return r.block(0, 0, pivots.size(), rows_).transpose();
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const
{
    check_same_field(*this, rhs);
    require(rhs.rows_ == rows_, ErrorKind::DimensionMismatch, "right-hand side has wrong height");
    Matrix aug = hstack(*this, rhs);
    std::vector<std::size_t> pivots;
    with_ops(field_, [&](auto ops) {
        pivots = rref_kernel(ops, data<decltype(ops)>(aug), aug.rows_, aug.cols_, cols_);
    });
    for (std::size_t i = pivots.size(); i < rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            if (!aug.is_zero_at(i, cols_ + j))
                return std::nullopt;
    Matrix x(field_, cols_, rhs.cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x.set_block(pivots[i], 0, aug.block(i, cols_, 1, rhs.cols_));
    return x;
}

std::string Matrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j ? ", " : "") << at(i, j).to_string();
        out << ']';
    }
    out << ']';
    return out.str();
}

bool column_space_contains(const Matrix& space, const Matrix& vectors)
{
    if (vectors.cols() == 0)
        return true;
    return Matrix::hstack(space, vectors).rank() == space.rank();
}

Matrix subspace_sum(const Matrix& u, const Matrix& v)
{
    return Matrix::hstack(u, v).image_basis();
}

Matrix subspace_intersection(const Matrix& u, const Matrix& v)
{
    require(u.rows() == v.rows(), ErrorKind::DimensionMismatch, "subspaces of different ambient spaces");
    if (u.cols() == 0 || v.cols() == 0)
        return Matrix(u.field(), u.rows(), 0);
    Matrix k = Matrix::hstack(u, -v).kernel_basis();
    return (u * k.block(0, 0, u.cols(), k.cols())).image_basis();
}

QuotientMap quotient_map(Field field, std::size_t n, const Matrix& u)
{
    require(u.rows() == n, ErrorKind::DimensionMismatch, "subspace basis has wrong height");
    const std::size_t k = u.cols();
    Matrix aug = Matrix::hstack(field, n, {u, Matrix::identity(field, n)});
    auto pivots = aug.rref().pivots;
    std::size_t used = 0;
    while (used < pivots.size() && pivots[used] < k)
        ++used;
    require(used == k, ErrorKind::DependentColumns, "subspace spanning set is not independent");
    std::vector<std::size_t> complement;
    for (std::size_t i = k; i < pivots.size(); ++i)
        complement.push_back(pivots[i] - k);
    Matrix s = Matrix::identity(field, n).select_columns(complement);
    Matrix t = Matrix::hstack(u, s);
    Matrix tinv = *t.inverse();
    return {tinv.block(k, 0, n - k, n), s};
}

SubspaceCoords::SubspaceCoords(const Matrix& basis) : basis_(basis)
{
    const std::size_t k = basis.cols();
    auto [r, rows] = basis.transpose().rref();
    require(rows.size() == k, ErrorKind::DependentColumns, "subspace basis is not independent");
    Matrix square = basis.select_rows(rows);
    Matrix inv = *square.inverse();
    left_inverse_ = Matrix(basis.field(), k, basis.rows());
    for (std::size_t j = 0; j < rows.size(); ++j)
        left_inverse_.set_block(0, rows[j], inv.col(j));
}

bool SubspaceCoords::contains(const Matrix& vectors) const
{
    return basis_ * coords(vectors) == vectors;
}

}  // namespace qres
