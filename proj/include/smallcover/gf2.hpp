/*
 * gf2.hpp: dense linear algebra over GF(2).
 *
 * Vectors pack 64 coordinates per machine word.  Everything is plain
 * Gaussian elimination; subspaces are kept in reduced echelon form with
 * one pivot per stored row, which makes coset representatives canonical.
 */
#ifndef SMALLCOVER_GF2_HPP
#define SMALLCOVER_GF2_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallcover::gf2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static BitVector unit(std::size_t n, std::size_t i) {
        BitVector v(n);
        v.set(i);
        return v;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool b = true) {
        if (b)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    // index of the lowest / highest set coordinate, -1 when zero
    int lowest_set() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(64 * k + std::countr_zero(words_[k]));
        return -1;
    }

    int highest_set() const {
        for (std::size_t k = words_.size(); k-- > 0;)
            if (words_[k]) return int(64 * k + 63 - std::countl_zero(words_[k]));
        return -1;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.size_ != size_) throw std::invalid_argument("gf2: vector length mismatch");
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    // parity of the standard pairing <a,b>
    bool dot(const BitVector& o) const {
        if (o.size_ != size_) throw std::invalid_argument("gf2: vector length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
        return std::popcount(acc) & 1u;
    }

    bool operator==(const BitVector&) const = default;

    // value order: the vector read as a binary number, coordinate i worth 2^i
    bool operator<(const BitVector& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        for (std::size_t k = words_.size(); k-- > 0;)
            if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
        return false;
    }

    std::string to_string() const {  // coordinate 0 first: "0110"
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c) : cols_(c), row_(r, BitVector(c)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols) {
        BitMatrix m;
        m.cols_ = cols;
        for (auto& r : rows)
            if (r.size() != cols) throw std::invalid_argument("gf2: ragged rows");
        m.row_ = std::move(rows);
        return m;
    }

    std::size_t rows() const { return row_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool b = true) { row_[r].set(c, b); }

    const BitVector& row(std::size_t r) const { return row_[r]; }
    BitVector& row(std::size_t r) { return row_[r]; }

    void append_row(BitVector v) {
        if (v.size() != cols_) throw std::invalid_argument("gf2: row length mismatch");
        row_.push_back(std::move(v));
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows());
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (row_[r].test(c)) t.set(c, r, true);
        return t;
    }

    // M x over GF(2); x has length cols()
    BitVector mul(const BitVector& x) const {
        BitVector y(rows());
        for (std::size_t r = 0; r < rows(); ++r)
            if (row_[r].dot(x)) y.set(r);
        return y;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> row_;
};

// Which end of a row becomes its pivot.  `low` is the usual left-to-right
// elimination; `high` pivots on the highest coordinate, so canonical coset
// representatives keep their support on low-index coordinates.
enum class Pivot { low, high };

class Echelon {
public:
    explicit Echelon(std::size_t width, Pivot side = Pivot::low) : width_(width), side_(side) {}

    // Inserts a vector into the spanned subspace; returns true if the rank grew.
    bool insert(BitVector v) {
        if (v.size() != width_) throw std::invalid_argument("gf2: width mismatch");
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        int p = side_ == Pivot::low ? v.lowest_set() : v.highest_set();
        for (auto& r : rows_)
            if (r.test(std::size_t(p))) r ^= v;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        auto idx = it - pivots_.begin();
        pivots_.insert(it, p);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

    // Canonical representative of v modulo the subspace: the unique coset
    // member vanishing on every pivot column.
    BitVector reduce(BitVector v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.test(std::size_t(pivots_[i]))) v ^= rows_[i];
        return v;
    }

    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<BitVector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }  // ascending

    std::vector<int> free_columns() const {
        std::vector<int> free;
        std::size_t i = 0;
        for (int c = 0; c < int(width_); ++c) {
            if (i < pivots_.size() && pivots_[i] == c)
                ++i;
            else
                free.push_back(c);
        }
        return free;
    }

private:
    std::size_t width_;
    Pivot side_;
    std::vector<BitVector> rows_;  // reduced echelon, sorted by pivot
    std::vector<int> pivots_;
};

inline Echelon row_echelon(const BitMatrix& m, Pivot side = Pivot::low) {
    Echelon e(m.cols(), side);
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return e;
}

inline std::size_t rank(const BitMatrix& m) { return row_echelon(m).rank(); }

inline bool in_rowspace(const BitMatrix& m, const BitVector& v) {
    return row_echelon(m).contains(v);
}

// Basis of { x : M x = 0 }, one vector per free column in ascending column
// order (each has a 1 at its free column and support otherwise on pivots).
inline std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    Echelon e = row_echelon(m);
    std::vector<BitVector> basis;
    for (int f : e.free_columns()) {
        BitVector v = BitVector::unit(m.cols(), std::size_t(f));
        for (std::size_t i = 0; i < e.rows().size(); ++i)
            if (e.rows()[i].test(std::size_t(f))) v.set(std::size_t(e.pivots()[i]));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves M x = b.  Returns the canonical solution (reduced echelon form,
// free variables set to 0), or nullopt when the system is inconsistent.
inline std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("gf2: rhs length mismatch");
    const std::size_t w = m.cols() + 1;
    Echelon e(w, Pivot::low);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector aug(w);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(c);
        if (b.test(r)) aug.set(m.cols());
        e.insert(std::move(aug));
    }
    BitVector x(m.cols());
    for (std::size_t i = 0; i < e.rows().size(); ++i) {
        if (std::size_t(e.pivots()[i]) == m.cols()) return std::nullopt;
        if (e.rows()[i].test(m.cols())) x.set(std::size_t(e.pivots()[i]));
    }
    return x;
}

}  // namespace smallcover::gf2

#endif
