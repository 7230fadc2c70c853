#include "klein4/gf2.hpp"

#include <algorithm>

namespace k4 {

BitVec::BitVec(Word b, int n) : bits(b), dim(n) {
    if (n < 0 || n > kMaxDim)
        throw std::invalid_argument("BitVec: dimension " + std::to_string(n) +
                                    " outside [0, " + std::to_string(kMaxDim) + "]");
    if (n < 32 && (b >> n) != 0)
        throw std::invalid_argument("BitVec: word has bits set at or above position " +
                                    std::to_string(n));
}

BitVec BitVec::unit(int i, int n) {
    if (i < 0 || i >= n) throw std::invalid_argument("BitVec::unit: index out of range");
    return BitVec(Word(1) << i, n);
}

BitVec BitVec::parse(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("bit-string \"" + s + "\" has length " +
                                    std::to_string(s.size()) + ", expected " + std::to_string(n));
    Word b = 0;
    for (int i = 0; i < n; ++i) {
        if (s[i] == '1')
            b |= Word(1) << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bit-string \"" + s + "\" contains characters other than 0/1");
    }
    return BitVec(b, n);
}

std::string BitVec::to_string() const {
    std::string s(static_cast<size_t>(dim), '0');
    for (int i = 0; i < dim; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

BitVec operator^(BitVec a, BitVec b) {
    if (a.dim != b.dim) throw std::invalid_argument("BitVec xor: dimension mismatch");
    return BitVec(a.bits ^ b.bits, a.dim);
}

int parity_dot(BitVec u, BitVec v) {
    if (u.dim != v.dim) throw std::invalid_argument("parity_dot: dimension mismatch");
    return std::popcount(u.bits & v.bits) & 1;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows) {
    BitMatrix m;
    m.cols = rows.empty() ? 0 : rows.front().dim;
    for (const BitVec& r : rows)
        if (r.dim != m.cols)
            throw std::invalid_argument("BitMatrix: rows of unequal dimension");
    m.rows = std::move(rows);
    return m;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m;
    m.cols = n;
    m.rows.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) m.rows.push_back(BitVec::unit(i, n));
    return m;
}

BitMatrix BitMatrix::zero(int rows, int cols) {
    BitMatrix m;
    m.cols = cols;
    m.rows.assign(static_cast<size_t>(rows), BitVec::zero(cols));
    return m;
}

BitVec mat_vec(const BitMatrix& m, BitVec v) {
    if (v.dim != m.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
    Word out = 0;
    for (int k = 0; k < m.row_count(); ++k)
        out |= static_cast<Word>(parity_dot(m.rows[static_cast<size_t>(k)], v)) << k;
    return BitVec(out, m.row_count());
}

namespace {

// Row echelon form in place; returns pivot column per reduced row (-1 = zero row).
std::vector<int> echelon(std::vector<Word>& rows, int cols) {
    std::vector<int> pivot_of_row(rows.size(), -1);
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && ((rows[p] >> c) & 1u) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (size_t q = 0; q < rows.size(); ++q)
            if (q != r && ((rows[q] >> c) & 1u)) rows[q] ^= rows[r];
        pivot_of_row[r] = c;
        ++r;
    }
    return pivot_of_row;
}

}  // namespace

int rank(const BitMatrix& m) {
    std::vector<Word> rows;
    rows.reserve(m.rows.size());
    for (const BitVec& v : m.rows) rows.push_back(v.bits);
    auto pivots = echelon(rows, m.cols);
    int r = 0;
    for (int p : pivots)
        if (p >= 0) ++r;
    return r;
}

std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    std::vector<Word> rows;
    rows.reserve(m.rows.size());
    for (const BitVec& v : m.rows) rows.push_back(v.bits);
    auto pivots = echelon(rows, m.cols);

    std::vector<int> pivot_row_of_col(static_cast<size_t>(m.cols), -1);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= 0) pivot_row_of_col[static_cast<size_t>(pivots[r])] = static_cast<int>(r);

    // One kernel vector per free column: set it, then solve the pivot rows.
    std::vector<BitVec> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (pivot_row_of_col[static_cast<size_t>(c)] >= 0) continue;
        Word v = Word(1) << c;
        for (int d = 0; d < m.cols; ++d) {
            int pr = pivot_row_of_col[static_cast<size_t>(d)];
            if (pr >= 0 && ((rows[static_cast<size_t>(pr)] >> c) & 1u)) v |= Word(1) << d;
        }
        basis.push_back(BitVec(v, m.cols));
    }
    return basis;
}

std::optional<BitVec> solve(const BitMatrix& m, BitVec y) {
    if (y.dim != m.row_count()) throw std::invalid_argument("solve: rhs dimension mismatch");
    // Eliminate on [M | y] with y carried in a parallel column.
    std::vector<Word> rows;
    std::vector<int> rhs(m.rows.size());
    rows.reserve(m.rows.size());
    for (size_t i = 0; i < m.rows.size(); ++i) {
        rows.push_back(m.rows[i].bits);
        rhs[i] = y.bit(static_cast<int>(i));
    }

    std::vector<int> pivot_of_row(rows.size(), -1);
    size_t r = 0;
    for (int c = 0; c < m.cols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && ((rows[p] >> c) & 1u) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        std::swap(rhs[r], rhs[p]);
        for (size_t q = 0; q < rows.size(); ++q)
            if (q != r && ((rows[q] >> c) & 1u)) {
                rows[q] ^= rows[r];
                rhs[q] ^= rhs[r];
            }
        pivot_of_row[r] = c;
        ++r;
    }
    Word x = 0;
    for (size_t q = 0; q < rows.size(); ++q) {
        if (pivot_of_row[q] >= 0) {
            if (rhs[q]) x |= Word(1) << pivot_of_row[q];
        } else if (rhs[q]) {
            return std::nullopt;  // zero row with nonzero rhs
        }
    }
    return BitVec(x, m.cols);
}

}  // namespace k4
