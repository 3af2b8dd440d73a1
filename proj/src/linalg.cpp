#include "monring/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace monring {

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t reduce_mod(int v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
}

void check_prime_size(std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 31))
        throw Error(ErrorKind::CapExceeded, "prime fields limited to p < 2^31");
}

// Generic sparse column reduction: repeatedly cancel the lowest (maximum
// row index) entry of the incoming column against the stored pivot column
// for that row; a column that survives becomes a new pivot, normalized to
// pivot value 1. The maximum row strictly decreases, so reduction
// terminates, and the number of pivots is the rank.
template <typename Val, typename Ops>
long sparse_rank(const SparseIntMatrix& m, const Ops& ops) {
    using Col = std::vector<std::pair<int, Val>>;
    std::vector<int> pivot_of_row(static_cast<std::size_t>(m.rows), -1);
    std::vector<Col> stored;
    Col cur, merged;
    for (const auto& raw : m.cols) {
        cur.clear();
        for (const auto& [r, v] : raw) {
            Val x = ops.from_int(v);
            if (!ops.is_zero(x)) cur.emplace_back(r, x);
        }
        while (!cur.empty()) {
            int low = cur.back().first;
            int pi = pivot_of_row[static_cast<std::size_t>(low)];
            if (pi < 0) {
                // normalize so the pivot entry is 1
                Val inv = ops.invert(cur.back().second);
                for (auto& [r, v] : cur) v = ops.mul(v, inv);
                pivot_of_row[static_cast<std::size_t>(low)] =
                    static_cast<int>(stored.size());
                stored.push_back(cur);
                break;
            }
            const Col& piv = stored[static_cast<std::size_t>(pi)];
            Val factor = cur.back().second;
            // merged = cur - factor * piv ; the pivot row cancels exactly
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < piv.size()) {
                if (j == piv.size() || (i < cur.size() && cur[i].first < piv[j].first)) {
                    merged.push_back(cur[i++]);
                } else if (i == cur.size() || piv[j].first < cur[i].first) {
                    Val x = ops.neg(ops.mul(factor, piv[j].second));
                    if (!ops.is_zero(x)) merged.emplace_back(piv[j].first, x);
                    ++j;
                } else {
                    Val x = ops.sub(cur[i].second, ops.mul(factor, piv[j].second));
                    if (!ops.is_zero(x)) merged.emplace_back(cur[i].first, x);
                    ++i;
                    ++j;
                }
            }
            cur.swap(merged);
        }
    }
    return static_cast<long>(stored.size());
}

struct RationalOps {
    using Val = mpq_class;
    Val from_int(int v) const { return mpq_class(v); }
    bool is_zero(const Val& v) const { return sgn(v) == 0; }
    Val invert(const Val& v) const { return 1 / v; }
    Val mul(const Val& a, const Val& b) const { return a * b; }
    Val sub(const Val& a, const Val& b) const { return a - b; }
    Val neg(const Val& a) const { return -a; }
};

struct PrimeOps {
    std::uint64_t p;
    using Val = std::uint64_t;
    Val from_int(int v) const { return reduce_mod(v, p); }
    bool is_zero(Val v) const { return v == 0; }
    Val invert(Val v) const { return mod_inv(v, p); }
    Val mul(Val a, Val b) const { return a * b % p; }
    Val sub(Val a, Val b) const { return (a + p - b) % p; }
    Val neg(Val a) const { return a == 0 ? 0 : p - a; }
};

long dense_rank_gf(const DenseIntMatrix& m, std::uint64_t p) {
    check_prime_size(p);
    std::vector<std::vector<std::uint64_t>> a(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        a[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.cols));
        for (int j = 0; j < m.cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                reduce_mod(m.at(i, j), p);
    }
    long r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = -1;
        for (int i = static_cast<int>(r); i < m.rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
        std::uint64_t inv =
            mod_inv(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], p);
        for (int j = col; j < m.cols; ++j)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv % p;
        for (int i = 0; i < m.rows; ++i) {
            if (i == static_cast<int>(r)) continue;
            std::uint64_t f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (!f) continue;
            for (int j = col; j < m.cols; ++j) {
                auto& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                x = (x + (p - f) * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) % p;
            }
        }
        ++r;
    }
    return r;
}

} // namespace

long rank_bareiss(const DenseIntMatrix& m) {
    DenseIntMatrix a = m;
    int rows = a.rows, cols = a.cols;
    mpz_class prev = 1;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // pivot: smallest absolute value in the column at or below row r
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (a.at(i, col) == 0) continue;
            if (piv < 0 || mpz_cmpabs(a.at(i, col).get_mpz_t(), a.at(piv, col).get_mpz_t()) < 0)
                piv = i;
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        const mpz_class pivot = a.at(r, col);
        for (int i = r + 1; i < rows; ++i) {
            const mpz_class lead = a.at(i, col);
            for (int j = col; j < cols; ++j) {
                mpz_class v = a.at(i, j) * pivot - lead * a.at(r, j);
                MONRING_ASSERT(v % prev == 0, "Bareiss divisibility");
                a.at(i, j) = v / prev;
            }
        }
        prev = pivot;
        ++r;
    }
    return r;
}

long rank(const DenseIntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (field.is_rational()) return rank_bareiss(m);
    return dense_rank_gf(m, field.prime());
}

long rank(const SparseIntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols.empty()) return 0;
    if (field.is_rational()) return sparse_rank<mpq_class>(m, RationalOps{});
    check_prime_size(field.prime());
    return sparse_rank<std::uint64_t>(m, PrimeOps{field.prime()});
}

std::vector<mpz_class> smith_normal_form(DenseIntMatrix m) {
    int rows = m.rows, cols = m.cols;
    std::vector<mpz_class> diag;
    int t = 0;
    while (t < rows && t < cols) {
        // locate the smallest nonzero |entry| in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m.at(i, j) == 0) continue;
                if (pi < 0 ||
                    mpz_cmpabs(m.at(i, j).get_mpz_t(), m.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pi, j), m.at(t, j));
        if (pj != t)
            for (int i = 0; i < rows; ++i) std::swap(m.at(i, pj), m.at(i, t));

        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (m.at(i, t) == 0) continue;
            mpz_class q = m.at(i, t) / m.at(t, t); // truncated division
            if (q != 0)
                for (int j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < cols; ++j) {
            if (m.at(t, j) == 0) continue;
            mpz_class q = m.at(t, j) / m.at(t, t);
            if (q != 0)
                for (int i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // smaller remainders appeared; pick a new pivot

        // divisibility fix-up: pivot must divide the rest of the block
        bool divides_all = true;
        for (int i = t + 1; i < rows && divides_all; ++i)
            for (int j = t + 1; j < cols && divides_all; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    for (int jj = t; jj < cols; ++jj) m.at(t, jj) += m.at(i, jj);
                    divides_all = false;
                }
        if (!divides_all) continue;

        diag.push_back(abs(m.at(t, t)));
        ++t;
    }
    return diag;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    MONRING_ASSERT(a.col_count() == b.rows, "dimension mismatch in multiply");
    SparseIntMatrix out;
    out.rows = a.rows;
    out.cols.resize(b.cols.size());
    std::vector<long long> acc(static_cast<std::size_t>(a.rows));
    for (std::size_t j = 0; j < b.cols.size(); ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [k, vb] : b.cols[j])
            for (const auto& [i, va] : a.cols[static_cast<std::size_t>(k)])
                acc[static_cast<std::size_t>(i)] += static_cast<long long>(va) * vb;
        for (int i = 0; i < a.rows; ++i)
            if (acc[static_cast<std::size_t>(i)] != 0)
                out.cols[j].emplace_back(i, static_cast<int>(acc[static_cast<std::size_t>(i)]));
    }
    return out;
}

DenseIntMatrix to_dense(const SparseIntMatrix& m) {
    DenseIntMatrix d(m.rows, m.col_count());
    for (int j = 0; j < m.col_count(); ++j)
        for (const auto& [i, v] : m.cols[static_cast<std::size_t>(j)]) d.at(i, j) = v;
    return d;
}

} // namespace monring
