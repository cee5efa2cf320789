#ifndef DETFSING_DETERMINANTAL_HPP
#define DETFSING_DETERMINANTAL_HPP

// Generic matrices, minor ideals, the divisor ideal, the splitting
// polynomial, gamma minors, Sylvester instances, auxiliary pairs and the
// entry reductions between them.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "detfsing/ideals.hpp"
#include "detfsing/kernel.hpp"

namespace detfsing {

struct DeterminantalSpec {
    unsigned m = 0, n = 0, t = 0;

    void validate() const {
        if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
        if (t < 1 || t > m || t > n) throw std::invalid_argument("t must satisfy 1 <= t <= min(m, n)");
    }
    std::string describe() const {
        return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(t) + ")";
    }
    bool operator==(const DeterminantalSpec&) const = default;
};

/// Variables block[i,j] for i in 1..rows, j in 1..cols, row-major.
inline std::vector<Variable> block_variables(Block b, std::size_t rows, std::size_t cols) {
    std::vector<Variable> vars;
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) vars.push_back({b, static_cast<int>(i), static_cast<int>(j)});
    return vars;
}

/// The matrix of the variables block[i,j] of an existing ring.
inline PolyMatrix variable_matrix(const Ring& R, Block b, std::size_t rows, std::size_t cols) {
    PolyMatrix M(R, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            M(i, j) = Polynomial::variable(R, Variable{b, static_cast<int>(i + 1), static_cast<int>(j + 1)});
    return M;
}

/// m x n matrix of indeterminates x[i,j] in a fresh ring.
inline PolyMatrix generic_matrix(unsigned m, unsigned n, std::uint32_t p, TermOrder order = TermOrder::grevlex()) {
    if (m < 1 || n < 1) throw std::invalid_argument("generic_matrix: dimensions must be positive");
    Ring R = RingContext::make(block_variables(Block::x, m, n), p, order);
    return variable_matrix(R, Block::x, m, n);
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/// All t x t minors, rows and columns in lexicographic order. t = 0 gives {1}.
inline std::vector<Polynomial> minors(const PolyMatrix& M, unsigned t) {
    if (t > M.rows() || t > M.cols()) throw std::invalid_argument("minors: t exceeds the matrix size");
    std::vector<Polynomial> out;
    if (t == 0) {
        out.push_back(Polynomial::constant(M.ring(), 1));
        return out;
    }
    auto rs = combinations(M.rows(), t), cs = combinations(M.cols(), t);
    for (const auto& r : rs)
        for (const auto& c : cs) out.push_back(det(M.submatrix(r, c)));
    return out;
}

inline Ideal minors_ideal(const PolyMatrix& M, unsigned t) {
    if (t < 1) throw std::invalid_argument("minors_ideal: t must be positive");
    return Ideal(M.ring(), minors(M, t));
}

/// The preimage in S of the divisor ideal: I_{t-1}(first t-1 rows) + I_t(M).
inline Ideal divisor_ideal(const PolyMatrix& M, unsigned t) {
    if (t < 2) throw std::invalid_argument("divisor_ideal: requires t >= 2");
    auto gens = minors(M.block(0, t - 1, 0, M.cols()), t - 1);
    auto top = minors(M, t);
    gens.insert(gens.end(), top.begin(), top.end());
    return Ideal(M.ring(), std::move(gens));
}

/// Everything attached to one (m,n,t): the ring, the matrix, the
/// presentation ideal I_t and (for t >= 2) the divisor preimage.
struct Determinantal {
    DeterminantalSpec spec;
    PolyMatrix x;
    Ideal presentation;
    Ideal divisor;  // zero ideal when t = 1

    const Ring& ring() const noexcept { return x.ring(); }
};

inline Determinantal determinantal(DeterminantalSpec spec, std::uint32_t p, TermOrder order = TermOrder::grevlex()) {
    spec.validate();
    PolyMatrix x = generic_matrix(spec.m, spec.n, p, order);
    Ideal pres = minors_ideal(x, spec.t);
    Ideal div = spec.t >= 2 ? divisor_ideal(x, spec.t) : Ideal::zero(x.ring());
    return {spec, x, pres, div};
}

/// One named factor of the splitting polynomial.
struct DeltaFactor {
    std::string name;  // alpha_i, delta_i or beta_i
    Polynomial value;
};

/// The diagonal minors whose product is Delta: alpha_1..alpha_{mu-1} (lower
/// left corners), delta_1..delta_{|n-m|+1} (maximal minors along the main
/// diagonal band) and beta_{mu-1}..beta_1 (upper right corners).
inline std::vector<DeltaFactor> delta_factors(const PolyMatrix& X) {
    const std::size_t m = X.rows(), n = X.cols(), mu = std::min(m, n);
    std::vector<DeltaFactor> out;
    for (std::size_t i = 1; i < mu; ++i) out.push_back({"alpha_" + std::to_string(i), det(X.block(m - i, i, 0, i))});
    if (m <= n) {
        for (std::size_t i = 1; i <= n - m + 1; ++i)
            out.push_back({"delta_" + std::to_string(i), det(X.block(0, m, i - 1, m))});
    } else {
        for (std::size_t i = m - n + 1; i >= 1; --i)
            out.push_back({"delta_" + std::to_string(m - n + 2 - i), det(X.block(i - 1, n, 0, n))});
    }
    for (std::size_t i = mu - 1; i >= 1; --i)
        out.push_back({"beta_" + std::to_string(i), det(X.block(0, i, n - i, i))});
    return out;
}

inline Polynomial splitting_delta(const PolyMatrix& X) {
    Polynomial d = Polynomial::constant(X.ring(), 1);
    for (const auto& f : delta_factors(X)) d *= f.value;
    return d;
}

/// beta_i: rows 1..i against the last i columns; beta_0 = 1.
inline Polynomial beta_minor(const PolyMatrix& X, std::size_t i) {
    if (i > X.rows() || i > X.cols()) throw std::invalid_argument("beta_minor: index out of range");
    if (i == 0) return Polynomial::constant(X.ring(), 1);
    return det(X.block(0, i, X.cols() - i, i));
}

/// gamma_i = det(column i | last r-1 columns) for i = 1..n-r+1.
inline std::vector<Polynomial> gamma_minors(const PolyMatrix& M) {
    const std::size_t r = M.rows(), n = M.cols();
    if (r > n) throw std::invalid_argument("gamma_minors: more rows than columns");
    std::vector<Polynomial> out;
    std::vector<std::size_t> rows(r);
    std::iota(rows.begin(), rows.end(), 0);
    for (std::size_t i = 0; i < n - r + 1; ++i) {
        std::vector<std::size_t> cols{i};
        for (std::size_t j = n - r + 1; j < n; ++j) cols.push_back(j);
        out.push_back(det(M.submatrix(rows, cols)));
    }
    return out;
}

struct SylvesterInstance {
    Polynomial lhs;  // beta_{t-2}^k beta_{t+k-1}
    Polynomial rhs;  // det Gamma_k
    int sign = 0;    // lhs = sign * rhs; 0 when neither sign works
    PolyMatrix gamma;
};

/// Gamma_k: the (k+1) x (k+1) matrix of (t-1)-minors bordering the
/// beta_{t-2} block. Entry (a,b) uses rows 1..t-2 plus row t-1+a and
/// columns n-t-k+2+b plus the last t-2 columns; row 0 is gamma_{h-k}..gamma_h
/// of the first t-1 rows.
inline SylvesterInstance sylvester_instance(const PolyMatrix& X, unsigned t, unsigned k) {
    const std::size_t m = X.rows(), n = X.cols();
    if (t < 2) throw std::invalid_argument("sylvester_instance: requires t >= 2");
    if (t + k - 1 > std::min(m, n)) throw std::invalid_argument("sylvester_instance: t + k - 1 exceeds min(m, n)");
    const std::size_t pivot = t - 2;
    std::vector<std::size_t> fixed_rows(pivot), fixed_cols;
    std::iota(fixed_rows.begin(), fixed_rows.end(), 0);
    for (std::size_t j = n - pivot; j < n; ++j) fixed_cols.push_back(j);
    PolyMatrix G(X.ring(), k + 1, k + 1);
    for (std::size_t a = 0; a <= k; ++a) {
        for (std::size_t b = 0; b <= k; ++b) {
            auto rows = fixed_rows;
            rows.push_back(t - 2 + a);
            std::vector<std::size_t> cols{n - t - k + 1 + b};
            cols.insert(cols.end(), fixed_cols.begin(), fixed_cols.end());
            G(a, b) = det(X.submatrix(rows, cols));
        }
    }
    SylvesterInstance out{beta_minor(X, pivot).pow(k) * beta_minor(X, t + k - 1), det(G), 0, G};
    if (out.lhs == out.rhs)
        out.sign = 1;
    else if (out.lhs == -out.rhs)
        out.sign = -1;
    return out;
}

/// The pair (m,t,s): an m x (m+1) matrix x = [x'; w] with x' the first s
/// rows, bordered by k = s-t+1 extra columns z next to x'. Presentation
/// I_t(x), divisor I_s(x' | z).
struct AuxiliaryPair {
    unsigned m = 0, t = 0, s = 0, n = 0, k = 0;
    Ring ring;
    PolyMatrix xprime, w, z;
    Ideal presentation;
    Ideal divisor;

    /// x = x' stacked over w.
    PolyMatrix x() const { return xprime.above(w); }
    /// divisor + presentation, the preimage of the divisor in S[z].
    Ideal divisor_preimage() const { return sum(divisor, presentation); }
    std::string describe() const {
        return "(" + std::to_string(m) + "," + std::to_string(t) + "," + std::to_string(s) + ")";
    }
};

inline void validate_pair(unsigned m, unsigned t, unsigned s) {
    if (t < 1 || s < 1) throw std::invalid_argument("auxiliary_pair: t and s must be positive");
    if (m < s || m < t) throw std::invalid_argument("auxiliary_pair: requires m >= s and m >= t");
    if (s + 1 < t) throw std::invalid_argument("auxiliary_pair: requires s >= t - 1");
}

/// Builds the pair in a fresh ring.
inline AuxiliaryPair auxiliary_pair(unsigned m, unsigned t, unsigned s, std::uint32_t p,
                                    TermOrder order = TermOrder::grevlex()) {
    validate_pair(m, t, s);
    AuxiliaryPair P;
    P.m = m, P.t = t, P.s = s, P.n = m + 1, P.k = s + 1 - t;
    auto vars = block_variables(Block::xprime, s, P.n);
    auto wv = block_variables(Block::w, m - s, P.n);
    auto zv = block_variables(Block::z, s, P.k);
    vars.insert(vars.end(), wv.begin(), wv.end());
    vars.insert(vars.end(), zv.begin(), zv.end());
    P.ring = RingContext::make(std::move(vars), p, order);
    P.xprime = variable_matrix(P.ring, Block::xprime, s, P.n);
    P.w = variable_matrix(P.ring, Block::w, m - s, P.n);
    P.z = variable_matrix(P.ring, Block::z, s, P.k);
    P.presentation = minors_ideal(P.x(), t);
    P.divisor = minors_ideal(P.xprime.beside(P.z), s);
    return P;
}

enum class ReductionCase { w_entry, z_entry, xprime_entry };

inline std::string case_name(ReductionCase c) {
    switch (c) {
        case ReductionCase::w_entry: return "w";
        case ReductionCase::z_entry: return "z";
        case ReductionCase::xprime_entry: return "xprime";
    }
    return "?";
}

/// One entry reduction: the source pair with the pivot set to 1, the target
/// pair, and the images of every target variable in the substituted source
/// ring (the rank-one updated entries).
struct ReductionCertificate {
    ReductionCase kind;
    std::size_t row = 0, col = 0;  // 1-based position inside the block
    AuxiliaryPair source;
    AuxiliaryPair target;
    Ring reduced_ring;                 // source ring without the pivot variable
    std::vector<Polynomial> images;    // target variable -> reduced_ring
    std::vector<std::string> updates;  // "target var = image", for reports

    /// Source ideal with the pivot set to 1, in reduced_ring.
    Ideal specialize(const Ideal& I) const {
        std::vector<Polynomial> gens;
        for (const auto& g : I.gens()) gens.push_back(substitute(g, reduced_ring, pivot_images()));
        return Ideal(reduced_ring, std::move(gens));
    }
    /// Target ideal pushed through the rank-one update, in reduced_ring.
    Ideal transport(const Ideal& J) const {
        std::vector<Polynomial> gens;
        for (const auto& g : J.gens()) gens.push_back(substitute(g, reduced_ring, images));
        return Ideal(reduced_ring, std::move(gens));
    }
    /// Images of the source variables: the pivot goes to 1, the rest to
    /// themselves.
    std::vector<Polynomial> pivot_images() const {
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < source.ring->nvars(); ++i) {
            const Variable& v = source.ring->var(i);
            if (auto j = reduced_ring->find(v))
                out.push_back(Polynomial::variable(reduced_ring, *j));
            else
                out.push_back(Polynomial::constant(reduced_ring, 1));
        }
        return out;
    }
};

inline ReductionCertificate reduce_at_entry(const AuxiliaryPair& P, ReductionCase kind, std::size_t row,
                                            std::size_t col) {
    const std::uint32_t p = P.ring->p();
    Block pivot_block = Block::w;
    std::size_t rows = 0, cols = 0;
    switch (kind) {
        case ReductionCase::w_entry:
            pivot_block = Block::w, rows = P.m - P.s, cols = P.n;
            if (P.t < 2) throw PreconditionViolated("w-entry reduction needs t >= 2");
            break;
        case ReductionCase::z_entry:
            pivot_block = Block::z, rows = P.s, cols = P.k;
            if (P.s < 2) throw PreconditionViolated("z-entry reduction needs s >= 2");
            break;
        case ReductionCase::xprime_entry:
            pivot_block = Block::xprime, rows = P.s, cols = P.n;
            if (P.t < 2 || P.s < 2) throw PreconditionViolated("xprime-entry reduction needs t >= 2 and s >= 2");
            break;
    }
    if (rows == 0 || cols == 0) throw PreconditionViolated("reduction at an entry of an empty block");
    if (row < 1 || row > rows || col < 1 || col > cols) throw std::out_of_range("reduction entry out of range");

    ReductionCertificate C{kind, row, col, P, {}, {}, {}, {}};
    const Variable pivot{pivot_block, static_cast<int>(row), static_cast<int>(col)};
    C.reduced_ring = P.ring->without({*P.ring->find(pivot)});
    const Ring& R0 = C.reduced_ring;
    auto sub = [&](const PolyMatrix& M) { return M.mapped(R0, C.pivot_images()); };
    PolyMatrix xp = sub(P.xprime), w = sub(P.w), z = sub(P.z);
    const std::size_t i0 = row - 1, j0 = col - 1;

    auto drop = [](std::size_t count, std::size_t skip) {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < count; ++i)
            if (i != skip) v.push_back(i);
        return v;
    };
    auto all = [](std::size_t count) {
        std::vector<std::size_t> v(count);
        std::iota(v.begin(), v.end(), 0);
        return v;
    };

    // New blocks, as matrices over R0, in target layout.
    PolyMatrix txp(R0, 0, 0), tw(R0, 0, 0), tz(R0, 0, 0);
    switch (kind) {
        case ReductionCase::w_entry: {
            // Clear row i0 of w and column j0: y_ij -> y_ij - y_{i,j0} w_{i0,j}.
            C.target = auxiliary_pair(P.m - 1, P.t - 1, P.s, p);
            auto cs = drop(P.n, j0);
            txp = PolyMatrix(R0, P.s, P.n - 1);
            for (std::size_t i = 0; i < P.s; ++i)
                for (std::size_t b = 0; b < cs.size(); ++b) txp(i, b) = xp(i, cs[b]) - xp(i, j0) * w(i0, cs[b]);
            auto ws = drop(P.m - P.s, i0);
            tw = PolyMatrix(R0, ws.size(), P.n - 1);
            for (std::size_t a = 0; a < ws.size(); ++a)
                for (std::size_t b = 0; b < cs.size(); ++b)
                    tw(a, b) = w(ws[a], cs[b]) - w(ws[a], j0) * w(i0, cs[b]);
            // The cleared column of x' becomes the first column of z.
            tz = xp.submatrix(all(P.s), {j0}).beside(z);
            break;
        }
        case ReductionCase::z_entry: {
            // Clear column j0 of z with row operations on (x' | z); row i0 of
            // x' survives as an extra row of w.
            C.target = auxiliary_pair(P.m, P.t, P.s - 1, p);
            auto rs = drop(P.s, i0);
            auto zc = drop(P.k, j0);
            txp = PolyMatrix(R0, rs.size(), P.n);
            tz = PolyMatrix(R0, rs.size(), zc.size());
            for (std::size_t a = 0; a < rs.size(); ++a) {
                const Polynomial& c = z(rs[a], j0);
                for (std::size_t j = 0; j < P.n; ++j) txp(a, j) = xp(rs[a], j) - c * xp(i0, j);
                for (std::size_t b = 0; b < zc.size(); ++b) tz(a, b) = z(rs[a], zc[b]) - c * z(i0, zc[b]);
            }
            tw = xp.submatrix({i0}, all(P.n)).above(w);
            break;
        }
        case ReductionCase::xprime_entry: {
            // Clear row i0 and column j0 of the whole block matrix.
            C.target = auxiliary_pair(P.m - 1, P.t - 1, P.s - 1, p);
            auto rs = drop(P.s, i0);
            auto cs = drop(P.n, j0);
            txp = PolyMatrix(R0, rs.size(), cs.size());
            tz = PolyMatrix(R0, rs.size(), P.k);
            for (std::size_t a = 0; a < rs.size(); ++a) {
                const Polynomial& c = xp(rs[a], j0);
                for (std::size_t b = 0; b < cs.size(); ++b) txp(a, b) = xp(rs[a], cs[b]) - c * xp(i0, cs[b]);
                for (std::size_t b = 0; b < P.k; ++b) tz(a, b) = z(rs[a], b) - c * z(i0, b);
            }
            tw = PolyMatrix(R0, P.m - P.s, cs.size());
            for (std::size_t a = 0; a < P.m - P.s; ++a)
                for (std::size_t b = 0; b < cs.size(); ++b) tw(a, b) = w(a, cs[b]) - w(a, j0) * xp(i0, cs[b]);
            break;
        }
    }

    const AuxiliaryPair& T = C.target;
    C.images.assign(T.ring->nvars(), Polynomial(R0));
    auto assign = [&](const PolyMatrix& tm, const PolyMatrix& im) {
        for (std::size_t i = 0; i < tm.rows(); ++i)
            for (std::size_t j = 0; j < tm.cols(); ++j) {
                const Polynomial& v = tm(i, j);
                std::size_t idx = 0;
                while (!v.involves(idx)) ++idx;
                C.images[idx] = im(i, j);
                C.updates.push_back(T.ring->var(idx).name() + " = " + to_string(im(i, j)));
            }
    };
    assign(T.xprime, txp);
    assign(T.w, tw);
    assign(T.z, tz);
    return C;
}

}  // namespace detfsing

#endif  // DETFSING_DETERMINANTAL_HPP
